#include "hopf/invariants.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hopf/error.hpp"

namespace hopf {

namespace {

int first_nonzero(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return static_cast<int>(i);
  return -1;
}

// c with v = c w, or false.
bool proportional(const Vec& v, const Vec& w, CycloNum& c) {
  const int p = first_nonzero(w);
  if (p < 0) return false;
  c = v[p] / w[p];
  return v == scale(w, c);
}

std::string vec_key(const Vec& v) {
  std::string s;
  for (const auto& x : v) s += x.str() + "|";
  return s;
}

// Delta^2(e_b) as (i, j, k, coefficient).
std::vector<Entry3> delta2(const FinHopf& h, int b) {
  const long long n = h.dim;
  Accum acc;
  for (const auto& e : h.comult.row(b))
    for (const auto& f : h.comult.row(e.j)) acc.addmul((f.j * n + f.k) * n + e.k, e.c, f.c);
  std::vector<Entry3> out;
  for (auto& [key, c] : acc.finish())
    out.push_back({static_cast<int>(key / (n * n)), static_cast<int>((key / n) % n), static_cast<int>(key % n), c});
  return out;
}

}  // namespace

// ---- integrals and modular data ----

Subspace integral_space(const Algebra& a, const Vec& counit, bool left) {
  const int n = a.dim;
  Matrix m(n * n, n);
  for (const auto& e : a.mult.entries()) {
    // left: column j of L_{e_i} is e_i e_j; right: column i of R_{e_j} is e_i e_j
    if (left) m.at(e.i * n + e.k, e.j) += e.c;
    else m.at(e.j * n + e.k, e.i) += e.c;
  }
  for (int i = 0; i < n; ++i)
    if (!counit[i].is_zero())
      for (int j = 0; j < n; ++j) m.at(i * n + j, j) -= counit[i];
  return kernel(m);
}

IntegralData integrals(const FinHopf& h) {
  const Subspace l = integral_space(h.algebra(), h.counit, true);
  if (l.dim() != 1) fail(ErrorCode::IntegralSpaceNotOneDim, h.label + ": left integral space has dim " + std::to_string(l.dim()));
  const FinHopf d = dual(h);
  const Subspace r = integral_space(d.algebra(), d.counit, false);
  if (r.dim() != 1) fail(ErrorCode::IntegralSpaceNotOneDim, h.label + ": right integral space of the dual has dim " + std::to_string(r.dim()));
  IntegralData out;
  out.left_integral = l.basis()[0];
  const CycloNum pairing = dot(r.basis()[0], out.left_integral);
  if (pairing.is_zero()) fail(ErrorCode::NotNormalized, h.label + ": <lambda, Lambda> = 0");
  out.right_integral_dual = scale(r.basis()[0], pairing.inv());
  out.normalized = true;
  return out;
}

ModularData modular_elements(const FinHopf& h, const IntegralData& in) {
  const Algebra a = h.algebra();
  const Vec& lam = in.left_integral;
  ModularData md;
  md.alpha.resize(h.dim);
  for (int i = 0; i < h.dim; ++i) {
    const Vec v = alg_mul_basis_right(a, lam, i);
    CycloNum c;
    if (is_zero(v)) c = CycloNum(0);
    else if (!proportional(v, lam, c)) fail(ErrorCode::ExtractionInconsistent, h.label + ": Lambda e_i not proportional to Lambda");
    md.alpha[i] = c;
  }
  const FinHopf d = dual(h);
  const Algebra da = d.algebra();
  const Vec& mu = in.right_integral_dual;
  md.g.resize(h.dim);
  for (int i = 0; i < h.dim; ++i) {
    const Vec v = alg_mul_basis(da, i, mu);
    CycloNum c;
    if (is_zero(v)) c = CycloNum(0);
    else if (!proportional(v, mu, c)) fail(ErrorCode::ExtractionInconsistent, h.label + ": e^i lambda not proportional to lambda");
    md.g[i] = c;
  }
  if (!is_character(h, md.alpha)) fail(ErrorCode::ExtractionInconsistent, h.label + ": modular alpha is not a character");
  if (!is_grouplike(h, md.g)) fail(ErrorCode::ExtractionInconsistent, h.label + ": modular g is not group-like");
  return md;
}

ModularData modular_elements(const FinHopf& h) { return modular_elements(h, integrals(h)); }

bool radford_s4_check(const FinHopf& h, const ModularData& md) {
  const Matrix s2 = h.antipode * h.antipode;
  const Matrix s4 = s2 * s2;
  const Vec alpha_inv = h.antipode.transpose().apply(md.alpha);  // alpha o S
  const Vec ginv = hantipode(h, md.g);
  for (int b = 0; b < h.dim; ++b) {
    Vec mid(h.dim);
    for (const auto& t : delta2(h, b)) {
      const CycloNum c = t.c * alpha_inv[t.i] * md.alpha[t.k];
      if (!c.is_zero()) mid[t.j] += c;
    }
    if (hmul(h, hmul(h, md.g, mid), ginv) != s4.column(b)) return false;
  }
  return true;
}

TraceTriple trace_formula_check(const FinHopf& h, const IntegralData& in, const Matrix& f) {
  if (!in.normalized) fail(ErrorCode::NotNormalized, h.label + ": integrals not normalized");
  TraceTriple t;
  t.trace = f.trace();
  const Tensor d = hcomult(h, in.left_integral);
  const Vec& lam = in.right_integral_dual;
  const Algebra a = h.algebra();
  for (const auto& [key, c] : d) {
    const int j = static_cast<int>(key / h.dim), k = static_cast<int>(key % h.dim);
    t.left += c * dot(lam, alg_mul(a, h.antipode.column(k), f.column(j)));
    t.right += c * dot(lam, alg_mul_basis_right(a, h.antipode.apply(f.column(k)), j));
  }
  return t;
}

Matrix random_integer_matrix(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(-3, 3);
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = CycloNum(dist(rng));
  return m;
}

int antipode_order(const FinHopf& h, int bound) {
  if (bound <= 0) bound = 4 * h.dim * h.dim;
  const Matrix id = Matrix::identity(h.dim);
  Matrix p = h.antipode;
  for (int k = 1; k <= bound; ++k) {
    if (p == id) return k;
    p = p * h.antipode;
  }
  fail(ErrorCode::AntipodeOrderExceedsBound, h.label + ": antipode order exceeds " + std::to_string(bound));
}

Semisimplicity semisimplicity(const FinHopf& h) {
  Semisimplicity s;
  s.trace_s2 = (h.antipode * h.antipode).trace();
  s.semisimple = !s.trace_s2.is_zero();
  s.cosemisimple = s.semisimple;
  return s;
}

// ---- coradical ----

std::vector<std::vector<int>> block_size_candidates(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int left, int lo) -> void {
    if (left == 0) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (int s = lo; s * s * left <= remaining; ++s) {
      cur.push_back(s);
      self(self, remaining - s * s, left - 1, s);
      cur.pop_back();
    }
  };
  if (total >= 0 && parts >= 0) rec(rec, total, parts, 2);
  return out;
}

CoradicalReport coradical_filtration(const FinHopf& h) {
  const int n = h.dim;
  const FinHopf d = dual(h);
  const Algebra da = d.algebra();
  const Subspace rad = algebra_radical(da);
  CoradicalReport r;
  Subspace cur = subspace_perp(rad);
  r.h0_dim = cur.dim();
  r.filtration.push_back(cur.dim());
  const Matrix p0 = annihilator(cur);
  while (cur.dim() < n) {
    const Matrix p1 = annihilator(cur);
    const int r0 = p0.rows(), r1 = p1.rows();
    Matrix a(r0 * r1, n);
    for (const auto& e : h.comult.entries())
      for (int x = 0; x < r0; ++x) {
        if (p0.at(x, e.j).is_zero()) continue;
        const CycloNum cx = e.c * p0.at(x, e.j);
        for (int y = 0; y < r1; ++y)
          if (!p1.at(y, e.k).is_zero()) a.at(x * r1 + y, e.i).addmul(cx, p1.at(y, e.k));
      }
    Subspace next = kernel(a);
    if (next.dim() <= cur.dim()) fail(ErrorCode::VerificationFailed, h.label + ": coradical filtration stalls");
    cur = std::move(next);
    r.filtration.push_back(cur.dim());
  }
  r.grouplike_span_dim = Subspace::span(h.claims.grouplikes, n).dim();

  const Quotient semi = quotient_algebra(da, rad);
  r.blocks = center(semi.algebra).dim();
  r.one_dim_blocks = grouplike_certificate(h);
  int verified = 0;
  for (const auto& g : h.claims.grouplikes) verified += is_grouplike(h, g) ? 1 : 0;
  if (r.one_dim_blocks > verified)
    fail(ErrorCode::FieldTooSmall, h.label + ": " + std::to_string(r.one_dim_blocks) +
                                       " one-dimensional blocks but only " + std::to_string(verified) +
                                       " verified group-likes");
  r.candidates = block_size_candidates(r.h0_dim - r.one_dim_blocks, r.blocks - r.one_dim_blocks);
  return r;
}

// ---- census ----

bool is_grouplike(const FinHopf& h, const Vec& g) {
  if (static_cast<int>(g.size()) != h.dim) return false;
  return hcounit(h, g) == CycloNum(1) && tensor_equal(hcomult(h, g), tensor_of(g, g));
}

bool is_character(const FinHopf& h, const Vec& chi) {
  if (static_cast<int>(chi.size()) != h.dim || dot(chi, h.unit) != CycloNum(1)) return false;
  for (int i = 0; i < h.dim; ++i) {
    if (chi[i].is_zero()) {
      // chi(e_i e_j) must vanish
      for (int j = 0; j < h.dim; ++j) {
        CycloNum s;
        for (const auto& t : h.mult.slice(i, j)) s.addmul(t.c, chi[t.k]);
        if (!s.is_zero()) return false;
      }
      continue;
    }
    for (int j = 0; j < h.dim; ++j) {
      CycloNum s;
      for (const auto& t : h.mult.slice(i, j)) s.addmul(t.c, chi[t.k]);
      if (s != chi[i] * chi[j]) return false;
    }
  }
  return true;
}

int grouplike_certificate(const FinHopf& h) {
  const Algebra da = dual(h).algebra();
  const Quotient ab = quotient_algebra(da, commutator_ideal(da));
  return ab.algebra.dim - algebra_radical(ab.algebra).dim();
}

std::string Census::type() const {
  if (!abelian) return "nonabelian" + std::to_string(order());
  if (invariant_factors.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) s += (i ? "," : "") + std::to_string(invariant_factors[i]);
  return s;
}

namespace {

// Invariant factors from |{x : x^{p^k} = 1}| per prime p.
std::vector<int> invariant_factors(const Census& c) {
  const int n = c.order();
  std::vector<int> ord(n);
  for (int a = 0; a < n; ++a) {
    int x = a, k = 1;
    while (x != c.identity) {
      x = c.table[x][a];
      ++k;
    }
    ord[a] = k;
  }
  std::vector<int> primes;
  for (int m = n, p = 2; m > 1; ++p)
    if (m % p == 0) {
      primes.push_back(p);
      while (m % p == 0) m /= p;
    }
  // factors[t] = product over primes of the t-th largest cyclic p-part
  std::vector<int> factors;
  for (int p : primes) {
    std::vector<int> logs{0};  // log_p |G[p^k]|
    for (int pk = p;; pk *= p) {
      int cnt = 0;
      for (int a = 0; a < n; ++a) cnt += pk % ord[a] == 0 ? 1 : 0;
      int l = 0;
      for (int x = cnt; x > 1; x /= p) ++l;
      logs.push_back(l);
      if (logs.back() == logs[logs.size() - 2]) break;
    }
    // number of cyclic factors of order >= p^k is logs[k] - logs[k-1]
    std::vector<int> parts;  // p-power orders, descending
    const int top = static_cast<int>(logs.size()) - 1;
    for (int k = top; k >= 1; --k) {
      const int ge_k = logs[k] - logs[k - 1];
      const int ge_k1 = k + 1 < static_cast<int>(logs.size()) ? logs[k + 1] - logs[k] : 0;
      int pw = 1;
      for (int t = 0; t < k; ++t) pw *= p;
      for (int t = 0; t < ge_k - ge_k1; ++t) parts.push_back(pw);
    }
    if (factors.size() < parts.size()) factors.resize(parts.size(), 1);
    for (std::size_t t = 0; t < parts.size(); ++t) factors[t] *= parts[t];
  }
  return factors;
}

}  // namespace

Census grouplike_census(const FinHopf& h) {
  Census c;
  std::map<std::string, int> index;
  for (const auto& g : h.claims.grouplikes) {
    if (!is_grouplike(h, g)) fail(ErrorCode::ClaimNotGrouplike, h.label + ": claimed element is not group-like");
    const std::string k = vec_key(g);
    if (index.count(k)) continue;
    index[k] = c.order();
    c.elements.push_back(g);
  }
  const int n = c.order();
  const auto unit = index.find(vec_key(h.unit));
  if (unit == index.end()) fail(ErrorCode::ClaimIncomplete, h.label + ": claims miss the unit");
  c.identity = unit->second;
  c.table.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto it = index.find(vec_key(hmul(h, c.elements[a], c.elements[b])));
      if (it == index.end()) fail(ErrorCode::ClaimIncomplete, h.label + ": claimed group-likes not closed under products");
      c.table[a][b] = it->second;
    }
  for (int a = 0; a < n; ++a)
    if (!index.count(vec_key(hantipode(h, c.elements[a]))))
      fail(ErrorCode::ClaimIncomplete, h.label + ": claimed group-likes not closed under inverses");
  c.certificate = grouplike_certificate(h);
  if (n < c.certificate)
    fail(ErrorCode::ClaimIncomplete, h.label + ": " + std::to_string(n) + " claimed group-likes but the certificate is " +
                                         std::to_string(c.certificate) +
                                         " (missing group-likes, or a non-split factor: the field may be too small)");
  if (n > c.certificate)
    fail(ErrorCode::ClaimOvercomplete, h.label + ": " + std::to_string(n) + " group-likes exceed the certificate " +
                                           std::to_string(c.certificate));
  for (int a = 0; a < n && c.abelian; ++a)
    for (int b = 0; b < n; ++b)
      if (c.table[a][b] != c.table[b][a]) {
        c.abelian = false;
        break;
      }
  if (c.abelian) c.invariant_factors = invariant_factors(c);
  return c;
}

Census character_census(const FinHopf& h) { return grouplike_census(dual(h)); }

SkewPrimitives skew_primitives(const FinHopf& h, const Vec& a, const Vec& b) {
  if (!is_grouplike(h, a) || !is_grouplike(h, b)) fail(ErrorCode::NotGrouplike, h.label + ": skew-primitive data must be group-like");
  const int n = h.dim;
  Matrix m(n * n, n);
  for (const auto& e : h.comult.entries()) m.at(e.j * n + e.k, e.i) += e.c;
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < n; ++t) {
      if (!a[t].is_zero()) m.at(t * n + i, i) -= a[t];
      if (!b[t].is_zero()) m.at(i * n + t, i) -= b[t];
    }
  SkewPrimitives s;
  s.space = kernel(m);
  const Subspace g = Subspace::span(h.claims.grouplikes, n);
  for (const auto& v : s.space.basis()) s.trivial = s.trivial && g.contains(v);
  return s;
}

// ---- fingerprint ----

bool operator==(const Fingerprint& a, const Fingerprint& b) {
  return a.dim == b.dim && a.grouplikes == b.grouplikes && a.characters == b.characters &&
         a.grouplike_type == b.grouplike_type && a.character_type == b.character_type &&
         a.antipode_order == b.antipode_order && a.trace_s2 == b.trace_s2 && a.coradical == b.coradical &&
         a.pointed == b.pointed && a.dual_pointed == b.dual_pointed && a.unimodular == b.unimodular;
}

std::string Fingerprint::str() const {
  std::ostringstream os;
  os << "dim=" << dim << " type=" << type() << " ordS=" << antipode_order << " TrS2=" << trace_s2.str() << " corad=[";
  for (std::size_t i = 0; i < coradical.size(); ++i) os << (i ? "," : "") << coradical[i];
  os << "] pointed=" << (pointed ? "yes" : "no") << " dualpointed=" << (dual_pointed ? "yes" : "no")
     << " unimodular=" << (unimodular ? "yes" : "no");
  return os.str();
}

Fingerprint fingerprint(const FinHopf& h) {
  Fingerprint f;
  const FinHopf d = dual(h);
  const Census g = grouplike_census(h);
  const Census c = grouplike_census(d);
  f.dim = h.dim;
  f.grouplikes = g.order();
  f.characters = c.order();
  f.grouplike_type = g.type();
  f.character_type = c.type();
  f.antipode_order = antipode_order(h);
  f.trace_s2 = semisimplicity(h).trace_s2;
  const CoradicalReport cr = coradical_filtration(h);
  f.coradical = cr.filtration;
  f.pointed = cr.h0_dim == f.grouplikes;
  f.dual_pointed = subspace_perp(algebra_radical(h.algebra())).dim() == f.characters;
  f.unimodular = modular_elements(h).alpha == h.counit;
  return f;
}

PairingTable pairing_table(const FinHopf& h) {
  const Census g = grouplike_census(h);
  const Census c = character_census(h);
  PairingTable t;
  for (const auto& beta : c.elements) {
    std::vector<CycloNum> row;
    for (const auto& x : g.elements) {
      row.push_back(dot(beta, x));
      if (row.back() != CycloNum(1)) {
        t.bosonization_criterion = true;
        t.all_one = false;
      }
    }
    t.table.push_back(std::move(row));
  }
  return t;
}

bool commutative_quotient_check(const Algebra& a) {
  const Quotient q = quotient_algebra(a, algebra_radical(a));
  return is_commutative(q.algebra);
}

SplittingReport projection_splitting_check(const FinHopf& h, const FinHopf& b, const Matrix& pi, const Matrix& gamma) {
  if (!verify_morphism(h, b, pi).ok()) fail(ErrorCode::NotAHopfMap, "projection is not a Hopf map");
  if (!verify_morphism(b, h, gamma).ok()) fail(ErrorCode::NotAHopfMap, "section is not a Hopf map");
  if (pi * gamma != Matrix::identity(b.dim)) fail(ErrorCode::SectionFails, "pi o gamma != id");
  SplittingReport r;
  r.coinvariant_dim = coinvariants(h, b, pi).dim();
  r.success = h.dim == r.coinvariant_dim * b.dim;
  return r;
}

}  // namespace hopf

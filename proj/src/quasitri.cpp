#include "hopf/quasitri.hpp"

#include <numeric>

#include "hopf/error.hpp"
#include "hopf/invariants.hpp"

namespace hopf {

namespace {

AxiomCheck check(const std::string& name, bool passed, int i = -1) {
  AxiomCheck c;
  c.axiom = name;
  c.passed = passed;
  if (!passed) c.i = i;
  return c;
}

// Entries of R as (i, j, c).
struct RTerm {
  int i, j;
  CycloNum c;
};
std::vector<RTerm> terms(const Tensor& R, int n) {
  std::vector<RTerm> out;
  for (const auto& [k, c] : R) out.push_back({static_cast<int>(k / n), static_cast<int>(k % n), c});
  return out;
}

// R placed in slots (a, b) of H (x) H (x) H, with the unit in the remaining slot.
Tensor embed3(const FinHopf& h, const Tensor& R, int a, int b) {
  const long long n = h.dim;
  Accum acc;
  for (const auto& t : terms(R, h.dim))
    for (int u = 0; u < h.dim; ++u) {
      if (h.unit[u].is_zero()) continue;
      long long idx[3];
      idx[a] = t.i;
      idx[b] = t.j;
      idx[3 - a - b] = u;
      acc.addmul((idx[0] * n + idx[1]) * n + idx[2], t.c, h.unit[u]);
    }
  return acc.finish();
}

Tensor r21r(const FinHopf& h, const Tensor& R) { return tmul2(h, swap2(R, h.dim), R); }

Matrix f_r_matrix(const FinHopf& h, const Tensor& R) {
  Matrix f(h.dim, h.dim);
  for (const auto& t : terms(R, h.dim)) f.at(t.j, t.i) = t.c;
  return f;
}

Vec drinfeld_u(const FinHopf& h, const Tensor& R) {
  Vec u(h.dim);
  for (const auto& t : terms(R, h.dim)) {
    const Vec v = hmul(h, h.antipode.column(t.j), unit_vector(h.dim, t.i));
    for (int k = 0; k < h.dim; ++k)
      if (!v[k].is_zero()) u[k] += t.c * v[k];
  }
  return u;
}

}  // namespace

bool is_central(const FinHopf& h, const Vec& z) {
  const Algebra a = h.algebra();
  for (int i = 0; i < h.dim; ++i)
    if (alg_mul_basis(a, i, z) != alg_mul_basis_right(a, z, i)) return false;
  return true;
}

QtResult verify_qt(const FinHopf& h, const Tensor& R) {
  const int n = h.dim;
  QtResult res;
  auto& checks = res.report.checks;

  int bad = -1;
  for (int b = 0; b < n && bad < 0; ++b) {
    const Tensor d = hcomult_basis(h, b);
    if (!tensor_equal(tmul2(h, swap2(d, n), R), tmul2(h, R, d))) bad = b;
  }
  checks.push_back(check("QT1", bad < 0, bad));

  const auto rt = terms(R, n);
  {
    Accum acc;  // (Delta (x) id)(R)
    for (const auto& t : rt)
      for (const auto& e : h.comult.row(t.i))
        acc.addmul((static_cast<long long>(e.j) * n + e.k) * n + t.j, t.c, e.c);
    const Tensor r13r23 = tmul3(h, embed3(h, R, 0, 2), embed3(h, R, 1, 2));
    checks.push_back(check("QT2", tensor_equal(acc.finish(), r13r23)));
  }
  {
    Accum acc;  // (id (x) Delta)(R)
    for (const auto& t : rt)
      for (const auto& e : h.comult.row(t.j))
        acc.addmul((static_cast<long long>(t.i) * n + e.j) * n + e.k, t.c, e.c);
    const Tensor r13r12 = tmul3(h, embed3(h, R, 0, 2), embed3(h, R, 0, 1));
    checks.push_back(check("QT3", tensor_equal(acc.finish(), r13r12)));
  }
  Vec left(n), right(n);
  for (const auto& t : rt) {
    left[t.j] += t.c * h.counit[t.i];
    right[t.i] += t.c * h.counit[t.j];
  }
  checks.push_back(check("QT4", left == h.unit));
  checks.push_back(check("QT5", right == h.unit));

  RMatrixData& d = res.data;
  d.host = h;
  d.R = R;
  const Matrix f = f_r_matrix(h, R);
  const FinHopf dcop = op_cop(dual(h), OpCop::cop);
  checks.push_back(check("f_R_bialgebra", verify_morphism(dcop, h, f).ok()));
  d.K = image(f);
  d.L = image(f.transpose());
  d.rank = d.K.dim();
  checks.push_back(check("dim_L_eq_dim_K", d.L.dim() == d.K.dim()));
  std::vector<Vec> gens = d.K.basis();
  for (const auto& v : d.L.basis()) gens.push_back(v);
  d.minimal = subalgebra_generated(h.algebra(), gens).dim() == n;
  d.u = drinfeld_u(h, R);
  return res;
}

RMatrixData require_qt(const FinHopf& h, const Tensor& R) {
  QtResult r = verify_qt(h, R);
  for (const auto& c : r.report.checks)
    if (!c.passed) fail(ErrorCode::NotQuasitriangular, h.label + ": " + c.axiom + " fails");
  return std::move(r.data);
}

FMaps f_maps(const RMatrixData& rm) {
  FMaps m;
  m.f_r = f_r_matrix(rm.host, rm.R);
  m.f_rtilde = f_r_matrix(rm.host, swap2(rm.R, rm.host.dim));
  m.dual_relation = m.f_rtilde == m.f_r.transpose();
  return m;
}

DrinfeldData drinfeld_element(const RMatrixData& rm) {
  const FinHopf& h = rm.host;
  const int n = h.dim;
  DrinfeldData d;
  d.u = rm.u;
  d.u_inv = Vec(n);
  const Matrix s2 = h.antipode * h.antipode;
  for (const auto& t : terms(rm.R, n)) {
    const Vec v = hmul(h, unit_vector(n, t.j), s2.column(t.i));
    for (int k = 0; k < n; ++k)
      if (!v[k].is_zero()) d.u_inv[k] += t.c * v[k];
  }
  auto& checks = d.identities.checks;
  checks.push_back(check("inverse", hmul(h, d.u, d.u_inv) == h.unit && hmul(h, d.u_inv, d.u) == h.unit));
  int bad = -1;
  for (int b = 0; b < n && bad < 0; ++b)
    if (hmul(h, s2.column(b), d.u) != hmul(h, d.u, unit_vector(n, b))) bad = b;
  checks.push_back(check("S2_conjugation", bad < 0, bad));
  checks.push_back(check("counit", hcounit(h, d.u) == CycloNum(1)));
  const Tensor q = r21r(h, rm.R);
  const Tensor du = hcomult(h, d.u);
  const Tensor uu = tensor_of(d.u, d.u);
  checks.push_back(check("comult_left", tensor_equal(tmul2(h, q, du), uu)));
  checks.push_back(check("comult_right", tensor_equal(tmul2(h, du, q), uu)));
  checks.push_back(check("uSu_central", is_central(h, hmul(h, d.u, hantipode(h, d.u)))));
  bool commute = true;
  for (const auto& g : h.claims.grouplikes)
    if (is_grouplike(h, g) && hmul(h, g, d.u) != hmul(h, d.u, g)) commute = false;
  checks.push_back(check("grouplikes_commute", commute));
  for (const auto& c : checks)
    if (!c.passed) fail(ErrorCode::IdentityFails, h.label + ": Drinfeld identity " + c.axiom + " fails");
  return d;
}

VerificationReport ribbon_axioms(const RMatrixData& rm, const DrinfeldData& d, const Vec& v) {
  const FinHopf& h = rm.host;
  VerificationReport r;
  r.checks.push_back(check("R1", hmul(h, v, v) == hmul(h, d.u, hantipode(h, d.u))));
  r.checks.push_back(check("R2", hantipode(h, v) == v));
  r.checks.push_back(check("R3", hcounit(h, v) == CycloNum(1)));
  r.checks.push_back(check("R4", tensor_equal(tmul2(h, r21r(h, rm.R), hcomult(h, v)), tensor_of(v, v))));
  r.checks.push_back(check("R5", is_central(h, v)));
  return r;
}

RibbonCertificate ribbon_search(const RMatrixData& rm, const DrinfeldData& d) {
  const FinHopf& h = rm.host;
  const Census g = grouplike_census(h);
  RibbonCertificate cert;
  for (const auto& l : g.elements) {
    cert.candidate_grouplikes.push_back(l);
    const Vec v = hmul(h, hantipode(h, l), d.u);
    std::string why = "ok";
    for (const auto& c : ribbon_axioms(rm, d, v).checks)
      if (!c.passed) {
        why = c.axiom;
        break;
      }
    cert.failures.push_back(why);
    if (why == "ok") cert.ribbon_elements.push_back(v);
  }
  return cert;
}

RibbonCertificate ribbon_search(const RMatrixData& rm) { return ribbon_search(rm, drinfeld_element(rm)); }

Tensor bicharacter_r(const FiniteGroup& g, int conductor, const std::vector<std::vector<int>>& exps) {
  const int M = conductor, n = g.order;
  const std::size_t ng = g.generators.size();
  std::vector<int> ord(ng);
  for (std::size_t t = 0; t < ng; ++t) ord[t] = g.element_order(g.generators[t]);
  const std::vector<Vec> chars = group_characters(g, M);
  // exponent tuple of each character on the generators
  std::vector<std::vector<int>> tup(chars.size(), std::vector<int>(ng));
  for (std::size_t c = 0; c < chars.size(); ++c)
    for (std::size_t t = 0; t < ng; ++t) {
      int a = 0;
      while (a < ord[t] && chars[c][g.generators[t]] != CycloNum::zeta(M, static_cast<long long>(a) * (M / ord[t]))) ++a;
      if (a == ord[t]) fail(ErrorCode::FieldTooSmall, "character value outside Q(zeta_" + std::to_string(M) + ")");
      tup[c][t] = a;
    }
  for (std::size_t s = 0; s < ng; ++s)
    for (std::size_t t = 0; t < ng; ++t)
      if (M % std::gcd(ord[s], ord[t]) != 0)
        fail(ErrorCode::FieldTooSmall, "bicharacter values outside Q(zeta_" + std::to_string(M) + ")");
  auto beta = [&](std::size_t a, std::size_t b) {
    long long k = 0;
    for (std::size_t s = 0; s < ng; ++s)
      for (std::size_t t = 0; t < ng; ++t) {
        const int d = std::gcd(ord[s], ord[t]);
        k += static_cast<long long>(tup[a][s]) * tup[b][t] * exps[s][t] * (M / d);
      }
    return CycloNum::zeta(M, k);
  };
  const std::size_t nc = chars.size();
  // P[c][y] = sum_psi beta(chi_c, psi) psi(y^{-1})
  std::vector<Vec> P(nc, Vec(n));
  for (std::size_t c = 0; c < nc; ++c)
    for (std::size_t d = 0; d < nc; ++d) {
      const CycloNum b = beta(c, d);
      for (int y = 0; y < n; ++y) P[c][y] += b * chars[d][g.inverse(y)];
    }
  const CycloNum scale = CycloNum(Rational(1, static_cast<long long>(n) * n));
  Accum acc;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      CycloNum s;
      for (std::size_t c = 0; c < nc; ++c) s.addmul(chars[c][g.inverse(x)], P[c][y]);
      acc.addmul(static_cast<long long>(x) * n + y, s, scale);
    }
  return acc.finish();
}

std::vector<RMatrixData> bicharacter_rmatrices(const FiniteGroup& g, int conductor) {
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      if (g.table[a][b] != g.table[b][a]) fail(ErrorCode::BadParameter, g.name + " is not abelian");
  const FinHopf h = group_algebra(g, conductor);
  const std::size_t ng = g.generators.size();
  std::vector<int> ord(ng);
  for (std::size_t t = 0; t < ng; ++t) ord[t] = g.element_order(g.generators[t]);
  std::vector<std::vector<int>> exps(ng, std::vector<int>(ng, 0));
  std::vector<RMatrixData> out;
  while (true) {
    out.push_back(require_qt(h, bicharacter_r(g, conductor, exps)));
    // next exponent matrix, entry (s,t) mod gcd(ord_s, ord_t)
    std::size_t s = 0, t = 0;
    bool done = true;
    for (std::size_t idx = 0; idx < ng * ng; ++idx) {
      s = idx / ng;
      t = idx % ng;
      if (++exps[s][t] < std::gcd(ord[s], ord[t])) {
        done = false;
        break;
      }
      exps[s][t] = 0;
    }
    if (done) break;
  }
  return out;
}

// (1/p) sum_{i,j} q^{-2ij} g^i (x) g^j times sum_n q^{n(n-1)/2}/[n]! x^n (x) y^n.
Tensor uq_standard_r(int p, int e) {
  const PresentationSpec s = uq_spec(p, e);
  const FinHopf h = build_from_presentation(s);
  const int M = s.conductor, z = M / (p * p);
  const CycloNum q = CycloNum::zeta(M, static_cast<long long>(p) * e * z);
  const CycloNum qi = q.inv();
  Accum r0;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      r0.add(static_cast<long long>(s.index({0, 0}, {i})) * h.dim + s.index({0, 0}, {j}),
             qi.pow(2LL * i * j) * CycloNum(Rational(1, p)));
  Accum th;
  CycloNum fact(1);
  for (int m = 0; m < p; ++m) {
    if (m > 0) fact *= (q.pow(m) - qi.pow(m)) / (q - qi);
    th.add(static_cast<long long>(s.index({m, 0}, {0})) * h.dim + s.index({0, m}, {0}),
           q.pow(static_cast<long long>(m) * (m - 1) / 2) / fact);
  }
  return tmul2(h, r0.finish(), th.finish());
}

RMatrixData uq_standard_rmatrix(int p, int e) {
  const FinHopf h = uq_sl2(p, e);
  QtResult r = verify_qt(h, uq_standard_r(p, e));
  for (const auto& c : r.report.checks)
    if (!c.passed) fail(ErrorCode::FixtureRejected, h.label + ": standard R-matrix fails " + c.axiom);
  return std::move(r.data);
}

SurjectionReport double_surjection_check(const FinHopf& h, const FinHopf& d, const RMatrixData& rm) {
  const int n = h.dim;
  if (d.dim != n * n) fail(ErrorCode::DimensionMismatch, "double has the wrong dimension");
  SurjectionReport s;
  s.F = Matrix(n, n * n);
  for (const auto& t : terms(rm.R, n))
    for (int b = 0; b < n; ++b)
      for (const auto& m : h.mult.slice(t.j, b)) s.F.at(m.k, t.i * n + b) += t.c * m.c;
  s.morphism = verify_morphism(d, h, s.F);
  s.surjective = s.morphism.surjective;
  return s;
}

CentralGrouplikes double_central_grouplikes(const FinHopf& h, const FinHopf& d) {
  const int n = h.dim;
  CentralGrouplikes c;
  for (const auto& chi : d.claims.characters) {
    // chi = x # b has coordinates x_a b_c at a*n + c; its image b # x swaps the slots
    Vec v(d.dim);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) v[a * n + b] = chi[b * n + a];
    c.all_grouplike = c.all_grouplike && is_grouplike(d, v);
    c.all_central = c.all_central && is_central(d, v);
    c.elements.push_back(std::move(v));
  }
  return c;
}

}  // namespace hopf

#include "hopf/tensor.hpp"

#include <algorithm>

#include "hopf/error.hpp"

namespace hopf {

SparseTensor3::SparseTensor3(int n0, int n1, int n2, std::vector<Entry3> entries)
    : n0_(n0), n1_(n1), n2_(n2) {
  for (const auto& e : entries)
    if (e.i < 0 || e.i >= n0 || e.j < 0 || e.j >= n1 || e.k < 0 || e.k >= n2)
      fail(ErrorCode::DimensionMismatch, "tensor index out of range");
  std::stable_sort(entries.begin(), entries.end(), [](const Entry3& a, const Entry3& b) {
    if (a.i != b.i) return a.i < b.i;
    if (a.j != b.j) return a.j < b.j;
    return a.k < b.k;
  });
  for (auto& e : entries) {
    if (!entries_.empty() && entries_.back().i == e.i && entries_.back().j == e.j &&
        entries_.back().k == e.k) {
      entries_.back().c += e.c;
    } else {
      entries_.push_back(std::move(e));
    }
  }
  entries_.erase(std::remove_if(entries_.begin(), entries_.end(), [](const Entry3& e) { return e.c.is_zero(); }),
                 entries_.end());
  offsets_.assign(std::size_t(n0) * n1 + 1, 0);
  for (const auto& e : entries_) ++offsets_[std::size_t(e.i) * n1 + e.j + 1];
  for (std::size_t p = 1; p < offsets_.size(); ++p) offsets_[p] += offsets_[p - 1];
  terms_.reserve(entries_.size());
  for (const auto& e : entries_) terms_.push_back({e.k, e.c});
}

bool operator==(const SparseTensor3& a, const SparseTensor3& b) {
  if (a.n0_ != b.n0_ || a.n1_ != b.n1_ || a.n2_ != b.n2_ || a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t t = 0; t < a.entries_.size(); ++t) {
    const auto& x = a.entries_[t];
    const auto& y = b.entries_[t];
    if (x.i != y.i || x.j != y.j || x.k != y.k || x.c != y.c) return false;
  }
  return true;
}

std::vector<std::pair<long long, CycloNum>> Accum::finish() {
  std::stable_sort(items_.begin(), items_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<long long, CycloNum>> out;
  for (auto& it : items_) {
    if (!out.empty() && out.back().first == it.first) {
      out.back().second += it.second;
    } else {
      if (!out.empty() && out.back().second.is_zero()) out.pop_back();
      out.push_back(std::move(it));
    }
  }
  if (!out.empty() && out.back().second.is_zero()) out.pop_back();
  items_.clear();
  return out;
}

Vec alg_mul(const Algebra& a, const Vec& x, const Vec& y) {
  Vec r(a.dim);
  for (int i = 0; i < a.dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < a.dim; ++j) {
      if (y[j].is_zero()) continue;
      auto sl = a.mult.slice(i, j);
      if (sl.empty()) continue;
      const CycloNum xy = x[i] * y[j];
      for (const auto& t : sl) r[t.k].addmul(xy, t.c);
    }
  }
  return r;
}

Vec alg_mul_basis(const Algebra& a, int i, const Vec& y) {
  Vec r(a.dim);
  for (int j = 0; j < a.dim; ++j) {
    if (y[j].is_zero()) continue;
    for (const auto& t : a.mult.slice(i, j)) r[t.k].addmul(y[j], t.c);
  }
  return r;
}

Vec alg_mul_basis_right(const Algebra& a, const Vec& x, int j) {
  Vec r(a.dim);
  for (int i = 0; i < a.dim; ++i) {
    if (x[i].is_zero()) continue;
    for (const auto& t : a.mult.slice(i, j)) r[t.k].addmul(x[i], t.c);
  }
  return r;
}

Matrix left_mult_matrix(const Algebra& a, const Vec& x) {
  Matrix m(a.dim, a.dim);
  for (int j = 0; j < a.dim; ++j) {
    Vec col = alg_mul_basis_right(a, x, j);
    for (int k = 0; k < a.dim; ++k) m.at(k, j) = col[k];
  }
  return m;
}

bool is_commutative(const Algebra& a) {
  for (int i = 0; i < a.dim; ++i)
    for (int j = i + 1; j < a.dim; ++j) {
      auto x = a.mult.slice(i, j);
      auto y = a.mult.slice(j, i);
      if (x.size() != y.size()) return false;
      for (std::size_t t = 0; t < x.size(); ++t)
        if (x[t].k != y[t].k || x[t].c != y[t].c) return false;
    }
  return true;
}

Subspace algebra_radical(const SparseTensor3& mult, const Vec& unit) {
  const int n = static_cast<int>(unit.size());
  // Tr(L_{e_k}) = sum_l c_{k l}^l
  Vec tr(n);
  for (const auto& e : mult.entries())
    if (e.j == e.k) tr[e.i] += e.c;
  Matrix gram(n, n);
  for (const auto& e : mult.entries())
    if (!tr[e.k].is_zero()) gram.at(e.i, e.j).addmul(e.c, tr[e.k]);
  return kernel(gram);
}

Subspace algebra_radical(const Algebra& a) { return algebra_radical(a.mult, a.unit); }

namespace {

// Grows span(seed) under x -> e_i x and x -> x e_i until stable.
Subspace ideal_closure(const Algebra& a, EchelonBasis& e, std::vector<Vec> work) {
  std::size_t head = 0;
  while (head < work.size()) {
    Vec v = work[head++];
    for (int i = 0; i < a.dim; ++i) {
      Vec l = alg_mul_basis(a, i, v);
      if (e.insert(l)) work.push_back(std::move(l));
      Vec r = alg_mul_basis_right(a, v, i);
      if (e.insert(r)) work.push_back(std::move(r));
    }
  }
  return e.subspace();
}

}  // namespace

Subspace two_sided_ideal(const Algebra& a, const std::vector<Vec>& gens) {
  EchelonBasis e(a.dim);
  std::vector<Vec> work;
  for (const auto& g : gens)
    if (e.insert(g)) work.push_back(g);
  return ideal_closure(a, e, std::move(work));
}

Subspace commutator_ideal(const Algebra& a) {
  EchelonBasis e(a.dim);
  std::vector<Vec> work;
  for (int i = 0; i < a.dim; ++i)
    for (int j = i + 1; j < a.dim; ++j) {
      Vec c(a.dim);
      for (const auto& t : a.mult.slice(i, j)) c[t.k] += t.c;
      for (const auto& t : a.mult.slice(j, i)) c[t.k] -= t.c;
      if (e.insert(c)) work.push_back(std::move(c));
    }
  return ideal_closure(a, e, std::move(work));
}

Subspace center(const Algebra& a) {
  const int n = a.dim;
  Matrix m(n * n, n);
  for (const auto& e : a.mult.entries()) {
    // column i: e_i e_j contributes +, e_j e_i contributes -, row (j,k)
    m.at(e.j * n + e.k, e.i) += e.c;
    m.at(e.i * n + e.k, e.j) -= e.c;
  }
  return kernel(m);
}

Subspace subalgebra_generated(const Algebra& a, const std::vector<Vec>& gens) {
  EchelonBasis e(a.dim);
  std::vector<Vec> words{a.unit};
  e.insert(a.unit);
  std::size_t head = 0;
  while (head < words.size()) {
    Vec w = words[head++];
    for (const auto& g : gens) {
      Vec p = alg_mul(a, g, w);
      if (e.insert(p)) words.push_back(std::move(p));
    }
  }
  return e.subspace();
}

Quotient quotient_algebra(const Algebra& a, const Subspace& ideal) {
  Quotient q;
  q.kept = ideal.complement_indices();
  const int r = static_cast<int>(q.kept.size());
  std::vector<int> pos(a.dim, -1);
  for (int t = 0; t < r; ++t) pos[q.kept[t]] = t;
  auto project = [&](const Vec& v) {
    Vec w = ideal.quotient_coords(v);
    Vec out(r);
    for (int t = 0; t < r; ++t) out[t] = w[q.kept[t]];
    return out;
  };
  q.projection = Matrix(r, a.dim);
  for (int j = 0; j < a.dim; ++j) {
    Vec c = project(unit_vector(a.dim, j));
    for (int t = 0; t < r; ++t) q.projection.at(t, j) = c[t];
  }
  std::vector<Entry3> ents;
  for (int x = 0; x < r; ++x)
    for (int y = 0; y < r; ++y) {
      Vec prod(a.dim);
      for (const auto& t : a.mult.slice(q.kept[x], q.kept[y])) prod[t.k] += t.c;
      Vec p = q.projection.apply(prod);
      for (int z = 0; z < r; ++z)
        if (!p[z].is_zero()) ents.push_back({x, y, z, p[z]});
    }
  q.algebra.dim = r;
  q.algebra.conductor = a.conductor;
  q.algebra.mult = SparseTensor3(r, r, r, std::move(ents));
  q.algebra.unit = q.projection.apply(a.unit);
  return q;
}

std::vector<int> left_generators(const Algebra& a) {
  EchelonBasis e(a.dim);
  std::vector<Vec> words{a.unit};
  e.insert(a.unit);
  std::vector<int> gens;
  std::vector<std::size_t> done;
  for (int i = 0; i < a.dim && e.rank() < a.dim; ++i) {
    if (e.contains(unit_vector(a.dim, i))) continue;
    gens.push_back(i);
    done.push_back(0);
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t g = 0; g < gens.size(); ++g) {
        while (done[g] < words.size()) {
          Vec p = alg_mul_basis(a, gens[g], words[done[g]++]);
          if (e.insert(p)) {
            words.push_back(std::move(p));
            grew = true;
          }
        }
      }
    }
  }
  return gens;
}

namespace {

bool triple_ok(const Algebra& a, const Vec& s, int b, int c) {
  // (s e_b) e_c == s (e_b e_c)
  Vec sb = alg_mul_basis_right(a, s, b);
  Vec lhs = alg_mul_basis_right(a, sb, c);
  Vec bc(a.dim);
  for (const auto& t : a.mult.slice(b, c)) bc[t.k] += t.c;
  Vec rhs = alg_mul(a, s, bc);
  return lhs == rhs;
}

}  // namespace

// If (s b) c = s (b c) for the unit s = 1, for every generator s and all
// basis b, c, then T = {x : (x b) c = x (b c) for all b, c} contains 1 and is
// closed under x -> s x, since ((s x) b) c = (s (x b)) c = s ((x b) c)
// = s (x (b c)) = (s x)(b c). The left-closure of 1 under the generators is
// the whole algebra, so T is everything.
TripleFailure check_associative(const Algebra& a) {
  std::vector<Vec> probes{a.unit};
  std::vector<int> probe_index{-1};
  for (int g : left_generators(a)) {
    probes.push_back(unit_vector(a.dim, g));
    probe_index.push_back(g);
  }
  for (std::size_t p = 0; p < probes.size(); ++p)
    for (int b = 0; b < a.dim; ++b)
      for (int c = 0; c < a.dim; ++c)
        if (!triple_ok(a, probes[p], b, c)) return {true, probe_index[p], b, c};
  return {};
}

TripleFailure check_associative_full(const Algebra& a) {
  for (int i = 0; i < a.dim; ++i) {
    Vec ei = unit_vector(a.dim, i);
    for (int b = 0; b < a.dim; ++b)
      for (int c = 0; c < a.dim; ++c)
        if (!triple_ok(a, ei, b, c)) return {true, i, b, c};
  }
  return {};
}

}  // namespace hopf

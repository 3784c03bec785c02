#include "hopf/constructors.hpp"
#include "hopf/error.hpp"

namespace hopf {

namespace {

Algebra assemble(const CrossedProductData& d) {
  const Algebra& a = d.base;
  const int m = d.group_order, n = a.dim * m;
  std::vector<Entry3> ents;
  for (int i = 0; i < a.dim; ++i)
    for (int k = 0; k < m; ++k)
      for (int j = 0; j < a.dim; ++j) {
        // e_i (t^k . e_j) sigma(k,l) # t^{k+l}
        const Vec w = alg_mul_basis(a, i, d.action[k].column(j));
        for (int l = 0; l < m; ++l) {
          const Vec v = alg_mul(a, w, d.sigma[k][l]);
          for (int s = 0; s < a.dim; ++s)
            if (!v[s].is_zero()) ents.push_back({i * m + k, j * m + l, s * m + (k + l) % m, v[s]});
        }
      }
  Algebra out;
  out.dim = n;
  out.conductor = a.conductor;
  out.mult = SparseTensor3(n, n, n, std::move(ents));
  out.unit = kron(a.unit, unit_vector(m, 0));
  return out;
}

}  // namespace

CrossedProductCheck check_crossed_product(const CrossedProductData& d) {
  CrossedProductCheck r;
  const Algebra& a = d.base;
  const int m = d.group_order;
  if (m < 1 || static_cast<int>(d.action.size()) != m || static_cast<int>(d.sigma.size()) != m)
    fail(ErrorCode::DimensionMismatch, "crossed product tables must have one entry per group element");
  for (const auto& row : d.sigma)
    if (static_cast<int>(row.size()) != m) fail(ErrorCode::DimensionMismatch, "sigma must be square");
  auto act = [&](int k, const Vec& v) { return d.action[((k % m) + m) % m].apply(v); };

  auto flag = [&](bool& which, const std::string& what) {
    if (which) r.detail = what;
    which = false;
  };
  if (d.action[0] != Matrix::identity(a.dim)) flag(r.weak_action, "identity acts nontrivially");
  for (int k = 0; k < m && r.weak_action; ++k) {
    if (act(k, a.unit) != a.unit) flag(r.weak_action, "action does not fix 1 at k=" + std::to_string(k));
    for (int i = 0; i < a.dim && r.weak_action; ++i)
      for (int j = 0; j < a.dim; ++j) {
        Vec prod(a.dim);
        for (const auto& t : a.mult.slice(i, j)) prod[t.k] += t.c;
        if (act(k, prod) != alg_mul(a, act(k, unit_vector(a.dim, i)), act(k, unit_vector(a.dim, j)))) {
          flag(r.weak_action, "action is not multiplicative at (" + std::to_string(k) + "," + std::to_string(i) +
                                  "," + std::to_string(j) + ")");
          break;
        }
      }
  }
  // twisted module condition: t^k.(t^l.a) sigma(k,l) = sigma(k,l) (t^{k+l}.a)
  for (int k = 0; k < m && r.weak_action; ++k)
    for (int l = 0; l < m && r.weak_action; ++l)
      for (int i = 0; i < a.dim; ++i) {
        const Vec ei = unit_vector(a.dim, i);
        if (alg_mul(a, act(k, act(l, ei)), d.sigma[k][l]) != alg_mul(a, d.sigma[k][l], act(k + l, ei))) {
          flag(r.weak_action, "twisted module condition fails at (" + std::to_string(k) + "," + std::to_string(l) +
                                  "," + std::to_string(i) + ")");
          break;
        }
      }
  for (int k = 0; k < m; ++k)
    if (d.sigma[0][k] != a.unit || d.sigma[k][0] != a.unit) {
      flag(r.normalized, "sigma not normalized at " + std::to_string(k));
      break;
    }
  // (t^k . sigma(l,s)) sigma(k, l+s) = sigma(k,l) sigma(k+l, s)
  for (int k = 0; k < m && r.cocycle; ++k)
    for (int l = 0; l < m && r.cocycle; ++l)
      for (int s = 0; s < m; ++s) {
        const Vec lhs = alg_mul(a, act(k, d.sigma[l][s]), d.sigma[k][(l + s) % m]);
        const Vec rhs = alg_mul(a, d.sigma[k][l], d.sigma[(k + l) % m][s]);
        if (lhs != rhs) {
          flag(r.cocycle, "cocycle condition fails at (" + std::to_string(k) + "," + std::to_string(l) + "," +
                              std::to_string(s) + ")");
          break;
        }
      }
  r.associativity = check_associative(assemble(d));
  return r;
}

Algebra crossed_product(const CrossedProductData& d) {
  const CrossedProductCheck r = check_crossed_product(d);
  if (!r.weak_action) fail(ErrorCode::WeakActionFails, r.detail);
  if (!r.cocycle || !r.normalized) fail(ErrorCode::CocycleConditionFails, r.detail);
  if (r.associativity.failed) fail(ErrorCode::CocycleConditionFails, "crossed product is not associative");
  return assemble(d);
}

CrossedProductData crossed_trivial_fixture(const Algebra& base, int group_order) {
  CrossedProductData d;
  d.base = base;
  d.group_order = group_order;
  d.action.assign(group_order, Matrix::identity(base.dim));
  d.sigma.assign(group_order, std::vector<Vec>(group_order, base.unit));
  return d;
}

// k[Z/3] with sigma(t^i, t^j) = h^{floor((i+j)/3)}.
CrossedProductData crossed_z9_fixture() {
  const Algebra a = group_algebra(cyclic_product_group({3}), 9).algebra();
  CrossedProductData d = crossed_trivial_fixture(a, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i + j >= 3) d.sigma[i][j] = unit_vector(3, 1);
  return d;
}

// T(q) with t acting by x -> q x, g -> g, trivial sigma.
CrossedProductData crossed_taft_fixture(int p, int e) {
  const PresentationSpec s = taft_spec(p, e);
  const Algebra a = build_from_presentation(s).algebra();
  CrossedProductData d = crossed_trivial_fixture(a, p);
  std::vector<int> x, c;
  for (int k = 0; k < p; ++k)
    for (int idx = 0; idx < a.dim; ++idx) {
      s.decompose(idx, x, c);
      d.action[k].at(idx, idx) = CycloNum::zeta(s.conductor, static_cast<long long>(p) * e * k * x[0]);
    }
  return d;
}

// sigma(t,t) = h, everything else 1.
CrossedProductData crossed_broken_fixture() {
  const Algebra a = group_algebra(cyclic_product_group({3}), 9).algebra();
  CrossedProductData d = crossed_trivial_fixture(a, 3);
  d.sigma[1][1] = unit_vector(3, 1);
  return d;
}

}  // namespace hopf

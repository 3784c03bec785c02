#include "hopf/constructors.hpp"
#include "hopf/error.hpp"

namespace hopf {

// D(H) on H*^cop (x) H, basis e^a # e_b at index a*n + b, with
// (b # h)(b' # h') = b (h_1 -> b' <- S^{-1}(h_3)) # h_2 h'.
FinHopf drinfeld_double(const FinHopf& h, int max_dim) {
  const int n = h.dim;
  if (n > max_dim)
    fail(ErrorCode::DimensionGateExceeded, "double of dimension " + std::to_string(n) + " exceeds gate " +
                                              std::to_string(max_dim));
  const int N = n * n;
  const Matrix sinv = antipode_inverse(h);
  const FinHopf hd = dual(h);

  // P[(k*n + i)*n + l] = S^{-1}(e_k) e_l e_i
  std::vector<Vec> P(static_cast<std::size_t>(n) * n * n);
  for (int k = 0; k < n; ++k) {
    const Vec sk = sinv.column(k);
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        Vec li(n);
        for (const auto& t : h.mult.slice(l, i)) li[t.k] += t.c;
        P[(static_cast<std::size_t>(k) * n + i) * n + l] = hmul(h, sk, li);
      }
  }
  // Delta^2(e_b) as (i, j, k, c)
  std::vector<std::vector<Entry3>> d2(n);
  for (int b = 0; b < n; ++b) {
    Accum acc;
    for (const auto& e : h.comult.row(b))
      for (const auto& f : h.comult.row(e.j))
        acc.addmul((static_cast<long long>(f.j) * n + f.k) * n + e.k, e.c, f.c);
    for (auto& [key, c] : acc.finish())
      d2[b].push_back({static_cast<int>(key / (n * n)), static_cast<int>((key / n) % n), static_cast<int>(key % n), c});
  }

  std::vector<Entry3> mult;
  struct JL {
    int j, l;
    CycloNum c;
  };
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c) {
      // psi[j][l] = sum over Delta^2 terms with middle j of coef * <e^c, S^{-1}(e_k) e_l e_i>
      Accum acc;
      for (const auto& t : d2[b])
        for (int l = 0; l < n; ++l) {
          const CycloNum& v = P[(static_cast<std::size_t>(t.k) * n + t.i) * n + l][c];
          if (!v.is_zero()) acc.addmul(static_cast<long long>(t.j) * n + l, t.c, v);
        }
      std::vector<JL> terms;
      for (auto& [key, v] : acc.finish()) terms.push_back({static_cast<int>(key / n), static_cast<int>(key % n), v});
      for (int a = 0; a < n; ++a)
        for (int d = 0; d < n; ++d) {
          Accum out;
          for (const auto& t : terms)
            for (const auto& x : hd.mult.slice(a, t.l)) {
              const CycloNum cx = t.c * x.c;
              for (const auto& y : h.mult.slice(t.j, d)) out.addmul(static_cast<long long>(x.k) * n + y.k, cx, y.c);
            }
          for (auto& [key, v] : out.finish()) mult.push_back({a * n + b, c * n + d, static_cast<int>(key), v});
        }
    }

  FinHopf D;
  D.dim = N;
  D.conductor = h.conductor;
  D.label = "double(" + h.label + ")";
  D.mult = SparseTensor3(N, N, N, std::move(mult));
  D.unit = kron(h.counit, h.unit);
  D.counit = kron(h.unit, h.counit);

  // Delta(e^a # e_b) = sum mult(i,j,a) comult(b;k,l) (e^j # e_k) (x) (e^i # e_l)
  std::vector<std::vector<Entry3>> by_target(n);
  for (const auto& e : h.mult.entries()) by_target[e.k].push_back(e);
  std::vector<Entry3> comult;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (const auto& m : by_target[a])
        for (const auto& c : h.comult.row(b)) comult.push_back({a * n + b, m.j * n + c.j, m.i * n + c.k, m.c * c.c});
  D.comult = SparseTensor3(N, N, N, std::move(comult));

  // S(b # h) = (eps # S(h)) (S_{H*cop}(b) # 1), S_{H*cop} = (S^{-1})^T
  D.antipode = Matrix(N, N);
  for (int a = 0; a < n; ++a) {
    const Vec sb = kron(sinv.row(a), h.unit);
    for (int b = 0; b < n; ++b) {
      const Vec sh = kron(h.counit, h.antipode.column(b));
      const Vec v = hmul(D, sh, sb);
      for (int r = 0; r < N; ++r) D.antipode.at(r, a * n + b) = v[r];
    }
  }

  for (const auto& beta : h.claims.characters)
    for (const auto& g : h.claims.grouplikes) D.claims.grouplikes.push_back(kron(beta, g));
  // characters x # beta: (gamma # k) -> gamma(x) beta(k), kept when multiplicative
  for (const auto& x : h.claims.grouplikes)
    for (const auto& beta : h.claims.characters) {
      const Vec chi = kron(x, beta);
      bool ok = dot(chi, D.unit) == CycloNum(1);
      for (int u = 0; u < N && ok; ++u)
        for (int v = 0; v < N; ++v) {
          CycloNum s;
          for (const auto& t : D.mult.slice(u, v)) s.addmul(t.c, chi[t.k]);
          if (s != chi[u] * chi[v]) {
            ok = false;
            break;
          }
        }
      if (ok) D.claims.characters.push_back(chi);
    }
  require_hopf(D);
  return D;
}

}  // namespace hopf

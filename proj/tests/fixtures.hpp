#pragma once

#include <vector>

#include "hopf/error.hpp"
#include "hopf/hopf.hpp"

namespace fixtures {

using namespace hopf;

template <class F>
ErrorCode code_of(F f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::IoError;  // sentinel: nothing thrown
}

inline long long binom_int(int a, int k) {
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (a - i) / (i + 1);
  return r;
}

// Gaussian binomial [a choose k]_q.
inline CycloNum qbinom(const CycloNum& q, int a, int k) {
  CycloNum num(1), den(1);
  for (int i = 0; i < k; ++i) {
    num *= CycloNum(1) - q.pow(a - i);
    den *= CycloNum(1) - q.pow(i + 1);
  }
  return num / den;
}

// Taft algebra written out by hand: basis x^a g^c at index N a + c, g x = q x g,
// Delta(x) = x (x) 1 + g (x) x, so Delta(x^a) = sum_k [a,k]_q x^{a-k} g^k (x) x^k.
// q = zeta_{N^2}^{N e}.
inline FinHopf hand_taft(int N, int e) {
  const int M = N * N, n = N * N;
  const CycloNum q = CycloNum::zeta(M, static_cast<long long>(N) * e);
  auto idx = [N](int a, int c) { return N * a + ((c % N) + N) % N; };
  std::vector<Entry3> mult, comult;
  for (int a = 0; a < N; ++a)
    for (int c = 0; c < N; ++c)
      for (int b = 0; b < N; ++b)
        for (int d = 0; d < N; ++d)
          if (a + b < N) mult.push_back({idx(a, c), idx(b, d), idx(a + b, c + d), q.pow(static_cast<long long>(c) * b)});
  for (int a = 0; a < N; ++a)
    for (int c = 0; c < N; ++c)
      for (int k = 0; k <= a; ++k) comult.push_back({idx(a, c), idx(a - k, k + c), idx(k, c), qbinom(q, a, k)});
  FinHopf h;
  h.dim = n;
  h.conductor = M;
  h.mult = SparseTensor3(n, n, n, mult);
  h.comult = SparseTensor3(n, n, n, comult);
  h.unit = unit_vector(n, 0);
  h.counit = Vec(n);
  for (int c = 0; c < N; ++c) h.counit[idx(0, c)] = CycloNum(1);
  // S(x^a g^c) = g^{-c} (-g^{-1} x)^a
  h.antipode = Matrix(n, n);
  const Vec sx = scale(hmul(h, unit_vector(n, idx(0, N - 1)), unit_vector(n, idx(1, 0))), CycloNum(-1));
  for (int a = 0; a < N; ++a)
    for (int c = 0; c < N; ++c) {
      Vec v = unit_vector(n, idx(0, -c));
      for (int t = 0; t < a; ++t) v = hmul(h, v, sx);
      for (int r = 0; r < n; ++r) h.antipode.at(r, idx(a, c)) = v[r];
    }
  for (int c = 0; c < N; ++c) h.claims.grouplikes.push_back(unit_vector(n, idx(0, c)));
  for (int k = 0; k < N; ++k) {
    Vec chi(n);
    for (int c = 0; c < N; ++c) chi[idx(0, c)] = CycloNum::zeta(N, static_cast<long long>(k) * c);
    h.claims.characters.push_back(chi);
  }
  h.label = "hand_taft";
  return h;
}

// k[Z/N] by hand: e_i = g^i.
inline FinHopf hand_cyclic(int N, int conductor) {
  std::vector<Entry3> mult, comult;
  for (int i = 0; i < N; ++i) {
    comult.push_back({i, i, i, CycloNum(1)});
    for (int j = 0; j < N; ++j) mult.push_back({i, j, (i + j) % N, CycloNum(1)});
  }
  FinHopf h;
  h.dim = N;
  h.conductor = conductor;
  h.mult = SparseTensor3(N, N, N, mult);
  h.comult = SparseTensor3(N, N, N, comult);
  h.unit = unit_vector(N, 0);
  h.counit = Vec(N, CycloNum(1));
  h.antipode = Matrix(N, N);
  for (int i = 0; i < N; ++i) h.antipode.at((N - i) % N, i) = CycloNum(1);
  for (int i = 0; i < N; ++i) h.claims.grouplikes.push_back(unit_vector(N, i));
  for (int k = 0; k < N; ++k) {
    Vec chi(N);
    for (int i = 0; i < N; ++i) chi[i] = CycloNum::zeta(conductor, static_cast<long long>(k) * i * (conductor / N));
    h.claims.characters.push_back(chi);
  }
  h.label = "hand_cyclic";
  return h;
}

inline bool same_constants(const FinHopf& a, const FinHopf& b) {
  return a.dim == b.dim && a.mult == b.mult && a.comult == b.comult &&
         a.unit == b.unit && a.counit == b.counit && a.antipode == b.antipode;
}

}  // namespace fixtures

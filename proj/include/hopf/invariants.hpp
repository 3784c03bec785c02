#pragma once

#include <random>
#include <string>
#include <vector>

#include "hopf/hopf.hpp"

namespace hopf {

struct IntegralData {
  Vec left_integral;        // Lambda in H, h Lambda = eps(h) Lambda
  Vec right_integral_dual;  // lambda in H*, lambda f = f(1) lambda
  bool normalized = false;  // <lambda, Lambda> = 1
};

// Solution space of h L = eps(h) L (left) or L h = eps(h) L (right).
Subspace integral_space(const Algebra& a, const Vec& counit, bool left);
IntegralData integrals(const FinHopf& h);

struct ModularData {
  Vec alpha;  // Lambda x = alpha(x) Lambda
  Vec g;      // f lambda = f(g) lambda
};
ModularData modular_elements(const FinHopf& h, const IntegralData& in);
ModularData modular_elements(const FinHopf& h);

// S^4(h) = g (alpha^{-1}(h_1) h_2 alpha(h_3)) g^{-1} on every basis element.
bool radford_s4_check(const FinHopf& h, const ModularData& md);

struct TraceTriple {
  CycloNum trace;
  CycloNum left;   // <lambda, S(Lambda_2) f(Lambda_1)>
  CycloNum right;  // <lambda, S(f(Lambda_2)) Lambda_1>
  bool equal() const { return trace == left && trace == right; }
};
TraceTriple trace_formula_check(const FinHopf& h, const IntegralData& in, const Matrix& f);
// Integer entries in [-3, 3].
Matrix random_integer_matrix(int n, std::mt19937& rng);

int antipode_order(const FinHopf& h, int bound = 0);

struct Semisimplicity {
  bool semisimple = false;
  bool cosemisimple = false;
  CycloNum trace_s2;
};
Semisimplicity semisimplicity(const FinHopf& h);

struct CoradicalReport {
  std::vector<int> filtration;  // dims of H_0, H_1, ..., ending at dim H
  int h0_dim = 0;
  int grouplike_span_dim = 0;
  int blocks = 0;          // simple factors of H*/Rad H*
  int one_dim_blocks = 0;  // of which 1x1
  std::vector<std::vector<int>> candidates;  // sizes n_i >= 2 of the remaining blocks
};
CoradicalReport coradical_filtration(const FinHopf& h);
// All nondecreasing lists of `parts` integers >= 2 whose squares sum to total.
std::vector<std::vector<int>> block_size_candidates(int total, int parts);

struct Census {
  std::vector<Vec> elements;          // verified group-likes, claims order
  std::vector<std::vector<int>> table;  // elements[i] * elements[j] = elements[table[i][j]]
  int identity = 0;
  int certificate = 0;                // dim (H*)^ab / Rad
  bool abelian = true;
  std::vector<int> invariant_factors;  // descending, abelian case
  int order() const { return static_cast<int>(elements.size()); }
  std::string type() const;           // "9,3", "1", or "nonabelian27"
};
// Throws ClaimNotGrouplike, ClaimIncomplete or ClaimOvercomplete.
Census grouplike_census(const FinHopf& h);
Census character_census(const FinHopf& h);
int grouplike_certificate(const FinHopf& h);

struct SkewPrimitives {
  Subspace space;
  bool trivial = true;
};
SkewPrimitives skew_primitives(const FinHopf& h, const Vec& a, const Vec& b);
bool is_grouplike(const FinHopf& h, const Vec& g);
bool is_character(const FinHopf& h, const Vec& chi);

struct Fingerprint {
  int dim = 0;
  int grouplikes = 0;
  int characters = 0;
  std::string grouplike_type;
  std::string character_type;
  int antipode_order = 0;
  CycloNum trace_s2;
  std::vector<int> coradical;
  bool pointed = false;
  bool dual_pointed = false;
  bool unimodular = false;
  std::string type() const { return "(" + grouplike_type + ";" + character_type + ")"; }
  std::string str() const;
  friend bool operator==(const Fingerprint& a, const Fingerprint& b);
};
Fingerprint fingerprint(const FinHopf& h);

struct PairingTable {
  std::vector<std::vector<CycloNum>> table;  // rows G(H*), columns G(H)
  bool bosonization_criterion = false;       // some entry != 1
  bool all_one = true;
};
PairingTable pairing_table(const FinHopf& h);

bool commutative_quotient_check(const Algebra& a);

struct SplittingReport {
  bool success = false;
  int coinvariant_dim = 0;
};
// pi: H -> B and gamma: B -> H Hopf maps with pi gamma = id.
SplittingReport projection_splitting_check(const FinHopf& h, const FinHopf& b, const Matrix& pi,
                                           const Matrix& gamma);

}  // namespace hopf

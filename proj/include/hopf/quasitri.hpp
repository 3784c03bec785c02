#pragma once

#include <string>
#include <vector>

#include "hopf/constructors.hpp"
#include "hopf/hopf.hpp"

namespace hopf {

// R in H (x) H, key i*n + j for e_i (x) e_j.
struct RMatrixData {
  FinHopf host;
  Tensor R;
  int rank = 0;   // dim image f_R
  Subspace K;     // image f_R
  Subspace L;     // image f_Rtilde
  Vec u;          // Drinfeld element S(R2) R1
  bool minimal = false;
};

struct QtResult {
  // QT1..QT5, f_R_bialgebra, dim_L_eq_dim_K
  VerificationReport report;
  RMatrixData data;
  bool ok() const { return report.ok(); }
};

QtResult verify_qt(const FinHopf& h, const Tensor& R);
// Throws NotQuasitriangular with the first failing axiom.
RMatrixData require_qt(const FinHopf& h, const Tensor& R);

// f_R(b) = <b, R1> R2 and f_Rtilde(b) = <b, R2> R1, columns indexed by the dual basis.
struct FMaps {
  Matrix f_r;
  Matrix f_rtilde;
  bool dual_relation = false;  // f_Rtilde = f_R^*
};
FMaps f_maps(const RMatrixData& rm);

struct DrinfeldData {
  Vec u;
  Vec u_inv;  // R2 S^2(R1)
  // inverse, S2_conjugation, counit, comult_left, comult_right, uSu_central, grouplikes_commute
  VerificationReport identities;
};
// Throws IdentityFails naming the first failing identity.
DrinfeldData drinfeld_element(const RMatrixData& rm);

struct RibbonCertificate {
  std::vector<Vec> ribbon_elements;
  std::vector<Vec> candidate_grouplikes;
  std::vector<std::string> failures;  // per candidate: "ok" or the first failing axiom
};
// Every ribbon v has u v^{-1} group-like: Delta(u) = (R21 R)^{-1}(u (x) u) and
// R.4 give Delta(u v^{-1}) = u v^{-1} (x) u v^{-1}, so v = l^{-1} u with l in G(H).
RibbonCertificate ribbon_search(const RMatrixData& rm);
RibbonCertificate ribbon_search(const RMatrixData& rm, const DrinfeldData& d);

// R1..R5 on v; R4 is checked as (R21 R) Delta(v) = v (x) v.
VerificationReport ribbon_axioms(const RMatrixData& rm, const DrinfeldData& d, const Vec& v);

// R_b = sum b(chi, psi) e_chi (x) e_psi over the primitive idempotents of k[G],
// b running over all bicharacters of the character group. G must be a
// cyclic_product_group. Every R is verified.
std::vector<RMatrixData> bicharacter_rmatrices(const FiniteGroup& g, int conductor);
// exps[s][t] in [0, gcd(ord s, ord t)): b(chi, psi) = prod zeta_{gcd}^{a_s b_t exps[s][t]}.
Tensor bicharacter_r(const FiniteGroup& g, int conductor, const std::vector<std::vector<int>>& exps);

Tensor uq_standard_r(int p, int e);
// Throws FixtureRejected when the fixture fails verification.
RMatrixData uq_standard_rmatrix(int p, int e);

struct SurjectionReport {
  Matrix F;  // dim H x dim D(H)
  MorphismReport morphism;
  bool surjective = false;
};
// F(b # h) = <b, R1> R2 h on D(H) from drinfeld_double.
SurjectionReport double_surjection_check(const FinHopf& h, const FinHopf& d, const RMatrixData& rm);

struct CentralGrouplikes {
  std::vector<Vec> elements;  // b # x for every claimed character x # b of D(H)
  bool all_grouplike = true;
  bool all_central = true;
};
CentralGrouplikes double_central_grouplikes(const FinHopf& h, const FinHopf& d);

bool is_central(const FinHopf& h, const Vec& z);

}  // namespace hopf

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hopf/tensor.hpp"

namespace hopf {

struct IsoFixture {
  std::string target;  // label of the target algebra
  Matrix map;          // target_dim x source_dim
};

struct ClaimSet {
  std::vector<Vec> grouplikes;  // claimed G(H), as vectors
  std::vector<Vec> characters;  // claimed G(H*), as covectors
  std::vector<IsoFixture> iso_fixtures;
};

// Hopf algebra by structure constants on a basis e_0..e_{n-1}:
// e_i e_j = sum c_ij^k e_k (mult), Delta(e_i) = sum d_i^{jk} e_j (x) e_k
// (comult), antipode column j is S(e_j).
struct FinHopf {
  int dim = 0;
  int conductor = 1;
  SparseTensor3 mult;
  Vec unit;
  SparseTensor3 comult;
  Vec counit;
  Matrix antipode;
  ClaimSet claims;
  std::string label;

  Algebra algebra() const { return Algebra{dim, conductor, mult, unit}; }
};

// Elements of H (x) H (key i*n + j) or H (x) H (x) H (key (i*n + j)*n + k).
using Tensor = SparseElem;

Vec hmul(const FinHopf& h, const Vec& x, const Vec& y);
Tensor hcomult(const FinHopf& h, const Vec& x);
Tensor hcomult_basis(const FinHopf& h, int i);
CycloNum hcounit(const FinHopf& h, const Vec& x);
Vec hantipode(const FinHopf& h, const Vec& x);
// Product in H (x) H.
Tensor tmul2(const FinHopf& h, const Tensor& a, const Tensor& b);
// Product in H (x) H (x) H.
Tensor tmul3(const FinHopf& h, const Tensor& a, const Tensor& b);
Tensor tensor_of(const Vec& a, const Vec& b);
Tensor swap2(const Tensor& t, int n);
Tensor dense_to_tensor(const Vec& v);
Vec tensor_to_dense(const Tensor& t, long long size);
bool tensor_equal(const Tensor& a, const Tensor& b);
Tensor tensor_sub(const Tensor& a, const Tensor& b);

struct AxiomCheck {
  std::string axiom;
  bool passed = true;
  int i = -1, j = -1, k = -1;  // first failing indices, -1 if not applicable
};

struct VerificationReport {
  std::vector<AxiomCheck> checks;
  bool ok() const;
  const AxiomCheck* find(const std::string& axiom) const;
  std::string str() const;
};

VerificationReport verify_hopf(const FinHopf& h);
// Throws VerificationFailed naming the first failing axiom.
void require_hopf(const FinHopf& h);

FinHopf trivial_hopf(int conductor = 1);
FinHopf dual(const FinHopf& h);
enum class OpCop { op, cop, both };
FinHopf op_cop(const FinHopf& h, OpCop which);
FinHopf tensor(const FinHopf& h, const FinHopf& k);
Matrix antipode_inverse(const FinHopf& h);

struct HopfMorphism {
  std::shared_ptr<const FinHopf> source;
  std::shared_ptr<const FinHopf> target;
  Matrix matrix;
};

struct MorphismReport {
  VerificationReport checks;
  int rank = 0;
  bool injective = false;
  bool surjective = false;
  bool ok() const { return checks.ok(); }
};

MorphismReport verify_morphism(const FinHopf& src, const FinHopf& tgt, const Matrix& f);
MorphismReport verify_morphism(const HopfMorphism& f);

Subspace coinvariants(const FinHopf& src, const FinHopf& tgt, const Matrix& pi);

struct HopfQuotient {
  FinHopf quotient;
  Matrix projection;
  Subspace ideal;
};
HopfQuotient quotient_by_hopf_ideal(const FinHopf& h, const std::vector<Vec>& generators);

}  // namespace hopf

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hopf/constructors.hpp"
#include "hopf/invariants.hpp"
#include "hopf/quasitri.hpp"

using namespace hopf;
using fixtures::code_of;

namespace {

// (f (x) g) applied to a two-tensor, f and g given as matrices.
Tensor apply2(const FinHopf& h, const Tensor& t, const Matrix& f, const Matrix& g) {
  const int n = h.dim;
  Vec acc(static_cast<size_t>(n) * n);
  for (const auto& [key, c] : t) {
    const int i = static_cast<int>(key / n), j = static_cast<int>(key % n);
    for (int a = 0; a < n; ++a) {
      if (f.at(a, i).is_zero()) continue;
      for (int b = 0; b < n; ++b) {
        if (g.at(b, j).is_zero()) continue;
        acc[static_cast<size_t>(a) * n + b] += c * f.at(a, i) * g.at(b, j);
      }
    }
  }
  return dense_to_tensor(acc);
}

Tensor one_one(const FinHopf& h) { return tensor_of(h.unit, h.unit); }

// z commutes with every basis element.
bool commutes_with_basis(const FinHopf& h, const Vec& z) {
  for (int i = 0; i < h.dim; ++i) {
    const Vec e = unit_vector(h.dim, i);
    if (hmul(h, z, e) != hmul(h, e, z)) return false;
  }
  return true;
}

}  // namespace

TEST(Bicharacter, CountOnZ3) {
  const FinHopf h = group_algebra(cyclic_product_group({3}), 9);
  const auto rs = bicharacter_rmatrices(cyclic_product_group({3}), 9);
  // Hom(Z3 (x) Z3, k^x) has 3 elements
  ASSERT_EQ(rs.size(), 3u);
  for (const auto& r : rs) EXPECT_TRUE(verify_qt(h, r.R).ok());
}

TEST(Bicharacter, CountOnZ3xZ3) {
  const FiniteGroup g = cyclic_product_group({3, 3});
  // 2 x 2 exponent matrix over Z/3
  EXPECT_EQ(bicharacter_rmatrices(g, 9).size(), 81u);
}

TEST(Bicharacter, NonAbelianRejected) {
  EXPECT_NE(code_of([] { bicharacter_rmatrices(heisenberg_group(3), 9); }), ErrorCode::IoError);
}

TEST(Qt, TrivialROnGroupAlgebra) {
  const FinHopf h = fixtures::hand_cyclic(3, 3);
  const QtResult r = verify_qt(h, one_one(h));
  ASSERT_TRUE(r.ok()) << r.report.str();
  EXPECT_EQ(r.data.rank, 1);
  EXPECT_FALSE(r.data.minimal);
}

TEST(Qt, TrivialROnTaftFailsQT1) {
  const FinHopf t = taft(3, 1);
  const QtResult r = verify_qt(t, one_one(t));
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.report.find("QT1")->passed);
  EXPECT_EQ(code_of([&] { require_qt(t, one_one(t)); }), ErrorCode::NotQuasitriangular);
}

TEST(Qt, UqStandard) {
  const RMatrixData rm = uq_standard_rmatrix(3, 1);
  EXPECT_TRUE(rm.minimal);
  EXPECT_EQ(rm.rank, 9);
  EXPECT_EQ(rm.K.dim(), rm.L.dim());
}

TEST(Qt, InverseAndSSInvariance) {
  const RMatrixData rm = uq_standard_rmatrix(3, 1);
  const FinHopf& h = rm.host;
  const Matrix id = Matrix::identity(h.dim);
  const Tensor rinv = apply2(h, rm.R, h.antipode, id);
  EXPECT_TRUE(tensor_equal(tmul2(h, rm.R, rinv), one_one(h)));
  EXPECT_TRUE(tensor_equal(tmul2(h, rinv, rm.R), one_one(h)));
  EXPECT_TRUE(tensor_equal(apply2(h, rm.R, h.antipode, h.antipode), rm.R));
}

TEST(Qt, CopWithFlippedR) {
  const RMatrixData rm = uq_standard_rmatrix(3, 1);
  const FinHopf c = op_cop(rm.host, OpCop::cop);
  EXPECT_TRUE(verify_qt(c, swap2(rm.R, c.dim)).ok());
}

TEST(Qt, FMapsDualRelation) {
  const RMatrixData rm = uq_standard_rmatrix(3, 1);
  const FMaps f = f_maps(rm);
  EXPECT_TRUE(f.dual_relation);
  EXPECT_EQ(f.f_rtilde, f.f_r.transpose());
}

TEST(Drinfeld, UqIdentities) {
  const RMatrixData rm = uq_standard_rmatrix(3, 1);
  const DrinfeldData d = drinfeld_element(rm);
  EXPECT_TRUE(d.identities.ok()) << d.identities.str();
  // u g^{-1} is central: S^2 is conjugation by g on u_q
  const FinHopf& h = rm.host;
  for (const Vec& g : h.claims.grouplikes) {
    const Vec z = hmul(h, d.u, g);
    if (commutes_with_basis(h, z)) {
      EXPECT_EQ(hmul(h, hantipode(h, g), g), h.unit);
      return;
    }
  }
  ADD_FAILURE() << "no grouplike g with u g central";
}

TEST(Drinfeld, SemisimpleHostsHaveSymmetricU) {
  const FiniteGroup g = cyclic_product_group({3});
  for (const RMatrixData& rm : bicharacter_rmatrices(g, 9)) {
    const DrinfeldData d = drinfeld_element(rm);
    EXPECT_EQ(hantipode(rm.host, d.u), d.u);
    EXPECT_TRUE(commutes_with_basis(rm.host, d.u));
  }
}

TEST(Ribbon, UqHasRibbon) {
  const RMatrixData rm = uq_standard_rmatrix(3, 1);
  const RibbonCertificate c = ribbon_search(rm);
  ASSERT_FALSE(c.ribbon_elements.empty());
  EXPECT_EQ(c.candidate_grouplikes.size(), c.failures.size());
  const DrinfeldData d = drinfeld_element(rm);
  for (const Vec& v : c.ribbon_elements) {
    EXPECT_TRUE(ribbon_axioms(rm, d, v).ok());
    EXPECT_TRUE(commutes_with_basis(rm.host, v));
    EXPECT_EQ(hmul(rm.host, v, v), hmul(rm.host, d.u, hantipode(rm.host, d.u)));
  }
}

TEST(Ribbon, Z27TrivialRHasExactlyOne) {
  const FinHopf h = group_algebra(cyclic_product_group({27}), 27);
  const RMatrixData rm = require_qt(h, one_one(h));
  // u = 1, so v^2 = 1 and v = l^{-1} grouplike: only l = 1 survives in odd order
  const RibbonCertificate c = ribbon_search(rm);
  ASSERT_EQ(c.ribbon_elements.size(), 1u);
  EXPECT_EQ(c.ribbon_elements[0], h.unit);
}

TEST(Ribbon, UnitFailsOnUq) {
  const RMatrixData rm = uq_standard_rmatrix(3, 1);
  const DrinfeldData d = drinfeld_element(rm);
  EXPECT_FALSE(ribbon_axioms(rm, d, rm.host.unit).ok());
}

TEST(Double, SurjectionsFromCyclicDouble) {
  const FinHopf h = group_algebra(cyclic_product_group({3}), 9);
  const FinHopf d = drinfeld_double(h);
  for (const RMatrixData& rm : bicharacter_rmatrices(cyclic_product_group({3}), 9)) {
    const SurjectionReport s = double_surjection_check(h, d, rm);
    EXPECT_TRUE(s.morphism.ok());
    EXPECT_TRUE(s.surjective);
    EXPECT_EQ(s.F.rows(), 3);
    EXPECT_EQ(s.F.cols(), 9);
  }
}

TEST(Double, TaftCentralGrouplikes) {
  const FinHopf t = taft(3, 1);
  const FinHopf d = drinfeld_double(t);
  const CentralGrouplikes c = double_central_grouplikes(t, d);
  ASSERT_EQ(c.elements.size(), 3u);
  EXPECT_TRUE(c.all_grouplike);
  EXPECT_TRUE(c.all_central);
  for (const Vec& z : c.elements) {
    EXPECT_TRUE(commutes_with_basis(d, z));
    EXPECT_TRUE(tensor_equal(hcomult(d, z), tensor_of(z, z)));
  }
}

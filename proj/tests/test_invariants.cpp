#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "hopf/constructors.hpp"
#include "hopf/invariants.hpp"

using namespace hopf;
using fixtures::code_of;

namespace {

FinHopf z27() { return group_algebra(cyclic_product_group({27}), 27); }

// Stacked system h L = eps(h) L assembled from hmul on basis vectors.
int integral_dim_by_products(const FinHopf& h) {
  const int n = h.dim;
  Matrix m(n * n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec v = hmul(h, unit_vector(n, i), unit_vector(n, j));
      for (int k = 0; k < n; ++k) m.at(i * n + k, j) = v[k] - (k == j ? h.counit[i] : CycloNum(0));
    }
  return kernel(m).dim();
}

}  // namespace

TEST(Integrals, CyclicIsSymmetrization) {
  const FinHopf h = fixtures::hand_cyclic(3, 3);
  const IntegralData in = integrals(h);
  const CycloNum c = in.left_integral[0];
  EXPECT_EQ(in.left_integral, (Vec{c, c, c}));
  EXPECT_TRUE(in.normalized);
  EXPECT_EQ(dot(in.right_integral_dual, in.left_integral), CycloNum(1));
}

TEST(Integrals, TaftOneDimensionalAndCounitNull) {
  const FinHopf t = taft(3, 1);
  EXPECT_EQ(integral_dim_by_products(t), 1);
  const IntegralData in = integrals(t);
  for (int i = 0; i < 9; ++i)
    EXPECT_EQ(hmul(t, unit_vector(9, i), in.left_integral), scale(in.left_integral, t.counit[i]));
  EXPECT_TRUE(hcounit(t, in.left_integral).is_zero());
}

TEST(Integrals, LarsonSweedlerOnCorpus) {
  for (const FinHopf& h : {uq_sl2(3, 1), rq(3, 1), book(3, 1, 1), dual(uq_sl2(3, 1)), z27()})
    EXPECT_EQ(integral_space(h.algebra(), h.counit, true).dim(), 1) << h.label;
}

TEST(Integrals, CorruptInputRejected) {
  FinHopf t = taft(3, 1);
  t.counit = Vec(9);
  EXPECT_EQ(code_of([&] { integrals(t); }), ErrorCode::IntegralSpaceNotOneDim);
}

TEST(Modular, SemisimpleIsUnimodular) {
  for (const FinHopf& h : {z27(), group_algebra(heisenberg_group(3), 9)}) {
    const ModularData md = modular_elements(h);
    EXPECT_EQ(md.alpha, h.counit);
    EXPECT_EQ(md.g, h.unit);
  }
}

TEST(Modular, TaftIsNotUnimodular) {
  const FinHopf t = taft(3, 1);
  const IntegralData in = integrals(t);
  const ModularData md = modular_elements(t, in);
  EXPECT_NE(md.alpha, t.counit);
  EXPECT_NE(md.g, t.unit);
  for (int i = 0; i < 9; ++i)
    EXPECT_EQ(hmul(t, in.left_integral, unit_vector(9, i)), scale(in.left_integral, md.alpha[i]));
  EXPECT_TRUE(is_grouplike(t, md.g));
}

TEST(Modular, UqPairingIsOne) {
  const ModularData md = modular_elements(uq_sl2(3, 1));
  EXPECT_EQ(dot(md.alpha, md.g), CycloNum(1));
}

TEST(Radford, HoldsOnCorpus) {
  for (const FinHopf& h : {z27(), taft(3, 1), uq_sl2(3, 1), book(3, 2, 1), dual(rq(3, 1))})
    EXPECT_TRUE(radford_s4_check(h, modular_elements(h))) << h.label;
}

TEST(Radford, WrongModularDataFails) {
  const FinHopf t = taft(3, 1);
  ModularData md = modular_elements(t);
  md.alpha = t.counit;
  EXPECT_FALSE(radford_s4_check(t, md));
}

TEST(Trace, IdentityOnCyclic) {
  const FinHopf h = fixtures::hand_cyclic(3, 3);
  const TraceTriple t = trace_formula_check(h, integrals(h), Matrix::identity(3));
  EXPECT_EQ(t.trace, CycloNum(3));
  EXPECT_TRUE(t.equal());
}

TEST(Trace, SquaredAntipodeOnTaft) {
  const FinHopf h = taft(3, 1);
  const TraceTriple t = trace_formula_check(h, integrals(h), h.antipode * h.antipode);
  EXPECT_TRUE(t.trace.is_zero());
  EXPECT_TRUE(t.equal());
}

TEST(Trace, RandomEndomorphismsOnUq) {
  const FinHopf h = uq_sl2(3, 1);
  const IntegralData in = integrals(h);
  std::mt19937 rng(20);
  for (int k = 0; k < 20; ++k) {
    const Matrix f = random_integer_matrix(h.dim, rng);
    CycloNum tr;
    for (int i = 0; i < h.dim; ++i) tr += f.at(i, i);
    const TraceTriple t = trace_formula_check(h, in, f);
    EXPECT_EQ(t.trace, tr);
    EXPECT_TRUE(t.equal()) << k;
  }
}

TEST(Trace, UnnormalizedRejected) {
  const FinHopf h = taft(3, 1);
  IntegralData in = integrals(h);
  in.normalized = false;
  EXPECT_EQ(code_of([&] { trace_formula_check(h, in, Matrix::identity(9)); }), ErrorCode::NotNormalized);
}

TEST(AntipodeOrder, GroupAlgebraIsTwo) {
  EXPECT_EQ(antipode_order(z27()), 2);
  EXPECT_EQ(antipode_order(group_algebra(heisenberg_group(3), 9)), 2);
}

TEST(AntipodeOrder, TaftIsSix) {
  const FinHopf t = taft(3, 1);
  // S^2 is conjugation by g^{-1} (S(x) = -g^{-1} x), and g has order 3
  const Vec g = t.claims.grouplikes[1];
  const Vec gi = hantipode(t, g);
  const Matrix s2 = t.antipode * t.antipode;
  for (int b = 0; b < 9; ++b) EXPECT_EQ(s2.column(b), hmul(t, hmul(t, gi, unit_vector(9, b)), g));
  EXPECT_NE(s2, Matrix::identity(9));
  EXPECT_EQ(hmul(t, hmul(t, g, g), g), t.unit);
  EXPECT_EQ(antipode_order(t), 6);
}

TEST(AntipodeOrder, UqIsSix) {
  const FinHopf u = uq_sl2(3, 1);
  EXPECT_EQ(antipode_order(u), 6);
  const Matrix s2 = u.antipode * u.antipode;
  EXPECT_EQ(s2 * s2 * s2, Matrix::identity(27));
  EXPECT_NE(s2, Matrix::identity(27));
}

TEST(AntipodeOrder, BoundExceeded) {
  EXPECT_EQ(code_of([] { antipode_order(taft(3, 1), 5); }), ErrorCode::AntipodeOrderExceedsBound);
}

TEST(Semisimplicity, Verdicts) {
  const Semisimplicity z = semisimplicity(z27());
  EXPECT_TRUE(z.semisimple && z.cosemisimple);
  EXPECT_EQ(z.trace_s2, CycloNum(27));
  const Semisimplicity t = semisimplicity(taft(3, 1));
  EXPECT_FALSE(t.semisimple);
  EXPECT_TRUE(t.trace_s2.is_zero());
  EXPECT_FALSE(semisimplicity(book(3, 1, 1)).semisimple);
}

TEST(Semisimplicity, CounitOfIntegralAgreesWithTrace) {
  for (const FinHopf& h : {z27(), taft(3, 1), uq_sl2(3, 1), dual(group_algebra(heisenberg_group(3), 9))}) {
    const bool eps_zero = hcounit(h, integrals(h).left_integral).is_zero();
    EXPECT_EQ(eps_zero, semisimplicity(h).trace_s2.is_zero()) << h.label;
  }
}

TEST(Coradical, CosemisimpleIsOneStep) {
  const CoradicalReport r = coradical_filtration(z27());
  EXPECT_EQ(r.filtration, std::vector<int>{27});
}

TEST(Coradical, TaftByDegree) {
  const FinHopf t = taft(3, 1);
  // H_j = span{x^a g^c : a <= j}: Delta(H_j) lies in sum_i H_i (x) H_{j-i}
  for (int j = 0; j < 3; ++j)
    for (int a = 0; a <= j; ++a)
      for (int c = 0; c < 3; ++c)
        for (const auto& e : t.comult.row(3 * a + c)) EXPECT_LE(e.j / 3 + e.k / 3, a);
  const CoradicalReport r = coradical_filtration(t);
  EXPECT_EQ(r.filtration, (std::vector<int>{3, 6, 9}));
  EXPECT_EQ(r.grouplike_span_dim, 3);
}

TEST(Coradical, UqDualBlocks) {
  // simple u_q-modules at p = 3: highest weight q^n has dimension n + 1
  const int sum_squares = 1 * 1 + 2 * 2 + 3 * 3;
  const CoradicalReport r = coradical_filtration(dual(uq_sl2(3, 1)));
  EXPECT_EQ(r.h0_dim, sum_squares);
  EXPECT_EQ(r.blocks, 3);
  EXPECT_EQ(r.one_dim_blocks, 1);
  ASSERT_EQ(r.candidates.size(), 1u);
  EXPECT_EQ(r.candidates[0], (std::vector<int>{2, 3}));
  EXPECT_EQ(r.filtration.back(), 27);
}

TEST(Coradical, UqStartsAtGroup) {
  const CoradicalReport r = coradical_filtration(uq_sl2(3, 1));
  EXPECT_EQ(r.h0_dim, 3);
  EXPECT_EQ(r.filtration.back(), 27);
  for (std::size_t i = 1; i < r.filtration.size(); ++i) EXPECT_LT(r.filtration[i - 1], r.filtration[i]);
}

TEST(Coradical, BlockCandidates) {
  EXPECT_EQ(block_size_candidates(9, 1), (std::vector<std::vector<int>>{{3}}));
  EXPECT_EQ(block_size_candidates(12, 3), (std::vector<std::vector<int>>{{2, 2, 2}}));
  EXPECT_TRUE(block_size_candidates(5, 1).empty());
  EXPECT_EQ(block_size_candidates(0, 0).size(), 1u);
}

TEST(Coradical, NonSplitFieldDetected) {
  // over Q(zeta_9) the characters of Z/27 do not all split
  FinHopf h = group_algebra(cyclic_product_group({27}), 9);
  EXPECT_EQ(code_of([&] { coradical_filtration(dual(h)); }), ErrorCode::FieldTooSmall);
}

TEST(Census, ProductGroup) {
  const Census c = grouplike_census(group_algebra(cyclic_product_group({9, 3}), 9));
  EXPECT_EQ(c.order(), 27);
  EXPECT_EQ(c.type(), "9,3");
  EXPECT_EQ(c.certificate, 27);
}

TEST(Census, UqAndRq) {
  const FinHopf u = uq_sl2(3, 1);
  EXPECT_EQ(grouplike_census(u).order(), 3);
  EXPECT_EQ(character_census(u).order(), 1);
  const FinHopf r = rq(3, 1);
  EXPECT_EQ(grouplike_census(r).type(), "9");
  EXPECT_EQ(character_census(r).type(), "3");
}

TEST(Census, HeisenbergCharacters) {
  const FinHopf h = group_algebra(heisenberg_group(3), 9);
  const Census g = grouplike_census(h);
  EXPECT_FALSE(g.abelian);
  EXPECT_EQ(g.type(), "nonabelian27");
  const Census c = character_census(h);
  EXPECT_EQ(c.order(), 9);
  EXPECT_EQ(c.type(), "3,3");
}

TEST(Census, ClaimErrors) {
  FinHopf t = taft(3, 1);
  t.claims.grouplikes.pop_back();
  EXPECT_EQ(code_of([&] { grouplike_census(t); }), ErrorCode::ClaimIncomplete);
  FinHopf u = taft(3, 1);
  u.claims.grouplikes.push_back(unit_vector(9, 3));
  EXPECT_EQ(code_of([&] { grouplike_census(u); }), ErrorCode::ClaimNotGrouplike);
  FinHopf w = taft(3, 1);
  w.claims.grouplikes.erase(w.claims.grouplikes.begin() + 2);
  EXPECT_EQ(code_of([&] { grouplike_census(w); }), ErrorCode::ClaimIncomplete);
}

TEST(Census, SmallFieldZ27) {
  // at conductor 9 only 9 characters of Z/27 are visible; the certificate still counts the split blocks
  const FinHopf h = group_algebra(cyclic_product_group({27}), 9);
  const ErrorCode c = code_of([&] { character_census(h); });
  EXPECT_TRUE(c == ErrorCode::ClaimIncomplete || c == ErrorCode::FieldTooSmall);
}

TEST(SkewPrimitives, GroupAlgebraIsTrivial) {
  const FinHopf h = fixtures::hand_cyclic(3, 3);
  const SkewPrimitives s = skew_primitives(h, unit_vector(3, 1), unit_vector(3, 2));
  EXPECT_EQ(s.space.dim(), 1);
  EXPECT_TRUE(s.trivial);
  EXPECT_TRUE(s.space.contains(sub(unit_vector(3, 1), unit_vector(3, 2))));
}

TEST(SkewPrimitives, TaftX) {
  const FinHopf t = taft(3, 1);
  const Vec one = unit_vector(9, 0), g = unit_vector(9, 1), x = unit_vector(9, 3);
  // Delta(x) = g (x) x + x (x) 1, so x lies in P_{g,1}
  const SkewPrimitives s = skew_primitives(t, g, one);
  EXPECT_EQ(s.space.dim(), 2);
  EXPECT_FALSE(s.trivial);
  EXPECT_TRUE(s.space.contains(x));
  EXPECT_EQ(skew_primitives(t, one, g).space.dim(), 1);
  EXPECT_EQ(code_of([&] { skew_primitives(t, x, one); }), ErrorCode::NotGrouplike);
}

TEST(SkewPrimitives, UqGenerators) {
  const PresentationSpec sp = uq_spec(3, 1);
  const FinHopf u = build_from_presentation(sp);
  const Vec one = u.unit, g = unit_vector(27, sp.index({0, 0}, {1})), gi = unit_vector(27, sp.index({0, 0}, {2}));
  const Vec x = unit_vector(27, sp.index({1, 0}, {0})), y = unit_vector(27, sp.index({0, 1}, {0}));
  const SkewPrimitives sx = skew_primitives(u, one, g);
  EXPECT_TRUE(sx.space.contains(x));
  EXPECT_FALSE(sx.trivial);
  const SkewPrimitives sy = skew_primitives(u, gi, one);
  EXPECT_TRUE(sy.space.contains(y));
  EXPECT_FALSE(sy.trivial);
}

TEST(Fingerprint, Canonical) {
  const Fingerprint f = fingerprint(taft(3, 1));
  EXPECT_EQ(f.str(), "dim=9 type=(3;3) ordS=6 TrS2=0 corad=[3,6,9] pointed=yes dualpointed=yes unimodular=no");
}

TEST(Fingerprint, Types) {
  EXPECT_EQ(fingerprint(that(3, 1)).type(), "(9;9)");
  const Fingerprint b = fingerprint(book(3, 1, 1));
  EXPECT_EQ(b.type(), "(3;3)");
  EXPECT_TRUE(b.pointed && b.dual_pointed);
  const Fingerprint h = fingerprint(group_algebra(heisenberg_group(3), 9));
  EXPECT_EQ(h.grouplikes, 27);
  EXPECT_EQ(h.characters, 9);
  EXPECT_FALSE(h.trace_s2.is_zero());
}

TEST(Fingerprint, TaftSelfDual) {
  for (int e : {1, 2}) EXPECT_EQ(fingerprint(taft(3, e)), fingerprint(dual(taft(3, e))));
}

TEST(Fingerprint, OppositeTaft) {
  EXPECT_EQ(fingerprint(op_cop(taft(3, 1), OpCop::op)), fingerprint(taft(3, 2)));
}

TEST(Pairing, BookHasNontrivialEntry) {
  const PairingTable t = pairing_table(book(3, 1, 1));
  EXPECT_TRUE(t.bosonization_criterion);
  EXPECT_FALSE(t.all_one);
}

TEST(Pairing, CyclicIsAllCubeRoots) {
  const PairingTable t = pairing_table(fixtures::hand_cyclic(3, 3));
  ASSERT_EQ(t.table.size(), 3u);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) EXPECT_EQ(t.table[a][b].pow(3), CycloNum(1));
  EXPECT_TRUE(t.bosonization_criterion);
}

TEST(Pairing, TrivialAlgebra) {
  const PairingTable t = pairing_table(trivial_hopf(1));
  ASSERT_EQ(t.table.size(), 1u);
  EXPECT_EQ(t.table[0][0], CycloNum(1));
  EXPECT_FALSE(t.bosonization_criterion);
}

TEST(CommutativeQuotient, Cases) {
  EXPECT_TRUE(commutative_quotient_check(taft(3, 1).algebra()));
  // M_2(Q)
  std::vector<Entry3> e;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) e.push_back({2 * i + j, 2 * j + k, 2 * i + k, CycloNum(1)});
  Algebra m2{4, 1, SparseTensor3(4, 4, 4, e), Vec{CycloNum(1), CycloNum(0), CycloNum(0), CycloNum(1)}};
  EXPECT_FALSE(commutative_quotient_check(m2));
  EXPECT_FALSE(commutative_quotient_check(uq_sl2(3, 1).algebra()));
}

TEST(Splitting, TaftTensorCyclic) {
  const FinHopf h = taft_tensor(3, 1);
  const FinHopf b = group_algebra(cyclic_product_group({3}), 9);
  Matrix pi(3, 27), gamma(27, 3);
  const Vec eps = taft(3, 1).counit;
  for (int a = 0; a < 9; ++a)
    for (int k = 0; k < 3; ++k) pi.at(k, a * 3 + k) = eps[a];
  for (int k = 0; k < 3; ++k) gamma.at(k, k) = CycloNum(1);
  const SplittingReport r = projection_splitting_check(h, b, pi, gamma);
  EXPECT_TRUE(r.success);
  EXPECT_EQ(r.coinvariant_dim, 9);
}

TEST(Splitting, IdentityIsTrivial) {
  const FinHopf t = taft(3, 1);
  const SplittingReport r = projection_splitting_check(t, t, Matrix::identity(9), Matrix::identity(9));
  EXPECT_TRUE(r.success);
  EXPECT_EQ(r.coinvariant_dim, 1);
}

TEST(Splitting, BookOntoCyclic) {
  const PresentationSpec s = book_spec(3, 1, 1);
  const FinHopf h = build_from_presentation(s);
  const FinHopf b = group_algebra(cyclic_product_group({3}), 9);
  Matrix pi(3, 27), gamma(27, 3);
  std::vector<int> a, c;
  for (int i = 0; i < 27; ++i) {
    s.decompose(i, a, c);
    if (a[0] == 0 && a[1] == 0) pi.at(c[0], i) = CycloNum(1);
  }
  for (int k = 0; k < 3; ++k) gamma.at(s.index({0, 0}, {k}), k) = CycloNum(1);
  const SplittingReport r = projection_splitting_check(h, b, pi, gamma);
  EXPECT_TRUE(r.success);
  EXPECT_EQ(r.coinvariant_dim, 9);
}

TEST(Splitting, BadSection) {
  const FinHopf t = taft(3, 1);
  const FinHopf b = group_algebra(cyclic_product_group({3}), 9);
  Matrix pi(3, 9), gamma(9, 3);
  for (int c = 0; c < 3; ++c) pi.at(c, c) = CycloNum(1);
  // gamma(t^k) = 1 is a Hopf map but not a section
  for (int k = 0; k < 3; ++k) gamma.at(0, k) = CycloNum(1);
  EXPECT_EQ(code_of([&] { projection_splitting_check(t, b, pi, gamma); }), ErrorCode::SectionFails);
  gamma.at(1, 1) = CycloNum(1);
  EXPECT_EQ(code_of([&] { projection_splitting_check(t, b, pi, gamma); }), ErrorCode::NotAHopfMap);
}

TEST(Corpus, OddDimensionHasGrouplikes) {
  for (const FinHopf& h : {taft(3, 1), uq_sl2(3, 1), dual(uq_sl2(3, 1)), rq(3, 1), book(3, 1, 2)}) {
    const Fingerprint f = fingerprint(h);
    EXPECT_TRUE(f.grouplikes > 1 || f.characters > 1) << h.label;
    EXPECT_EQ(f.antipode_order % 2, 0) << h.label;
  }
}

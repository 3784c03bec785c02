#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "hopf/constructors.hpp"
#include "hopf/invariants.hpp"

using namespace hopf;
using fixtures::code_of;

namespace {

Vec mono(const PresentationSpec& s, std::vector<int> a, int c) { return unit_vector(s.dim(), s.index(a, {c})); }

}  // namespace

TEST(Presentation, TaftMatchesHandTable) {
  EXPECT_TRUE(fixtures::same_constants(taft(3, 1), fixtures::hand_taft(3, 1)));
  EXPECT_TRUE(fixtures::same_constants(taft(3, 2), fixtures::hand_taft(3, 2)));
  EXPECT_TRUE(fixtures::same_constants(taft(5, 2), fixtures::hand_taft(5, 2)));
}

TEST(Presentation, TaftComultOfX) {
  const PresentationSpec s = taft_spec(3, 1);
  const FinHopf h = build_from_presentation(s);
  const Tensor d = hcomult(h, mono(s, {1}, 0));
  Tensor want = tensor_of(mono(s, {1}, 0), mono(s, {0}, 0));
  for (const auto& t : tensor_of(mono(s, {0}, 1), mono(s, {1}, 0))) want.push_back(t);
  std::sort(want.begin(), want.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  EXPECT_TRUE(tensor_equal(d, want));
}

TEST(Presentation, UqCommutator) {
  const PresentationSpec s = uq_spec(3, 1);
  const FinHopf h = build_from_presentation(s);
  EXPECT_EQ(h.dim, 27);
  const Vec x = mono(s, {1, 0}, 0), y = mono(s, {0, 1}, 0);
  const Vec lhs = sub(hmul(h, x, y), hmul(h, y, x));
  const Vec rhs = sub(mono(s, {0, 0}, 1), mono(s, {0, 0}, 2));
  EXPECT_EQ(lhs, rhs);
}

TEST(Presentation, RqPowerRelation) {
  const PresentationSpec s = rq_spec(3, 1);
  const FinHopf h = build_from_presentation(s);
  const Vec x = mono(s, {1}, 0), g = mono(s, {0}, 1);
  EXPECT_EQ(hmul(h, hmul(h, x, x), x), sub(h.unit, mono(s, {0}, 3)));
  Vec gp = h.unit;
  for (int i = 0; i < 9; ++i) gp = hmul(h, gp, g);
  EXPECT_EQ(gp, h.unit);
}

TEST(Presentation, RandomTriplesAssociate) {
  std::mt19937 rng(7);
  for (const FinHopf& h : {uq_sl2(3, 1), book(3, 2, 1), rq(3, 2)}) {
    std::uniform_int_distribution<int> d(0, h.dim - 1);
    for (int t = 0; t < 100; ++t) {
      const Vec a = unit_vector(h.dim, d(rng)), b = unit_vector(h.dim, d(rng)), c = unit_vector(h.dim, d(rng));
      ASSERT_EQ(hmul(h, hmul(h, a, b), c), hmul(h, a, hmul(h, b, c))) << h.label;
    }
  }
}

TEST(Presentation, BadParameters) {
  EXPECT_EQ(code_of([] { uq_sl2(4, 1); }), ErrorCode::BadParameter);
  EXPECT_EQ(code_of([] { taft(3, 3); }), ErrorCode::BadParameter);
  EXPECT_EQ(code_of([] { book(3, 1, 0); }), ErrorCode::BadParameter);
  EXPECT_EQ(code_of([] { ttilde(3, 1, 3); }), ErrorCode::BadParameter);
  EXPECT_EQ(code_of([] { taft(3, 1, 12); }), ErrorCode::FieldTooSmall);
}

TEST(Presentation, LargerConductorStillVerifies) {
  const FinHopf t = taft(3, 1, 18);
  EXPECT_EQ(t.conductor, 18);
  EXPECT_TRUE(verify_hopf(t).ok());
}

TEST(Corpus, EveryConstructorVerifies) {
  std::vector<FinHopf> all;
  for (int e : {1, 2}) {
    all.push_back(taft(3, e));
    all.push_back(taft_tensor(3, e));
    all.push_back(that(3, e));
    all.push_back(rq(3, e));
    all.push_back(uq_sl2(3, e));
    for (int j = 0; j < 3; ++j) all.push_back(ttilde(3, e, j));
    for (int m : {1, 2}) all.push_back(book(3, e, m));
  }
  for (const char* g : {"Z27", "Z9xZ3", "Z3xZ3xZ3", "heisenberg", "Z9sdZ3"}) {
    ConstructorParams a;
    a.group = g;
    all.push_back(construct_by_name("group_algebra", a));
    all.push_back(construct_by_name("dual_group_algebra", a));
  }
  for (const FinHopf& h : all) {
    const VerificationReport r = verify_hopf(h);
    EXPECT_TRUE(r.ok()) << h.label << "\n" << r.str();
  }
}

TEST(Characters, SolverCounts) {
  EXPECT_EQ(solve_characters(taft_spec(3, 1)).size(), 3u);
  EXPECT_EQ(solve_characters(uq_spec(3, 1)).size(), 1u);
  EXPECT_EQ(solve_characters(book_spec(3, 1, 1)).size(), 3u);
  EXPECT_EQ(solve_characters(rq_spec(3, 1)).size(), 3u);
}

TEST(Characters, SolverAgreesWithCertificate) {
  for (const FinHopf& h : {taft(3, 1), uq_sl2(3, 1), book(3, 1, 2), rq(3, 1), that(3, 2), ttilde(3, 1, 1)}) {
    EXPECT_EQ(static_cast<int>(h.claims.characters.size()), grouplike_certificate(dual(h))) << h.label;
    for (const auto& chi : h.claims.characters) EXPECT_TRUE(is_character(h, chi)) << h.label;
  }
}

TEST(Groups, NamedGroups) {
  const FiniteGroup z = group_by_name("Z9xZ3", 3);
  EXPECT_EQ(z.order, 27);
  EXPECT_EQ(z.exponent(), 9);
  const FiniteGroup h = group_by_name("heisenberg", 3);
  EXPECT_EQ(h.exponent(), 3);
  const FiniteGroup m = group_by_name("Z9sdZ3", 3);
  EXPECT_EQ(m.exponent(), 9);
  int noncomm = 0;
  for (int a = 0; a < 27; ++a)
    for (int b = 0; b < 27; ++b) noncomm += h.table[a][b] != h.table[b][a];
  EXPECT_GT(noncomm, 0);
}

TEST(Groups, DefaultConductorCoversExponent) {
  EXPECT_EQ(default_group_conductor(group_by_name("Z27", 3), 3), 27);
  EXPECT_EQ(default_group_conductor(group_by_name("heisenberg", 3), 3), 9);
}

TEST(Fixtures, BookSwap) {
  for (int m : {1, 2}) {
    const FinHopf h = book(3, 1, m);
    const int mi = m == 1 ? 1 : 2;
    const int e2 = ((-m * m * 1) % 3 + 3) % 3;
    const FinHopf t = book(3, e2, mi);
    ASSERT_EQ(h.claims.iso_fixtures[0].target, t.label);
    const MorphismReport r = verify_morphism(h, t, h.claims.iso_fixtures[0].map);
    EXPECT_TRUE(r.ok()) << r.checks.str();
    EXPECT_TRUE(r.injective && r.surjective);
    EXPECT_EQ(fingerprint(h), fingerprint(t));
  }
}

TEST(Fixtures, BookDual) {
  for (int m : {1, 2}) {
    const FinHopf h = book(3, 1, m);
    const FinHopf t = dual(book(3, 1, -m));
    ASSERT_EQ(h.claims.iso_fixtures[1].target, t.label);
    const MorphismReport r = verify_morphism(h, t, h.claims.iso_fixtures[1].map);
    EXPECT_TRUE(r.ok()) << r.checks.str();
    EXPECT_EQ(r.rank, 27);
  }
}

TEST(Fixtures, TtildeRootIndependence) {
  for (int j = 0; j < 3; ++j) {
    const FinHopf h = ttilde(3, 1, j);
    const FinHopf t = ttilde(3, 1, (j + 1) % 3);
    const MorphismReport r = verify_morphism(h, t, h.claims.iso_fixtures[0].map);
    EXPECT_TRUE(r.ok()) << r.checks.str();
    EXPECT_EQ(r.rank, 27);
  }
}

TEST(Crossed, TrivialDataGivesTensorAlgebra) {
  const FinHopf a = group_algebra(cyclic_product_group({3}), 9);
  const Algebra c = crossed_product(crossed_trivial_fixture(a.algebra(), 3));
  const FinHopf t = tensor(a, a);
  EXPECT_EQ(c.mult, t.mult);
  EXPECT_EQ(c.unit, t.unit);
}

TEST(Crossed, Z9Extension) {
  const Algebra c = crossed_product(crossed_z9_fixture());
  EXPECT_EQ(c.dim, 9);
  EXPECT_TRUE(is_commutative(c));
  // 1 # t has order 9
  const Vec t = unit_vector(9, 1);
  Vec p = c.unit;
  int order = 0;
  do {
    p = alg_mul(c, p, t);
    ++order;
  } while (p != c.unit && order < 20);
  EXPECT_EQ(order, 9);
}

TEST(Crossed, TaftTwistedByZ3) {
  const CrossedProductData d = crossed_taft_fixture(3, 1);
  const CrossedProductCheck r = check_crossed_product(d);
  EXPECT_TRUE(r.ok()) << r.detail;
  const Algebra c = crossed_product(d);
  EXPECT_EQ(c.dim, 27);
  EXPECT_TRUE(commutative_quotient_check(c));
}

TEST(Crossed, BrokenCocycleRejected) {
  const CrossedProductCheck r = check_crossed_product(crossed_broken_fixture());
  EXPECT_FALSE(r.cocycle);
  EXPECT_EQ(code_of([] { crossed_product(crossed_broken_fixture()); }), ErrorCode::CocycleConditionFails);
}

TEST(Crossed, NonMultiplicativeActionRejected) {
  const Algebra a = group_algebra(cyclic_product_group({3}), 9).algebra();
  CrossedProductData d = crossed_trivial_fixture(a, 3);
  d.action[1].at(1, 1) = CycloNum(2);
  d.action[2].at(1, 1) = CycloNum(2);
  EXPECT_EQ(code_of([&] { crossed_product(d); }), ErrorCode::WeakActionFails);
}

TEST(Double, OfCyclicGroup) {
  const FinHopf d = drinfeld_double(group_algebra(cyclic_product_group({3}), 9));
  EXPECT_EQ(d.dim, 9);
  EXPECT_TRUE(verify_hopf(d).ok());
  EXPECT_FALSE((d.antipode * d.antipode).trace().is_zero());
  EXPECT_EQ(d.claims.grouplikes.size(), 9u);
}

TEST(Double, OfTaft) {
  const FinHopf t = taft(3, 1);
  const FinHopf d = drinfeld_double(t);
  EXPECT_EQ(d.dim, 81);
  EXPECT_TRUE(verify_hopf(d).ok());
  EXPECT_TRUE((d.antipode * d.antipode).trace().is_zero());
  // T(q) and T(q)*^cop sit inside as Hopf subalgebras
  Matrix inc(81, 9), incd(81, 9);
  for (int b = 0; b < 9; ++b) {
    const Vec v = kron(t.counit, unit_vector(9, b));
    const Vec w = kron(unit_vector(9, b), t.unit);
    for (int r = 0; r < 81; ++r) {
      inc.at(r, b) = v[r];
      incd.at(r, b) = w[r];
    }
  }
  EXPECT_TRUE(verify_morphism(t, d, inc).ok());
  EXPECT_TRUE(verify_morphism(op_cop(dual(t), OpCop::cop), d, incd).ok());
}

TEST(Double, CharacterCountOfTaftDouble) {
  const FinHopf d = drinfeld_double(taft(3, 1));
  // two independent counts: filtered x # b candidates and dim of D^ab / Rad
  EXPECT_EQ(d.claims.characters.size(), 3u);
  EXPECT_EQ(grouplike_certificate(dual(d)), 3);
  EXPECT_EQ(character_census(d).order(), 3);
}

TEST(Double, DimensionGate) {
  EXPECT_EQ(code_of([] { drinfeld_double(uq_sl2(3, 1)); }), ErrorCode::DimensionGateExceeded);
}

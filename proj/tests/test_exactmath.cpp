#include <gtest/gtest.h>

#include <random>

#include "hopf/cyclo.hpp"
#include "hopf/error.hpp"
#include "hopf/linalg.hpp"
#include "hopf/tensor.hpp"

using namespace hopf;

namespace {

CycloNum random_cyclo(std::mt19937& rng, int m) {
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<Rational> p;
  for (int i = 0; i < euler_phi(m); ++i) p.push_back(Rational(d(rng), 1 + (d(rng) + 5) % 4));
  return CycloNum::from_poly(m, p);
}

template <class F>
ErrorCode code_of(F f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::IoError;  // sentinel: nothing thrown
}

// Hand-rolled Taft algebra T(q), N = 3: basis x^a g^c at index 3a + c.
Algebra taft_table(int qexp) {
  const int m = 9;
  std::vector<Entry3> ents;
  for (int a = 0; a < 3; ++a)
    for (int c = 0; c < 3; ++c)
      for (int b = 0; b < 3; ++b)
        for (int d = 0; d < 3; ++d) {
          if (a + b >= 3) continue;
          // g^c x^b = q^{cb} x^b g^c
          ents.push_back({3 * a + c, 3 * b + d, 3 * (a + b) + (c + d) % 3, CycloNum::zeta(m, 3LL * qexp * c * b)});
        }
  Algebra alg;
  alg.dim = 9;
  alg.conductor = m;
  alg.mult = SparseTensor3(9, 9, 9, ents);
  alg.unit = unit_vector(9, 0);
  return alg;
}

}  // namespace

TEST(Cyclo, RootOfUnityProducts) {
  CycloNum z = CycloNum::zeta(3);
  EXPECT_TRUE((z * z * z).is_one());
  EXPECT_TRUE((z * (z * z)).is_one());
  EXPECT_TRUE((CycloNum::one(3) + z + z * z).is_zero());
}

TEST(Cyclo, InverseOfZeta9) {
  CycloNum z = CycloNum::zeta(9);
  CycloNum inv = z.inv();
  EXPECT_EQ(inv, CycloNum::zeta(9, 8));
  // z^8 = z^2 * z^6 = z^2 (-z^3 - 1) = -z^5 - z^2
  EXPECT_EQ(inv.str(), "-1*z^2 + -1*z^5");
  EXPECT_TRUE((inv * z).is_one());
}

TEST(Cyclo, CyclotomicPolynomials) {
  EXPECT_EQ(cyclotomic_polynomial(3), (IntPoly{1, 1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(9), (IntPoly{1, 0, 0, 1, 0, 0, 1}));
  IntPoly p27(19, 0);
  p27[0] = p27[9] = p27[18] = 1;
  EXPECT_EQ(cyclotomic_polynomial(27), p27);
  EXPECT_EQ(cyclotomic_polynomial(1), (IntPoly{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (IntPoly{1, -1, 1}));
  for (int m = 1; m <= 30; ++m) EXPECT_EQ(static_cast<int>(cyclotomic_polynomial(m).size()) - 1, euler_phi(m));
}

TEST(Cyclo, PhiVanishesAtZeta) {
  for (int m = 1; m <= 30; ++m) {
    IntPoly phi = cyclotomic_polynomial(m);
    CycloNum z = CycloNum::zeta(m);
    CycloNum acc = CycloNum::zero(m);
    CycloNum pw = CycloNum::one(m);
    for (long long c : phi) {
      acc += pw * CycloNum(c);
      pw = pw * z;
    }
    EXPECT_TRUE(acc.is_zero()) << "M=" << m;
    // Same after embedding into a multiple conductor.
    CycloNum ze = z.embed(2 * m);
    CycloNum acc2 = CycloNum::zero(2 * m);
    CycloNum pw2 = CycloNum::one(2 * m);
    for (long long c : phi) {
      acc2 += pw2 * CycloNum(c);
      pw2 = pw2 * ze;
    }
    EXPECT_TRUE(acc2.is_zero()) << "M=" << m;
  }
}

TEST(Cyclo, FieldAxiomsRandom) {
  std::mt19937 rng(7);
  for (int m : {3, 9, 12, 27}) {
    for (int t = 0; t < 20; ++t) {
      CycloNum a = random_cyclo(rng, m), b = random_cyclo(rng, m), c = random_cyclo(rng, m);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      if (!a.is_zero()) EXPECT_TRUE((a * a.inv()).is_one());
      if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
    }
  }
}

TEST(Cyclo, Errors) {
  EXPECT_EQ(code_of([] { return CycloNum::zeta(3) + CycloNum::zeta(9); }), ErrorCode::ConductorMismatch);
  EXPECT_EQ(code_of([] { return CycloNum::one(9) / CycloNum::zero(9); }), ErrorCode::DivisionByZero);
  EXPECT_EQ(code_of([] { return CycloNum::zeta(9).embed(3); }), ErrorCode::NotASubfield);
}

TEST(Cyclo, Embed) {
  EXPECT_EQ(CycloNum::zeta(3).embed(9), CycloNum::zeta(9, 3));
  CycloNum half(3, Rational(1, 2));
  EXPECT_EQ(half.embed(9), CycloNum(9, Rational(1, 2)));
  EXPECT_EQ(half.embed(9).str(), "1/2");
  EXPECT_EQ(CycloNum::zeta(3, 2).embed(9), CycloNum::zeta(9, 6));
}

TEST(Cyclo, TextRoundTrip) {
  std::mt19937 rng(11);
  EXPECT_EQ(CycloNum::zero(9).str(), "0");
  for (int t = 0; t < 50; ++t) {
    CycloNum a = random_cyclo(rng, 9);
    EXPECT_EQ(CycloNum::parse(a.str(), 9), a);
  }
  EXPECT_EQ(CycloNum::parse("1/2 + -3/4*z^2", 9).str(), "1/2 + -3/4*z^2");
  EXPECT_EQ(code_of([] { return CycloNum::parse("1/2 + zz", 9); }), ErrorCode::ParseError);
}

TEST(Rational, BigPromotion) {
  Rational big(1LL << 62);
  Rational sq = big * big * big;
  EXPECT_FALSE(sq.is_small());
  EXPECT_EQ(sq / big / big, big);
  EXPECT_TRUE((sq / big / big).is_small());
  EXPECT_EQ(Rational(6, -4).str(), "-3/2");
  EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
}

TEST(Subspace, BasicOps) {
  const int n = 4;
  Subspace zero(n);
  Subspace u = Subspace::span({Vec{1, 2, 0, 0}, Vec{0, 1, 1, 0}}, n);
  EXPECT_EQ(subspace_sum(u, zero), u);
  EXPECT_EQ(subspace_perp(Subspace::full(n)).dim(), 0);
  // Rational subspaces: the coordinate form is definite, so U meets its perp in 0.
  EXPECT_EQ(subspace_intersect(u, subspace_perp(u)).dim(), 0);
  EXPECT_EQ(subspace_perp(subspace_perp(u)), u);
  EXPECT_EQ(code_of([&] { return subspace_sum(u, Subspace(3)); }), ErrorCode::AmbientMismatch);
}

TEST(Subspace, IsotropicLineOverCyclotomicField) {
  // The coordinate pairing is bilinear, not Hermitian, so over Q(zeta_3)
  // the vector (1, z, z^2) pairs to zero with itself.
  CycloNum z = CycloNum::zeta(3);
  Subspace u = Subspace::span({Vec{CycloNum::one(3), z, z * z}}, 3);
  EXPECT_EQ(subspace_intersect(u, subspace_perp(u)), u);
}

TEST(Subspace, EchelonCanonical) {
  Subspace a = Subspace::span({Vec{1, 1, 0}, Vec{0, 1, 1}}, 3);
  Subspace b = Subspace::span({Vec{1, 2, 1}, Vec{1, 0, -1}}, 3);
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.contains(Vec{2, 3, 1}));
  EXPECT_FALSE(a.contains(Vec{0, 0, 1}));
}

TEST(LinearSolve, KernelImagePreimage) {
  EXPECT_EQ(kernel(Matrix::identity(5)).dim(), 0);
  EXPECT_EQ(kernel(Matrix(5, 5)).dim(), 5);
  std::mt19937 rng(3);
  for (int t = 0; t < 10; ++t) {
    Matrix a(4, 6);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 6; ++j) a.at(i, j) = CycloNum(d(rng)) + CycloNum(d(rng)) * CycloNum::zeta(9);
    for (int j = 0; j < 6; ++j) a.at(3, j) = a.at(0, j) + a.at(1, j);
    EXPECT_EQ(kernel(a).dim() + image(a).dim(), 6);
    EXPECT_EQ(preimage(a, Subspace(4)), kernel(a));
    Subspace k = kernel(a);
    for (const auto& v : k.basis()) EXPECT_TRUE(is_zero(a.apply(v)));
  }
}

TEST(LinearSolve, Inverse) {
  Matrix a(2, 2);
  a.at(0, 0) = CycloNum::zeta(9);
  a.at(0, 1) = 1;
  a.at(1, 0) = 2;
  a.at(1, 1) = CycloNum::zeta(9, 4);
  EXPECT_EQ(a * inverse(a), Matrix::identity(2));
}

TEST(Radical, SemisimpleGroupAlgebra) {
  std::vector<Entry3> ents;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) ents.push_back({i, j, (i + j) % 3, CycloNum(1)});
  Algebra a{3, 1, SparseTensor3(3, 3, 3, ents), unit_vector(3, 0)};
  EXPECT_EQ(algebra_radical(a).dim(), 0);
}

TEST(Radical, UpperTriangular) {
  // basis e11, e12, e22
  std::vector<Entry3> ents{{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 2, 1, 1}, {2, 2, 2, 1}};
  Algebra a{3, 1, SparseTensor3(3, 3, 3, ents), Vec{1, 0, 1}};
  Subspace r = algebra_radical(a);
  EXPECT_EQ(r, Subspace::span({unit_vector(3, 1)}, 3));
}

TEST(Radical, TaftRadicalIsXIdeal) {
  Algebra t = taft_table(1);
  EXPECT_FALSE(check_associative_full(t).failed);
  Subspace r = algebra_radical(t);
  std::vector<Vec> oracle;
  for (int a = 1; a < 3; ++a)
    for (int c = 0; c < 3; ++c) oracle.push_back(unit_vector(9, 3 * a + c));
  EXPECT_EQ(r.dim(), 6);
  EXPECT_EQ(r, Subspace::span(oracle, 9));
  // Two-sided ideal, nilpotent basis elements.
  EXPECT_EQ(two_sided_ideal(t, r.basis()), r);
  for (const auto& v : r.basis()) {
    Matrix l = left_mult_matrix(t, v);
    Matrix p = l * l * l;
    EXPECT_EQ(p, Matrix(9, 9));
  }
  Quotient q = quotient_algebra(t, r);
  EXPECT_EQ(q.algebra.dim, 3);
  EXPECT_EQ(algebra_radical(q.algebra).dim(), 0);
  EXPECT_TRUE(is_commutative(q.algebra));
}

TEST(Algebra, ReducedAssociativityMatchesFull) {
  Algebra t = taft_table(2);
  EXPECT_FALSE(check_associative(t).failed);
  // Break one structure constant: x * x = 2 x^2 instead of x^2.
  std::vector<Entry3> ents = t.mult.entries();
  for (auto& e : ents)
    if (e.i == 3 && e.j == 3) e.c = CycloNum(2);
  Algebra bad{9, 9, SparseTensor3(9, 9, 9, ents), t.unit};
  EXPECT_TRUE(check_associative(bad).failed);
  EXPECT_TRUE(check_associative_full(bad).failed);
}

TEST(Algebra, CenterAndCommutators) {
  Algebra t = taft_table(1);
  // Center of T(q): only scalars (x and g do not commute; nothing else central).
  Subspace z = center(t);
  for (const auto& v : z.basis()) {
    for (int i = 0; i < 9; ++i) EXPECT_EQ(alg_mul_basis(t, i, v), alg_mul_basis_right(t, v, i));
  }
  Subspace comm = commutator_ideal(t);
  Quotient ab = quotient_algebra(t, comm);
  EXPECT_TRUE(is_commutative(ab.algebra));
}

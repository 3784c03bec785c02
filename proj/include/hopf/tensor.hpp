#pragma once

#include <span>
#include <vector>

#include "hopf/linalg.hpp"

namespace hopf {

struct Entry3 {
  int i = 0;
  int j = 0;
  int k = 0;
  CycloNum c;
};

struct Term {
  int k;
  CycloNum c;
};

// Sparse 3-index tensor, entries strictly sorted by (i,j,k), no zeros.
// slice(i,j) gives the (k, coeff) list for a fixed leading pair.
class SparseTensor3 {
 public:
  SparseTensor3() = default;
  SparseTensor3(int n0, int n1, int n2, std::vector<Entry3> entries);  // sums duplicates

  int n0() const { return n0_; }
  int n1() const { return n1_; }
  int n2() const { return n2_; }
  const std::vector<Entry3>& entries() const { return entries_; }
  std::span<const Term> slice(int i, int j) const {
    const std::size_t p = std::size_t(i) * n1_ + j;
    return {terms_.data() + offsets_[p], terms_.data() + offsets_[p + 1]};
  }
  // Entries with leading index i, as (j, k, coeff) through entries().
  std::span<const Entry3> row(int i) const {
    const std::size_t a = offsets_[std::size_t(i) * n1_];
    const std::size_t b = offsets_[std::size_t(i + 1) * n1_];
    return {entries_.data() + a, entries_.data() + b};
  }
  friend bool operator==(const SparseTensor3& a, const SparseTensor3& b);

 private:
  int n0_ = 0, n1_ = 0, n2_ = 0;
  std::vector<Entry3> entries_;
  std::vector<Term> terms_;
  std::vector<std::size_t> offsets_;
};

// Sparse accumulator over int64 keys; finish() sorts, merges and drops zeros.
class Accum {
 public:
  void add(long long key, const CycloNum& c) {
    if (!c.is_zero()) items_.push_back({key, c});
  }
  void addmul(long long key, const CycloNum& a, const CycloNum& b) {
    if (!a.is_zero() && !b.is_zero()) items_.push_back({key, a * b});
  }
  std::vector<std::pair<long long, CycloNum>> finish();

 private:
  std::vector<std::pair<long long, CycloNum>> items_;
};

using SparseElem = std::vector<std::pair<long long, CycloNum>>;

// Finite-dimensional unital algebra by structure constants:
// e_i e_j = sum_k mult(i,j,k) e_k.
struct Algebra {
  int dim = 0;
  int conductor = 1;
  SparseTensor3 mult;
  Vec unit;
};

Vec alg_mul(const Algebra& a, const Vec& x, const Vec& y);
Vec alg_mul_basis(const Algebra& a, int i, const Vec& y);  // e_i * y
Vec alg_mul_basis_right(const Algebra& a, const Vec& x, int j);  // x * e_j
Matrix left_mult_matrix(const Algebra& a, const Vec& x);
bool is_commutative(const Algebra& a);
Subspace algebra_radical(const SparseTensor3& mult, const Vec& unit);
Subspace algebra_radical(const Algebra& a);
Subspace two_sided_ideal(const Algebra& a, const std::vector<Vec>& gens);
Subspace commutator_ideal(const Algebra& a);
Subspace center(const Algebra& a);
Subspace subalgebra_generated(const Algebra& a, const std::vector<Vec>& gens);

struct Quotient {
  Algebra algebra;
  Matrix projection;  // dim(quotient) x dim(a)
  std::vector<int> kept;  // basis indices of a forming the complement
};
// Quotient by a two-sided ideal, on the lexicographically first complement.
Quotient quotient_algebra(const Algebra& a, const Subspace& ideal);

// Sound reduced associativity check: returns the first failing triple or
// nothing. See the comment in the implementation for the argument.
struct TripleFailure {
  bool failed = false;
  int i = -1, j = -1, k = -1;
};
TripleFailure check_associative(const Algebra& a);
TripleFailure check_associative_full(const Algebra& a);
// Basis indices whose left products generate the algebra from the unit.
std::vector<int> left_generators(const Algebra& a);

}  // namespace hopf

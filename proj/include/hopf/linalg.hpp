#pragma once

#include <utility>
#include <vector>

#include "hopf/cyclo.hpp"

namespace hopf {

using Vec = std::vector<CycloNum>;
using SparseVec = std::vector<std::pair<int, CycloNum>>;  // sorted by index

Vec unit_vector(int n, int i);
bool is_zero(const Vec& v);
Vec scale(const Vec& v, const CycloNum& c);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
CycloNum dot(const Vec& a, const Vec& b);
Vec kron(const Vec& a, const Vec& b);

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}
  static Matrix identity(int n);
  static Matrix from_columns(const std::vector<Vec>& cols, int rows);
  static Matrix from_rows(const std::vector<Vec>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  CycloNum& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
  const CycloNum& at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }
  Vec column(int j) const;
  Vec row(int i) const;

  Matrix transpose() const;
  Vec apply(const Vec& v) const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
  CycloNum trace() const;
  Matrix kron(const Matrix& b) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<CycloNum> a_;
};

class Subspace;

// Incremental reduced row echelon basis with sparse rows.
class EchelonBasis {
 public:
  explicit EchelonBasis(int dim) : dim_(dim), pivot_row_(dim, -1) {}
  bool insert(const Vec& v);
  bool insert(const SparseVec& v);
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  int dim() const { return dim_; }
  Subspace subspace() const;

 private:
  bool insert_work(Vec& w);
  int dim_;
  std::vector<SparseVec> rows_;
  std::vector<int> pivots_;
  std::vector<int> pivot_row_;
};

// Subspace of k^n in canonical reduced row echelon form.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient) : ambient_(ambient) {}
  static Subspace span(const std::vector<Vec>& vecs, int ambient);
  static Subspace full(int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  bool contains(const Vec& v) const;
  // Coordinates of v modulo this subspace at the non-pivot positions.
  Vec quotient_coords(const Vec& v) const;
  std::vector<int> complement_indices() const;
  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  friend class EchelonBasis;
  int ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<int> pivots_;
};

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);
Subspace subspace_perp(const Subspace& u);
bool subspace_equal(const Subspace& u, const Subspace& v);

Subspace kernel(const Matrix& a);
Subspace image(const Matrix& a);
Subspace preimage(const Matrix& a, const Subspace& w);
int rank(const Matrix& a);
// Throws DivisionByZero when singular.
Matrix inverse(const Matrix& a);
// Rows spanning the annihilator: a matrix whose kernel is exactly w.
Matrix annihilator(const Subspace& w);

}  // namespace hopf

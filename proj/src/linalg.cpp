#include "hopf/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "hopf/error.hpp"

namespace hopf {

Vec unit_vector(int n, int i) {
  Vec v(n);
  v[i] = CycloNum(1);
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const CycloNum& x) { return x.is_zero(); });
}

Vec scale(const Vec& v, const CycloNum& c) {
  Vec r(v.size());
  if (c.is_zero()) return r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r[i] = v[i] * c;
  return r;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(ErrorCode::DimensionMismatch, "vector add");
  Vec r = a;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!b[i].is_zero()) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(ErrorCode::DimensionMismatch, "vector sub");
  Vec r = a;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!b[i].is_zero()) r[i] -= b[i];
  return r;
}

CycloNum dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(ErrorCode::DimensionMismatch, "dot");
  CycloNum s;
  for (std::size_t i = 0; i < a.size(); ++i) s.addmul(a[i], b[i]);
  return s;
}

Vec kron(const Vec& a, const Vec& b) {
  Vec r(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i * b.size() + j] = a[i] * b[j];
  }
  return r;
}

// ---- Matrix ----

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = CycloNum(1);
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, int rows) {
  Matrix m(rows, static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (static_cast<int>(cols[j].size()) != rows) fail(ErrorCode::DimensionMismatch, "from_columns");
    for (int i = 0; i < rows; ++i) m.at(i, static_cast<int>(j)) = cols[j][i];
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols) {
  Matrix m(static_cast<int>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols) fail(ErrorCode::DimensionMismatch, "from_rows");
    for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
  }
  return m;
}

Vec Matrix::column(int j) const {
  Vec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Vec Matrix::row(int i) const {
  return Vec(a_.begin() + std::size_t(i) * cols_, a_.begin() + std::size_t(i + 1) * cols_);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) fail(ErrorCode::DimensionMismatch, "matrix apply");
  Vec r(rows_);
  for (int j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (int i = 0; i < rows_; ++i)
      if (!at(i, j).is_zero()) r[i].addmul(at(i, j), v[j]);
  }
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorCode::DimensionMismatch, "matrix product");
  Matrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const CycloNum& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j)
        if (!b.at(k, j).is_zero()) r.at(i, j).addmul(x, b.at(k, j));
    }
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::DimensionMismatch, "matrix sum");
  Matrix r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::DimensionMismatch, "matrix difference");
  Matrix r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

CycloNum Matrix::trace() const {
  CycloNum t;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
  return t;
}

Matrix Matrix::kron(const Matrix& b) const {
  Matrix r(rows_ * b.rows_, cols_ * b.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero()) continue;
      for (int k = 0; k < b.rows_; ++k)
        for (int l = 0; l < b.cols_; ++l)
          if (!b.at(k, l).is_zero()) r.at(i * b.rows_ + k, j * b.cols_ + l) = at(i, j) * b.at(k, l);
    }
  return r;
}

// ---- EchelonBasis ----

bool EchelonBasis::insert(const Vec& v) {
  if (static_cast<int>(v.size()) != dim_) fail(ErrorCode::AmbientMismatch, "echelon insert");
  Vec w = v;
  return insert_work(w);
}

bool EchelonBasis::insert(const SparseVec& v) {
  Vec w(dim_);
  for (const auto& [i, c] : v) {
    if (i < 0 || i >= dim_) fail(ErrorCode::AmbientMismatch, "echelon insert index");
    w[i] += c;
  }
  return insert_work(w);
}

Vec EchelonBasis::reduce(Vec w) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const int p = pivots_[r];
    if (w[p].is_zero()) continue;
    const CycloNum c = w[p];
    for (const auto& [j, x] : rows_[r]) w[j] -= c * x;
  }
  return w;
}

bool EchelonBasis::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool EchelonBasis::insert_work(Vec& w) {
  w = reduce(std::move(w));
  int p = -1;
  for (int j = 0; j < dim_; ++j)
    if (!w[j].is_zero()) {
      p = j;
      break;
    }
  if (p < 0) return false;
  const CycloNum inv = w[p].inv();
  SparseVec row;
  for (int j = p; j < dim_; ++j)
    if (!w[j].is_zero()) row.emplace_back(j, j == p ? CycloNum(1) : w[j] * inv);
  for (auto& r : rows_) {
    auto it = std::lower_bound(r.begin(), r.end(), p, [](const auto& e, int k) { return e.first < k; });
    if (it == r.end() || it->first != p) continue;
    const CycloNum c = it->second;
    SparseVec merged;
    merged.reserve(r.size() + row.size());
    std::size_t a = 0, b = 0;
    while (a < r.size() || b < row.size()) {
      if (b == row.size() || (a < r.size() && r[a].first < row[b].first)) {
        merged.push_back(r[a++]);
      } else if (a == r.size() || row[b].first < r[a].first) {
        merged.emplace_back(row[b].first, -(c * row[b].second));
        ++b;
      } else {
        CycloNum x = r[a].second - c * row[b].second;
        if (!x.is_zero()) merged.emplace_back(r[a].first, std::move(x));
        ++a;
        ++b;
      }
    }
    r = std::move(merged);
  }
  pivot_row_[p] = static_cast<int>(rows_.size());
  pivots_.push_back(p);
  rows_.push_back(std::move(row));
  return true;
}

Subspace EchelonBasis::subspace() const {
  Subspace s(dim_);
  std::vector<int> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return pivots_[a] < pivots_[b]; });
  for (int r : order) {
    Vec v(dim_);
    for (const auto& [j, x] : rows_[r]) v[j] = x;
    s.basis_.push_back(std::move(v));
    s.pivots_.push_back(pivots_[r]);
  }
  return s;
}

// ---- Subspace ----

Subspace Subspace::span(const std::vector<Vec>& vecs, int ambient) {
  EchelonBasis e(ambient);
  for (const auto& v : vecs) e.insert(v);
  return e.subspace();
}

Subspace Subspace::full(int ambient) {
  Subspace s(ambient);
  for (int i = 0; i < ambient; ++i) {
    s.basis_.push_back(unit_vector(ambient, i));
    s.pivots_.push_back(i);
  }
  return s;
}

bool Subspace::contains(const Vec& v) const { return is_zero(quotient_coords(v)); }

Vec Subspace::quotient_coords(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_) fail(ErrorCode::AmbientMismatch, "subspace membership");
  Vec w = v;
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const int p = pivots_[r];
    if (w[p].is_zero()) continue;
    const CycloNum c = w[p];
    for (int j = p; j < ambient_; ++j)
      if (!basis_[r][j].is_zero()) w[j] -= c * basis_[r][j];
  }
  return w;
}

std::vector<int> Subspace::complement_indices() const {
  std::vector<bool> piv(ambient_, false);
  for (int p : pivots_) piv[p] = true;
  std::vector<int> out;
  for (int j = 0; j < ambient_; ++j)
    if (!piv[j]) out.push_back(j);
  return out;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) fail(ErrorCode::AmbientMismatch, "subspace sum");
  EchelonBasis e(u.ambient());
  for (const auto& x : u.basis()) e.insert(x);
  for (const auto& x : v.basis()) e.insert(x);
  return e.subspace();
}

Subspace subspace_perp(const Subspace& u) {
  return kernel(Matrix::from_rows(u.basis(), u.ambient()));
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) fail(ErrorCode::AmbientMismatch, "subspace intersection");
  return subspace_perp(subspace_sum(subspace_perp(u), subspace_perp(v)));
}

bool subspace_equal(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) fail(ErrorCode::AmbientMismatch, "subspace equality");
  return u == v;
}

Subspace kernel(const Matrix& a) {
  const int n = a.cols();
  EchelonBasis e(n);
  for (int i = 0; i < a.rows(); ++i) {
    e.insert(a.row(i));
    if (e.rank() == n) break;
  }
  Subspace rows = e.subspace();
  std::vector<Vec> kb;
  for (int f : rows.complement_indices()) {
    Vec v(n);
    v[f] = CycloNum(1);
    for (int r = 0; r < rows.dim(); ++r) {
      const CycloNum& x = rows.basis()[r][f];
      if (!x.is_zero()) v[rows.pivots()[r]] = -x;
    }
    kb.push_back(std::move(v));
  }
  return Subspace::span(kb, n);
}

Subspace image(const Matrix& a) {
  EchelonBasis e(a.rows());
  for (int j = 0; j < a.cols(); ++j) {
    e.insert(a.column(j));
    if (e.rank() == a.rows()) break;
  }
  return e.subspace();
}

Matrix annihilator(const Subspace& w) {
  Subspace p = subspace_perp(w);
  return Matrix::from_rows(p.basis(), w.ambient());
}

Subspace preimage(const Matrix& a, const Subspace& w) {
  if (w.ambient() != a.rows()) fail(ErrorCode::AmbientMismatch, "preimage");
  Matrix ann = annihilator(w);
  if (ann.rows() == 0) return Subspace::full(a.cols());
  return kernel(ann * a);
}

int rank(const Matrix& a) {
  EchelonBasis e(a.cols());
  for (int i = 0; i < a.rows(); ++i) e.insert(a.row(i));
  return e.rank();
}

Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) fail(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const int n = a.rows();
  Matrix m = a;
  Matrix inv = Matrix::identity(n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (!m.at(r, c).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) fail(ErrorCode::DivisionByZero, "singular matrix");
    if (piv != c)
      for (int j = 0; j < n; ++j) {
        std::swap(m.at(piv, j), m.at(c, j));
        std::swap(inv.at(piv, j), inv.at(c, j));
      }
    const CycloNum s = m.at(c, c).inv();
    for (int j = 0; j < n; ++j) {
      if (!m.at(c, j).is_zero()) m.at(c, j) = m.at(c, j) * s;
      if (!inv.at(c, j).is_zero()) inv.at(c, j) = inv.at(c, j) * s;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || m.at(r, c).is_zero()) continue;
      const CycloNum f = m.at(r, c);
      for (int j = 0; j < n; ++j) {
        if (!m.at(c, j).is_zero()) m.at(r, j) -= f * m.at(c, j);
        if (!inv.at(c, j).is_zero()) inv.at(r, j) -= f * inv.at(c, j);
      }
    }
  }
  return inv;
}

}  // namespace hopf

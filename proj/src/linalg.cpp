#include "bialg/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace bialg {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw std::invalid_argument("Matrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: size mismatch");
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational acc;
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) acc += at(i, j) * v[j];
    out[i] = std::move(acc);
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Matrix::operator*: shape mismatch");
  Matrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& x = at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o.at(k, j).is_zero()) out.at(i, j) += x * o.at(k, j);
    }
  return out;
}

Matrix& Matrix::add_scaled(const Matrix& o, const Rational& c) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Matrix::add_scaled: shape mismatch");
  if (c.is_zero()) return *this;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (!o.a_[i].is_zero()) a_[i] += c * o.a_[i];
  return *this;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

namespace {

// In-place Gauss-Jordan to reduced row echelon form. Pivot rule: first row
// with a nonzero entry in column order, pivot scaled to 1, column cleared.
// Returns the pivot column of each surviving row, in increasing order.
std::vector<std::size_t> rref(std::vector<Vec>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[r]);
    if (rows[r][c] != Rational(1)) {
      Rational inv = Rational(1) / rows[r][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!rows[r][j].is_zero()) rows[r][j] *= inv;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Rational f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(pivots.size());
  return pivots;
}

}  // namespace

Subspace row_reduce(std::size_t ambient, std::vector<Vec> rows) {
  for (const auto& v : rows)
    if (v.size() != ambient) throw std::invalid_argument("row_reduce: ragged rows");
  rref(rows, ambient);
  return Subspace{ambient, std::move(rows)};
}

Subspace row_reduce(const Matrix& m) {
  std::vector<Vec> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    rows[i].resize(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
  }
  return row_reduce(m.cols(), std::move(rows));
}

std::size_t rank(const Matrix& m) { return row_reduce(m).dim(); }

Subspace kernel(const Matrix& m) {
  std::vector<Vec> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    rows[i].resize(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
  }
  std::vector<std::size_t> pivots = rref(rows, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<Vec> null_rows;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = Rational(1);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -rows[i][f];
    null_rows.push_back(std::move(v));
  }
  return row_reduce(m.cols(), std::move(null_rows));
}

Subspace orthogonal_complement(const Subspace& s) {
  return kernel(Matrix::from_rows(s.ambient, s.basis));
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient)
    throw std::invalid_argument("subspace_sum: ambient dimension mismatch");
  std::vector<Vec> rows = a.basis;
  rows.insert(rows.end(), b.basis.begin(), b.basis.end());
  return row_reduce(a.ambient, std::move(rows));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient)
    throw std::invalid_argument("subspace_intersect: ambient dimension mismatch");
  return orthogonal_complement(
      subspace_sum(orthogonal_complement(a), orthogonal_complement(b)));
}

bool subspace_equal(const Subspace& a, const Subspace& b) {
  return a.ambient == b.ambient && a.basis == b.basis;
}

Vec reduce_against(const Subspace& s, Vec v) {
  if (v.size() != s.ambient)
    throw std::invalid_argument("reduce_against: ambient dimension mismatch");
  for (const Vec& row : s.basis) {
    std::size_t p = 0;
    while (p < s.ambient && row[p].is_zero()) ++p;
    if (p == s.ambient || v[p].is_zero()) continue;
    Rational f = v[p];
    for (std::size_t j = p; j < s.ambient; ++j)
      if (!row[j].is_zero()) v[j] -= f * row[j];
  }
  return v;
}

bool contains(const Subspace& s, const Vec& v) {
  Vec r = reduce_against(s, v);
  for (const auto& x : r)
    if (!x.is_zero()) return false;
  return true;
}

Subspace zero_subspace(std::size_t ambient) { return Subspace{ambient, {}}; }

Subspace full_subspace(std::size_t ambient) {
  std::vector<Vec> rows(ambient, Vec(ambient));
  for (std::size_t i = 0; i < ambient; ++i) rows[i][i] = Rational(1);
  return Subspace{ambient, std::move(rows)};
}

}  // namespace bialg

#pragma once

#include <cstddef>
#include <vector>

#include "bialg/rational.hpp"

namespace bialg {

using Vec = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::size_t cols, const std::vector<Vec>& rows);

  Matrix transposed() const;
  Vec apply(const Vec& v) const;          // matrix * column vector
  Matrix operator*(const Matrix& o) const;
  Matrix& add_scaled(const Matrix& o, const Rational& c);  // *this += c * o
  bool is_zero() const;

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

/// A linear subspace of a coordinate space, held as a reduced row-echelon
/// basis. Pivot columns strictly increase, pivots are 1 and are the only
/// nonzero entries in their column, so two subspaces are equal iff their
/// bases are identical entry-wise.
struct Subspace {
  std::size_t ambient = 0;
  std::vector<Vec> basis;

  std::size_t dim() const { return basis.size(); }
  bool is_zero() const { return basis.empty(); }
};

/// Canonical row space of m (reduced row echelon form, zero rows dropped).
Subspace row_reduce(const Matrix& m);
Subspace row_reduce(std::size_t ambient, std::vector<Vec> rows);

/// Null space {v : m v = 0} with canonical basis; dim = cols - rank.
Subspace kernel(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Orthogonal complement under the canonical dual-basis pairing
/// <e_i*, e_j> = delta_ij; an involution on subspaces.
Subspace orthogonal_complement(const Subspace& s);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool subspace_equal(const Subspace& a, const Subspace& b);
bool contains(const Subspace& s, const Vec& v);

/// Residual of v after eliminating along s's echelon basis; zero iff v in s.
Vec reduce_against(const Subspace& s, Vec v);

Subspace zero_subspace(std::size_t ambient);
Subspace full_subspace(std::size_t ambient);

}  // namespace bialg

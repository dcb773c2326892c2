#ifndef RBLA_LINALG_HPP
#define RBLA_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "rbla/rational.hpp"

namespace rbla {

/// Coordinate vector over the rationals.
using Vec = std::vector<Rational>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero_vec(const Vec& v);

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Rational& a, const Vec& v);

/// Dense row-major matrix of rationals; doubles as any linear map
/// expressed in fixed bases (columns are images of the source basis).
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static Matrix identity(std::size_t n);
  /// Matrix whose j-th column is cols[j].
  static Matrix from_columns(std::size_t rows, const std::vector<Vec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  Vec column(std::size_t j) const;
  Vec row(std::size_t i) const;

  /// Exact matrix-vector product (the coordinate form of a linear map).
  Vec apply(const Vec& u) const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Rational& c) const;

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;

  /// Exact inverse via Gauss-Jordan; nullopt when singular.
  std::optional<Matrix> inverse() const;
  bool invertible() const { return inverse().has_value(); }

private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

/// Structure-constant tensor of a bilinear map B: U x W -> Z:
/// B(u_i, w_j) = sum_k at(k,i,j) z_k.
class Tensor3 {
public:
  Tensor3() : dim_out_(0), dim_left_(0), dim_right_(0) {}
  Tensor3(std::size_t dim_out, std::size_t dim_left, std::size_t dim_right)
      : dim_out_(dim_out), dim_left_(dim_left), dim_right_(dim_right),
        c_(dim_out * dim_left * dim_right) {}

  std::size_t dim_out() const { return dim_out_; }
  std::size_t dim_left() const { return dim_left_; }
  std::size_t dim_right() const { return dim_right_; }

  const Rational& at(std::size_t k, std::size_t i, std::size_t j) const {
    return c_[(k * dim_left_ + i) * dim_right_ + j];
  }
  Rational& at(std::size_t k, std::size_t i, std::size_t j) {
    return c_[(k * dim_left_ + i) * dim_right_ + j];
  }

  /// Exact evaluation: out_k = sum_{i,j} at(k,i,j) u_i v_j.
  Vec apply(const Vec& u, const Vec& v) const;

  bool operator==(const Tensor3& o) const;
  bool operator!=(const Tensor3& o) const { return !(*this == o); }
  bool is_zero() const;

private:
  std::size_t dim_out_, dim_left_, dim_right_;
  std::vector<Rational> c_;
};

/// Solution set of an affine system Ax = b: empty (no particular),
/// or a particular solution plus a basis of ker(A).
struct AffineSolutionSet {
  std::optional<Vec> particular;
  std::vector<Vec> nullspace;

  bool empty() const { return !particular.has_value(); }
};

/// Exact Gaussian elimination over the rationals. Pivoting is
/// deterministic: first nonzero entry in column order, zero tested
/// exactly. Free coordinates of the particular solution are 0; the
/// nullspace basis has one vector per free column.
AffineSolutionSet solve_affine(const Matrix& A, const Vec& b);

/// Rank by the same elimination (used by rank-nullity assertions).
std::size_t rank(const Matrix& A);

} // namespace rbla

#endif

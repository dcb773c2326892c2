#include "rbla/linalg.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "rbla/errors.hpp"

namespace rbla {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw shape_error(what);
}

} // namespace

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = Rational(1);
  return v;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

Vec operator+(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "vector sum: length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "vector difference: length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec operator-(const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vec operator*(const Rational& a, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = a * v[i];
  return r;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  require(a_.size() == rows_ * cols_, "matrix: entry count != rows*cols");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    require(cols[j].size() == rows, "from_columns: column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Vec Matrix::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Vec Matrix::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vec Matrix::apply(const Vec& u) const {
  require(u.size() == cols_, "matrix apply: length mismatch");
  Vec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational s;
    for (std::size_t j = 0; j < cols_; ++j) s += at(i, j) * u[j];
    r[i] = s;
  }
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require(cols_ == o.rows_, "matrix product: inner dimension mismatch");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum: shape mismatch");
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference: shape mismatch");
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Matrix Matrix::scaled(const Rational& c) const {
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = c * a_[i];
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x.is_zero(); });
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const std::size_t n = rows_;
  Matrix m(*this);
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m.at(piv, col).is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m.at(piv, j), m.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    }
    const Rational d = rbla::inverse(m.at(col, col));
    for (std::size_t j = 0; j < n; ++j) {
      m.at(col, j) *= d;
      inv.at(col, j) *= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m.at(i, col).is_zero()) continue;
      const Rational c = m.at(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        m.at(i, j) -= c * m.at(col, j);
        inv.at(i, j) -= c * inv.at(col, j);
      }
    }
  }
  return inv;
}

Vec Tensor3::apply(const Vec& u, const Vec& v) const {
  require(u.size() == dim_left_ && v.size() == dim_right_,
          "tensor apply: operand length mismatch");
  Vec r(dim_out_);
  for (std::size_t k = 0; k < dim_out_; ++k) {
    Rational s;
    for (std::size_t i = 0; i < dim_left_; ++i) {
      if (u[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_right_; ++j) {
        if (v[j].is_zero()) continue;
        s += at(k, i, j) * u[i] * v[j];
      }
    }
    r[k] = s;
  }
  return r;
}

bool Tensor3::operator==(const Tensor3& o) const {
  return dim_out_ == o.dim_out_ && dim_left_ == o.dim_left_ &&
         dim_right_ == o.dim_right_ && c_ == o.c_;
}

bool Tensor3::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.is_zero(); });
}

namespace {

struct Echelon {
  Matrix m;                        // reduced augmented matrix
  std::vector<std::size_t> pivots; // pivot column per pivot row
};

// Reduced row echelon form of [A|b] (or plain A when aug is 0 wide).
Echelon rref(const Matrix& A, const Vec* b) {
  const std::size_t rows = A.rows();
  const std::size_t cols = A.cols() + (b ? 1 : 0);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) m.at(i, j) = A.at(i, j);
    if (b) m.at(i, A.cols()) = (*b)[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < A.cols() && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && m.at(piv, col).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != row)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
    const Rational d = inverse(m.at(row, col));
    for (std::size_t j = 0; j < cols; ++j) m.at(row, j) *= d;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      const Rational c = m.at(i, col);
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) -= c * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

} // namespace

AffineSolutionSet solve_affine(const Matrix& A, const Vec& b) {
  if (A.rows() != b.size())
    throw shape_error("solve_affine: rows(A) != length(b)");
  const std::size_t n = A.cols();
  Echelon e = rref(A, &b);

  // Nullspace basis: one vector per free column, pivot coordinates
  // read off the reduced rows.
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<Vec> nullspace;
  for (std::size_t fc = 0; fc < n; ++fc) {
    if (is_pivot[fc]) continue;
    Vec v(n);
    v[fc] = Rational(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      v[e.pivots[r]] = -e.m.at(r, fc);
    nullspace.push_back(std::move(v));
  }

  // Inconsistent iff some zero row of A reduces to nonzero rhs.
  for (std::size_t i = e.pivots.size(); i < A.rows(); ++i)
    if (!e.m.at(i, n).is_zero()) return {std::nullopt, std::move(nullspace)};

  Vec particular(n);
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    particular[e.pivots[r]] = e.m.at(r, n);
  return {std::move(particular), std::move(nullspace)};
}

std::size_t rank(const Matrix& A) { return rref(A, nullptr).pivots.size(); }

} // namespace rbla

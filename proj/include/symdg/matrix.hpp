#ifndef SYMDG_MATRIX_HPP
#define SYMDG_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symdg/errors.hpp"
#include "symdg/rational.hpp"

namespace symdg {

/**
 * Dense row-major matrix over an exact field F. F needs +, -, *, /, ==,
 * and construction from int.
 */
template <typename F>
class Matrix {
public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols) : _rows(rows), _cols(cols), _data(rows * cols, F(0)) {}

  Matrix(std::initializer_list<std::initializer_list<F>> rows)
  {
    _rows = rows.size();
    _cols = _rows ? rows.begin()->size() : 0;
    for (auto const &row : rows) {
      if (row.size() != _cols)
        throw DimensionMismatch("ragged matrix literal");
      _data.insert(_data.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n)
  {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = F(1);
    return m;
  }

  std::size_t rows() const { return _rows; }
  std::size_t cols() const { return _cols; }
  bool is_square() const { return _rows == _cols; }

  F &operator()(std::size_t i, std::size_t j) { return _data[i * _cols + j]; }
  F const &operator()(std::size_t i, std::size_t j) const { return _data[i * _cols + j]; }

  std::vector<F> const &data() const { return _data; }

  std::vector<F> row(std::size_t i) const
  {
    return {_data.begin() + static_cast<std::ptrdiff_t>(i * _cols),
            _data.begin() + static_cast<std::ptrdiff_t>((i + 1) * _cols)};
  }

  Matrix transpose() const
  {
    Matrix t(_cols, _rows);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j)
        t(j, i) = (*this)(i, j);
    }
    return t;
  }

  Matrix &operator+=(Matrix const &rhs)
  {
    check_same_shape(rhs, "addition");
    for (std::size_t k = 0; k < _data.size(); ++k)
      _data[k] += rhs._data[k];
    return *this;
  }

  Matrix &operator-=(Matrix const &rhs)
  {
    check_same_shape(rhs, "subtraction");
    for (std::size_t k = 0; k < _data.size(); ++k)
      _data[k] -= rhs._data[k];
    return *this;
  }

  Matrix &operator*=(F const &scalar)
  {
    for (auto &x : _data)
      x *= scalar;
    return *this;
  }

  friend Matrix operator+(Matrix lhs, Matrix const &rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, Matrix const &rhs) { return lhs -= rhs; }
  friend Matrix operator*(F const &scalar, Matrix m) { return m *= scalar; }
  friend Matrix operator*(Matrix m, F const &scalar) { return m *= scalar; }

  friend Matrix operator-(Matrix m)
  {
    for (auto &x : m._data)
      x = -x;
    return m;
  }

  friend Matrix operator*(Matrix const &lhs, Matrix const &rhs)
  {
    if (lhs._cols != rhs._rows)
      throw DimensionMismatch("matrix product: " + lhs.shape() + " times " + rhs.shape());
    Matrix result(lhs._rows, rhs._cols);
    F const zero(0);
    for (std::size_t i = 0; i < lhs._rows; ++i) {
      for (std::size_t k = 0; k < lhs._cols; ++k) {
        F const &a = lhs(i, k);
        if (a == zero)
          continue;
        for (std::size_t j = 0; j < rhs._cols; ++j)
          result(i, j) += a * rhs(k, j);
      }
    }
    return result;
  }

  friend bool operator==(Matrix const &lhs, Matrix const &rhs)
  {
    return lhs._rows == rhs._rows && lhs._cols == rhs._cols && lhs._data == rhs._data;
  }

  bool is_zero() const
  {
    F const zero(0);
    for (auto const &x : _data) {
      if (!(x == zero))
        return false;
    }
    return true;
  }

  std::string shape() const { return std::to_string(_rows) + "x" + std::to_string(_cols); }

private:
  void check_same_shape(Matrix const &rhs, char const *what) const
  {
    if (_rows != rhs._rows || _cols != rhs._cols)
      throw DimensionMismatch(std::string("matrix ") + what + ": " + shape() + " vs " + rhs.shape());
  }

  std::size_t _rows = 0;
  std::size_t _cols = 0;
  std::vector<F> _data;
};

using RationalMatrix = Matrix<Rational>;

/// Block matrix with (i,j) block a_ij * B.
template <typename F>
Matrix<F> kronecker(Matrix<F> const &a, Matrix<F> const &b)
{
  Matrix<F> result(a.rows() * b.rows(), a.cols() * b.cols());
  F const zero(0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == zero)
        continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l)
          result(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
      }
    }
  }
  return result;
}

template <typename F>
Matrix<F> direct_sum(std::vector<Matrix<F>> const &blocks)
{
  std::size_t rows = 0, cols = 0;
  for (auto const &b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix<F> result(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (auto const &b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j)
        result(r0 + i, c0 + j) = b(i, j);
    }
    r0 += b.rows();
    c0 += b.cols();
  }
  return result;
}

template <typename F>
Matrix<F> matrix_power(Matrix<F> const &a, std::size_t k)
{
  if (!a.is_square())
    throw DimensionMismatch("matrix power of a non-square matrix");
  Matrix<F> result = Matrix<F>::identity(a.rows());
  Matrix<F> base = a;
  while (k > 0) {
    if (k & 1u)
      result = result * base;
    k >>= 1u;
    if (k)
      base = base * base;
  }
  return result;
}

/// Rank by Gaussian elimination over F.
template <typename F>
std::size_t rank(Matrix<F> m)
{
  F const zero(0);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, c) == zero)
      ++pivot;
    if (pivot == m.rows())
      continue;
    if (pivot != r) {
      for (std::size_t j = c; j < m.cols(); ++j)
        std::swap(m(pivot, j), m(r, j));
    }
    F const inv = F(1) / m(r, c);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == zero)
        continue;
      F const factor = m(i, c) * inv;
      for (std::size_t j = c; j < m.cols(); ++j)
        m(i, j) -= factor * m(r, j);
    }
    ++r;
  }
  return r;
}

/// Rank over Q by fraction-free (Bareiss) elimination on denominator-cleared rows.
template <>
inline std::size_t rank(RationalMatrix m)
{
  std::size_t const rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < cols; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j)
      a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0)
      ++pivot;
    if (pivot == rows)
      continue;
    std::swap(a[pivot], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

/// Inverse by Gauss-Jordan; throws DomainError when singular.
template <typename F>
Matrix<F> inverse(Matrix<F> m)
{
  if (!m.is_square())
    throw DimensionMismatch("inverse of a non-square matrix");
  std::size_t const n = m.rows();
  Matrix<F> inv = Matrix<F>::identity(n);
  F const zero(0);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m(pivot, c) == zero)
      ++pivot;
    if (pivot == n)
      throw DomainError("matrix is singular");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(m(pivot, j), m(c, j));
      std::swap(inv(pivot, j), inv(c, j));
    }
    F const p = F(1) / m(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) *= p;
      inv(c, j) *= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m(i, c) == zero)
        continue;
      F const factor = m(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= factor * m(c, j);
        inv(i, j) -= factor * inv(c, j);
      }
    }
  }
  return inv;
}

template <typename F>
F trace(Matrix<F> const &m)
{
  F result(0);
  for (std::size_t i = 0; i < m.rows() && i < m.cols(); ++i)
    result += m(i, i);
  return result;
}

} // namespace symdg

#endif // SYMDG_MATRIX_HPP

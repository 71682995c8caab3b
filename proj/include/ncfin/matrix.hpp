#ifndef NCFIN_MATRIX_HPP
#define NCFIN_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncfin/rational.hpp"

namespace ncfin {

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  bool is_identity() const;
  Matrix transpose() const;
  Matrix column(std::size_t c) const;
  Matrix columns(const std::vector<std::size_t>& which) const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Rational& scalar);

  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(Matrix lhs, const Rational& scalar) { return lhs *= scalar; }
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
  friend bool operator==(const Matrix& lhs, const Matrix& rhs) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// [A | B], same row count.
Matrix hstack(const Matrix& a, const Matrix& b);
/// A on top of B, same column count.
Matrix vstack(const Matrix& a, const Matrix& b);
/// Block diagonal diag(A, B).
Matrix block_diagonal(const Matrix& a, const Matrix& b);

struct RowReduction {
  Matrix rref;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;  // 0-based
};

/// Reduced row-echelon form by Gauss-Jordan elimination over Q.
RowReduction reduce(const Matrix& a);
std::size_t rank(const Matrix& a);

/// Columns form a basis of the null space, one per free column of the RREF.
Matrix kernel(const Matrix& a);

/// Canonical basis of the column space: the nonzero rows of RREF(A^T), as columns.
Matrix column_space(const Matrix& a);

/// Some X with A X = B, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Rows of space-separated `p/q` tokens, rows separated by newlines.
/// Zero-column rows are empty lines; there is no trailing newline.
std::string format_matrix(const Matrix& m);

/// Inverse of format_matrix. Shape is inferred unless given; a ragged or
/// malformed input throws std::invalid_argument naming the line.
Matrix parse_matrix(std::string_view text, std::optional<std::size_t> rows = std::nullopt,
                    std::optional<std::size_t> cols = std::nullopt);

}  // namespace ncfin

#endif  // NCFIN_MATRIX_HPP

#include "ncfin/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace ncfin {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
    for (const auto& v : row) data_.push_back(v);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = Rational(1);
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& v : data_)
    if (!v.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& v = (*this)(r, c);
      if (r == c ? !v.is_one() : !v.is_zero()) return false;
    }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Matrix Matrix::column(std::size_t c) const {
  Matrix out(rows_, 1);
  for (std::size_t r = 0; r < rows_; ++r) out(r, 0) = (*this)(r, c);
  return out;
}

Matrix Matrix::columns(const std::vector<std::size_t>& which) const {
  Matrix out(rows_, which.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < which.size(); ++j) out(r, j) = (*this)(r, which[j]);
  return out;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& scalar) {
  for (auto& v : data_) v *= scalar;
  return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(lhs.rows_, rhs.cols_);
  // i-k-j order: structure matrices are sparse, so zero entries of lhs skip whole rows of rhs.
  for (std::size_t i = 0; i < lhs.rows_; ++i)
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Rational& a = lhs(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Rational& b = rhs(k, j);
        if (!b.is_zero()) out(i, j).add_product(a, b);
      }
    }
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  Matrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
  Matrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, c) = b(r, c);
  return out;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  return out;
}

RowReduction reduce(const Matrix& a) {
  RowReduction out{a, 0, {}};
  Matrix& m = out.rref;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t found = rows;
    for (std::size_t r = pivot_row; r < rows; ++r)
      if (!m(r, c).is_zero()) {
        found = r;
        break;
      }
    if (found == rows) continue;
    if (found != pivot_row)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(found, j), m(pivot_row, j));
    Rational inv = Rational(1) / m(pivot_row, c);
    if (!inv.is_one())
      for (std::size_t j = c; j < cols; ++j)
        if (!m(pivot_row, j).is_zero()) m(pivot_row, j) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || m(r, c).is_zero()) continue;
      Rational factor = -m(r, c);
      for (std::size_t j = c; j < cols; ++j) {
        const Rational& p = m(pivot_row, j);
        if (!p.is_zero()) m(r, j).add_product(factor, p);
      }
    }
    out.pivot_cols.push_back(c);
    ++pivot_row;
  }
  out.rank = pivot_row;
  return out;
}

std::size_t rank(const Matrix& a) {
  // Eliminate along the shorter side.
  return a.rows() <= a.cols() ? reduce(a).rank : reduce(a.transpose()).rank;
}

Matrix kernel(const Matrix& a) {
  RowReduction red = reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : red.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix out(a.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    out(f, k) = Rational(1);
    for (std::size_t i = 0; i < red.rank; ++i) out(red.pivot_cols[i], k) = -red.rref(i, f);
  }
  return out;
}

Matrix column_space(const Matrix& a) {
  RowReduction red = reduce(a.transpose());
  Matrix out(a.rows(), red.rank);
  for (std::size_t k = 0; k < red.rank; ++k)
    for (std::size_t r = 0; r < a.rows(); ++r) out(r, k) = red.rref(k, r);
  return out;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  RowReduction red = reduce(hstack(a, b));
  // Inconsistent when a pivot lands in the augmented block.
  for (auto c : red.pivot_cols)
    if (c >= a.cols()) return std::nullopt;
  Matrix x(a.cols(), b.cols());
  for (std::size_t i = 0; i < red.rank; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(red.pivot_cols[i], j) = red.rref(i, a.cols() + j);
  return x;
}

std::string format_matrix(const Matrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r > 0) out += '\n';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ' ';
      out += m(r, c).str();
    }
  }
  return out;
}

Matrix parse_matrix(std::string_view text, std::optional<std::size_t> rows,
                    std::optional<std::size_t> cols) {
  std::vector<std::vector<Rational>> parsed;
  std::size_t start = 0;
  std::size_t line_no = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    std::vector<Rational> row;
    std::istringstream tokens{std::string(line)};
    std::string tok;
    while (tokens >> tok) {
      try {
        row.push_back(Rational::parse(tok));
      } catch (const std::exception& e) {
        throw std::invalid_argument("matrix line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    parsed.push_back(std::move(row));
    if (end == text.size()) break;
    start = end + 1;
  }
  if (!rows) {
    // Without an explicit shape, blank lines carry no information.
    std::erase_if(parsed, [](const auto& row) { return row.empty(); });
  }
  const std::size_t r = rows.value_or(parsed.size());
  if (r == 0) return Matrix(0, cols.value_or(0));
  if (parsed.size() != r)
    throw std::invalid_argument("matrix: expected " + std::to_string(r) + " rows, found " +
                                std::to_string(parsed.size()));
  const std::size_t c = cols.value_or(parsed.front().size());
  Matrix out(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (parsed[i].size() != c)
      throw std::invalid_argument("matrix line " + std::to_string(i + 1) + ": expected " +
                                  std::to_string(c) + " entries, found " +
                                  std::to_string(parsed[i].size()));
    for (std::size_t j = 0; j < c; ++j) out(i, j) = std::move(parsed[i][j]);
  }
  return out;
}

}  // namespace ncfin

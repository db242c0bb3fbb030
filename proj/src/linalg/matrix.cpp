#include "bredonite/linalg/matrix.hpp"

#include <cassert>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace bredonite {

std::string_view to_string(Ring ring) {
  return ring == Ring::Z ? "Z" : "GF2";
}

BigInt reduce(const BigInt& x, Ring ring) {
  if (ring == Ring::Z) return x;
  return (x % 2 == 0) ? BigInt(0) : BigInt(1);
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("IntMatrix: column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  assert(r0 + nr <= rows_ && c0 + nc <= cols_);
  IntMatrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void IntMatrix::set_block(std::size_t r0, std::size_t c0, const IntMatrix& b) {
  assert(r0 + b.rows() <= rows_ && c0 + b.cols() <= cols_);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

IntMatrix IntMatrix::reduced(Ring ring) const {
  if (ring == Ring::Z) return *this;
  IntMatrix m = *this;
  for (auto& x : m.data_) x = reduce(x, ring);
  return m;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    const BigInt& s = (*this)(src, c);
    if (s != 0) (*this)(dst, c) += factor * s;
  }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    const BigInt& s = (*this)(r, src);
    if (s != 0) (*this)(r, dst) += factor * s;
  }
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::reduce_row(std::size_t r, Ring ring) {
  if (ring == Ring::Z) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = reduce((*this)(r, c), ring);
}

void IntMatrix::reduce_col(std::size_t c, Ring ring) {
  if (ring == Ring::Z) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = reduce((*this)(r, c), ring);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("IntMatrix: product shape mismatch");
  IntMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const BigInt& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) p(i, j) += x * b(k, j);
    }
  return p;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("IntMatrix: vector shape mismatch");
  IntVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (v[k] != 0) out[i] += a(i, k) * v[k];
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("IntMatrix: sum shape mismatch");
  IntMatrix s = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) s(r, c) += b(r, c);
  return s;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("IntMatrix: difference shape mismatch");
  IntMatrix s = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) s(r, c) -= b(r, c);
  return s;
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("IntMatrix: hstack row mismatch");
  IntMatrix m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

IntVector reduced(const IntVector& v, Ring ring) {
  if (ring == Ring::Z) return v;
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = reduce(v[i], ring);
  return out;
}

bool is_zero(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

BigInt determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      m.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ", ";
      os << m(r, c);
    }
    os << ']';
  }
  return os << ']';
}

}  // namespace bredonite

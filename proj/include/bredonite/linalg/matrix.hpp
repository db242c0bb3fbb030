#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bredonite {

using BigInt = boost::multiprecision::cpp_int;
using IntVector = std::vector<BigInt>;

// Coefficient ring for chain-level computations. GF2 data is stored in the
// same integer containers with every entry kept in {0, 1}.
enum class Ring { Z, GF2 };

std::string_view to_string(Ring ring);

// Reduces a scalar into the canonical representative for `ring`.
BigInt reduce(const BigInt& x, Ring ring);

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  IntMatrix transposed() const;
  IntVector column(std::size_t c) const;
  IntVector row(std::size_t r) const;
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const IntMatrix& b);
  IntMatrix reduced(Ring ring) const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  // col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);
  void reduce_row(std::size_t r, Ring ring);
  void reduce_col(std::size_t c, Ring ring);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& v);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);

IntVector reduced(const IntVector& v, Ring ring);
bool is_zero(const IntVector& v);

// Fraction-free (Bareiss) determinant of a square matrix.
BigInt determinant(const IntMatrix& a);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace bredonite

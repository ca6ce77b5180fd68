#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "freegroup/word.hpp"

namespace fg {

using BigInt = boost::multiprecision::cpp_int;
using IntVector = std::vector<BigInt>;

/// Rectangular integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Throws PreconditionError when the rows differ in length.
  static IntMatrix from_rows(std::span<const IntVector> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row(std::size_t target, std::size_t source, const BigInt& factor);
  /// col[target] += factor * col[source]
  void add_col(std::size_t target, std::size_t source, const BigInt& factor);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigInt> data_;
};

/// Signed generator counts of w; the image of w in the abelianization.
IntVector exponent_vector(const Word& w);

/// Elementary divisors d1 | d2 | ..., nonnegative, zeros last; min(rows, cols) entries.
std::vector<BigInt> smith_normal_form(const IntMatrix& m);

/// The vectors extend to a basis of Z^r: every divisor is 1 and none is zero.
bool is_basis_extendable_abelian(std::span<const IntVector> vectors);

}  // namespace fg

#include "freegroup/abelianize.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace fg {

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw PreconditionError("rows of unequal length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row(std::size_t target, std::size_t source, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(target, c) += factor * (*this)(source, c);
}

void IntMatrix::add_col(std::size_t target, std::size_t source, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, target) += factor * (*this)(r, source);
}

IntVector exponent_vector(const Word& w) {
  IntVector v(w.alphabet()->rank(), 0);
  for (Letter l : w.letters()) v[l.generator] += l.sign;
  return v;
}

std::vector<BigInt> smith_normal_form(const IntMatrix& input) {
  if (input.empty()) throw DegenerateInput("Smith normal form of an empty matrix");
  IntMatrix m = input;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t diag = std::min(rows, cols);

  for (std::size_t t = 0; t < diag; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::optional<std::pair<std::size_t, std::size_t>> pivot;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (m(r, c) != 0 && (!pivot || abs(m(r, c)) < abs(m(pivot->first, pivot->second)))) pivot = {r, c};
      if (!pivot) break;
      m.swap_rows(t, pivot->first);
      m.swap_cols(t, pivot->second);
      const BigInt p = m(t, t);

      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m(r, t) == 0) continue;
        m.add_row(r, t, -BigInt(m(r, t) / p));
        if (m(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m(t, c) == 0) continue;
        m.add_col(c, t, -BigInt(m(t, c) / p));
        if (m(t, c) != 0) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide the rest of the block; otherwise fold the offending row in.
      std::optional<std::size_t> bad_row;
      for (std::size_t r = t + 1; r < rows && !bad_row; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (m(r, c) % p != 0) {
            bad_row = r;
            break;
          }
      if (!bad_row) break;
      m.add_row(t, *bad_row, 1);
    }
  }

  std::vector<BigInt> divisors;
  for (std::size_t t = 0; t < diag; ++t) divisors.push_back(abs(m(t, t)));
  std::stable_partition(divisors.begin(), divisors.end(), [](const BigInt& d) { return d != 0; });
  return divisors;
}

bool is_basis_extendable_abelian(std::span<const IntVector> vectors) {
  if (vectors.empty()) throw DegenerateInput("no vectors");
  auto divisors = smith_normal_form(IntMatrix::from_rows(vectors));
  if (divisors.size() != vectors.size()) return false;
  return std::all_of(divisors.begin(), divisors.end(), [](const BigInt& d) { return d == 1; });
}

}  // namespace fg

#include "sqp/linalg.hpp"

#include <utility>

#include <gmpxx.h>

namespace sqp {

std::size_t rank(const IntMatrix& m, const FieldSpec& field) {
  return field.characteristic() == 0 ? rank_rational(m) : rank_mod_p(m, field.characteristic());
}

std::size_t rank_rational(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = static_cast<long>(m(r, c));
  }

  // Bareiss: every entry stays an integer; the division by the previous
  // pivot is exact.
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        a[r][c] = a[rank][col] * a[r][c] - a[r][col] * a[rank][c];
        mpz_divexact(a[r][c].get_mpz_t(), a[r][c].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

std::size_t rank_mod_p(const IntMatrix& m, std::uint32_t p) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  const std::int64_t mod = p;
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      a[r][c] = static_cast<std::uint64_t>(((m(r, c) % mod) + mod) % mod);
    }
  }

  auto inverse = [p](std::uint64_t x) {
    // Fermat: x^(p-2); p < 2^31 so products fit in 64 bits.
    std::uint64_t result = 1, base = x % p, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };

  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const std::uint64_t inv = inverse(a[rank][col]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][col] == 0) continue;
      const std::uint64_t factor = a[r][col] * inv % p;
      for (std::size_t c = col; c < cols; ++c) {
        a[r][c] = (a[r][c] + (p - factor) * a[rank][c]) % p;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace sqp

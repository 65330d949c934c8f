#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sqp/monomial_ideal.hpp"

namespace sqp {

/// Dense integer matrix, row-major. Boundary maps only ever hold 0 and +-1,
/// but the rank routines accept any 64-bit entries.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::int64_t> data_;
};

/// Exact rank: fraction-free (Bareiss) elimination over Z for characteristic
/// 0, ordinary elimination over F_p otherwise.
std::size_t rank(const IntMatrix& m, const FieldSpec& field);

std::size_t rank_rational(const IntMatrix& m);
std::size_t rank_mod_p(const IntMatrix& m, std::uint32_t p);

}  // namespace sqp

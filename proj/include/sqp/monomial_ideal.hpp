#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

namespace sqp {

using Exponent = std::uint32_t;

/// A point of N^n, identifying the monomial X^a = X_1^{a_1} ... X_n^{a_n}.
///
/// Arithmetic that can grow an entry (sum, scaling) is checked and throws
/// ResourceError instead of wrapping.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : coords_(n, 0) {}
  ExponentVector(std::initializer_list<Exponent> coords) : coords_(coords) {}
  explicit ExponentVector(std::vector<Exponent> coords) : coords_(std::move(coords)) {}

  std::size_t size() const noexcept { return coords_.size(); }
  Exponent operator[](std::size_t i) const { return coords_[i]; }
  Exponent& operator[](std::size_t i) { return coords_[i]; }
  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }
  const std::vector<Exponent>& coords() const noexcept { return coords_; }

  std::uint64_t degree() const noexcept;
  bool is_zero() const noexcept;
  std::size_t support_size() const noexcept;

  /// X^this divides X^other, i.e. this <= other componentwise.
  bool divides(const ExponentVector& other) const;

  /// Lexicographic; used for container keys, not for the canonical order.
  auto operator<=>(const ExponentVector&) const = default;
  bool operator==(const ExponentVector&) const = default;

 private:
  std::vector<Exponent> coords_;
};

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);
ExponentVector gcd(const ExponentVector& a, const ExponentVector& b);
ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
ExponentVector scaled(const ExponentVector& a, std::uint64_t m);
/// max(a - u, 0) componentwise: the generator of (X^a : X^u).
ExponentVector colon(const ExponentVector& a, const ExponentVector& u);
/// 0/1 indicator of the support.
ExponentVector support_indicator(const ExponentVector& a);

/// Canonical generator order: ascending total degree, ties broken
/// lexicographically with X_1 > X_2 > ... (so x^2 precedes xy precedes y^2).
bool graded_lex_less(const ExponentVector& a, const ExponentVector& b);

std::ostream& operator<<(std::ostream& os, const ExponentVector& a);

/// Monomial ideal stored by its minimal generators in canonical order.
/// The zero ideal has no generators; the unit ideal is generated by 0.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t n = 0) : n_(n) {}

  static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n); }
  static MonomialIdeal unit(std::size_t n);
  /// Minimalizes `raw`; throws InputError on a length mismatch.
  static MonomialIdeal from_generators(std::size_t n, std::vector<ExponentVector> raw);

  std::size_t num_vars() const noexcept { return n_; }
  std::span<const ExponentVector> generators() const noexcept { return gens_; }
  std::size_t num_generators() const noexcept { return gens_.size(); }

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept;
  bool is_proper_nonzero() const noexcept { return !is_zero() && !is_unit(); }
  bool is_principal() const noexcept { return gens_.size() == 1; }
  bool is_square_free() const noexcept;

  bool contains(const ExponentVector& u) const;
  /// Every generator of `other` lies in this ideal.
  bool contains(const MonomialIdeal& other) const;

  /// Componentwise max over all generators (zero vector for the zero ideal).
  ExponentVector generator_lcm() const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  friend MonomialIdeal minimalize(std::vector<ExponentVector> raw, std::size_t n);

  std::size_t n_ = 0;
  std::vector<ExponentVector> gens_;
};

/// Divisibility antichain of `raw`, deduplicated and canonically ordered.
MonomialIdeal minimalize(std::vector<ExponentVector> raw, std::size_t n);

/// I^[m]: every generator scaled by m. Throws InputError for m = 0.
MonomialIdeal square_power(const MonomialIdeal& I, std::uint64_t m);

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);
/// I^s by binary powering; s = 0 gives the unit ideal.
MonomialIdeal ordinary_power(const MonomialIdeal& I, std::uint64_t s);
MonomialIdeal colon(const MonomialIdeal& I, const ExponentVector& u);
MonomialIdeal radical(const MonomialIdeal& I);

/// Non-unit monomials form a regular sequence iff their supports are
/// pairwise disjoint.
bool is_monomial_regular_sequence(std::span<const ExponentVector> gens);

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& I);

/// Coefficient field, identified by its characteristic (0 or a prime).
class FieldSpec {
 public:
  FieldSpec() = default;
  /// Throws InputError unless `characteristic` is 0 or a prime below 2^31.
  explicit FieldSpec(std::uint32_t characteristic);

  static FieldSpec rationals() { return FieldSpec(); }

  std::uint32_t characteristic() const noexcept { return characteristic_; }
  bool operator==(const FieldSpec&) const = default;

 private:
  std::uint32_t characteristic_ = 0;
};

bool is_prime(std::uint64_t p);

}  // namespace sqp

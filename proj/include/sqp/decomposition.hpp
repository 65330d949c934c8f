#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "sqp/monomial_ideal.hpp"

namespace sqp {

/// The monomial prime generated by the variables in `support`
/// (0-based, ascending).
struct MonomialPrime {
  std::size_t n = 0;
  std::vector<std::size_t> support;

  std::size_t height() const noexcept { return support.size(); }
  MonomialIdeal to_ideal() const;
  bool is_subset_of(const MonomialPrime& other) const;

  /// Ordered by height, then lexicographically by support.
  std::strong_ordering operator<=>(const MonomialPrime& other) const;
  bool operator==(const MonomialPrime& other) const = default;
};

/// <X_i^{e_i} : i in S>, stored as a vector with e_i = 0 off the support.
struct IrreducibleComponent {
  ExponentVector exponents;

  std::size_t num_vars() const noexcept { return exponents.size(); }
  MonomialPrime radical() const;
  MonomialIdeal to_ideal() const;

  bool operator==(const IrreducibleComponent&) const = default;
};

/// Intersection of the irreducible components sharing one radical.
struct PrimaryComponent {
  MonomialPrime radical;
  MonomialIdeal ideal;

  bool operator==(const PrimaryComponent&) const = default;
};

/// Irredundant irreducible decomposition, ordered by radical then exponents.
/// Throws InputError for the zero or unit ideal.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I);

/// Irreducible components grouped by radical; one component per associated
/// prime, ordered like the primes.
std::vector<PrimaryComponent> primary_decomposition(const MonomialIdeal& I);

std::vector<MonomialPrime> associated_primes(const MonomialIdeal& I);
std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& I);

/// dim R/I. The zero ideal has dimension n; the unit ideal is rejected.
std::size_t krull_dimension(const MonomialIdeal& I);

/// I^(s): for each minimal prime P of I, the intersection of the primary
/// components of I^s whose radical lies inside P, intersected over P.
/// s = 0 gives the unit ideal.
MonomialIdeal symbolic_power(const MonomialIdeal& I, std::uint64_t s);

/// Intersection of all components (for checking a decomposition).
MonomialIdeal intersect_all(const std::vector<IrreducibleComponent>& components, std::size_t n);
MonomialIdeal intersect_all(const std::vector<PrimaryComponent>& components, std::size_t n);

/// (x1, x2^2)
std::string format_component(const IrreducibleComponent& c, const std::vector<std::string>& vars);
std::string format_prime(const MonomialPrime& p, const std::vector<std::string>& vars);

}  // namespace sqp

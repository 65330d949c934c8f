#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "sqp/monomial_ideal.hpp"

namespace sqp {

/// Parameters of a pseudorandom ideal corpus. Identical specs give identical
/// corpora on every platform (mt19937_64 with plain modular reduction).
struct CorpusSpec {
  std::uint64_t seed = 20240501;
  std::size_t count = 100;
  std::size_t min_vars = 2;
  std::size_t max_vars = 4;
  std::size_t min_gens = 2;
  std::size_t max_gens = 5;
  Exponent max_exponent = 3;
  std::vector<std::uint64_t> m_values{2, 3};
  int max_s = 3;

  /// Throws InputError for an impossible spec.
  void validate() const;
};

/// Each ideal is minimalized, proper and nonzero; its number of variables is
/// drawn from [min_vars, max_vars] and its raw generator count from
/// [min_gens, max_gens] (minimalization may merge some).
std::vector<MonomialIdeal> generate_corpus(const CorpusSpec& spec);

/// A second ideal in the same ring as corpus entry `index`, drawn from a
/// stream derived from (seed, index). Used by the two-ideal checks.
MonomialIdeal partner_ideal(const CorpusSpec& spec, std::size_t index, std::size_t n);

MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t n, std::size_t min_gens, std::size_t max_gens,
                           Exponent max_exponent);

}  // namespace sqp

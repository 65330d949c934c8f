#include "sqp/corpus.hpp"

#include <string>

#include "sqp/errors.hpp"

namespace sqp {

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return lo + rng() % (hi - lo + 1);
}

}  // namespace

void CorpusSpec::validate() const {
  if (max_exponent == 0) throw InputError("corpus: max exponent must be positive");
  if (min_vars == 0 || min_vars > max_vars) throw InputError("corpus: need 1 <= min_vars <= max_vars");
  if (max_vars > 10) throw InputError("corpus: at most 10 variables");
  if (min_gens == 0 || min_gens > max_gens) throw InputError("corpus: need 1 <= min_gens <= max_gens");
  if (max_s < 1) throw InputError("corpus: s window must be at least 1");
  for (auto m : m_values) {
    if (m < 1) throw InputError("corpus: m values must be positive");
  }
}

MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t n, std::size_t min_gens, std::size_t max_gens,
                           Exponent max_exponent) {
  while (true) {
    const auto k = draw(rng, min_gens, max_gens);
    std::vector<ExponentVector> gens;
    while (gens.size() < k) {
      ExponentVector g(n);
      for (std::size_t i = 0; i < n; ++i) g[i] = static_cast<Exponent>(draw(rng, 0, max_exponent));
      if (!g.is_zero()) gens.push_back(std::move(g));
    }
    auto I = minimalize(std::move(gens), n);
    if (I.is_proper_nonzero()) return I;
  }
}

std::vector<MonomialIdeal> generate_corpus(const CorpusSpec& spec) {
  spec.validate();
  std::mt19937_64 rng(spec.seed);
  std::vector<MonomialIdeal> corpus;
  corpus.reserve(spec.count);
  for (std::size_t k = 0; k < spec.count; ++k) {
    const auto n = static_cast<std::size_t>(draw(rng, spec.min_vars, spec.max_vars));
    corpus.push_back(random_ideal(rng, n, spec.min_gens, spec.max_gens, spec.max_exponent));
  }
  return corpus;
}

MonomialIdeal partner_ideal(const CorpusSpec& spec, std::size_t index, std::size_t n) {
  std::mt19937_64 rng(spec.seed ^ (0x9E3779B97F4A7C15ull * (index + 1)));
  return random_ideal(rng, n, spec.min_gens, spec.max_gens, spec.max_exponent);
}

}  // namespace sqp

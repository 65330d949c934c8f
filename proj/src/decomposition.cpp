#include "sqp/decomposition.hpp"

#include <algorithm>
#include <map>

#include "sqp/errors.hpp"

namespace sqp {

namespace {

void require_proper_nonzero(const MonomialIdeal& I, const char* what) {
  if (I.is_zero()) throw InputError(std::string(what) + ": the zero ideal has no decomposition");
  if (I.is_unit()) throw InputError(std::string(what) + ": the unit ideal has no decomposition");
}

// q' <= q as irreducible ideals: every pure power X_i^{q'_i} lies in <X_j^{q_j}>.
bool irreducible_contained_in(const ExponentVector& inner, const ExponentVector& outer) {
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] == 0) continue;
    if (outer[i] == 0 || outer[i] > inner[i]) return false;
  }
  return true;
}

// Drops every component containing another; keeps one copy of duplicates.
std::vector<ExponentVector> remove_redundant(std::vector<ExponentVector> comps) {
  std::sort(comps.begin(), comps.end());
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
  std::vector<ExponentVector> kept;
  for (std::size_t a = 0; a < comps.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < comps.size() && !redundant; ++b) {
      redundant = a != b && irreducible_contained_in(comps[b], comps[a]);
    }
    if (!redundant) kept.push_back(comps[a]);
  }
  return kept;
}

using DecompositionMemo = std::map<std::vector<ExponentVector>, std::vector<ExponentVector>>;

std::vector<ExponentVector> split_decompose(const MonomialIdeal& I, DecompositionMemo& memo) {
  std::vector<ExponentVector> key(I.generators().begin(), I.generators().end());
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const auto gens = I.generators();
  const auto pivot = std::find_if(gens.begin(), gens.end(),
                                  [](const ExponentVector& g) { return g.support_size() >= 2; });

  std::vector<ExponentVector> result;
  if (pivot == gens.end()) {
    // Pure powers only: already irreducible.
    ExponentVector component(I.num_vars());
    for (const auto& g : gens) {
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] != 0) component[i] = g[i];
      }
    }
    result.push_back(std::move(component));
  } else {
    const auto& g = *pivot;
    const std::size_t first =
        static_cast<std::size_t>(std::find_if(g.begin(), g.end(), [](Exponent e) { return e != 0; }) - g.begin());
    ExponentVector head(I.num_vars());
    head[first] = g[first];
    ExponentVector rest = g;
    rest[first] = 0;

    const auto n = I.num_vars();
    auto left = split_decompose(sum(I, MonomialIdeal::from_generators(n, {head})), memo);
    auto right = split_decompose(sum(I, MonomialIdeal::from_generators(n, {rest})), memo);
    left.insert(left.end(), right.begin(), right.end());
    result = remove_redundant(std::move(left));
  }
  memo.emplace(std::move(key), result);
  return result;
}

}  // namespace

MonomialIdeal MonomialPrime::to_ideal() const {
  std::vector<ExponentVector> gens;
  for (auto i : support) {
    ExponentVector g(n);
    g[i] = 1;
    gens.push_back(std::move(g));
  }
  return minimalize(std::move(gens), n);
}

bool MonomialPrime::is_subset_of(const MonomialPrime& other) const {
  return std::includes(other.support.begin(), other.support.end(), support.begin(), support.end());
}

std::strong_ordering MonomialPrime::operator<=>(const MonomialPrime& other) const {
  if (auto c = n <=> other.n; c != 0) return c;
  if (auto c = support.size() <=> other.support.size(); c != 0) return c;
  return support <=> other.support;
}

MonomialPrime IrreducibleComponent::radical() const {
  MonomialPrime p{exponents.size(), {}};
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] != 0) p.support.push_back(i);
  }
  return p;
}

MonomialIdeal IrreducibleComponent::to_ideal() const {
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    ExponentVector g(exponents.size());
    g[i] = exponents[i];
    gens.push_back(std::move(g));
  }
  return minimalize(std::move(gens), exponents.size());
}

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I) {
  require_proper_nonzero(I, "irreducible_decomposition");
  DecompositionMemo memo;
  std::vector<IrreducibleComponent> out;
  for (auto& e : split_decompose(I, memo)) out.push_back({std::move(e)});
  std::sort(out.begin(), out.end(), [](const IrreducibleComponent& a, const IrreducibleComponent& b) {
    const auto ra = a.radical();
    const auto rb = b.radical();
    if (ra != rb) return ra < rb;
    return a.exponents < b.exponents;
  });
  return out;
}

std::vector<PrimaryComponent> primary_decomposition(const MonomialIdeal& I) {
  std::vector<PrimaryComponent> out;
  for (const auto& c : irreducible_decomposition(I)) {
    auto p = c.radical();
    if (!out.empty() && out.back().radical == p) {
      out.back().ideal = intersect(out.back().ideal, c.to_ideal());
    } else {
      out.push_back({std::move(p), c.to_ideal()});
    }
  }
  return out;
}

std::vector<MonomialPrime> associated_primes(const MonomialIdeal& I) {
  std::vector<MonomialPrime> out;
  for (const auto& c : irreducible_decomposition(I)) {
    auto p = c.radical();
    if (out.empty() || out.back() != p) out.push_back(std::move(p));
  }
  return out;
}

std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& I) {
  const auto ass = associated_primes(I);
  std::vector<MonomialPrime> out;
  for (const auto& p : ass) {
    const bool minimal = std::none_of(ass.begin(), ass.end(), [&](const MonomialPrime& q) {
      return q != p && q.is_subset_of(p);
    });
    if (minimal) out.push_back(p);
  }
  return out;
}

std::size_t krull_dimension(const MonomialIdeal& I) {
  if (I.is_unit()) throw InputError("krull_dimension: R/I is the zero ring for the unit ideal");
  if (I.is_zero()) return I.num_vars();
  std::size_t min_height = I.num_vars();
  for (const auto& p : minimal_primes(I)) min_height = std::min(min_height, p.height());
  return I.num_vars() - min_height;
}

MonomialIdeal symbolic_power(const MonomialIdeal& I, std::uint64_t s) {
  if (s == 0) return MonomialIdeal::unit(I.num_vars());
  require_proper_nonzero(I, "symbolic_power");
  const auto power_components = primary_decomposition(ordinary_power(I, s));
  const auto mins = minimal_primes(I);

  MonomialIdeal result = MonomialIdeal::unit(I.num_vars());
  for (const auto& p : mins) {
    // I^s R_P ∩ R keeps exactly the components whose radical sits inside P.
    MonomialIdeal localized = MonomialIdeal::unit(I.num_vars());
    for (const auto& q : power_components) {
      if (q.radical.is_subset_of(p)) localized = intersect(localized, q.ideal);
    }
    result = intersect(result, localized);
  }
  return result;
}

MonomialIdeal intersect_all(const std::vector<IrreducibleComponent>& components, std::size_t n) {
  MonomialIdeal out = MonomialIdeal::unit(n);
  for (const auto& c : components) out = intersect(out, c.to_ideal());
  return out;
}

MonomialIdeal intersect_all(const std::vector<PrimaryComponent>& components, std::size_t n) {
  MonomialIdeal out = MonomialIdeal::unit(n);
  for (const auto& c : components) out = intersect(out, c.ideal);
  return out;
}

std::string format_component(const IrreducibleComponent& c, const std::vector<std::string>& vars) {
  std::string out = "(";
  bool first = true;
  for (std::size_t i = 0; i < c.exponents.size(); ++i) {
    if (c.exponents[i] == 0) continue;
    if (!first) out += ", ";
    first = false;
    out += vars.at(i);
    if (c.exponents[i] > 1) out += '^' + std::to_string(c.exponents[i]);
  }
  return out + ')';
}

std::string format_prime(const MonomialPrime& p, const std::vector<std::string>& vars) {
  std::string out = "(";
  for (std::size_t k = 0; k < p.support.size(); ++k) {
    if (k) out += ", ";
    out += vars.at(p.support[k]);
  }
  return out + ')';
}

}  // namespace sqp

#include "sqp/monomial_ideal.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "sqp/errors.hpp"

namespace sqp {

namespace {

Exponent checked_exponent(std::uint64_t value) {
  if (value > std::numeric_limits<Exponent>::max()) {
    throw ResourceError("exponent overflow: " + std::to_string(value) +
                        " does not fit in 32 bits");
  }
  return static_cast<Exponent>(value);
}

void require_same_length(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) {
    throw InputError("exponent vector length mismatch: " + std::to_string(a.size()) +
                     " vs " + std::to_string(b.size()));
  }
}

void require_same_ring(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.num_vars() != J.num_vars()) {
    throw InputError("ideals live in different rings: n = " + std::to_string(I.num_vars()) +
                     " vs " + std::to_string(J.num_vars()));
  }
}

}  // namespace

std::uint64_t ExponentVector::degree() const noexcept {
  std::uint64_t d = 0;
  for (Exponent e : coords_) d += e;
  return d;
}

bool ExponentVector::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](Exponent e) { return e == 0; });
}

std::size_t ExponentVector::support_size() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(coords_.begin(), coords_.end(), [](Exponent e) { return e != 0; }));
}

bool ExponentVector::divides(const ExponentVector& other) const {
  require_same_length(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] > other.coords_[i]) return false;
  }
  return true;
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  require_same_length(a, b);
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

ExponentVector gcd(const ExponentVector& a, const ExponentVector& b) {
  require_same_length(a, b);
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  require_same_length(a, b);
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = checked_exponent(std::uint64_t{a[i]} + b[i]);
  }
  return out;
}

ExponentVector scaled(const ExponentVector& a, std::uint64_t m) {
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && m > std::numeric_limits<Exponent>::max() / a[i]) {
      throw ResourceError("exponent overflow while scaling by " + std::to_string(m));
    }
    out[i] = static_cast<Exponent>(a[i] * m);
  }
  return out;
}

ExponentVector colon(const ExponentVector& a, const ExponentVector& u) {
  require_same_length(a, u);
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] > u[i] ? a[i] - u[i] : 0;
  return out;
}

ExponentVector support_indicator(const ExponentVector& a) {
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] != 0 ? 1 : 0;
  return out;
}

bool graded_lex_less(const ExponentVector& a, const ExponentVector& b) {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db;
  // Larger leading exponent comes first.
  return b.coords() < a.coords();
}

std::ostream& operator<<(std::ostream& os, const ExponentVector& a) {
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ',';
    os << a[i];
  }
  return os << ')';
}

MonomialIdeal MonomialIdeal::unit(std::size_t n) {
  MonomialIdeal I(n);
  I.gens_.emplace_back(n);
  return I;
}

MonomialIdeal MonomialIdeal::from_generators(std::size_t n, std::vector<ExponentVector> raw) {
  return minimalize(std::move(raw), n);
}

bool MonomialIdeal::is_unit() const noexcept {
  return gens_.size() == 1 && gens_.front().is_zero();
}

bool MonomialIdeal::is_square_free() const noexcept {
  return std::all_of(gens_.begin(), gens_.end(), [](const ExponentVector& g) {
    return std::all_of(g.begin(), g.end(), [](Exponent e) { return e <= 1; });
  });
}

bool MonomialIdeal::contains(const ExponentVector& u) const {
  if (u.size() != n_) {
    throw InputError("monomial has " + std::to_string(u.size()) + " exponents, ring has " +
                     std::to_string(n_) + " variables");
  }
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const ExponentVector& g) { return g.divides(u); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  require_same_ring(*this, other);
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const ExponentVector& g) { return contains(g); });
}

ExponentVector MonomialIdeal::generator_lcm() const {
  ExponentVector out(n_);
  for (const auto& g : gens_) out = lcm(out, g);
  return out;
}

MonomialIdeal minimalize(std::vector<ExponentVector> raw, std::size_t n) {
  for (const auto& g : raw) {
    if (g.size() != n) {
      throw InputError("generator has length " + std::to_string(g.size()) + ", expected " +
                       std::to_string(n));
    }
  }
  std::sort(raw.begin(), raw.end(), graded_lex_less);
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

  // A divisor has degree <= the multiple, so only earlier entries can divide.
  std::vector<ExponentVector> kept;
  kept.reserve(raw.size());
  for (auto& g : raw) {
    const bool redundant = std::any_of(kept.begin(), kept.end(),
                                       [&](const ExponentVector& k) { return k.divides(g); });
    if (!redundant) kept.push_back(std::move(g));
  }

  MonomialIdeal I(n);
  I.gens_ = std::move(kept);
  return I;
}

MonomialIdeal square_power(const MonomialIdeal& I, std::uint64_t m) {
  if (m == 0) throw InputError("square power exponent m must be positive");
  std::vector<ExponentVector> gens;
  gens.reserve(I.num_generators());
  for (const auto& g : I.generators()) gens.push_back(scaled(g, m));
  return minimalize(std::move(gens), I.num_vars());
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I, J);
  std::vector<ExponentVector> gens;
  gens.reserve(I.num_generators() * J.num_generators());
  for (const auto& g : I.generators()) {
    for (const auto& h : J.generators()) gens.push_back(lcm(g, h));
  }
  return minimalize(std::move(gens), I.num_vars());
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I, J);
  std::vector<ExponentVector> gens(I.generators().begin(), I.generators().end());
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return minimalize(std::move(gens), I.num_vars());
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I, J);
  std::vector<ExponentVector> gens;
  gens.reserve(I.num_generators() * J.num_generators());
  for (const auto& g : I.generators()) {
    for (const auto& h : J.generators()) gens.push_back(g + h);
  }
  return minimalize(std::move(gens), I.num_vars());
}

MonomialIdeal ordinary_power(const MonomialIdeal& I, std::uint64_t s) {
  MonomialIdeal result = MonomialIdeal::unit(I.num_vars());
  MonomialIdeal base = I;
  while (s > 0) {
    if (s & 1) result = product(result, base);
    s >>= 1;
    if (s > 0) base = product(base, base);
  }
  return result;
}

MonomialIdeal colon(const MonomialIdeal& I, const ExponentVector& u) {
  if (u.size() != I.num_vars()) throw InputError("colon monomial has the wrong length");
  std::vector<ExponentVector> gens;
  gens.reserve(I.num_generators());
  for (const auto& g : I.generators()) gens.push_back(colon(g, u));
  return minimalize(std::move(gens), I.num_vars());
}

MonomialIdeal radical(const MonomialIdeal& I) {
  std::vector<ExponentVector> gens;
  gens.reserve(I.num_generators());
  for (const auto& g : I.generators()) gens.push_back(support_indicator(g));
  return minimalize(std::move(gens), I.num_vars());
}

bool is_monomial_regular_sequence(std::span<const ExponentVector> gens) {
  for (std::size_t a = 0; a < gens.size(); ++a) {
    if (gens[a].is_zero()) return false;
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      require_same_length(gens[a], gens[b]);
      for (std::size_t i = 0; i < gens[a].size(); ++i) {
        if (gens[a][i] != 0 && gens[b][i] != 0) return false;
      }
    }
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& I) {
  os << '<';
  bool first = true;
  for (const auto& g : I.generators()) {
    if (!first) os << ", ";
    first = false;
    os << g;
  }
  return os << '>';
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(std::uint32_t characteristic) : characteristic_(characteristic) {
  if (characteristic != 0 && (!is_prime(characteristic) || characteristic >= (1u << 31))) {
    throw InputError("characteristic must be 0 or a prime below 2^31, got " +
                     std::to_string(characteristic));
  }
}

}  // namespace sqp

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sqp/limits.hpp"
#include "sqp/monomial_ideal.hpp"
#include "sqp/probe_report.hpp"

namespace sqp {

/// Graded Betti numbers beta_{i,j}(R/I), stored sparsely; only nonzero
/// counts are kept. beta_{0,0} = 1 for every proper ideal; the unit ideal
/// has an empty table (R/I = 0).
class BettiTable {
 public:
  using Key = std::pair<int, std::int64_t>;

  BettiTable() = default;
  BettiTable(std::size_t n, FieldSpec field) : n_(n), field_(field) {}

  void add(int i, std::int64_t j, std::uint64_t count);
  std::uint64_t at(int i, std::int64_t j) const;

  const std::map<Key, std::uint64_t>& entries() const noexcept { return entries_; }
  std::size_t num_vars() const noexcept { return n_; }
  const FieldSpec& field() const noexcept { return field_; }
  bool empty() const noexcept { return entries_.empty(); }

  /// Sum over j of beta_{i,j}.
  std::uint64_t total(int i) const;

  /// max i with a nonzero entry. Throws InputError on an empty table.
  int projective_dimension() const;
  /// max (j - i) over nonzero entries. Throws InputError on an empty table.
  std::int64_t regularity() const;
  /// n - pd (Auslander-Buchsbaum).
  int depth() const;

  bool operator==(const BettiTable&) const = default;

 private:
  std::size_t n_ = 0;
  FieldSpec field_;
  std::map<Key, std::uint64_t> entries_;
};

struct ExtremalCorner {
  int i = 0;
  std::int64_t j = 0;
  std::uint64_t value = 0;

  bool operator==(const ExtremalCorner&) const = default;
};

/// Square-free faces tau of supp(alpha) with X^(alpha - tau) in I, as bit
/// masks over the variables; closed under taking subsets.
struct KoszulComplexRecord {
  ExponentVector alpha;
  std::vector<std::uint32_t> faces;
};

/// lcms of all nonempty subsets of the minimal generators, deduplicated and
/// sorted (graded lex). Computed as the join-closure of the generators, so
/// the cost tracks the lattice size rather than 2^mu. Throws ResourceError
/// if mu(I) or the lattice size exceeds `limits`.
std::vector<ExponentVector> lcm_lattice(const MonomialIdeal& I, const Limits& limits = {});

KoszulComplexRecord upper_koszul_complex(const MonomialIdeal& I, const ExponentVector& alpha);

/// beta_{i,alpha}(R/I) for i = 0..n+1 (index i), from the reduced homology
/// of the upper Koszul complex: beta_{i,alpha} = dim H~_{i-2}(K^alpha).
std::vector<std::uint64_t> multigraded_betti_at(const MonomialIdeal& I, const ExponentVector& alpha,
                                                const FieldSpec& field);

/// Coarse graded Betti table of R/I over `field`.
BettiTable betti_table(const MonomialIdeal& I, const FieldSpec& field = {}, const Limits& limits = {});

/// Independent engine: homology of the fine-graded strands of the Taylor
/// complex. Only for small mu (limits.max_taylor_generators).
BettiTable taylor_betti_oracle(const MonomialIdeal& I, const FieldSpec& field = {},
                               const Limits& limits = {});

std::vector<ExtremalCorner> extremal_betti_set(const BettiTable& table);

/// Whether some beta_{i, i + reg} is extremal in the sense of
/// extremal_betti_set (no other entry at r >= i, s >= j).
bool has_extremal_corner_at_reg(const BettiTable& table);

/// The i with beta_{i, i + reg} extremal. When no entry of the regularity
/// row is extremal in that sense, returns the rightmost i on the row, which
/// is the row's corner for the row-indexed notion (no entry at r >= i with
/// s - r >= reg). Throws InputError on an empty table.
int extremal_corner_at_reg(const BettiTable& table);

/// m*r + (m-1)*i
std::int64_t predicted_regularity(std::int64_t r, std::int64_t i, std::uint64_t m);

/// Moves every entry (i,k) to (i, m*k).
BettiTable predicted_square_betti(const BettiTable& table, std::uint64_t m);

/// Homological invariants of R/I that need both the Betti table and the
/// minimal primes.
struct QuotientInvariants {
  int pd = 0;
  std::int64_t reg = 0;
  int depth = 0;
  std::size_t dim = 0;
  bool cohen_macaulay = false;
  std::uint64_t cm_type = 0;  // total Betti number at i = pd
  bool gorenstein = false;
};

QuotientInvariants quotient_invariants(const MonomialIdeal& I, const FieldSpec& field = {},
                                       const Limits& limits = {});
QuotientInvariants quotient_invariants(const MonomialIdeal& I, const BettiTable& table);

bool is_cohen_macaulay(const MonomialIdeal& I, const FieldSpec& field = {}, const Limits& limits = {});
std::uint64_t cm_type(const MonomialIdeal& I, const FieldSpec& field = {}, const Limits& limits = {});
bool is_gorenstein(const MonomialIdeal& I, const FieldSpec& field = {}, const Limits& limits = {});

struct ExtremalPowerRecord {
  int s = 0;
  std::size_t mu = 0;
  int pd = 0;
  std::int64_t reg = 0;
  int corner = 0;  // i_s with beta_{i_s, i_s + reg} extremal
};

struct ExtremalPowerReport {
  int window = 0;
  std::vector<ExtremalPowerRecord> records;
  /// Least s from which the corner stays constant up to the window end.
  int tail_from = 0;
  int tail_corner = 0;
  /// The constant tail covers at least the last two powers.
  bool tail_constant = false;
  Verdict verdict = Verdict::violated;
};

/// Corner i_s of R/I^s for s = 1..max_s.
ExtremalPowerReport extremal_power_probe(const MonomialIdeal& I, int max_s, const FieldSpec& field = {},
                                         const Limits& limits = {});

/// Diagram with a header of homological degrees, a `total:` row and one row
/// per j - i from 0 to reg; zero entries print as '.'.
std::string render_betti_diagram(const BettiTable& table);

}  // namespace sqp

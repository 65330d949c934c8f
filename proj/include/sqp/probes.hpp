#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sqp/decomposition.hpp"
#include "sqp/limits.hpp"
#include "sqp/monomial_ideal.hpp"
#include "sqp/probe_report.hpp"

namespace sqp {

/// Ass(J^s) for s = 1..window where J = I^[m] (m = 1 is I itself).
struct AssSeries {
  std::uint64_t m = 1;
  std::vector<std::vector<MonomialPrime>> ass;  // ass[s - 1]
  /// First s with Ass(J^s) not contained in Ass(J), if any.
  std::optional<int> first_violation;
  /// Least s0 with Ass(J^s) constant on [s0, window].
  int stability_candidate = 1;
};

AssSeries ass_series(const MonomialIdeal& I, std::uint64_t m, int max_s);

struct NtfReport {
  int window = 0;
  AssSeries base;
  /// Only filled when the base window holds.
  std::vector<AssSeries> scaled;
  Verdict verdict = Verdict::violated;
  std::optional<int> violated_at;
  std::uint64_t violated_m = 1;
};

/// Checks Ass(I^s) ⊆ Ass(I) for s <= max_s, and on success the same for
/// every I^[m], m in m_list.
NtfReport ntf_probe(const MonomialIdeal& I, int max_s, const std::vector<std::uint64_t>& m_list);

struct StabilityReport {
  int window = 0;
  std::uint64_t m = 2;
  AssSeries base;
  AssSeries scaled;
  /// Holds when both window candidates agree.
  Verdict verdict = Verdict::violated;
};

StabilityReport stability_probe(const MonomialIdeal& I, int max_s, std::uint64_t m);

struct SymbolicDepthRecord {
  int s = 0;
  int depth = 0;         // depth R/I^(s)
  int depth_scaled = 0;  // depth R/(I^[m])^(s)
  std::size_t mu = 0;
  std::size_t mu_scaled = 0;
  std::optional<bool> closed;         // I^(s) integrally closed
  std::optional<bool> closed_scaled;  // (I^[m])^(s) integrally closed
};

struct SymbolicDepthReport {
  int window = 0;
  std::uint64_t m = 2;
  std::vector<SymbolicDepthRecord> records;
  Verdict verdict = Verdict::violated;
  std::optional<int> violated_at;
};

/// Pointwise depth and mu comparison of I^(s) and (I^[m])^(s). The
/// integral-closedness flags are only computed when `closure_flags` is set,
/// and stay empty when the closure search box exceeds its cap.
SymbolicDepthReport symbolic_depth_probe(const MonomialIdeal& I, int max_s, std::uint64_t m,
                                         const FieldSpec& field = {}, const Limits& limits = {},
                                         bool closure_flags = false);

}  // namespace sqp

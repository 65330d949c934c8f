#include "sqp/probes.hpp"

#include <algorithm>

#include "sqp/closure.hpp"
#include "sqp/errors.hpp"
#include "sqp/resolution.hpp"

namespace sqp {

namespace {

void require_window(const MonomialIdeal& I, int max_s, const char* probe) {
  if (max_s < 1) throw InputError(std::string(probe) + ": --max-s must be at least 1");
  if (!I.is_proper_nonzero()) throw InputError(std::string(probe) + ": needs a proper nonzero ideal");
}

bool subset(const std::vector<MonomialPrime>& a, const std::vector<MonomialPrime>& b) {
  return std::all_of(a.begin(), a.end(),
                     [&](const MonomialPrime& p) { return std::find(b.begin(), b.end(), p) != b.end(); });
}

std::optional<bool> closure_flag(const MonomialIdeal& J, const Limits& limits) {
  try {
    return is_integrally_closed(J, limits);
  } catch (const ResourceError&) {
    return std::nullopt;
  }
}

}  // namespace

AssSeries ass_series(const MonomialIdeal& I, std::uint64_t m, int max_s) {
  require_window(I, max_s, "ass_series");
  AssSeries series;
  series.m = m;
  const auto J = square_power(I, m);
  MonomialIdeal power = J;
  for (int s = 1; s <= max_s; ++s) {
    if (s > 1) power = product(power, J);
    series.ass.push_back(associated_primes(power));
    if (!series.first_violation && !subset(series.ass.back(), series.ass.front())) {
      series.first_violation = s;
    }
  }
  series.stability_candidate = max_s;
  while (series.stability_candidate > 1 &&
         series.ass[series.stability_candidate - 2] == series.ass.back()) {
    --series.stability_candidate;
  }
  return series;
}

NtfReport ntf_probe(const MonomialIdeal& I, int max_s, const std::vector<std::uint64_t>& m_list) {
  NtfReport report;
  report.window = max_s;
  report.base = ass_series(I, 1, max_s);
  if (report.base.first_violation) {
    report.violated_at = report.base.first_violation;
    return report;
  }
  for (auto m : m_list) {
    report.scaled.push_back(ass_series(I, m, max_s));
    if (report.scaled.back().first_violation && !report.violated_at) {
      report.violated_at = report.scaled.back().first_violation;
      report.violated_m = m;
    }
  }
  report.verdict = report.violated_at ? Verdict::violated : Verdict::holds_on_window;
  return report;
}

StabilityReport stability_probe(const MonomialIdeal& I, int max_s, std::uint64_t m) {
  StabilityReport report;
  report.window = max_s;
  report.m = m;
  report.base = ass_series(I, 1, max_s);
  report.scaled = ass_series(I, m, max_s);
  report.verdict = report.base.stability_candidate == report.scaled.stability_candidate
                       ? Verdict::holds_on_window
                       : Verdict::violated;
  return report;
}

SymbolicDepthReport symbolic_depth_probe(const MonomialIdeal& I, int max_s, std::uint64_t m,
                                         const FieldSpec& field, const Limits& limits, bool closure_flags) {
  require_window(I, max_s, "symbolic_depth_probe");
  SymbolicDepthReport report;
  report.window = max_s;
  report.m = m;
  const auto scaled_base = square_power(I, m);
  for (int s = 1; s <= max_s; ++s) {
    const auto sym = symbolic_power(I, static_cast<std::uint64_t>(s));
    const auto sym_scaled = symbolic_power(scaled_base, static_cast<std::uint64_t>(s));
    SymbolicDepthRecord record;
    record.s = s;
    record.depth = betti_table(sym, field, limits).depth();
    record.depth_scaled = betti_table(sym_scaled, field, limits).depth();
    record.mu = sym.num_generators();
    record.mu_scaled = sym_scaled.num_generators();
    if (closure_flags) {
      record.closed = closure_flag(sym, limits);
      record.closed_scaled = closure_flag(sym_scaled, limits);
    }
    if (!report.violated_at && (record.depth != record.depth_scaled || record.mu != record.mu_scaled)) {
      report.violated_at = s;
    }
    report.records.push_back(record);
  }
  report.verdict = report.violated_at ? Verdict::violated : Verdict::holds_on_window;
  return report;
}

}  // namespace sqp

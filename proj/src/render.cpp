#include "sqp/render.hpp"

#include <algorithm>
#include <sstream>

namespace sqp {

namespace {

std::string primes_text(const std::vector<MonomialPrime>& ps, const std::vector<std::string>& vars) {
  if (ps.empty()) return "{}";
  std::string out;
  for (std::size_t k = 0; k < ps.size(); ++k) {
    if (k) out += ", ";
    out += format_prime(ps[k], vars);
  }
  return out;
}

std::string flag(const std::optional<bool>& b) {
  if (!b) return "?";
  return *b ? "yes" : "no";
}

nlohmann::json flag_json(const std::optional<bool>& b) {
  return b ? nlohmann::json(*b) : nlohmann::json(nullptr);
}

void append_series(nlohmann::json& records, const AssSeries& series) {
  for (std::size_t k = 0; k < series.ass.size(); ++k) {
    records.push_back({{"m", series.m}, {"s", k + 1}, {"ass", primes_to_json(series.ass[k])}});
  }
}

void append_series_rows(std::vector<std::vector<std::string>>& rows, const AssSeries& series,
                        const std::vector<std::string>& vars) {
  for (std::size_t k = 0; k < series.ass.size(); ++k) {
    rows.push_back({std::to_string(series.m), std::to_string(k + 1), primes_text(series.ass[k], vars)});
  }
}

}  // namespace

nlohmann::json components_to_json(const std::vector<IrreducibleComponent>& components) {
  auto out = nlohmann::json::array();
  for (const auto& c : components) {
    std::vector<std::size_t> support;
    std::vector<Exponent> exponents;
    for (std::size_t i = 0; i < c.exponents.size(); ++i) {
      if (c.exponents[i] == 0) continue;
      support.push_back(i);
      exponents.push_back(c.exponents[i]);
    }
    out.push_back({{"support", support}, {"exponents", exponents}});
  }
  return out;
}

nlohmann::json primary_to_json(const std::vector<PrimaryComponent>& components) {
  auto out = nlohmann::json::array();
  for (const auto& c : components) {
    auto gens = nlohmann::json::array();
    for (const auto& g : c.ideal.generators()) gens.push_back(g.coords());
    out.push_back({{"support", c.radical.support}, {"gens", std::move(gens)}});
  }
  return out;
}

nlohmann::json primes_to_json(const std::vector<MonomialPrime>& primes) {
  auto out = nlohmann::json::array();
  for (const auto& p : primes) out.push_back(p.support);
  return out;
}

nlohmann::json betti_to_json(const BettiTable& table) {
  auto entries = nlohmann::json::array();
  for (const auto& [key, count] : table.entries()) entries.push_back({key.first, key.second, count});
  return {{"char", table.field().characteristic()}, {"entries", std::move(entries)}};
}

nlohmann::json corners_to_json(const std::vector<ExtremalCorner>& corners) {
  auto out = nlohmann::json::array();
  for (const auto& c : corners) out.push_back({c.i, c.j, c.value});
  return out;
}

nlohmann::json probe_to_json(const NtfReport& r) {
  auto records = nlohmann::json::array();
  append_series(records, r.base);
  for (const auto& s : r.scaled) append_series(records, s);
  return {{"probe", "ntf"}, {"window", r.window}, {"records", std::move(records)},
          {"verdict", verdict_string(r.verdict, r.violated_at)}};
}

nlohmann::json probe_to_json(const StabilityReport& r) {
  auto records = nlohmann::json::array();
  append_series(records, r.base);
  append_series(records, r.scaled);
  return {{"probe", "stability"},
          {"window", r.window},
          {"m", r.m},
          {"records", std::move(records)},
          {"candidate", r.base.stability_candidate},
          {"candidate_scaled", r.scaled.stability_candidate},
          {"verdict", verdict_string(r.verdict, std::nullopt)}};
}

nlohmann::json probe_to_json(const SymbolicDepthReport& r) {
  auto records = nlohmann::json::array();
  for (const auto& rec : r.records) {
    records.push_back({{"s", rec.s},
                       {"depth", rec.depth},
                       {"depth_scaled", rec.depth_scaled},
                       {"mu", rec.mu},
                       {"mu_scaled", rec.mu_scaled},
                       {"integrally_closed", flag_json(rec.closed)},
                       {"integrally_closed_scaled", flag_json(rec.closed_scaled)}});
  }
  return {{"probe", "symbolic-depth"}, {"window", r.window}, {"m", r.m}, {"records", std::move(records)},
          {"verdict", verdict_string(r.verdict, r.violated_at)}};
}

nlohmann::json probe_to_json(const ExtremalPowerReport& r) {
  auto records = nlohmann::json::array();
  for (const auto& rec : r.records) {
    records.push_back({{"s", rec.s}, {"mu", rec.mu}, {"pd", rec.pd}, {"reg", rec.reg}, {"corner", rec.corner}});
  }
  return {{"probe", "extremal-power"}, {"window", r.window},        {"records", std::move(records)},
          {"tail_from", r.tail_from}, {"tail_corner", r.tail_corner},
          {"verdict", verdict_string(r.verdict, std::nullopt)}};
}

std::string aligned_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(widths[c] - row[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

std::string probe_to_text(const NtfReport& r, const std::vector<std::string>& vars) {
  std::vector<std::vector<std::string>> rows{{"m", "s", "Ass"}};
  append_series_rows(rows, r.base, vars);
  for (const auto& s : r.scaled) append_series_rows(rows, s, vars);
  return "probe: ntf\nwindow: " + std::to_string(r.window) + "\n" + aligned_table(rows) +
         "verdict: " + verdict_string(r.verdict, r.violated_at) + "\n";
}

std::string probe_to_text(const StabilityReport& r, const std::vector<std::string>& vars) {
  std::vector<std::vector<std::string>> rows{{"m", "s", "Ass"}};
  append_series_rows(rows, r.base, vars);
  append_series_rows(rows, r.scaled, vars);
  return "probe: stability\nwindow: " + std::to_string(r.window) + "\n" + aligned_table(rows) +
         "candidate s0: I=" + std::to_string(r.base.stability_candidate) + " I^[" + std::to_string(r.m) +
         "]=" + std::to_string(r.scaled.stability_candidate) + "\nverdict: " +
         verdict_string(r.verdict, std::nullopt) + "\n";
}

std::string probe_to_text(const SymbolicDepthReport& r) {
  const auto m = std::to_string(r.m);
  std::vector<std::vector<std::string>> rows{
      {"s", "depth", "depth[" + m + "]", "mu", "mu[" + m + "]", "closed", "closed[" + m + "]"}};
  for (const auto& rec : r.records) {
    rows.push_back({std::to_string(rec.s), std::to_string(rec.depth), std::to_string(rec.depth_scaled),
                    std::to_string(rec.mu), std::to_string(rec.mu_scaled), flag(rec.closed),
                    flag(rec.closed_scaled)});
  }
  return "probe: symbolic-depth\nwindow: " + std::to_string(r.window) + "\nm: " + m + "\n" + aligned_table(rows) +
         "verdict: " + verdict_string(r.verdict, r.violated_at) + "\n";
}

std::string probe_to_text(const ExtremalPowerReport& r) {
  std::vector<std::vector<std::string>> rows{{"s", "mu", "pd", "reg", "corner"}};
  for (const auto& rec : r.records) {
    rows.push_back({std::to_string(rec.s), std::to_string(rec.mu), std::to_string(rec.pd), std::to_string(rec.reg),
                    std::to_string(rec.corner)});
  }
  return "probe: extremal-power\nwindow: " + std::to_string(r.window) + "\n" + aligned_table(rows) +
         "constant corner " + std::to_string(r.tail_corner) + " from s=" + std::to_string(r.tail_from) +
         "\nverdict: " + verdict_string(r.verdict, std::nullopt) + "\n";
}

}  // namespace sqp

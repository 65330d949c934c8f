#include "sqp/resolution.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "sqp/decomposition.hpp"
#include "sqp/errors.hpp"
#include "sqp/linalg.hpp"

namespace sqp {

namespace {

void check_betti_limits(const MonomialIdeal& I, const Limits& limits) {
  if (I.num_vars() > limits.max_variables) {
    throw ResourceError("n = " + std::to_string(I.num_vars()) + " exceeds the variable cap " +
                        std::to_string(limits.max_variables) + " (SQP_MAX_VARS)");
  }
  if (I.num_vars() > 24) throw ResourceError("upper Koszul complexes need n <= 24");
  if (I.num_generators() > limits.max_generators) {
    throw ResourceError("mu(I) = " + std::to_string(I.num_generators()) + " exceeds the generator cap " +
                        std::to_string(limits.max_generators) + " (SQP_MAX_GENS)");
  }
}

// Homology dimensions of a chain complex given by the sizes of its chain
// groups and the ranks of its differentials: ranks[k] = rank(d_k : C_k -> C_{k-1}),
// with ranks[0] = 0 and ranks[size] = 0.
std::vector<std::uint64_t> homology_dims(const std::vector<std::size_t>& dims,
                                         const std::vector<std::size_t>& ranks) {
  std::vector<std::uint64_t> h(dims.size(), 0);
  for (std::size_t k = 0; k < dims.size(); ++k) {
    const std::size_t out = ranks[k];
    const std::size_t in = k + 1 < ranks.size() ? ranks[k + 1] : 0;
    h[k] = dims[k] - out - in;
  }
  return h;
}

}  // namespace

std::string verdict_string(Verdict v, std::optional<int> violated_at) {
  if (v == Verdict::holds_on_window) return "holds-on-window";
  return violated_at ? "violated-at-" + std::to_string(*violated_at) : "violated-on-window";
}

void BettiTable::add(int i, std::int64_t j, std::uint64_t count) {
  if (count == 0) return;
  entries_[{i, j}] += count;
}

std::uint64_t BettiTable::at(int i, std::int64_t j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

std::uint64_t BettiTable::total(int i) const {
  std::uint64_t t = 0;
  for (const auto& [key, count] : entries_) {
    if (key.first == i) t += count;
  }
  return t;
}

int BettiTable::projective_dimension() const {
  if (entries_.empty()) throw InputError("projective dimension of the zero module is undefined");
  int pd = 0;
  for (const auto& [key, count] : entries_) pd = std::max(pd, key.first);
  return pd;
}

std::int64_t BettiTable::regularity() const {
  if (entries_.empty()) throw InputError("regularity of the zero module is undefined");
  std::int64_t reg = entries_.begin()->first.second - entries_.begin()->first.first;
  for (const auto& [key, count] : entries_) reg = std::max(reg, key.second - key.first);
  return reg;
}

int BettiTable::depth() const {
  return static_cast<int>(n_) - projective_dimension();
}

std::vector<ExponentVector> lcm_lattice(const MonomialIdeal& I, const Limits& limits) {
  if (I.num_generators() > limits.max_generators) {
    throw ResourceError("mu(I) = " + std::to_string(I.num_generators()) + " exceeds the generator cap " +
                        std::to_string(limits.max_generators) + " (SQP_MAX_GENS)");
  }
  const auto gens = I.generators();
  std::set<ExponentVector> lattice(gens.begin(), gens.end());
  std::vector<ExponentVector> frontier(gens.begin(), gens.end());
  while (!frontier.empty()) {
    std::vector<ExponentVector> next;
    for (const auto& a : frontier) {
      for (const auto& g : gens) {
        auto joined = lcm(a, g);
        if (lattice.insert(joined).second) {
          if (lattice.size() > limits.max_lattice) {
            throw ResourceError("lcm lattice exceeds " + std::to_string(limits.max_lattice) + " points");
          }
          next.push_back(std::move(joined));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<ExponentVector> out(lattice.begin(), lattice.end());
  std::sort(out.begin(), out.end(), graded_lex_less);
  return out;
}

KoszulComplexRecord upper_koszul_complex(const MonomialIdeal& I, const ExponentVector& alpha) {
  if (alpha.size() != I.num_vars()) throw InputError("multidegree has the wrong length");
  if (I.num_vars() > 24) throw ResourceError("upper Koszul complexes need n <= 24");
  std::uint32_t support = 0;
  for (std::size_t v = 0; v < alpha.size(); ++v) {
    if (alpha[v] != 0) support |= 1u << v;
  }

  KoszulComplexRecord record{alpha, {}};
  // Enumerate submasks of the support, including the empty face.
  for (std::uint32_t tau = support;; tau = (tau - 1) & support) {
    ExponentVector shifted = alpha;
    for (std::size_t v = 0; v < alpha.size(); ++v) {
      if (tau & (1u << v)) --shifted[v];
    }
    if (I.contains(shifted)) record.faces.push_back(tau);
    if (tau == 0) break;
  }
  std::sort(record.faces.begin(), record.faces.end(), [](std::uint32_t a, std::uint32_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return record;
}

std::vector<std::uint64_t> multigraded_betti_at(const MonomialIdeal& I, const ExponentVector& alpha,
                                                const FieldSpec& field) {
  const std::size_t n = I.num_vars();
  std::vector<std::uint64_t> betti(n + 2, 0);
  const auto complex = upper_koszul_complex(I, alpha);
  // The void complex (X^alpha not in I) has no homology at all.
  if (complex.faces.empty()) return betti;

  // by_size[k] lists faces with k vertices; k = 0 is the empty face, which
  // carries reduced homology in degree -1.
  std::vector<std::vector<std::uint32_t>> by_size(n + 1);
  for (auto f : complex.faces) by_size[std::popcount(f)].push_back(f);

  std::vector<std::size_t> dims(n + 1), ranks(n + 2, 0);
  for (std::size_t k = 0; k <= n; ++k) dims[k] = by_size[k].size();

  for (std::size_t k = 1; k <= n; ++k) {
    if (by_size[k].empty() || by_size[k - 1].empty()) continue;
    const auto& rows = by_size[k - 1];
    const auto& cols = by_size[k];
    IntMatrix boundary(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      int position = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (!(cols[c] & (1u << v))) continue;
        const auto face = cols[c] & ~(1u << v);
        const auto r = static_cast<std::size_t>(
            std::lower_bound(rows.begin(), rows.end(), face) - rows.begin());
        boundary(r, c) = position % 2 == 0 ? 1 : -1;
        ++position;
      }
    }
    ranks[k] = rank(boundary, field);
  }

  const auto h = homology_dims(dims, ranks);
  // Faces with k vertices have dimension k - 1, and H~_{i-2} feeds beta_i.
  for (std::size_t k = 0; k <= n; ++k) betti[k + 1] = h[k];
  return betti;
}

BettiTable betti_table(const MonomialIdeal& I, const FieldSpec& field, const Limits& limits) {
  BettiTable table(I.num_vars(), field);
  if (I.is_unit()) return table;
  check_betti_limits(I, limits);
  table.add(0, 0, 1);
  for (const auto& alpha : lcm_lattice(I, limits)) {
    const auto degree = static_cast<std::int64_t>(alpha.degree());
    const auto betti = multigraded_betti_at(I, alpha, field);
    for (std::size_t i = 1; i < betti.size(); ++i) table.add(static_cast<int>(i), degree, betti[i]);
  }
  return table;
}

BettiTable taylor_betti_oracle(const MonomialIdeal& I, const FieldSpec& field, const Limits& limits) {
  const std::size_t mu = I.num_generators();
  if (mu > limits.max_taylor_generators || mu > 20) {
    throw ResourceError("Taylor oracle needs mu(I) <= " + std::to_string(limits.max_taylor_generators) +
                        ", got " + std::to_string(mu));
  }
  const auto gens = I.generators();
  const std::uint32_t subsets = 1u << mu;

  std::vector<ExponentVector> label(subsets, ExponentVector(I.num_vars()));
  for (std::uint32_t s = 1; s < subsets; ++s) {
    const int low = std::countr_zero(s);
    label[s] = lcm(label[s & (s - 1)], gens[low]);
  }

  // The Taylor complex tensored with the field splits into one strand per
  // lcm: the basis elements whose label is exactly alpha.
  std::map<ExponentVector, std::vector<std::uint32_t>> strands;
  for (std::uint32_t s = 0; s < subsets; ++s) strands[label[s]].push_back(s);

  BettiTable table(I.num_vars(), field);
  for (const auto& [alpha, members] : strands) {
    std::vector<std::vector<std::uint32_t>> by_size(mu + 1);
    for (auto s : members) by_size[std::popcount(s)].push_back(s);
    for (auto& v : by_size) std::sort(v.begin(), v.end());

    std::vector<std::size_t> dims(mu + 1), ranks(mu + 2, 0);
    for (std::size_t k = 0; k <= mu; ++k) dims[k] = by_size[k].size();
    for (std::size_t k = 1; k <= mu; ++k) {
      if (by_size[k].empty() || by_size[k - 1].empty()) continue;
      const auto& rows = by_size[k - 1];
      const auto& cols = by_size[k];
      IntMatrix d(rows.size(), cols.size());
      for (std::size_t c = 0; c < cols.size(); ++c) {
        int position = 0;
        for (std::size_t g = 0; g < mu; ++g) {
          if (!(cols[c] & (1u << g))) continue;
          const auto face = cols[c] & ~(1u << g);
          // Terms whose label drops below alpha carry a non-unit monomial
          // coefficient and vanish after tensoring with the field.
          auto it = std::lower_bound(rows.begin(), rows.end(), face);
          if (it != rows.end() && *it == face) {
            d(static_cast<std::size_t>(it - rows.begin()), c) = position % 2 == 0 ? 1 : -1;
          }
          ++position;
        }
      }
      ranks[k] = rank(d, field);
    }
    const auto h = homology_dims(dims, ranks);
    const auto degree = static_cast<std::int64_t>(alpha.degree());
    for (std::size_t k = 0; k <= mu; ++k) table.add(static_cast<int>(k), degree, h[k]);
  }
  return table;
}

std::vector<ExtremalCorner> extremal_betti_set(const BettiTable& table) {
  std::vector<ExtremalCorner> out;
  const auto& entries = table.entries();
  for (const auto& [key, count] : entries) {
    const bool dominated = std::any_of(entries.begin(), entries.end(), [&](const auto& other) {
      return other.first != key && other.first.first >= key.first && other.first.second >= key.second;
    });
    if (!dominated) out.push_back({key.first, key.second, count});
  }
  return out;
}

bool has_extremal_corner_at_reg(const BettiTable& table) {
  const auto reg = table.regularity();
  const auto corners = extremal_betti_set(table);
  return std::any_of(corners.begin(), corners.end(), [&](const ExtremalCorner& c) { return c.j - c.i == reg; });
}

int extremal_corner_at_reg(const BettiTable& table) {
  const auto reg = table.regularity();
  // At most one corner can sit on a single row, and when it exists it is the
  // rightmost entry there, so the rightmost entry covers both cases.
  int last = -1;
  for (const auto& [key, count] : table.entries()) {
    if (key.second - key.first == reg) last = std::max(last, key.first);
  }
  return last;
}

std::int64_t predicted_regularity(std::int64_t r, std::int64_t i, std::uint64_t m) {
  const auto mm = static_cast<std::int64_t>(m);
  return mm * r + (mm - 1) * i;
}

BettiTable predicted_square_betti(const BettiTable& table, std::uint64_t m) {
  if (m == 0) throw InputError("square power exponent m must be positive");
  BettiTable out(table.num_vars(), table.field());
  for (const auto& [key, count] : table.entries()) {
    out.add(key.first, key.second * static_cast<std::int64_t>(m), count);
  }
  return out;
}

QuotientInvariants quotient_invariants(const MonomialIdeal& I, const BettiTable& table) {
  QuotientInvariants q;
  q.pd = table.projective_dimension();
  q.reg = table.regularity();
  q.depth = table.depth();
  q.dim = krull_dimension(I);
  q.cohen_macaulay = q.depth == static_cast<int>(q.dim);
  q.cm_type = table.total(q.pd);
  q.gorenstein = q.cohen_macaulay && q.cm_type == 1;
  return q;
}

QuotientInvariants quotient_invariants(const MonomialIdeal& I, const FieldSpec& field, const Limits& limits) {
  return quotient_invariants(I, betti_table(I, field, limits));
}

bool is_cohen_macaulay(const MonomialIdeal& I, const FieldSpec& field, const Limits& limits) {
  return quotient_invariants(I, field, limits).cohen_macaulay;
}

std::uint64_t cm_type(const MonomialIdeal& I, const FieldSpec& field, const Limits& limits) {
  return quotient_invariants(I, field, limits).cm_type;
}

bool is_gorenstein(const MonomialIdeal& I, const FieldSpec& field, const Limits& limits) {
  return quotient_invariants(I, field, limits).gorenstein;
}

ExtremalPowerReport extremal_power_probe(const MonomialIdeal& I, int max_s, const FieldSpec& field,
                                         const Limits& limits) {
  if (max_s < 1) throw InputError("--max-s must be at least 1");
  if (!I.is_proper_nonzero()) throw InputError("extremal_power_probe needs a proper nonzero ideal");
  ExtremalPowerReport report;
  report.window = max_s;
  MonomialIdeal power = I;
  for (int s = 1; s <= max_s; ++s) {
    if (s > 1) power = product(power, I);
    const auto table = betti_table(power, field, limits);
    report.records.push_back(
        {s, power.num_generators(), table.projective_dimension(), table.regularity(), extremal_corner_at_reg(table)});
  }
  report.tail_corner = report.records.back().corner;
  report.tail_from = max_s;
  while (report.tail_from > 1 && report.records[report.tail_from - 2].corner == report.tail_corner) {
    --report.tail_from;
  }
  report.tail_constant = max_s - report.tail_from + 1 >= 2;
  report.verdict = report.tail_constant ? Verdict::holds_on_window : Verdict::violated;
  return report;
}

std::string render_betti_diagram(const BettiTable& table) {
  if (table.empty()) return "zero module\n";
  const int pd = table.projective_dimension();
  const auto reg = table.regularity();
  std::int64_t min_row = reg;
  for (const auto& [key, count] : table.entries()) min_row = std::min(min_row, key.second - key.first);
  min_row = std::min<std::int64_t>(min_row, 0);

  std::vector<std::string> labels{"", "total:"};
  for (auto row = min_row; row <= reg; ++row) labels.push_back(std::to_string(row) + ":");

  std::vector<std::vector<std::string>> columns;
  for (int i = 0; i <= pd; ++i) {
    std::vector<std::string> col{std::to_string(i), std::to_string(table.total(i))};
    for (auto row = min_row; row <= reg; ++row) {
      const auto v = table.at(i, row + i);
      col.push_back(v == 0 ? "." : std::to_string(v));
    }
    columns.push_back(std::move(col));
  }

  std::size_t label_width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, l.size());
  std::vector<std::size_t> widths;
  for (const auto& col : columns) {
    std::size_t w = 0;
    for (const auto& cell : col) w = std::max(w, cell.size());
    widths.push_back(w);
  }

  std::ostringstream out;
  for (std::size_t r = 0; r < labels.size(); ++r) {
    out << std::string(label_width - labels[r].size(), ' ') << labels[r];
    for (std::size_t c = 0; c < columns.size(); ++c) {
      out << ' ' << std::string(widths[c] - columns[c][r].size(), ' ') << columns[c][r];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace sqp

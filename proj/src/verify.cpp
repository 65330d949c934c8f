#include "sqp/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "sqp/closure.hpp"
#include "sqp/decomposition.hpp"
#include "sqp/errors.hpp"
#include "sqp/io.hpp"
#include "sqp/probes.hpp"
#include "sqp/resolution.hpp"

namespace sqp {

namespace {

struct CatalogEntry {
  TheoremId id;
  std::string_view name;
  std::string_view statement;
};

constexpr CatalogEntry kCatalog[] = {
    {TheoremId::betti_scaling, "betti-scaling", "beta_{i,mk}(R/I^[m]) = beta_{i,k}(R/I), zero off multiples of m"},
    {TheoremId::reg_formula, "reg-formula", "reg(R/I^[m]) = m*reg(R/I) + (m-1)*i, beta_{i,i+reg} extremal"},
    {TheoremId::pd_equal, "pd-equal", "pd(R/I^[m]) = pd(R/I)"},
    {TheoremId::depth_equal, "depth-equal", "depth(R/I^[m]) = depth(R/I) and dim(R/I^[m]) = dim(R/I)"},
    {TheoremId::cm_transfer, "cm-transfer", "R/I^[m] is Cohen-Macaulay iff R/I is"},
    {TheoremId::gorenstein_transfer, "gorenstein-transfer", "R/I^[m] is Gorenstein iff R/I is"},
    {TheoremId::extremal_transfer, "extremal-transfer", "(i,j) extremal for R/I <=> (i,mj) extremal for R/I^[m]"},
    {TheoremId::power_commute, "power-commute", "(I^[m])^s = (I^s)^[m]"},
    {TheoremId::intersect_commute, "intersect-commute", "(I cap J)^[m] = I^[m] cap J^[m]"},
    {TheoremId::membership_transfer, "membership-transfer", "X^u in I <=> X^(mu) in I^[m]"},
    {TheoremId::primary_transfer, "primary-transfer", "primary components of I^[m] are the Q^[m]"},
    {TheoremId::ass_equal, "ass-equal", "Ass(I^[m]) = Ass(I)"},
    {TheoremId::min_equal, "min-equal", "Min(I^[m]) = Min(I)"},
    {TheoremId::ntf_transfer, "ntf-transfer", "I normally torsion-free on window => I^[m] too"},
    {TheoremId::stability_equal, "stability-equal", "Ass-stability candidates of I and I^[m] agree on window"},
    {TheoremId::closure_equal, "closure-equal", "closure(I^[m]) = closure(I^m)"},
    {TheoremId::symbolic_commute, "symbolic-commute", "(I^[m])^(s) = (I^(s))^[m]"},
    {TheoremId::symbolic_depth, "symbolic-depth", "depth R/(I^[m])^(s) = depth R/I^(s)"},
    {TheoremId::mu_equal, "mu-equal", "mu((I^[m])^(s)) = mu(I^(s))"},
    {TheoremId::extremal_power_stab, "extremal-power-stab",
     "reg(R/(I^[m])^s) = m*reg(R/I^s) + (m-1)*i_s for every s on window"},
};

const CatalogEntry& entry(TheoremId id) {
  for (const auto& e : kCatalog) {
    if (e.id == id) return e;
  }
  throw std::logic_error("theorem id missing from catalog");
}

CheckOutcome pass() { return {CaseStatus::pass, {}}; }

// Witness-first: the replayable ideal, then the offending values.
CheckOutcome fail(const MonomialIdeal& I, const std::string& detail) {
  return {CaseStatus::fail, format_ideal_text(I) + detail};
}

std::string betti_entries(const BettiTable& t) {
  std::ostringstream out;
  out << '[';
  bool first = true;
  for (const auto& [key, count] : t.entries()) {
    if (!first) out << ' ';
    first = false;
    out << '(' << key.first << ',' << key.second << ")=" << count;
  }
  out << ']';
  return out.str();
}

std::string primes_string(const std::vector<MonomialPrime>& ps) {
  const auto vars = default_var_names(ps.empty() ? 0 : ps.front().n);
  std::string out = "{";
  for (std::size_t k = 0; k < ps.size(); ++k) {
    if (k) out += ", ";
    out += format_prime(ps[k], vars);
  }
  return out + "}";
}

std::string param(std::uint64_t m, const FieldSpec& f) {
  return "m=" + std::to_string(m) + " char=" + std::to_string(f.characteristic());
}

CheckOutcome check_betti_family(const MonomialIdeal& I, const CheckContext& ctx, TheoremId id) {
  std::string note;
  for (const auto& field : ctx.options.fields) {
    const auto base = betti_table(I, field, ctx.options.limits);
    const auto base_inv = quotient_invariants(I, base);
    for (auto m : ctx.spec.m_values) {
      const auto J = square_power(I, m);
      const auto scaled = betti_table(J, field, ctx.options.limits);
      const auto p = param(m, field);
      switch (id) {
        case TheoremId::betti_scaling: {
          const auto predicted = predicted_square_betti(base, m);
          if (scaled != predicted) {
            return fail(I, p + " betti(I^[m])=" + betti_entries(scaled) + " predicted=" + betti_entries(predicted));
          }
          for (const auto& [key, count] : scaled.entries()) {
            if (key.second % static_cast<std::int64_t>(m) != 0) {
              return fail(I, p + " nonzero beta at j=" + std::to_string(key.second) + " not divisible by m");
            }
          }
          break;
        }
        case TheoremId::reg_formula: {
          const auto r = base.regularity();
          const auto i = extremal_corner_at_reg(base);
          const auto expected = predicted_regularity(r, i, m);
          if (note.empty() && !has_extremal_corner_at_reg(base)) {
            note = "no entry of the regularity row is extremal; i=" + std::to_string(i) +
                   " is the rightmost entry of the row";
          }
          if (scaled.regularity() != expected) {
            return fail(I, p + " reg(R/I)=" + std::to_string(r) + " i=" + std::to_string(i) +
                               " reg(R/I^[m])=" + std::to_string(scaled.regularity()) +
                               " predicted=" + std::to_string(expected));
          }
          break;
        }
        case TheoremId::pd_equal:
          if (base.projective_dimension() != scaled.projective_dimension()) {
            return fail(I, p + " pd(R/I)=" + std::to_string(base.projective_dimension()) +
                               " pd(R/I^[m])=" + std::to_string(scaled.projective_dimension()));
          }
          break;
        case TheoremId::depth_equal: {
          const auto scaled_inv = quotient_invariants(J, scaled);
          if (base_inv.depth != scaled_inv.depth || base_inv.dim != scaled_inv.dim) {
            return fail(I, p + " depth/dim (R/I)=" + std::to_string(base_inv.depth) + "/" +
                               std::to_string(base_inv.dim) + " (R/I^[m])=" + std::to_string(scaled_inv.depth) +
                               "/" + std::to_string(scaled_inv.dim));
          }
          break;
        }
        case TheoremId::cm_transfer:
        case TheoremId::gorenstein_transfer: {
          const auto scaled_inv = quotient_invariants(J, scaled);
          const bool cm = id == TheoremId::cm_transfer;
          const bool a = cm ? base_inv.cohen_macaulay : base_inv.gorenstein;
          const bool b = cm ? scaled_inv.cohen_macaulay : scaled_inv.gorenstein;
          if (a != b) {
            return fail(I, p + (cm ? " CM" : " Gorenstein") + " flag R/I=" + std::to_string(a) +
                               " R/I^[m]=" + std::to_string(b));
          }
          break;
        }
        case TheoremId::extremal_transfer: {
          auto mapped = extremal_betti_set(base);
          for (auto& c : mapped) c.j *= static_cast<std::int64_t>(m);
          const auto actual = extremal_betti_set(scaled);
          if (mapped != actual) {
            return fail(I, p + " extremal corners of R/I^[m] differ from the scaled corners of R/I");
          }
          break;
        }
        default:
          throw std::logic_error("not a Betti-family theorem");
      }
    }
  }
  return {CaseStatus::pass, note};
}

CheckOutcome check_power_commute(const MonomialIdeal& I, const CheckContext& ctx) {
  for (auto m : ctx.spec.m_values) {
    for (int s = 1; s <= ctx.spec.max_s; ++s) {
      const auto lhs = ordinary_power(square_power(I, m), s);
      const auto rhs = square_power(ordinary_power(I, s), m);
      if (lhs != rhs) return fail(I, "m=" + std::to_string(m) + " s=" + std::to_string(s) + " powers differ");
    }
  }
  return pass();
}

CheckOutcome check_intersect_commute(const MonomialIdeal& I, const CheckContext& ctx) {
  const auto J = partner_ideal(ctx.spec, ctx.index, I.num_vars());
  for (auto m : ctx.spec.m_values) {
    if (square_power(intersect(I, J), m) != intersect(square_power(I, m), square_power(J, m))) {
      return fail(I, "m=" + std::to_string(m) + " partner J:\n" + format_ideal_text(J));
    }
  }
  return pass();
}

CheckOutcome check_membership(const MonomialIdeal& I, const CheckContext& ctx) {
  const auto n = I.num_vars();
  auto box = I.generator_lcm();
  for (std::size_t i = 0; i < n; ++i) ++box[i];
  for (auto m : ctx.spec.m_values) {
    const auto J = square_power(I, m);
    ExponentVector u(n);
    while (true) {
      if (I.contains(u) != J.contains(scaled(u, m))) {
        std::ostringstream out;
        out << "m=" << m << " u=" << u;
        return fail(I, out.str());
      }
      std::size_t c = 0;
      while (c < n && u[c] == box[c]) u[c++] = 0;
      if (c == n) break;
      ++u[c];
    }
  }
  return pass();
}

CheckOutcome check_decomposition(const MonomialIdeal& I, const CheckContext& ctx, TheoremId id) {
  for (auto m : ctx.spec.m_values) {
    const auto J = square_power(I, m);
    const auto tag = "m=" + std::to_string(m);
    if (id == TheoremId::primary_transfer) {
      auto expected = primary_decomposition(I);
      for (auto& q : expected) q.ideal = square_power(q.ideal, m);
      if (primary_decomposition(J) != expected) return fail(I, tag + " primary components differ");
    } else if (id == TheoremId::ass_equal) {
      const auto a = associated_primes(I), b = associated_primes(J);
      if (a != b) return fail(I, tag + " Ass(I)=" + primes_string(a) + " Ass(I^[m])=" + primes_string(b));
    } else {
      const auto a = minimal_primes(I), b = minimal_primes(J);
      if (a != b) return fail(I, tag + " Min(I)=" + primes_string(a) + " Min(I^[m])=" + primes_string(b));
    }
  }
  return pass();
}

CheckOutcome check_ntf(const MonomialIdeal& I, const CheckContext& ctx) {
  const auto report = ntf_probe(I, ctx.spec.max_s, ctx.spec.m_values);
  if (report.base.first_violation) {
    return {CaseStatus::not_applicable,
            "I is not normally torsion-free on window (s=" + std::to_string(*report.base.first_violation) + ")"};
  }
  if (report.verdict != Verdict::holds_on_window) {
    return fail(I, "m=" + std::to_string(report.violated_m) + " I^[m] violates at s=" +
                       std::to_string(report.violated_at.value_or(0)));
  }
  return pass();
}

CheckOutcome check_stability(const MonomialIdeal& I, const CheckContext& ctx) {
  for (auto m : ctx.spec.m_values) {
    const auto report = stability_probe(I, ctx.spec.max_s, m);
    if (report.verdict != Verdict::holds_on_window) {
      return fail(I, "m=" + std::to_string(m) + " candidate s0(I)=" +
                         std::to_string(report.base.stability_candidate) +
                         " s0(I^[m])=" + std::to_string(report.scaled.stability_candidate));
    }
  }
  return pass();
}

CheckOutcome check_closure(const MonomialIdeal& I, const CheckContext& ctx) {
  if (I.num_vars() > 3) return {CaseStatus::not_applicable, "closure sweep limited to n <= 3"};
  for (auto m : ctx.spec.m_values) {
    const auto a = integral_closure_gens(square_power(I, m), ctx.options.limits);
    const auto b = integral_closure_gens(ordinary_power(I, m), ctx.options.limits);
    if (a != b) {
      return fail(I, "m=" + std::to_string(m) + " closure(I^[m]):\n" + format_ideal_text(a) + "closure(I^m):\n" +
                         format_ideal_text(b));
    }
  }
  return pass();
}

CheckOutcome check_symbolic_commute(const MonomialIdeal& I, const CheckContext& ctx) {
  for (auto m : ctx.spec.m_values) {
    for (int s = 1; s <= ctx.spec.max_s; ++s) {
      if (symbolic_power(square_power(I, m), s) != square_power(symbolic_power(I, s), m)) {
        return fail(I, "m=" + std::to_string(m) + " s=" + std::to_string(s) + " symbolic powers differ");
      }
    }
  }
  return pass();
}

CheckOutcome check_symbolic_depth(const MonomialIdeal& I, const CheckContext& ctx, bool depth) {
  for (auto m : ctx.spec.m_values) {
    if (!depth) {
      for (int s = 1; s <= ctx.spec.max_s; ++s) {
        const auto a = symbolic_power(I, s).num_generators();
        const auto b = symbolic_power(square_power(I, m), s).num_generators();
        if (a != b) {
          return fail(I, "m=" + std::to_string(m) + " s=" + std::to_string(s) + " mu=" + std::to_string(a) +
                             " vs " + std::to_string(b));
        }
      }
      continue;
    }
    for (const auto& field : ctx.options.fields) {
      const auto report = symbolic_depth_probe(I, ctx.spec.max_s, m, field, ctx.options.limits);
      if (report.verdict != Verdict::holds_on_window) {
        const auto& r = report.records.at(static_cast<std::size_t>(*report.violated_at - 1));
        return fail(I, param(m, field) + " s=" + std::to_string(r.s) + " depth=" + std::to_string(r.depth) +
                           " vs " + std::to_string(r.depth_scaled));
      }
    }
  }
  return pass();
}

CheckOutcome check_extremal_power(const MonomialIdeal& I, const CheckContext& ctx) {
  for (const auto& field : ctx.options.fields) {
    MonomialIdeal power = I;
    for (int s = 1; s <= ctx.spec.max_s; ++s) {
      if (s > 1) power = product(power, I);
      const auto table = betti_table(power, field, ctx.options.limits);
      const auto r = table.regularity();
      const auto i = extremal_corner_at_reg(table);
      for (auto m : ctx.spec.m_values) {
        const auto scaled_power = ordinary_power(square_power(I, m), s);
        const auto reg = betti_table(scaled_power, field, ctx.options.limits).regularity();
        if (reg != predicted_regularity(r, i, m)) {
          return fail(I, param(m, field) + " s=" + std::to_string(s) + " reg=" + std::to_string(reg) +
                             " predicted=" + std::to_string(predicted_regularity(r, i, m)));
        }
      }
    }
  }
  return pass();
}

}  // namespace

const std::vector<TheoremId>& all_theorems() {
  static const std::vector<TheoremId> ids = [] {
    std::vector<TheoremId> v;
    for (const auto& e : kCatalog) v.push_back(e.id);
    return v;
  }();
  return ids;
}

std::string_view theorem_name(TheoremId id) { return entry(id).name; }
std::string_view theorem_statement(TheoremId id) { return entry(id).statement; }

std::optional<TheoremId> parse_theorem_id(std::string_view name) {
  for (const auto& e : kCatalog) {
    if (e.name == name) return e.id;
  }
  return std::nullopt;
}

std::string_view case_status_name(CaseStatus s) {
  switch (s) {
    case CaseStatus::pass: return "pass";
    case CaseStatus::fail: return "fail";
    case CaseStatus::resource_skipped: return "resource-skipped";
    case CaseStatus::not_applicable: return "not-applicable";
  }
  return "?";
}

std::size_t VerificationReport::count(CaseStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [s](const CaseResult& c) { return c.outcome.status == s; }));
}

CaseCheck theorem_check(TheoremId id) {
  switch (id) {
    case TheoremId::betti_scaling:
    case TheoremId::reg_formula:
    case TheoremId::pd_equal:
    case TheoremId::depth_equal:
    case TheoremId::cm_transfer:
    case TheoremId::gorenstein_transfer:
    case TheoremId::extremal_transfer:
      return [id](const MonomialIdeal& I, const CheckContext& ctx) { return check_betti_family(I, ctx, id); };
    case TheoremId::power_commute: return check_power_commute;
    case TheoremId::intersect_commute: return check_intersect_commute;
    case TheoremId::membership_transfer: return check_membership;
    case TheoremId::primary_transfer:
    case TheoremId::ass_equal:
    case TheoremId::min_equal:
      return [id](const MonomialIdeal& I, const CheckContext& ctx) { return check_decomposition(I, ctx, id); };
    case TheoremId::ntf_transfer: return check_ntf;
    case TheoremId::stability_equal: return check_stability;
    case TheoremId::closure_equal: return check_closure;
    case TheoremId::symbolic_commute: return check_symbolic_commute;
    case TheoremId::symbolic_depth:
      return [](const MonomialIdeal& I, const CheckContext& ctx) { return check_symbolic_depth(I, ctx, true); };
    case TheoremId::mu_equal:
      return [](const MonomialIdeal& I, const CheckContext& ctx) { return check_symbolic_depth(I, ctx, false); };
    case TheoremId::extremal_power_stab: return check_extremal_power;
  }
  throw std::logic_error("unknown theorem id");
}

VerificationReport verify_with(std::string theorem, const CaseCheck& check, const std::vector<MonomialIdeal>& corpus,
                               const CorpusSpec& spec, const VerifyOptions& options) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();

  VerificationReport report;
  report.theorem = std::move(theorem);
  report.corpus = spec;
  report.cases.resize(corpus.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < corpus.size(); k = next++) {
      const auto case_start = clock::now();
      auto& result = report.cases[k];
      result.index = k;
      result.ideal = corpus[k];
      try {
        result.outcome = check(corpus[k], CheckContext{spec, options, k});
      } catch (const ResourceError& e) {
        result.outcome = {CaseStatus::resource_skipped, e.what()};
      }
      result.millis = std::chrono::duration<double, std::milli>(clock::now() - case_start).count();
    }
  };

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, corpus.size())));
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      try {
        worker();
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = corpus.size();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  report.millis = std::chrono::duration<double, std::milli>(clock::now() - start).count();
  return report;
}

VerificationReport verify(TheoremId id, const std::vector<MonomialIdeal>& corpus, const CorpusSpec& spec,
                          const VerifyOptions& options) {
  return verify_with(std::string(theorem_name(id)), theorem_check(id), corpus, spec, options);
}

VerificationReport verify(TheoremId id, const CorpusSpec& spec, const VerifyOptions& options) {
  return verify(id, generate_corpus(spec), spec, options);
}

nlohmann::json report_to_json(const VerificationReport& report, bool include_timing) {
  const auto& c = report.corpus;
  nlohmann::json j;
  j["theorem"] = report.theorem;
  if (auto id = parse_theorem_id(report.theorem)) j["statement"] = theorem_statement(*id);
  j["corpus"] = {{"seed", c.seed},         {"count", c.count},       {"min_vars", c.min_vars},
                 {"max_vars", c.max_vars}, {"min_gens", c.min_gens}, {"max_gens", c.max_gens},
                 {"max_exponent", c.max_exponent}, {"m", c.m_values}, {"max_s", c.max_s}};
  j["summary"] = {{"pass", report.count(CaseStatus::pass)},
                  {"fail", report.count(CaseStatus::fail)},
                  {"resource_skipped", report.count(CaseStatus::resource_skipped)},
                  {"not_applicable", report.count(CaseStatus::not_applicable)}};
  j["verdict"] = report.passed() ? "pass" : "fail";
  if (include_timing) j["millis"] = report.millis;
  auto cases = nlohmann::json::array();
  for (const auto& r : report.cases) {
    nlohmann::json cj = {{"index", r.index},
                         {"ideal", ideal_to_json(r.ideal)},
                         {"status", case_status_name(r.outcome.status)}};
    if (!r.outcome.witness.empty()) cj["witness"] = r.outcome.witness;
    if (include_timing) cj["millis"] = r.millis;
    cases.push_back(std::move(cj));
  }
  j["cases"] = std::move(cases);
  return j;
}

std::string render_report_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "theorem: " << report.theorem << '\n';
  if (auto id = parse_theorem_id(report.theorem)) out << "statement: " << theorem_statement(*id) << '\n';
  out << "corpus: seed " << report.corpus.seed << ", " << report.cases.size() << " ideals, m in {";
  for (std::size_t k = 0; k < report.corpus.m_values.size(); ++k) out << (k ? "," : "") << report.corpus.m_values[k];
  out << "}, s <= " << report.corpus.max_s << '\n';
  out << "pass " << report.count(CaseStatus::pass) << ", fail " << report.count(CaseStatus::fail)
      << ", resource-skipped " << report.count(CaseStatus::resource_skipped) << ", not-applicable "
      << report.count(CaseStatus::not_applicable) << '\n';
  for (const auto& r : report.cases) {
    if (r.outcome.status == CaseStatus::pass && !r.outcome.witness.empty()) {
      out << "case " << r.index << " note: " << r.outcome.witness << '\n';
      continue;
    }
    if (r.outcome.status != CaseStatus::fail && r.outcome.status != CaseStatus::resource_skipped) continue;
    out << "case " << r.index << ' ' << case_status_name(r.outcome.status) << ":\n" << r.outcome.witness;
    if (!r.outcome.witness.empty() && r.outcome.witness.back() != '\n') out << '\n';
  }
  out << "verdict: " << (report.passed() ? "pass" : "fail") << '\n';
  return out.str();
}

std::string persist_report(const VerificationReport& report, const std::string& dir) {
  std::filesystem::create_directories(dir);
  const auto path = std::filesystem::path(dir) /
                    ("verify-" + report.theorem + "-seed" + std::to_string(report.corpus.seed) + ".json");
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << report_to_json(report, true).dump(2) << '\n';
  return path.string();
}

}  // namespace sqp

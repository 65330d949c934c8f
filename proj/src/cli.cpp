#include "sqp/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"

#include "sqp/closure.hpp"
#include "sqp/corpus.hpp"
#include "sqp/decomposition.hpp"
#include "sqp/errors.hpp"
#include "sqp/io.hpp"
#include "sqp/probes.hpp"
#include "sqp/render.hpp"
#include "sqp/resolution.hpp"
#include "sqp/verify.hpp"

namespace sqp {

namespace {

struct Common {
  std::string input;
  bool json = false;
  std::optional<std::size_t> max_gens;
  std::optional<std::size_t> max_vars;
};

std::string read_source(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path);
  if (!file) throw InputError("cannot read " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void add_common(CLI::App* cmd, Common& c, bool positional_input = true) {
  if (positional_input) cmd->add_option("input", c.input, "ideal file (default: stdin)");
  cmd->add_flag("--json", c.json, "emit JSON");
  cmd->add_option("--max-gens", c.max_gens, "cap on generators for Betti work (env SQP_MAX_GENS)");
  cmd->add_option("--max-vars", c.max_vars, "cap on variables for Betti work (env SQP_MAX_VARS)");
}

Limits user_limits(const Common& c) {
  auto limits = Limits::from_environment();
  if (c.max_gens) limits.max_generators = *c.max_gens;
  if (c.max_vars) limits.max_variables = *c.max_vars;
  return limits;
}

// Probes and verification work on powers of the input, so the generator cap
// applies to the input only; the internal computations use the lattice cap.
Limits internal_limits(const Common& c, const MonomialIdeal& I) {
  const auto user = user_limits(c);
  if (I.num_generators() > user.max_generators) {
    throw ResourceError("mu(I) = " + std::to_string(I.num_generators()) + " exceeds cap " +
                        std::to_string(user.max_generators) + " (SQP_MAX_GENS)");
  }
  if (I.num_vars() > user.max_variables) {
    throw ResourceError("n = " + std::to_string(I.num_vars()) + " exceeds cap " +
                        std::to_string(user.max_variables) + " (SQP_MAX_VARS)");
  }
  auto limits = Limits::for_verification();
  limits.max_variables = user.max_variables;
  return limits;
}

std::string join_monomials(const MonomialIdeal& I, const std::vector<std::string>& vars) {
  std::string out;
  for (const auto& g : I.generators()) {
    if (!out.empty()) out += ", ";
    out += format_monomial(g, vars);
  }
  return out;
}

void print_ideal(std::ostream& out, const Common& c, const MonomialIdeal& I, const std::vector<std::string>& vars) {
  if (c.json) {
    out << ideal_to_json(I).dump() << '\n';
  } else {
    out << format_ideal_text(I, vars);
  }
}

void print_number(std::ostream& out, const Common& c, const char* key, std::int64_t value) {
  if (c.json) {
    out << nlohmann::json{{key, value}}.dump() << '\n';
  } else {
    out << value << '\n';
  }
}

void print_primes(std::ostream& out, const Common& c, const std::vector<MonomialPrime>& ps,
                  const std::vector<std::string>& vars) {
  if (c.json) {
    out << primes_to_json(ps).dump() << '\n';
    return;
  }
  for (const auto& p : ps) out << format_prime(p, vars) << '\n';
}

// Help of the innermost subcommand that was reached before the error.
std::string usage_of(const CLI::App& app) {
  const CLI::App* target = &app;
  for (auto subs = app.get_subcommands(); !subs.empty(); subs = target->get_subcommands()) target = subs.front();
  return target->help();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monomial ideals and their square powers I^[m]", "sqp"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "print help for every subcommand");

  Common c;
  std::uint64_t m = 1;
  std::uint64_t probe_m = 2;
  std::uint64_t s = 1;
  std::string second;
  bool primary = false;
  std::uint32_t characteristic = 0;
  int max_s = 3;
  std::vector<std::uint64_t> m_list;
  bool closure_flags = false;

  auto* show = app.add_subcommand("show", "print the minimal generators");
  add_common(show, c);

  auto* sqpow = app.add_subcommand("square-power", "the square power I^[m]");
  add_common(sqpow, c);
  sqpow->add_option("-m", m, "exponent scale")->required()->check(CLI::PositiveNumber);

  auto* power = app.add_subcommand("power", "the ordinary power I^s");
  add_common(power, c);
  power->add_option("-s", s, "power")->required();

  auto* inter = app.add_subcommand("intersect", "intersection of two ideals in the same ring");
  add_common(inter, c, false);
  inter->add_option("first", c.input, "first ideal file ('-' for stdin)")->required();
  inter->add_option("second", second, "second ideal file")->required();

  auto* decompose = app.add_subcommand("decompose", "irreducible (or --primary) decomposition");
  add_common(decompose, c);
  decompose->add_flag("--primary", primary, "group components by radical");

  auto* ass = app.add_subcommand("ass", "associated primes");
  add_common(ass, c);
  auto* min = app.add_subcommand("min", "minimal primes");
  add_common(min, c);
  auto* dim = app.add_subcommand("dim", "Krull dimension of R/I");
  add_common(dim, c);

  auto* betti = app.add_subcommand("betti", "graded Betti diagram of R/I");
  add_common(betti, c);
  auto* reg = app.add_subcommand("reg", "Castelnuovo-Mumford regularity of R/I");
  add_common(reg, c);
  auto* pd = app.add_subcommand("pd", "projective dimension of R/I");
  add_common(pd, c);
  auto* depth = app.add_subcommand("depth", "depth of R/I");
  add_common(depth, c);
  auto* extremal = app.add_subcommand("extremal", "extremal Betti numbers of R/I");
  add_common(extremal, c);
  for (auto* cmd : {betti, reg, pd, depth, extremal}) {
    cmd->add_option("--char", characteristic, "field characteristic (0 or a prime)");
  }

  auto* symbolic = app.add_subcommand("symbolic", "the symbolic power I^(s)");
  add_common(symbolic, c);
  symbolic->add_option("-s", s, "power")->required()->check(CLI::PositiveNumber);

  auto* closure = app.add_subcommand("closure", "integral closure");
  add_common(closure, c);

  auto* probe = app.add_subcommand("probe", "finite-window probes of asymptotic statements");
  probe->require_subcommand(1);
  auto* ntf = probe->add_subcommand("ntf", "Ass(I^s) subset of Ass(I) for I and I^[m]");
  auto* stability = probe->add_subcommand("stability", "Ass-stability candidates of I and I^[m]");
  auto* symdepth = probe->add_subcommand("symbolic-depth", "depth and mu of I^(s) against (I^[m])^(s)");
  auto* extpow = probe->add_subcommand("extremal-power", "extremal corner at reg of R/I^s");
  for (auto* cmd : {ntf, stability, symdepth, extpow}) {
    add_common(cmd, c);
    cmd->add_option("--max-s", max_s, "window end")->required()->check(CLI::PositiveNumber);
  }
  ntf->add_option("-m", m_list, "scales (default 2 3)")->check(CLI::PositiveNumber);
  stability->add_option("-m", probe_m, "scale (default 2)")->check(CLI::PositiveNumber);
  symdepth->add_option("-m", probe_m, "scale (default 2)")->check(CLI::PositiveNumber);
  symdepth->add_flag("--closure", closure_flags, "also report integral closedness");
  extpow->add_option("--char", characteristic, "field characteristic (0 or a prime)");

  std::string theorem;
  CorpusSpec spec;
  std::string ideal_file;
  std::string results_dir;
  unsigned threads = 0;
  std::vector<std::uint32_t> chars;
  auto* verify_cmd = app.add_subcommand("verify", "check a theorem on a random corpus");
  verify_cmd->add_option("theorem", theorem, "theorem id, or 'all'")->required();
  verify_cmd->add_flag("--json", c.json, "emit JSON");
  verify_cmd->add_option("--max-vars", c.max_vars, "cap on variables (env SQP_MAX_VARS)");
  verify_cmd->add_option("--seed", spec.seed, "corpus seed");
  verify_cmd->add_option("--count", spec.count, "corpus size");
  verify_cmd->add_option("--n-min", spec.min_vars, "least number of variables");
  verify_cmd->add_option("--n-max", spec.max_vars, "largest number of variables");
  verify_cmd->add_option("--gens-min", spec.min_gens, "least generator count");
  verify_cmd->add_option("--gens-max", spec.max_gens, "largest generator count");
  verify_cmd->add_option("--max-exp", spec.max_exponent, "largest exponent");
  verify_cmd->add_option("-m", spec.m_values, "scales (default 2 3)");
  verify_cmd->add_option("--max-s", spec.max_s, "power window (default 3)");
  verify_cmd->add_option("--char", chars, "characteristics for Betti checks (default 0 2)");
  verify_cmd->add_option("--ideal-file", ideal_file, "verify a single ideal instead of a corpus");
  verify_cmd->add_option("--results-dir", results_dir, "persist one JSON report per run here");
  verify_cmd->add_option("--threads", threads, "worker threads (default: all cores)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << usage_of(app);
    return exit_input_error;
  }

  try {
    if (verify_cmd->parsed()) {
      std::vector<TheoremId> ids;
      if (theorem == "all") {
        ids = all_theorems();
      } else if (auto id = parse_theorem_id(theorem)) {
        ids.push_back(*id);
      } else {
        throw InputError("unknown theorem id '" + theorem + "'");
      }
      VerifyOptions options;
      options.limits.max_variables = user_limits(c).max_variables;
      options.threads = threads;
      if (!chars.empty()) {
        options.fields.clear();
        for (auto p : chars) options.fields.emplace_back(p);
      }
      std::vector<MonomialIdeal> corpus;
      if (!ideal_file.empty()) {
        corpus.push_back(parse_ideal(read_source(ideal_file, in)).ideal);
        if (!corpus.front().is_proper_nonzero()) throw InputError("verify needs a proper nonzero ideal");
        spec.count = 1;
        spec.validate();
      } else {
        corpus = generate_corpus(spec);
      }
      bool all_passed = true;
      auto reports = nlohmann::json::array();
      for (auto id : ids) {
        const auto report = verify(id, corpus, spec, options);
        all_passed = all_passed && report.passed();
        if (!results_dir.empty()) persist_report(report, results_dir);
        if (c.json) {
          reports.push_back(report_to_json(report, false));
        } else {
          out << render_report_text(report);
        }
      }
      if (c.json) out << (ids.size() == 1 ? reports.front() : reports).dump(2) << '\n';
      return all_passed ? exit_ok : exit_violated;
    }

    if (inter->parsed()) {
      const auto a = parse_ideal(read_source(c.input, in));
      const auto b = parse_ideal(read_source(second, in));
      if (a.ideal.num_vars() != b.ideal.num_vars()) throw InputError("intersect: ideals live in different rings");
      print_ideal(out, c, intersect(a.ideal, b.ideal), a.vars);
      return exit_ok;
    }

    const auto named = parse_ideal(read_source(c.input, in));
    const auto& I = named.ideal;
    const auto& vars = named.vars;

    if (show->parsed()) {
      print_ideal(out, c, I, vars);
    } else if (sqpow->parsed()) {
      print_ideal(out, c, square_power(I, m), vars);
    } else if (power->parsed()) {
      print_ideal(out, c, ordinary_power(I, s), vars);
    } else if (decompose->parsed()) {
      if (primary) {
        const auto comps = primary_decomposition(I);
        if (c.json) {
          out << primary_to_json(comps).dump() << '\n';
        } else {
          for (const auto& q : comps) out << format_prime(q.radical, vars) << ": " << join_monomials(q.ideal, vars) << '\n';
        }
      } else {
        const auto comps = irreducible_decomposition(I);
        if (c.json) {
          out << components_to_json(comps).dump() << '\n';
        } else {
          for (const auto& q : comps) out << format_component(q, vars) << '\n';
        }
      }
    } else if (ass->parsed()) {
      print_primes(out, c, associated_primes(I), vars);
    } else if (min->parsed()) {
      print_primes(out, c, minimal_primes(I), vars);
    } else if (dim->parsed()) {
      print_number(out, c, "dim", static_cast<std::int64_t>(krull_dimension(I)));
    } else if (betti->parsed() || reg->parsed() || pd->parsed() || depth->parsed() || extremal->parsed()) {
      const auto table = betti_table(I, FieldSpec(characteristic), user_limits(c));
      if (betti->parsed()) {
        out << (c.json ? betti_to_json(table).dump() + "\n" : render_betti_diagram(table));
      } else if (reg->parsed()) {
        print_number(out, c, "reg", table.regularity());
      } else if (pd->parsed()) {
        print_number(out, c, "pd", table.projective_dimension());
      } else if (depth->parsed()) {
        print_number(out, c, "depth", table.depth());
      } else {
        const auto corners = extremal_betti_set(table);
        if (c.json) {
          out << corners_to_json(corners).dump() << '\n';
        } else {
          std::vector<std::vector<std::string>> rows{{"i", "j", "beta"}};
          for (const auto& k : corners) {
            rows.push_back({std::to_string(k.i), std::to_string(k.j), std::to_string(k.value)});
          }
          out << aligned_table(rows);
        }
      }
    } else if (symbolic->parsed()) {
      print_ideal(out, c, symbolic_power(I, s), vars);
    } else if (closure->parsed()) {
      print_ideal(out, c, integral_closure_gens(I, user_limits(c)), vars);
    } else if (ntf->parsed()) {
      internal_limits(c, I);
      const auto report = ntf_probe(I, max_s, m_list.empty() ? std::vector<std::uint64_t>{2, 3} : m_list);
      out << (c.json ? probe_to_json(report).dump() + "\n" : probe_to_text(report, vars));
      return report.verdict == Verdict::holds_on_window ? exit_ok : exit_violated;
    } else if (stability->parsed()) {
      internal_limits(c, I);
      const auto report = stability_probe(I, max_s, probe_m);
      out << (c.json ? probe_to_json(report).dump() + "\n" : probe_to_text(report, vars));
      return report.verdict == Verdict::holds_on_window ? exit_ok : exit_violated;
    } else if (symdepth->parsed()) {
      const auto limits = internal_limits(c, I);
      const auto report = symbolic_depth_probe(I, max_s, probe_m, FieldSpec(0), limits, closure_flags);
      out << (c.json ? probe_to_json(report).dump() + "\n" : probe_to_text(report));
      return report.verdict == Verdict::holds_on_window ? exit_ok : exit_violated;
    } else if (extpow->parsed()) {
      const auto limits = internal_limits(c, I);
      const auto report = extremal_power_probe(I, max_s, FieldSpec(characteristic), limits);
      out << (c.json ? probe_to_json(report).dump() + "\n" : probe_to_text(report));
      return report.verdict == Verdict::holds_on_window ? exit_ok : exit_violated;
    }
    return exit_ok;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return exit_input_error;
  } catch (const ResourceError& e) {
    err << "resource cap: " << e.what() << '\n';
    return exit_resource_cap;
  }
}

}  // namespace sqp

#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sqp/cli.hpp"
#include "sqp/corpus.hpp"
#include "sqp/errors.hpp"
#include "sqp/io.hpp"
#include "sqp/resolution.hpp"
#include "sqp/verify.hpp"

using namespace sqp;

namespace {

const char* kPairsText = "vars: x1 x2 x3 x4\ngens: x1*x2, x1*x3, x1*x4, x2*x3, x2*x4, x3*x4\n";
const char* kTriangleText = "vars: x y z\ngens: x*y, y*z, x*z\n";

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

CorpusSpec small_spec(std::uint64_t seed, std::size_t count) {
  CorpusSpec spec;
  spec.seed = seed;
  spec.count = count;
  return spec;
}

}  // namespace

TEST_CASE("corpus generation is deterministic") {
  const auto spec = small_spec(7, 100);
  const auto a = generate_corpus(spec);
  const auto b = generate_corpus(spec);
  CHECK(a == b);
  CHECK(a.size() == 100);
  CHECK(generate_corpus(small_spec(8, 100)) != a);
  CHECK(generate_corpus(small_spec(7, 0)).empty());
  for (const auto& I : a) {
    CHECK(I.is_proper_nonzero());
    CHECK(I.num_vars() >= 2);
    CHECK(I.num_vars() <= 4);
    CHECK(I.num_generators() <= 5);
    CHECK(minimalize({I.generators().begin(), I.generators().end()}, I.num_vars()) == I);
    for (const auto& g : I.generators()) {
      for (auto e : g) CHECK(e <= 3);
    }
  }
  CHECK(partner_ideal(spec, 3, 4) == partner_ideal(spec, 3, 4));
}

TEST_CASE("impossible corpus specs are input errors") {
  auto spec = small_spec(1, 5);
  spec.max_exponent = 0;
  CHECK_THROWS_AS(generate_corpus(spec), InputError);
  spec = small_spec(1, 5);
  spec.min_vars = 5;
  CHECK_THROWS_AS(generate_corpus(spec), InputError);
  spec = small_spec(1, 5);
  spec.m_values = {0};
  CHECK_THROWS_AS(generate_corpus(spec), InputError);
}

TEST_CASE("theorem catalog") {
  CHECK(all_theorems().size() == 20);
  for (auto id : all_theorems()) {
    CHECK(parse_theorem_id(theorem_name(id)) == id);
    CHECK_FALSE(theorem_statement(id).empty());
  }
  CHECK_FALSE(parse_theorem_id("no-such-theorem"));
}

TEST_CASE("verify passes on small corpora") {
  const auto spec = small_spec(5, 20);
  for (auto id : {TheoremId::pd_equal, TheoremId::ass_equal, TheoremId::betti_scaling}) {
    const auto report = verify(id, spec);
    CHECK(report.passed());
    CHECK(report.cases.size() == 20);
    for (std::size_t k = 0; k < report.cases.size(); ++k) CHECK(report.cases[k].index == k);
  }
}

TEST_CASE("harness self-test: a corrupted scaling law fails with a witness") {
  const auto spec = small_spec(5, 10);
  const CaseCheck corrupted = [](const MonomialIdeal& I, const CheckContext& ctx) {
    const auto base = betti_table(I, FieldSpec(0), ctx.options.limits);
    for (auto m : ctx.spec.m_values) {
      BettiTable wrong(I.num_vars(), FieldSpec(0));
      for (const auto& [key, count] : base.entries()) {
        wrong.add(key.first, key.second * static_cast<std::int64_t>(m) + 1, count);
      }
      if (betti_table(square_power(I, m), FieldSpec(0), ctx.options.limits) != wrong) {
        return CheckOutcome{CaseStatus::fail, format_ideal_text(I) + "m=" + std::to_string(m) + " mismatch"};
      }
    }
    return CheckOutcome{};
  };
  const auto report = verify_with("corrupted", corrupted, generate_corpus(spec), spec);
  CHECK_FALSE(report.passed());
  CHECK(report.count(CaseStatus::fail) == 10);
  const auto& witness = report.cases.front().outcome.witness;
  CHECK(witness.rfind("vars: ", 0) == 0);
  CHECK(parse_ideal(witness.substr(0, witness.find("m="))).ideal == report.cases.front().ideal);
  CHECK(render_report_text(report).find("verdict: fail") != std::string::npos);
}

TEST_CASE("resource caps are recorded per case") {
  const auto spec = small_spec(5, 6);
  VerifyOptions options;
  options.limits.max_generators = 1;
  const auto corpus = generate_corpus(spec);
  const auto report = verify(TheoremId::pd_equal, corpus, spec, options);
  CHECK(report.passed());
  const auto principal = std::count_if(corpus.begin(), corpus.end(), [](const auto& I) { return I.is_principal(); });
  CHECK(report.count(CaseStatus::resource_skipped) == corpus.size() - static_cast<std::size_t>(principal));
  CHECK(report.count(CaseStatus::resource_skipped) > 0);
}

TEST_CASE("reports persist one file per run") {
  const auto dir = std::filesystem::temp_directory_path() / "sqp-test-results";
  std::filesystem::remove_all(dir);
  const auto spec = small_spec(9, 5);
  const auto path = persist_report(verify(TheoremId::mu_equal, spec), dir.string());
  CHECK(std::filesystem::path(path).filename() == "verify-mu-equal-seed9.json");
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["theorem"] == "mu-equal");
  CHECK(j["corpus"]["seed"] == 9);
  CHECK(j["cases"].size() == 5);
  CHECK(j.contains("millis"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("report JSON without timing is byte-stable") {
  const auto spec = small_spec(3, 8);
  const auto a = report_to_json(verify(TheoremId::min_equal, spec), false).dump();
  const auto b = report_to_json(verify(TheoremId::min_equal, spec), false).dump();
  CHECK(a == b);
}

TEST_CASE("cli: betti reproduces both diagrams") {
  auto r = run({"betti"}, kPairsText);
  CHECK(r.code == 0);
  CHECK(r.out ==
        "       0 1 2 3\n"
        "total: 1 6 8 3\n"
        "    0: 1 . . .\n"
        "    1: . 6 8 3\n");
  const auto squared = run({"square-power", "-m", "2"}, kPairsText);
  CHECK(squared.code == 0);
  r = run({"betti"}, squared.out);
  CHECK(r.out ==
        "       0 1 2 3\n"
        "total: 1 6 8 3\n"
        "    0: 1 . . .\n"
        "    1: . . . .\n"
        "    2: . . . .\n"
        "    3: . 6 . .\n"
        "    4: . . 8 .\n"
        "    5: . . . 3\n");
  r = run({"betti", "--json"}, kPairsText);
  CHECK(r.out == "{\"char\":0,\"entries\":[[0,0,1],[1,2,6],[2,3,8],[3,4,3]]}\n");
}

TEST_CASE("cli: square-power -m 1 echoes the input") {
  const auto r = run({"square-power", "-m", "1"}, kPairsText);
  CHECK(r.code == 0);
  CHECK(r.out == kPairsText);
}

TEST_CASE("cli: ideal subcommands") {
  CHECK(run({"show"}, "vars: x y\ngens: y^2, x^2, x*y, x^3\n").out == "vars: x y\ngens: x^2, x*y, y^2\n");
  CHECK(run({"power", "-s", "2"}, "vars: x y\ngens: x, y\n").out == "vars: x y\ngens: x^2, x*y, y^2\n");
  CHECK(run({"decompose"}, "vars: x y\ngens: x^2, x*y\n").out == "(x)\n(x^2, y)\n");
  CHECK(run({"decompose", "--json"}, "vars: x y\ngens: x^2, x*y\n").out ==
        "[{\"exponents\":[1],\"support\":[0]},{\"exponents\":[2,1],\"support\":[0,1]}]\n");
  CHECK(run({"decompose", "--primary"}, "vars: x y\ngens: x^2, x*y\n").out == "(x): x\n(x, y): y, x^2\n");
  CHECK(run({"ass"}, "vars: x y\ngens: x^2, x*y\n").out == "(x)\n(x, y)\n");
  CHECK(run({"min"}, kTriangleText).out == "(x, y)\n(x, z)\n(y, z)\n");
  CHECK(run({"dim"}, kTriangleText).out == "1\n");
  CHECK(run({"dim", "--json"}, kTriangleText).out == "{\"dim\":1}\n");
  CHECK(run({"reg"}, kPairsText).out == "1\n");
  CHECK(run({"pd"}, kPairsText).out == "3\n");
  CHECK(run({"depth"}, kPairsText).out == "1\n");
  CHECK(run({"extremal"}, kPairsText).out == "i  j  beta\n3  4  3\n");
  CHECK(run({"extremal", "--json"}, kPairsText).out == "[[3,4,3]]\n");
  CHECK(run({"symbolic", "-s", "2"}, kTriangleText).out ==
        "vars: x y z\ngens: x*y*z, x^2*y^2, x^2*z^2, y^2*z^2\n");
  CHECK(run({"closure"}, "vars: x y\ngens: x^2, y^2\n").out == "vars: x y\ngens: x^2, x*y, y^2\n");
}

TEST_CASE("cli: intersect reads two files") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = (dir / "sqp-a.txt").string();
  const auto b = (dir / "sqp-b.txt").string();
  std::ofstream(a) << "vars: x y\ngens: x\n";
  std::ofstream(b) << "vars: x y\ngens: x^2, y\n";
  const auto r = run({"intersect", a, b});
  CHECK(r.code == 0);
  CHECK(r.out == "vars: x y\ngens: x^2, x*y\n");
  std::ofstream(b) << "vars: x y z\ngens: z\n";
  CHECK(run({"intersect", a, b}).code == 2);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST_CASE("cli: probes report windows and exit codes") {
  auto r = run({"probe", "ntf", "--max-s", "3"}, kTriangleText);
  CHECK(r.code == 1);
  CHECK(r.out.find("verdict: violated-at-2") != std::string::npos);
  CHECK(r.out.find("window: 3") != std::string::npos);
  r = run({"probe", "ntf", "--max-s", "3", "--json"}, "vars: x y z\ngens: x*y, y*z\n");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["probe"] == "ntf");
  CHECK(j["window"] == 3);
  CHECK(j["verdict"] == "holds-on-window");
  r = run({"probe", "stability", "--max-s", "4", "-m", "2"}, kTriangleText);
  CHECK(r.code == 0);
  CHECK(r.out.find("candidate s0: I=2 I^[2]=2") != std::string::npos);
  r = run({"probe", "symbolic-depth", "--max-s", "3"}, kTriangleText);
  CHECK(r.code == 0);
  r = run({"probe", "extremal-power", "--max-s", "4"}, kTriangleText);
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict: holds-on-window") != std::string::npos);
}

TEST_CASE("cli: verify") {
  auto r = run({"verify", "reg-formula", "--seed", "7", "--count", "100"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict: pass") != std::string::npos);
  r = run({"verify", "pd-equal", "--count", "10", "--json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["summary"]["pass"] == 10);

  const auto file = (std::filesystem::temp_directory_path() / "sqp-replay.txt").string();
  std::ofstream(file) << kTriangleText;
  r = run({"verify", "symbolic-commute", "--ideal-file", file});
  CHECK(r.code == 0);
  std::filesystem::remove(file);
  CHECK(run({"verify", "no-such-theorem"}).code == 2);
}

TEST_CASE("cli: errors and exit codes") {
  auto r = run({"frobnicate"});
  CHECK(r.code == 2);
  CHECK(r.err.find("Usage") != std::string::npos);
  r = run({"betti", "--bogus"}, kPairsText);
  CHECK(r.code == 2);
  CHECK(r.err.find("Usage") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"show"}, "vars: x\ngens: x^-2\n").code == 2);
  CHECK(run({"show", "/nonexistent/ideal.txt"}).code == 2);
  CHECK(run({"square-power", "-m", "0"}, kPairsText).code == 2);
  CHECK(run({"betti", "--char", "4"}, kPairsText).code == 2);
  CHECK(run({"betti", "--max-gens", "3"}, kPairsText).code == 3);
  CHECK(run({"decompose"}, "vars: x\ngens:\n").code == 2);
}

TEST_CASE("cli: environment caps") {
  setenv("SQP_MAX_GENS", "4", 1);
  const auto r = run({"betti"}, kPairsText);
  unsetenv("SQP_MAX_GENS");
  CHECK(r.code == 3);
  CHECK(r.err.find("SQP_MAX_GENS") != std::string::npos);
  CHECK(run({"betti"}, kPairsText).code == 0);
}

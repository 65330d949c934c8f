#include "doctest.h"

#include "sqp/corpus.hpp"
#include "sqp/errors.hpp"
#include "sqp/io.hpp"
#include "support/oracles.hpp"

using namespace sqp;
using oracle::ideal;

TEST_CASE("text format round trip") {
  const auto parsed = parse_ideal("vars: x y z\ngens: x^2*y, z, x^3\n");
  CHECK(parsed.vars == std::vector<std::string>{"x", "y", "z"});
  CHECK(parsed.ideal == ideal(3, {{2, 1, 0}, {0, 0, 1}, {3, 0, 0}}));
  const auto text = format_ideal_text(parsed.ideal, parsed.vars);
  CHECK(text == "vars: x y z\ngens: z, x^3, x^2*y\n");
  CHECK(parse_ideal(text).ideal == parsed.ideal);
}

TEST_CASE("comments, blank lines and degenerate ideals") {
  CHECK(parse_ideal("# pairs\n\nvars: a b\n  gens: a*b\n").ideal == ideal(2, {{1, 1}}));
  CHECK(parse_ideal("vars: a b\ngens:\n").ideal.is_zero());
  CHECK(parse_ideal("vars: a b\ngens: 1\n").ideal.is_unit());
  CHECK(format_ideal_text(MonomialIdeal::zero(2)) == "vars: x1 x2\ngens:\n");
  CHECK(format_ideal_text(MonomialIdeal::unit(2)) == "vars: x1 x2\ngens: 1\n");
}

TEST_CASE("text parser rejects malformed input") {
  CHECK_THROWS_AS(parse_ideal("vars: x y\ngens: x^-1\n"), InputError);
  CHECK_THROWS_AS(parse_ideal("vars: x y\ngens: x^1.5\n"), InputError);
  CHECK_THROWS_AS(parse_ideal("vars: x y\ngens: w\n"), InputError);
  CHECK_THROWS_AS(parse_ideal("vars: x x\ngens: x\n"), InputError);
  CHECK_THROWS_AS(parse_ideal("gens: x\n"), InputError);
  CHECK_THROWS_AS(parse_ideal("vars: x\ngens: x,,x\n"), InputError);
}

TEST_CASE("json format") {
  const auto parsed = parse_ideal(R"({"n":4,"gens":[[2,1,0,0],[0,0,1,1]]})");
  CHECK(parsed.ideal == ideal(4, {{2, 1, 0, 0}, {0, 0, 1, 1}}));
  CHECK(parsed.vars == default_var_names(4));
  CHECK(ideal_to_json(parsed.ideal).dump() == R"({"gens":[[0,0,1,1],[2,1,0,0]],"n":4})");
  CHECK(parse_ideal(ideal_to_json(parsed.ideal).dump()).ideal == parsed.ideal);
  CHECK_THROWS_AS(parse_ideal(R"({"n":2,"gens":[[1,-1]]})"), InputError);
  CHECK_THROWS_AS(parse_ideal(R"({"n":2,"gens":[[1.5,0]]})"), InputError);
  CHECK_THROWS_AS(parse_ideal(R"({"n":2,"gens":[[1,0,0]]})"), InputError);
  CHECK_THROWS_AS(parse_ideal(R"({"n":2,"gens":)"), InputError);
}

TEST_CASE("property: text and json round trips on a random sample") {
  CorpusSpec spec;
  spec.seed = 21;
  spec.count = 50;
  for (const auto& I : generate_corpus(spec)) {
    CHECK(parse_ideal(format_ideal_text(I)).ideal == I);
    CHECK(parse_ideal(ideal_to_json(I).dump()).ideal == I);
  }
}

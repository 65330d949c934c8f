#include "doctest.h"

#include <algorithm>
#include <random>

#include "sqp/corpus.hpp"
#include "sqp/errors.hpp"
#include "sqp/monomial_ideal.hpp"
#include "support/oracles.hpp"

using namespace sqp;
using oracle::ev;
using oracle::ideal;

namespace {

MonomialIdeal pairs_ideal() {
  return ideal(4, {{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}});
}

std::vector<MonomialIdeal> sample(std::uint64_t seed, std::size_t count) {
  CorpusSpec spec;
  spec.seed = seed;
  spec.count = count;
  return generate_corpus(spec);
}

}  // namespace

TEST_CASE("minimalize drops multiples and duplicates") {
  CHECK(minimalize({ev({2, 0}), ev({1, 0})}, 2) == ideal(2, {{1, 0}}));
  CHECK(minimalize({}, 3).is_zero());
  const auto dup = minimalize({ev({1, 1, 0, 0}), ev({1, 1, 0, 0})}, 4);
  REQUIRE(dup.num_generators() == 1);
  CHECK(dup.generators()[0] == ev({1, 1, 0, 0}));
  CHECK_THROWS_AS(minimalize({ev({1, 0, 0})}, 2), InputError);
}

TEST_CASE("generators come out in graded lex order") {
  const auto I = ideal(2, {{0, 2}, {2, 0}, {1, 1}});
  REQUIRE(I.num_generators() == 3);
  CHECK(I.generators()[0] == ev({2, 0}));
  CHECK(I.generators()[1] == ev({1, 1}));
  CHECK(I.generators()[2] == ev({0, 2}));
}

TEST_CASE("zero and unit conventions") {
  CHECK(MonomialIdeal::zero(3).is_zero());
  const auto one = MonomialIdeal::unit(3);
  CHECK(one.is_unit());
  CHECK(one.num_generators() == 1);
  CHECK(one.generators()[0].is_zero());
  CHECK(ideal(2, {{1, 0}, {0, 0}}) == MonomialIdeal::unit(2));
  CHECK(square_power(one, 3) == one);
  CHECK(ordinary_power(ideal(2, {{1, 0}}), 0) == MonomialIdeal::unit(2));
}

TEST_CASE("membership") {
  CHECK(ideal(2, {{1, 1}}).contains(ev({2, 1})));
  CHECK_FALSE(ideal(2, {{1, 1}}).contains(ev({2, 0})));
  CHECK(ideal(2, {{2, 0}, {1, 1}}).contains(ev({1, 2})));
  CHECK_FALSE(MonomialIdeal::zero(2).contains(ev({5, 5})));
}

TEST_CASE("square power scales every generator") {
  CHECK(square_power(ideal(4, {{1, 1, 0, 0}, {0, 0, 1, 0}}), 2) == ideal(4, {{2, 2, 0, 0}, {0, 0, 2, 0}}));
  const auto P = pairs_ideal();
  CHECK(square_power(P, 1) == P);
  const auto P2 = square_power(P, 2);
  CHECK(P2.num_generators() == 6);
  for (const auto& g : P2.generators()) {
    CHECK(g.degree() == 4);
    CHECK(std::all_of(g.begin(), g.end(), [](Exponent e) { return e == 0 || e == 2; }));
  }
  CHECK_THROWS_AS(square_power(P, 0), InputError);
}

TEST_CASE("square power overflow is a resource error") {
  const auto I = ideal(1, {{4000000000u}});
  CHECK_THROWS_AS(square_power(I, 2), ResourceError);
}

TEST_CASE("intersection") {
  CHECK(intersect(ideal(2, {{1, 0}}), ideal(2, {{0, 1}})) == ideal(2, {{1, 1}}));
  const auto I = pairs_ideal();
  CHECK(intersect(I, I) == I);

  const auto A = ideal(2, {{1, 0}});
  const auto B = ideal(2, {{2, 0}, {0, 1}});
  const auto got = intersect(A, B);
  CHECK(got == ideal(2, {{2, 0}, {1, 1}}));
  oracle::for_each_monomial(2, 4, [&](const oracle::Vec& v) {
    CHECK(oracle::member(got, v) == (oracle::member(A, v) && oracle::member(B, v)));
  });
}

TEST_CASE("products and powers") {
  CHECK(product(ideal(2, {{1, 0}}), ideal(2, {{0, 1}})) == ideal(2, {{1, 1}}));
  CHECK(ordinary_power(ideal(2, {{1, 1}}), 3) == ideal(2, {{3, 3}}));
  CHECK(ordinary_power(ideal(2, {{1, 0}, {0, 1}}), 2) == ideal(2, {{2, 0}, {1, 1}, {0, 2}}));
}

TEST_CASE("colon by a monomial") {
  const auto I = ideal(2, {{2, 0}, {1, 1}});
  const auto u = ev({1, 0});
  const auto got = colon(I, u);
  CHECK(got == ideal(2, {{1, 0}, {0, 1}}));
  oracle::for_each_monomial(2, 4, [&](const oracle::Vec& v) {
    oracle::Vec vu = v;
    vu[0] += 1;
    CHECK(oracle::member(got, v) == oracle::member(I, vu));
  });
  CHECK(colon(I, ev({0, 0})) == I);

  const auto J = ideal(2, {{1, 1}});
  const auto got2 = colon(J, ev({0, 5}));
  CHECK(got2 == ideal(2, {{1, 0}}));
  oracle::for_each_monomial(2, 4, [&](const oracle::Vec& v) {
    CHECK(oracle::member(got2, v) == oracle::member(J, {v[0], v[1] + 5}));
  });
}

TEST_CASE("radical") {
  CHECK(radical(ideal(2, {{2, 2}})) == ideal(2, {{1, 1}}));
  const auto sf = ideal(3, {{1, 1, 0}, {0, 1, 1}});
  CHECK(radical(sf) == sf);
  CHECK(radical(ideal(2, {{2, 0}, {1, 1}})) == ideal(2, {{1, 0}}));
}

TEST_CASE("monomial regular sequences") {
  const std::vector<ExponentVector> disjoint{ev({2, 0, 0}), ev({0, 1, 1})};
  const std::vector<ExponentVector> shared{ev({1, 1, 0}), ev({0, 1, 1})};
  CHECK(is_monomial_regular_sequence(disjoint));
  CHECK_FALSE(is_monomial_regular_sequence(shared));
}

TEST_CASE("field characteristic must be zero or prime") {
  CHECK(FieldSpec(0).characteristic() == 0);
  CHECK(FieldSpec(2).characteristic() == 2);
  CHECK(FieldSpec(2147483647u).characteristic() == 2147483647u);
  CHECK_THROWS_AS(FieldSpec(4), InputError);
  CHECK_THROWS_AS(FieldSpec(1), InputError);
}

TEST_CASE("property: square power is a ring map") {
  const auto corpus = sample(11, 40);
  for (std::size_t k = 0; k + 1 < corpus.size(); ++k) {
    const auto& I = corpus[k];
    const auto& J = corpus[k + 1];
    if (I.num_vars() != J.num_vars()) continue;
    for (std::uint64_t m = 1; m <= 4; ++m) {
      CHECK(square_power(product(I, J), m) == product(square_power(I, m), square_power(J, m)));
      CHECK(square_power(sum(I, J), m) == sum(square_power(I, m), square_power(J, m)));
      CHECK(square_power(intersect(I, J), m) == intersect(square_power(I, m), square_power(J, m)));
    }
  }
}

TEST_CASE("property: membership transfers to the square power") {
  for (const auto& I : sample(12, 30)) {
    for (std::uint64_t m : {2, 3}) {
      const auto Im = square_power(I, m);
      oracle::for_each_monomial(I.num_vars(), 5, [&](const oracle::Vec& u) {
        oracle::Vec mu = u;
        for (auto& e : mu) e *= static_cast<std::uint32_t>(m);
        CHECK(oracle::member(I, u) == oracle::member(Im, mu));
        CHECK(I.contains(ExponentVector(u)) == oracle::member(I, u));
      });
    }
  }
}

TEST_CASE("property: powers commute with the square power") {
  for (const auto& I : sample(13, 30)) {
    for (std::uint64_t m = 1; m <= 3; ++m) {
      for (std::uint64_t s = 1; s <= 3; ++s) {
        CHECK(ordinary_power(square_power(I, m), s) == square_power(ordinary_power(I, s), m));
      }
    }
  }
}

TEST_CASE("property: intersection matches brute membership") {
  const auto corpus = sample(14, 30);
  for (std::size_t k = 0; k + 1 < corpus.size(); ++k) {
    const auto& I = corpus[k];
    const auto& J = corpus[k + 1];
    if (I.num_vars() != J.num_vars()) continue;
    const auto IJ = intersect(I, J);
    oracle::for_each_monomial(I.num_vars(), 7, [&](const oracle::Vec& v) {
      CHECK(oracle::member(IJ, v) == (oracle::member(I, v) && oracle::member(J, v)));
    });
  }
}

TEST_CASE("property: minimalize is idempotent and order independent") {
  std::mt19937_64 rng(15);
  for (const auto& I : sample(15, 30)) {
    std::vector<ExponentVector> raw(I.generators().begin(), I.generators().end());
    for (const auto& g : I.generators()) {
      raw.push_back(scaled(g, 2));
      raw.push_back(g);
    }
    std::shuffle(raw.begin(), raw.end(), rng);
    CHECK(minimalize(raw, I.num_vars()) == I);
    std::vector<ExponentVector> again(I.generators().begin(), I.generators().end());
    CHECK(minimalize(again, I.num_vars()) == I);
    for (std::size_t a = 0; a < I.num_generators(); ++a) {
      for (std::size_t b = 0; b < I.num_generators(); ++b) {
        if (a != b) CHECK_FALSE(I.generators()[a].divides(I.generators()[b]));
      }
    }
  }
}

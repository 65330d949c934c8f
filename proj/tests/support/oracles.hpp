#pragma once

// Brute-force reference implementations used only by the tests. None of
// them calls the library code they are compared against.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <set>
#include <vector>

#include "sqp/monomial_ideal.hpp"

namespace oracle {

using Vec = std::vector<std::uint32_t>;

inline sqp::ExponentVector ev(std::initializer_list<std::uint32_t> xs) { return sqp::ExponentVector(Vec(xs)); }

inline sqp::MonomialIdeal ideal(std::size_t n, std::initializer_list<std::initializer_list<std::uint32_t>> gens) {
  std::vector<sqp::ExponentVector> raw;
  for (const auto& g : gens) raw.emplace_back(Vec(g));
  return sqp::MonomialIdeal::from_generators(n, std::move(raw));
}

inline Vec coords(const sqp::ExponentVector& a) { return Vec(a.begin(), a.end()); }

inline bool divides(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

/// u in I, tested against every listed generator.
inline bool member(const sqp::MonomialIdeal& I, const Vec& u) {
  for (const auto& g : I.generators()) {
    if (divides(coords(g), u)) return true;
  }
  return false;
}

/// Calls f on every exponent vector of length n and degree <= d.
inline void for_each_monomial(std::size_t n, std::uint32_t d, const std::function<void(const Vec&)>& f) {
  Vec v(n, 0);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
    if (i == n) {
      f(v);
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      v[i] = e;
      rec(i + 1, left - e);
    }
    v[i] = 0;
  };
  rec(0, d);
}

/// Calls f on every v with 0 <= v <= top componentwise.
inline void for_each_in_box(const Vec& top, const std::function<void(const Vec&)>& f) {
  Vec v(top.size(), 0);
  while (true) {
    f(v);
    std::size_t i = 0;
    while (i < v.size() && v[i] == top[i]) v[i++] = 0;
    if (i == v.size()) return;
    ++v[i];
  }
}

/// Same membership for every monomial of degree <= d.
inline bool same_ideal_up_to(const sqp::MonomialIdeal& I, const sqp::MonomialIdeal& J, std::uint32_t d) {
  bool same = true;
  for_each_monomial(I.num_vars(), d, [&](const Vec& v) { same = same && member(I, v) == member(J, v); });
  return same;
}

inline Vec generator_lcm(const sqp::MonomialIdeal& I) {
  Vec top(I.num_vars(), 0);
  for (const auto& g : I.generators()) {
    for (std::size_t i = 0; i < top.size(); ++i) top[i] = std::max(top[i], g[i]);
  }
  return top;
}

/// Associated primes by exhaustive colon: for u not in I, (I : u) is the
/// prime on S = {i : u + e_i in I} exactly when u plus a large power of
/// every variable outside S is still not in I. Witnesses u can be taken
/// below the lcm of the generators.
inline std::set<std::vector<std::size_t>> ass_by_colon(const sqp::MonomialIdeal& I) {
  const auto top = generator_lcm(I);
  std::set<std::vector<std::size_t>> out;
  for_each_in_box(top, [&](const Vec& u) {
    if (member(I, u)) return;
    std::vector<std::size_t> S;
    Vec w = u;
    for (std::size_t i = 0; i < u.size(); ++i) {
      Vec step = u;
      ++step[i];
      if (member(I, step)) {
        S.push_back(i);
      } else {
        w[i] = u[i] + top[i] + 1;
      }
    }
    if (!S.empty() && !member(I, w)) out.insert(S);
  });
  return out;
}

/// Product of two ideals as the raw set of pairwise sums (not minimalized).
inline std::vector<Vec> raw_product(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  std::vector<Vec> out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      Vec z(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
      out.push_back(std::move(z));
    }
  }
  return out;
}

/// v is integral over I if k*v lies in I^k for some k <= K; I^k is formed
/// from raw generator sums.
inline bool integral_by_powers(const sqp::MonomialIdeal& I, const Vec& v, int K) {
  std::vector<Vec> base;
  for (const auto& g : I.generators()) base.push_back(coords(g));
  std::vector<Vec> power = base;
  for (int k = 1; k <= K; ++k) {
    Vec kv(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) kv[i] = v[i] * static_cast<std::uint32_t>(k);
    for (const auto& g : power) {
      if (divides(g, kv)) return true;
    }
    if (k < K) {
      power = raw_product(power, base);
      std::sort(power.begin(), power.end());
      power.erase(std::unique(power.begin(), power.end()), power.end());
    }
  }
  return false;
}

}  // namespace oracle

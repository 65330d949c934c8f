#include "sqp/closure.hpp"

#include <algorithm>
#include <string>

#include <gmpxx.h>

#include "sqp/errors.hpp"

namespace sqp {

namespace {

// max sum(lambda) subject to sum(lambda_i a_i) <= v, lambda >= 0, stopping as
// soon as the objective reaches 1. Scaling a solution with sum(lambda) = t >= 1
// by 1/t stays feasible because v >= 0, so reaching 1 (or unboundedness)
// means v lies in the Newton polyhedron.
bool reaches_unit_weight(std::span<const ExponentVector> gens, const ExponentVector& v) {
  const std::size_t k = gens.size();
  const std::size_t n = v.size();
  const std::size_t cols = k + n;  // lambdas, then slacks

  std::vector<std::vector<mpq_class>> t(n, std::vector<mpq_class>(cols + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < k; ++i) t[r][i] = gens[i][r];
    t[r][k + r] = 1;
    t[r][cols] = v[r];
  }
  // Reduced costs; the last slot holds minus the objective value.
  std::vector<mpq_class> obj(cols + 1);
  for (std::size_t i = 0; i < k; ++i) obj[i] = 1;

  std::vector<std::size_t> basis(n);
  for (std::size_t r = 0; r < n; ++r) basis[r] = k + r;

  while (true) {
    if (-obj[cols] >= 1) return true;

    std::size_t entering = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (sgn(obj[j]) > 0) {
        entering = j;
        break;
      }
    }
    if (entering == cols) return false;

    std::size_t leaving = n;
    mpq_class best_ratio;
    for (std::size_t r = 0; r < n; ++r) {
      if (sgn(t[r][entering]) <= 0) continue;
      mpq_class ratio = t[r][cols] / t[r][entering];
      if (leaving == n || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[leaving])) {
        leaving = r;
        best_ratio = ratio;
      }
    }
    if (leaving == n) return true;  // unbounded

    const mpq_class pivot = t[leaving][entering];
    for (auto& x : t[leaving]) x /= pivot;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == leaving || sgn(t[r][entering]) == 0) continue;
      const mpq_class f = t[r][entering];
      for (std::size_t c = 0; c <= cols; ++c) t[r][c] -= f * t[leaving][c];
    }
    const mpq_class f = obj[entering];
    for (std::size_t c = 0; c <= cols; ++c) obj[c] -= f * t[leaving][c];
    basis[leaving] = entering;
  }
}

}  // namespace

bool newton_member(std::span<const ExponentVector> generators, const ExponentVector& point) {
  if (generators.empty()) throw InputError("newton_member needs at least one generator");
  for (const auto& g : generators) {
    if (g.size() != point.size()) throw InputError("newton_member: length mismatch");
  }
  if (std::any_of(generators.begin(), generators.end(),
                  [&](const ExponentVector& g) { return g.divides(point); })) {
    return true;
  }
  for (std::size_t c = 0; c < point.size(); ++c) {
    const bool coordinate_reachable = std::any_of(generators.begin(), generators.end(),
                                                  [&](const ExponentVector& g) { return g[c] <= point[c]; });
    if (!coordinate_reachable) return false;
  }
  return reaches_unit_weight(generators, point);
}

bool newton_member(const NewtonQuery& q) { return newton_member(q.generators, q.point); }

MonomialIdeal integral_closure_gens(const MonomialIdeal& I, const Limits& limits) {
  if (I.is_zero() || I.is_unit()) return I;
  const std::size_t n = I.num_vars();
  const auto box = I.generator_lcm();

  std::size_t volume = 1;
  for (auto e : box) {
    volume *= static_cast<std::size_t>(e) + 1;
    if (volume > limits.max_closure_box) {
      throw ResourceError("integral closure search box exceeds " + std::to_string(limits.max_closure_box) +
                          " points");
    }
  }

  std::vector<ExponentVector> points;
  points.reserve(volume);
  ExponentVector v(n);
  while (true) {
    points.push_back(v);
    std::size_t c = 0;
    while (c < n && v[c] == box[c]) v[c++] = 0;
    if (c == n) break;
    ++v[c];
  }
  std::sort(points.begin(), points.end(), graded_lex_less);

  // Degree order: a point divisible by an accepted one is never minimal.
  std::vector<ExponentVector> minimal;
  for (const auto& p : points) {
    if (std::any_of(minimal.begin(), minimal.end(), [&](const ExponentVector& m) { return m.divides(p); }))
      continue;
    if (newton_member(I.generators(), p)) minimal.push_back(p);
  }
  return minimalize(std::move(minimal), n);
}

bool is_integrally_closed(const MonomialIdeal& I, const Limits& limits) {
  return integral_closure_gens(I, limits) == I;
}

}  // namespace sqp

#pragma once

#include <span>
#include <vector>

#include "sqp/limits.hpp"
#include "sqp/monomial_ideal.hpp"

namespace sqp {

struct NewtonQuery {
  std::vector<ExponentVector> generators;
  ExponentVector point;
};

/// Is `point` in conv(generators) + R_{>=0}^n? Decided exactly by a rational
/// simplex (Bland's rule), no floating point. Throws InputError if there are
/// no generators or the lengths disagree.
bool newton_member(std::span<const ExponentVector> generators, const ExponentVector& point);
bool newton_member(const NewtonQuery& q);

/// Minimal generators of the integral closure. Minimal lattice points of the
/// Newton polyhedron lie in the box 0 <= v <= (componentwise max of the
/// generators), which is scanned in degree order. Throws ResourceError when
/// the box exceeds limits.max_closure_box.
MonomialIdeal integral_closure_gens(const MonomialIdeal& I, const Limits& limits = {});

bool is_integrally_closed(const MonomialIdeal& I, const Limits& limits = {});

}  // namespace sqp

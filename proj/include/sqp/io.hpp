#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "sqp/monomial_ideal.hpp"

namespace sqp {

/// An ideal together with the variable names it was written in.
struct NamedIdeal {
  MonomialIdeal ideal;
  std::vector<std::string> vars;
};

/// x1 ... xn
std::vector<std::string> default_var_names(std::size_t n);

/// Parses either the text form
///
///     vars: x y z
///     gens: x^2*y, z
///
/// or the JSON form {"n":3,"gens":[[2,1,0],[0,0,1]]}. The format is chosen
/// by the first non-blank character. An empty `gens:` line is the zero
/// ideal, `gens: 1` the unit ideal. Lines starting with '#' are ignored.
/// Throws InputError on anything malformed, including negative or
/// fractional exponents.
NamedIdeal parse_ideal(std::string_view text);

NamedIdeal parse_ideal_text(std::string_view text);
NamedIdeal parse_ideal_json(const nlohmann::json& j);

/// x1^2*x2 (or 1 for the zero vector).
std::string format_monomial(const ExponentVector& a, const std::vector<std::string>& vars);

/// Two-line text form; re-parses to the same ideal.
std::string format_ideal_text(const MonomialIdeal& I, const std::vector<std::string>& vars);
std::string format_ideal_text(const MonomialIdeal& I);

nlohmann::json ideal_to_json(const MonomialIdeal& I);

}  // namespace sqp

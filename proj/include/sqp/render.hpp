#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "sqp/decomposition.hpp"
#include "sqp/probes.hpp"
#include "sqp/resolution.hpp"

namespace sqp {

/// [{"support":[0,2],"exponents":[1,3]}, ...]; exponents follow the support.
nlohmann::json components_to_json(const std::vector<IrreducibleComponent>& components);
/// [{"support":[0],"gens":[[2,0],[1,1]]}, ...]
nlohmann::json primary_to_json(const std::vector<PrimaryComponent>& components);
nlohmann::json primes_to_json(const std::vector<MonomialPrime>& primes);
/// {"char":0,"entries":[[i,j,count],...]}
nlohmann::json betti_to_json(const BettiTable& table);
nlohmann::json corners_to_json(const std::vector<ExtremalCorner>& corners);

nlohmann::json probe_to_json(const NtfReport& r);
nlohmann::json probe_to_json(const StabilityReport& r);
nlohmann::json probe_to_json(const SymbolicDepthReport& r);
nlohmann::json probe_to_json(const ExtremalPowerReport& r);

std::string probe_to_text(const NtfReport& r, const std::vector<std::string>& vars);
std::string probe_to_text(const StabilityReport& r, const std::vector<std::string>& vars);
std::string probe_to_text(const SymbolicDepthReport& r);
std::string probe_to_text(const ExtremalPowerReport& r);

/// Left-aligned columns separated by two spaces; trailing blanks trimmed.
std::string aligned_table(const std::vector<std::vector<std::string>>& rows);

}  // namespace sqp

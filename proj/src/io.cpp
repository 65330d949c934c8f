#include "sqp/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <map>
#include <sstream>

#include "sqp/errors.hpp"

namespace sqp {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

bool valid_var_name(std::string_view name) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name.front())) || name.front() == '_'))
    return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Exponent parse_exponent(std::string_view token) {
  token = trim(token);
  if (token.empty()) throw InputError("missing exponent after '^'");
  if (token.front() == '-') throw InputError("negative exponent '" + std::string(token) + "'");
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec == std::errc::result_out_of_range || value > std::numeric_limits<Exponent>::max()) {
    throw ResourceError("exponent '" + std::string(token) + "' exceeds 32 bits");
  }
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw InputError("exponent '" + std::string(token) + "' is not a nonnegative integer");
  }
  return static_cast<Exponent>(value);
}

}  // namespace

std::vector<std::string> default_var_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

NamedIdeal parse_ideal(std::string_view text) {
  const auto body = trim(text);
  if (!body.empty() && body.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(std::string("invalid JSON ideal: ") + e.what());
    }
    return parse_ideal_json(j);
  }
  return parse_ideal_text(text);
}

NamedIdeal parse_ideal_text(std::string_view text) {
  std::vector<std::string> vars;
  bool have_vars = false;
  bool have_gens = false;
  std::string_view gens_line;

  for (auto raw_line : split(text, '\n')) {
    auto line = trim(raw_line);
    if (line.empty() || line.front() == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw InputError("expected 'vars:' or 'gens:' line, got '" + std::string(line) + "'");
    }
    const auto key = trim(line.substr(0, colon));
    const auto value = line.substr(colon + 1);
    if (key == "vars") {
      if (have_vars) throw InputError("duplicate 'vars:' line");
      have_vars = true;
      std::istringstream in{std::string(value)};
      std::string name;
      while (in >> name) {
        if (!valid_var_name(name)) throw InputError("invalid variable name '" + name + "'");
        if (std::find(vars.begin(), vars.end(), name) != vars.end()) {
          throw InputError("duplicate variable '" + name + "'");
        }
        vars.push_back(name);
      }
    } else if (key == "gens") {
      if (have_gens) throw InputError("duplicate 'gens:' line");
      have_gens = true;
      gens_line = value;
    } else {
      throw InputError("unknown key '" + std::string(key) + "'");
    }
  }
  if (!have_vars) throw InputError("missing 'vars:' line");
  if (!have_gens) throw InputError("missing 'gens:' line");

  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t i = 0; i < vars.size(); ++i) index.emplace(vars[i], i);

  std::vector<ExponentVector> gens;
  if (!trim(gens_line).empty()) {
    for (auto term : split(gens_line, ',')) {
      term = trim(term);
      if (term.empty()) throw InputError("empty generator in 'gens:' list");
      ExponentVector g(vars.size());
      if (term == "1") {
        gens.push_back(g);
        continue;
      }
      for (auto factor : split(term, '*')) {
        factor = trim(factor);
        const auto caret = factor.find('^');
        const auto name = trim(factor.substr(0, caret));
        const Exponent e = caret == std::string_view::npos ? 1 : parse_exponent(factor.substr(caret + 1));
        auto it = index.find(name);
        if (it == index.end()) throw InputError("unknown variable '" + std::string(name) + "'");
        const std::uint64_t total = std::uint64_t{g[it->second]} + e;
        if (total > std::numeric_limits<Exponent>::max()) throw ResourceError("exponent exceeds 32 bits");
        g[it->second] = static_cast<Exponent>(total);
      }
      gens.push_back(std::move(g));
    }
  }
  return {minimalize(std::move(gens), vars.size()), std::move(vars)};
}

NamedIdeal parse_ideal_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("gens")) {
    throw InputError("JSON ideal must be an object with keys \"n\" and \"gens\"");
  }
  const auto& jn = j.at("n");
  if (!jn.is_number_integer() || jn.get<std::int64_t>() < 0) {
    throw InputError("\"n\" must be a nonnegative integer");
  }
  const auto n = jn.get<std::size_t>();
  const auto& jg = j.at("gens");
  if (!jg.is_array()) throw InputError("\"gens\" must be an array");

  std::vector<ExponentVector> gens;
  for (const auto& row : jg) {
    if (!row.is_array() || row.size() != n) {
      throw InputError("each generator must be an array of " + std::to_string(n) + " exponents");
    }
    ExponentVector g(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& e = row[i];
      if (!e.is_number_integer()) throw InputError("exponents must be integers, got " + e.dump());
      if (e.is_number_unsigned()) {
        const auto v = e.get<std::uint64_t>();
        if (v > std::numeric_limits<Exponent>::max()) throw ResourceError("exponent exceeds 32 bits");
        g[i] = static_cast<Exponent>(v);
      } else {
        const auto v = e.get<std::int64_t>();
        if (v < 0) throw InputError("negative exponent " + std::to_string(v));
        if (v > std::numeric_limits<Exponent>::max()) throw ResourceError("exponent exceeds 32 bits");
        g[i] = static_cast<Exponent>(v);
      }
    }
    gens.push_back(std::move(g));
  }
  return {minimalize(std::move(gens), n), default_var_names(n)};
}

std::string format_monomial(const ExponentVector& a, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.at(i);
    if (a[i] > 1) out += '^' + std::to_string(a[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format_ideal_text(const MonomialIdeal& I, const std::vector<std::string>& vars) {
  std::string out = "vars:";
  for (const auto& v : vars) out += ' ' + v;
  out += "\ngens:";
  bool first = true;
  for (const auto& g : I.generators()) {
    out += first ? " " : ", ";
    first = false;
    out += format_monomial(g, vars);
  }
  out += '\n';
  return out;
}

std::string format_ideal_text(const MonomialIdeal& I) {
  return format_ideal_text(I, default_var_names(I.num_vars()));
}

nlohmann::json ideal_to_json(const MonomialIdeal& I) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : I.generators()) gens.push_back(g.coords());
  return {{"n", I.num_vars()}, {"gens", std::move(gens)}};
}

}  // namespace sqp

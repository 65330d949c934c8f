#include "sqp/limits.hpp"

#include <cstdlib>
#include <string>

#include "sqp/errors.hpp"

namespace sqp {

namespace {

std::size_t env_size(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (*end != '\0' || value == 0) {
    throw InputError(std::string(name) + " must be a positive integer, got '" + raw + "'");
  }
  return static_cast<std::size_t>(value);
}

}  // namespace

Limits Limits::from_environment() {
  Limits limits;
  limits.max_generators = env_size("SQP_MAX_GENS", limits.max_generators);
  limits.max_variables = env_size("SQP_MAX_VARS", limits.max_variables);
  return limits;
}

Limits Limits::for_verification() {
  Limits limits;
  limits.max_generators = 512;
  limits.max_variables = 10;
  return limits;
}

}  // namespace sqp

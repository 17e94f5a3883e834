#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "displace/cli/suite.hpp"

namespace displace {

/// A scenario file turned into a runnable suite. Every group, element and
/// subgroup is built while parsing, so semantic errors carry a location.
struct Scenario {
  Suite suite;
  std::optional<std::uint64_t> seed;
};

/// Parses a scenario document. Throws ParseError with the 1-based line and
/// column of the offending value.
Scenario parse_scenario(const std::string& text);

Scenario load_scenario(const std::string& path);

}  // namespace displace

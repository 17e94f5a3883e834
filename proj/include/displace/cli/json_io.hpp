#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include <json.hpp>

#include "displace/core/element.hpp"
#include "displace/core/report.hpp"

namespace displace {

using Json = nlohmann::ordered_json;

/// Realization-specific JSON form of an element. Rationals are "n/d" strings.
Json element_to_json(const Element& x);

/// Parses the raw JSON form of an element of `group` (the inverse of
/// element_to_json). Throws InvalidArgument on malformed input.
Element element_from_json(const Group& group, const Json& value);

Json report_to_json(const PropertyReport& report);

/// Rational from a JSON string "n/d", "n", or an integer.
Rational rational_from_json(const Json& value);

/// Line and column (1-based) of every value in a JSON text, keyed by JSON
/// pointer ("" for the root). The text must already be valid JSON.
std::map<std::string, std::pair<std::size_t, std::size_t>> json_value_positions(const std::string& text);

/// Line and column of a byte offset (1-based) in `text`.
std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t offset);

}  // namespace displace

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "tde/toric_domain.hpp"

namespace tde {

// Malformed input file: bad JSON, missing fields, non-string numbers.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r);
Json point_json(const Point2& p);

// {"type": "concave" | "convex", "boundary": [["p/q", "n"], ...]}
Json domain_json(const ToricDomainSpec& d);
// Throws InputError on a malformed document and InvalidDomain on a boundary
// that fails validation.
ToricDomainSpec parse_domain(const Json& j);
ToricDomainSpec parse_domain_text(std::string_view text);

std::string read_file(const std::string& path);  // throws InputError
ToricDomainSpec read_domain(const std::string& path);
// Two-space indented JSON followed by a newline.
std::string emit_domain(const ToricDomainSpec& d);

// "fnv1a64:" followed by 16 hex digits.
std::string digest(std::string_view bytes);

}  // namespace tde

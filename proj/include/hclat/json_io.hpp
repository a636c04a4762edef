#pragma once

#include "hclat/configuration.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hcl {

using Json = nlohmann::ordered_json;

// Malformed input document.
class JsonInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Json to_json(const Site& s);
Json to_json(const Rational& r);  // "p/q"
Json to_json(const Mat3& m);
Json to_json(const PeriodicConfiguration& pc);  // {"basis", "offsets", "d2"}

Site site_from_json(const Json& j);
Mat3 matrix_from_json(const Json& j);

// A configuration object, or a report envelope carrying one under
// results.configuration.
PeriodicConfiguration configuration_from_json(const Json& j);

// An array of sites, or an object with a "sites" array.
std::vector<Site> sites_from_json(const Json& j);

// "x,y,z"
Site parse_site(const std::string& text);

Json read_json_file(const std::string& path);

}  // namespace hcl

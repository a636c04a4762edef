#include "hclat/json_io.hpp"

#include <fstream>
#include <sstream>

namespace hcl {

Json to_json(const Site& s) { return Json::array({s.x1, s.x2, s.x3}); }

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const Mat3& m) { return Json::array({to_json(m[0]), to_json(m[1]), to_json(m[2])}); }

Json to_json(const PeriodicConfiguration& pc) {
    Json j;
    j["basis"] = to_json(pc.basis());
    j["offsets"] = Json::array();
    for (const Site& o : pc.offsets()) j["offsets"].push_back(to_json(o));
    j["d2"] = pc.context_d2() ? Json(*pc.context_d2()) : Json(nullptr);
    return j;
}

Site site_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3) throw JsonInputError("a site must be an array of three integers");
    for (const auto& v : j)
        if (!v.is_number_integer()) throw JsonInputError("a site must be an array of three integers");
    return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>(), j[2].get<std::int64_t>()};
}

Mat3 matrix_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3) throw JsonInputError("a basis must have three rows");
    return {site_from_json(j[0]), site_from_json(j[1]), site_from_json(j[2])};
}

PeriodicConfiguration configuration_from_json(const Json& j) {
    if (j.is_object() && j.contains("results") && j["results"].is_object() &&
        j["results"].contains("configuration"))
        return configuration_from_json(j["results"]["configuration"]);
    if (!j.is_object() || !j.contains("basis") || !j.contains("offsets"))
        throw JsonInputError("configuration needs \"basis\" and \"offsets\"");
    const Mat3 basis = matrix_from_json(j["basis"]);
    if (!j["offsets"].is_array()) throw JsonInputError("\"offsets\" must be an array");
    std::vector<Site> offsets;
    for (const auto& o : j["offsets"]) offsets.push_back(site_from_json(o));
    std::optional<std::int64_t> d2;
    if (j.contains("d2") && !j["d2"].is_null()) {
        if (!j["d2"].is_number_integer()) throw JsonInputError("\"d2\" must be an integer");
        d2 = j["d2"].get<std::int64_t>();
    }
    try {
        return PeriodicConfiguration(basis, offsets, d2);
    } catch (const std::invalid_argument& e) {
        throw JsonInputError(e.what());
    }
}

std::vector<Site> sites_from_json(const Json& j) {
    const Json& arr = j.is_object() && j.contains("sites") ? j["sites"] : j;
    if (!arr.is_array()) throw JsonInputError("expected an array of sites");
    std::vector<Site> out;
    for (const auto& s : arr) out.push_back(site_from_json(s));
    return out;
}

Site parse_site(const std::string& text) {
    std::stringstream in(text);
    Site s;
    char c1 = 0, c2 = 0;
    if (!(in >> s.x1 >> c1 >> s.x2 >> c2 >> s.x3) || c1 != ',' || c2 != ',' || !(in >> std::ws).eof())
        throw JsonInputError("expected a site as x,y,z, got '" + text + "'");
    return s;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw JsonInputError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw JsonInputError(path + ": " + e.what());
    }
}

}  // namespace hcl

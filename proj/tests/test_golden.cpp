#include <doctest.h>

#include "hclat/forces.hpp"
#include "hclat/json_io.hpp"
#include "oracle.hpp"

#include <string>

using namespace hcl;

// The golden files were produced once by an independent enumeration and are
// frozen. Each check compares three sources: the file, the in-test oracle and
// the library.

namespace {

Json golden(const std::string& name) { return read_json_file(std::string(HCLAT_GOLDEN_DIR) + "/" + name); }

Rational over24(long n) { return Rational(n, 24); }

}  // namespace

TEST_CASE("second maxima: golden file, oracle and library agree") {
    const Json g = golden("second_max.json").at("second_max");
    CHECK(g.size() == 9);
    for (const auto& [key, value] : g.items()) {
        const long d2 = std::stol(key);
        CAPTURE(d2);
        const auto o = oracle::ball_search(d2);
        const auto lib = verify_forces(d2);
        const Rational frozen = parse_rational(value.get<std::string>());
        CHECK(over24(o.max24) == Rational(1));
        CHECK(over24(o.second24) == frozen);
        CHECK(lib.second_max == frozen);
        CHECK(lib.config_count == o.count);
        CHECK(lib.max_occupancy == o.max_occupancy);
    }
}

TEST_CASE("signatures for D^2 = 2, 3, 4: golden file, oracle and library agree") {
    for (long d2 : {2L, 3L, 4L}) {
        CAPTURE(d2);
        const Json g = golden("signatures_d2_" + std::to_string(d2) + ".json");
        CHECK(g.at("d2").get<long>() == d2);
        std::set<Signature> frozen;
        for (const auto& s : g.at("signatures")) frozen.insert(s.get<Signature>());
        const auto o = oracle::ball_search(d2);
        std::set<Signature> from_oracle;
        for (const auto& s : o.signatures) from_oracle.insert(Signature(s.begin(), s.end()));
        CHECK(from_oracle == frozen);
        CHECK(maximal_signatures(d2) == frozen);
    }
}

TEST_CASE("oracle signature sets agree with the library for every D^2") {
    for (long d2 : {2L, 3L, 4L, 5L, 6L, 8L, 9L, 10L, 12L}) {
        CAPTURE(d2);
        const auto o = oracle::ball_search(d2);
        std::set<Signature> from_oracle;
        for (const auto& s : o.signatures) from_oracle.insert(Signature(s.begin(), s.end()));
        CHECK(from_oracle == maximal_signatures(d2));
    }
}

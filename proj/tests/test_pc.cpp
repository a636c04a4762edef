#include <doctest.h>

#include "hclat/builders.hpp"

#include <map>
#include <random>

using namespace hcl;

namespace {

struct Named {
    std::string name;
    PeriodicConfiguration pc;
    std::int64_t d2;
};

// Every constructor family with the D^2 it is perfect for.
std::vector<Named> catalogue() {
    std::vector<Named> v;
    v.push_back({"Z^3", build_cubic(1), 1});
    v.push_back({"A3", build_fcc(1), 2});
    v.push_back({"BCC side 2", build_bcc(2), 3});
    v.push_back({"2Z^3", build_cubic(2), 4});
    v.push_back({"2A3", build_fcc(2), 8});
    v.push_back({"BCC side 4", build_bcc(4), 12});
    for (int axis = 1; axis <= 3; ++axis)
        for (int l = 0; l <= 1; ++l) v.push_back({"phi9", build_phi9(axis, l), 9});
    for (int i = 0; i < 4; ++i)
        for (int l = 0; l <= 1; ++l) v.push_back({"phi10", build_phi10(i, l), 10});
    for (int i = 0; i < 4; ++i)
        for (const char* s : {"01", "02", "012", "021", "0102"})
            v.push_back({std::string("d5 ") + s, build_layered_d5(i, s), 5});
    for (int i = 0; i < 4; ++i)
        for (const char* s : {"025", "041", "063", "021"}) v.push_back({std::string("d6 tri ") + s, build_layered_d6_tri(i, s), 6});
    for (int i = 0; i < 6; ++i)
        for (const char* s : {"01", "0102", "02"}) v.push_back({std::string("d6 rh ") + s, build_layered_d6_rhombic(i, s), 6});
    for (int i = 0; i < 4; ++i) {
        v.push_back({"2l2 l=3 01", build_layered_2l2(3, i, "01"), 18});
        v.push_back({"2l2 l=3 012", build_layered_2l2(3, i, "012"), 18});
    }
    D4Spec masks;
    masks.layer_masks = {"01", "10"};
    v.push_back({"d4 masks", build_d4_family(masks), 4});
    D4Spec cols;
    cols.column_shifts = {"10", "00"};
    v.push_back({"d4 columns", build_d4_family(cols), 4});
    return v;
}

Rational normalization(std::int64_t d2) {
    if (d2 == 18) return Rational(54);
    return normalization_constant(force_table(d2));
}

}  // namespace

TEST_CASE("constructor examples") {
    const auto fcc = build_fcc(1);
    CHECK(det(fcc.basis()) == 2);
    CHECK(fcc.offsets().size() == 1);
    CHECK(density(fcc) == Rational(1, 2));
    CHECK(density(build_bcc(2)) == Rational(1, 4));
    CHECK(shift_count(build_bcc(2)) == 4);
    CHECK(density(build_fcc(2)) == Rational(1, 16));
    CHECK(density(build_bcc(4)) == Rational(1, 32));
    CHECK(det(build_phi9(1, 0).basis()) == 20);
    CHECK(det(build_phi10(0, 0).basis()) == 26);
}

TEST_CASE("perfection suite") {
    for (const auto& c : catalogue()) {
        if (c.d2 == 18) continue;
        CAPTURE(c.name);
        CAPTURE(c.d2);
        CHECK(is_perfect(c.pc, c.d2));
    }
}

TEST_CASE("density is the reciprocal of the normalization constant") {
    for (const auto& c : catalogue()) {
        CAPTURE(c.name);
        CHECK(density(c.pc) == Rational(1) / normalization(c.d2));
    }
}

TEST_CASE("canonical form invariants") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coord(-9, 9);
    std::uniform_int_distribution<std::size_t> pick(0, 47);
    for (const auto& c : catalogue()) {
        CAPTURE(c.name);
        const auto& pc = c.pc;
        CHECK(det(pc.basis()) > 0);
        CHECK(canonicalize(pc) == pc);
        CHECK(canonicalize(canonicalize(pc)) == canonicalize(pc));
        CHECK(density(pc) * Rational(det(pc.basis())) == Rational(static_cast<std::int64_t>(pc.offsets().size())));
        CHECK(shift_count(pc) == det(pc.basis()));
        CHECK(std::adjacent_find(pc.offsets().begin(), pc.offsets().end()) == pc.offsets().end());
        for (int trial = 0; trial < 3; ++trial) {
            const Site e{coord(rng), coord(rng), coord(rng)};
            const auto& g = oh_elements()[pick(rng)];
            const auto moved = pc.transformed(g).translated(e);
            CHECK(canonicalize(moved) == moved);
            CHECK(density(moved) == density(pc));
            CHECK(moved.occupied(g.apply(pc.offsets().front()) + e));
            if (c.d2 != 18) CHECK(is_perfect(moved, c.d2));
        }
    }
}

TEST_CASE("period lattice is the full symmetry lattice") {
    // Generators with a redundant period collapse to the true period lattice.
    const Site gens[] = {{4, 0, 0}, {0, 4, 0}, {0, 0, 4}};
    const Site offs[] = {{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {2, 2, 0}, {0, 0, 2}, {2, 0, 2}, {0, 2, 2}, {2, 2, 2}};
    const PeriodicConfiguration pc(gens, offs);
    CHECK(pc == build_cubic(2));
    CHECK(pc.offsets().size() == 1);
}

TEST_CASE("admissibility and saturation") {
    CHECK(is_admissible(build_fcc(1), 2));
    CHECK_FALSE(is_admissible(build_fcc(1), 3));
    CHECK(is_saturated(build_fcc(1), 2));
    CHECK(is_saturated(build_layered_2l2(3, 0, "01"), 18));
    CHECK_FALSE(is_perfect(build_layered_d5(0, "01"), 4));
    CHECK_THROWS_AS(is_perfect(build_fcc(1), 3), InadmissibleConfiguration);
}

TEST_CASE("layered D^2=5 examples") {
    const auto hcp = build_layered_d5(0, "01");
    CHECK(det(hcp.basis()) == 18);
    CHECK(density(hcp) == Rational(1, 9));
    const auto lat = build_layered_d5(0, "012");
    CHECK(lat.offsets().size() == 1);
    CHECK(det(lat.basis()) == 9);
    CHECK(density(build_layered_d5(2, "0102")) == Rational(1, 9));
}

TEST_CASE("layer sequences are validated") {
    CHECK_THROWS_AS(build_layered_d5(0, ""), InvalidSequence);
    CHECK_THROWS_AS(build_layered_d5(0, "10"), InvalidSequence);
    CHECK_THROWS_AS(build_layered_d5(0, "0110"), InvalidSequence);
    CHECK_THROWS_AS(build_layered_d5(0, "010"), InvalidSequence);  // cyclic repeat
    CHECK_THROWS_AS(build_layered_d5(0, "013"), InvalidSequence);
    CHECK_THROWS_AS(build_layered_d5(4, "01"), std::invalid_argument);
    CHECK_THROWS_AS(build_layered_d6_tri(0, "01"), InvalidSequence);
    CHECK_THROWS_AS(build_layered_d6_rhombic(0, "03"), InvalidSequence);
}

TEST_CASE("D^2 = 2l^2 meshes") {
    CHECK(build_layered_2l2(1, 0, "012") == build_fcc(1));
    CHECK_THROWS_AS(build_layered_2l2(1, 0, "021"), NonIntegralSite);
    CHECK_THROWS_AS(build_layered_2l2(2, 0, "01"), NonIntegralSite);
    const auto pc = build_layered_2l2(3, 0, "01");
    CHECK(density(pc) == Rational(1, 54));
    CHECK(is_admissible(pc, 18));
}

TEST_CASE("D^2 = 4 family") {
    CHECK(build_d4_family(D4Spec{}) == build_cubic(2));
    D4Spec masks;
    masks.layer_masks = {"01", "10"};
    CHECK(density(build_d4_family(masks)) == Rational(1, 8));
    CHECK(build_d4_family(masks) != build_cubic(2));
    D4Spec lifted;
    lifted.column_shifts = {"1"};
    // Lifting every column is a plain translate of 2Z^3.
    CHECK(build_d4_family(lifted) == build_cubic(2).translated({0, 0, 1}));
}

TEST_CASE("censuses") {
    const std::map<std::int64_t, std::int64_t> expected{{2, 2}, {3, 4}, {8, 16}, {9, 120}, {10, 208}, {12, 32}};
    for (const auto& [d2, n] : expected) {
        CAPTURE(d2);
        const auto c = pc_census(d2);
        REQUIRE(c.count.has_value());
        CHECK(*c.count == n);
    }
    for (std::int64_t d2 : {4, 5, 6}) {
        const auto c = pc_census(d2);
        CHECK_FALSE(c.count.has_value());
        CHECK(c.marker == "ℵ₀");
    }
    CHECK(hcp_census() == 72);
}

TEST_CASE("orbit census counts shifts of a lattice by its determinant") {
    CHECK(orbit_census({build_cubic(3)}) == 27);
    CHECK(orbit_census({build_fcc(1), build_fcc(1).translated({1, 0, 0})}) == 2);
}

TEST_CASE("sliding witness stays within 2 l^2") {
    for (std::int64_t l = 1; l <= 3; ++l)
        for (std::int64_t n = 1; n <= 100; ++n) {
            const auto w = sliding_witness(l, n);
            CHECK(w <= 2 * l * l);
            CHECK(w == (n % 2 == 0 ? l * l : 0));
        }
}

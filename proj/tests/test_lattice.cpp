#include <doctest.h>

#include "hclat/hnf.hpp"
#include "hclat/rational.hpp"
#include "hclat/site.hpp"
#include "hclat/symmetry.hpp"
#include "oracle.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>

using namespace hcl;

TEST_CASE("squared distance examples") {
    CHECK(sq_dist({0, 0, 0}, {0, 0, 0}) == 0);
    CHECK(sq_dist({0, 0, 0}, {1, 1, 0}) == 2);
    CHECK(sq_dist({0, 0, 0}, {2, 1, 1}) == 6);
}

TEST_CASE("checked arithmetic refuses to wrap") {
    const auto big = std::numeric_limits<std::int64_t>::max();
    CHECK_THROWS_AS(checked_add(big, 1), std::overflow_error);
    CHECK_THROWS_AS(checked_mul(big / 2 + 1, 2), std::overflow_error);
    CHECK_THROWS_AS(sq_dist({big, 0, 0}, {0, 0, 0}), std::overflow_error);
    CHECK(checked_sub(-big, 1) == std::numeric_limits<std::int64_t>::min());
}

TEST_CASE("ball cardinalities") {
    CHECK(ball_sites(1).sites.size() == 1);
    CHECK(ball_sites(2).sites.size() == 7);
    CHECK(ball_sites(3).sites.size() == 19);
    CHECK(ball_sites(4).sites.size() == 27);
    CHECK(ball_sites(6).sites.size() == 57);
    CHECK(ball_sites(7).sites.size() == 81);
}

TEST_CASE("balls are open, sorted, duplicate free and agree with a cube scan") {
    for (std::int64_t r2 = 1; r2 <= 12; ++r2) {
        const auto b = ball_sites(r2).sites;
        CHECK(std::is_sorted(b.begin(), b.end()));
        CHECK(std::adjacent_find(b.begin(), b.end()) == b.end());
        for (const Site& s : b) CHECK(norm_sq(s) < r2);
        CHECK(b.size() == oracle::ball(r2).size());
    }
}

TEST_CASE("admissibility examples") {
    const Site a[] = {{0, 0, 0}, {1, 0, 0}};
    CHECK_FALSE(is_admissible(a, 2));
    const Site b[] = {{0, 0, 0}, {1, 1, 0}};
    CHECK(is_admissible(b, 2));
    const Site c[] = {{0, 0, 0}, {2, 1, 0}, {1, -1, 2}};
    CHECK(is_admissible(c, 5));
}

TEST_CASE("attainable squared distances") {
    CHECK(is_attainable(0));
    CHECK(is_attainable(6));
    CHECK_FALSE(is_attainable(7));
    CHECK_FALSE(is_attainable(15));
    CHECK_FALSE(is_attainable(28));
    CHECK(is_attainable(29));
}

TEST_CASE("O_h has 48 distinct elements, half of them rotations") {
    const auto& g = oh_elements();
    CHECK(g.size() == 48);
    CHECK(g.front() == SignedPermutation::identity());
    CHECK(std::set<SignedPermutation>(g.begin(), g.end()).size() == 48);
    CHECK(std::count_if(g.begin(), g.end(), [](const auto& e) { return e.det() == 1; }) == 24);
}

TEST_CASE("O_h is closed under products and inverses") {
    const auto& g = oh_elements();
    const std::set<SignedPermutation> all(g.begin(), g.end());
    for (const auto& a : g) {
        CHECK(a * a.inverse() == SignedPermutation::identity());
        CHECK(all.count(a.inverse()) == 1);
        for (const auto& b : g) CHECK(all.count(a * b) == 1);
    }
}

TEST_CASE("rotation kinds follow the class sizes of the cube group") {
    std::map<RotationKind, int> n;
    for (const auto& g : oh_elements())
        if (g.det() == 1) ++n[rotation_kind(g)];
    CHECK(n[RotationKind::identity] == 1);
    CHECK(n[RotationKind::quarter_turn_axis] == 6);
    CHECK(n[RotationKind::half_turn_axis] == 3);
    CHECK(n[RotationKind::half_turn_face_diagonal] == 6);
    CHECK(n[RotationKind::third_turn_main_diagonal] == 8);
}

TEST_CASE("squared distance is symmetric and O_h invariant") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coord(-50, 50);
    for (int trial = 0; trial < 200; ++trial) {
        const Site a{coord(rng), coord(rng), coord(rng)};
        const Site b{coord(rng), coord(rng), coord(rng)};
        CHECK(sq_dist(a, b) == sq_dist(b, a));
        for (const auto& g : oh_elements()) CHECK(sq_dist(g.apply(a), g.apply(b)) == sq_dist(a, b));
    }
}

TEST_CASE("Hermite normal form is canonical") {
    const Mat3 fcc{Site{1, 1, 0}, Site{0, 1, 1}, Site{1, 0, 1}};
    const Mat3 h = hermite_normal_form(fcc);
    CHECK(det(h) == 2);
    CHECK(h[1][0] == 0);
    CHECK(h[2][0] == 0);
    CHECK(h[2][1] == 0);
    CHECK(hermite_normal_form(h) == h);
    // A unimodular change of basis gives the same form.
    const Mat3 other{fcc[0] + fcc[1], fcc[1], 3 * fcc[1] + fcc[2]};
    CHECK(hermite_normal_form(other) == h);
    CHECK(in_lattice({2, 0, 0}, h));
    CHECK_FALSE(in_lattice({1, 0, 0}, h));
    CHECK(cell_sites(h).size() == 2);
}

TEST_CASE("Hermite normal form rejects rank-deficient generators") {
    const Mat3 flat{Site{1, 0, 0}, Site{0, 1, 0}, Site{1, 1, 0}};
    CHECK_THROWS_AS(hermite_normal_form(flat), std::invalid_argument);
}

TEST_CASE("reduce_mod lands in the box and stays in the coset") {
    const Mat3 h = hermite_normal_form(Mat3{Site{2, 1, 0}, Site{0, 3, 1}, Site{1, 0, 4}});
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coord(-40, 40);
    for (int trial = 0; trial < 300; ++trial) {
        const Site s{coord(rng), coord(rng), coord(rng)};
        const Site r = reduce_mod(s, h);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(r[i] >= 0);
            CHECK(r[i] < h[i][i]);
        }
        CHECK(in_lattice(s - r, h));
    }
}

TEST_CASE("rationals print as p/q and parse back") {
    CHECK(to_string(Rational(1)) == "1/1");
    CHECK(to_string(Rational(-2, 4)) == "-1/2");
    CHECK(parse_rational("3/9") == Rational(1, 3));
    CHECK(parse_rational("5") == Rational(5));
    CHECK_THROWS(parse_rational("x"));
}

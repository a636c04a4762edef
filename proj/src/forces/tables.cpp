#include "hclat/forces.hpp"

#include <algorithm>

namespace hcl {

UnsupportedD2::UnsupportedD2(std::int64_t d2)
    : std::invalid_argument("no LRFF known for D^2=" + std::to_string(d2)) {}

Rational ForceTable::f(std::int64_t q) const {
    if (q >= d2) return Rational(0);
    auto it = forces.find(q);
    if (it == forces.end())
        throw std::invalid_argument("squared distance " + std::to_string(q) + " is not attainable");
    return it->second;
}

const std::vector<std::int64_t>& supported_d2() {
    static const std::vector<std::int64_t> values{1, 2, 3, 4, 5, 6, 8, 9, 10, 12};
    return values;
}

bool is_supported(std::int64_t d2) {
    const auto& v = supported_d2();
    return std::find(v.begin(), v.end(), d2) != v.end();
}

ForceTable force_table(std::int64_t d2) {
    using R = Rational;
    switch (d2) {
        case 1: return {1, 1, {{0, R(1)}}};
        case 2: return {2, 2, {{0, R(1)}, {1, R(1, 6)}}};
        case 3: return {3, 3, {{0, R(1)}, {1, R(1, 6)}, {2, R(1, 6)}}};
        case 4: return {4, 4, {{0, R(1)}, {1, R(1, 2)}, {2, R(1, 4)}, {3, R(1, 8)}}};
        case 5: return {5, 3, {{0, R(1)}, {1, R(2, 3)}, {2, R(1, 3)}, {3, R(0)}, {4, R(0)}}};
        case 6:
            return {6, 6, {{0, R(1)}, {1, R(2, 3)}, {2, R(1, 3)}, {3, R(1, 8)}, {4, R(1, 6)}, {5, R(1, 24)}}};
        case 8:
            return {8, 7,
                    {{0, R(1)}, {1, R(1, 2)}, {2, R(1, 4)}, {3, R(1, 4)}, {4, R(1, 6)}, {5, R(1, 8)},
                     {6, R(1, 8)}}};
        case 9:
            return {9, 7,
                    {{0, R(1)}, {1, R(2, 3)}, {2, R(1, 2)}, {3, R(1, 4)}, {4, R(1, 6)}, {5, R(1, 6)},
                     {6, R(1, 12)}, {8, R(0)}}};
        case 10:
            return {10, 7,
                    {{0, R(1)}, {1, R(5, 6)}, {2, R(1, 2)}, {3, R(1, 2)}, {4, R(1, 3)}, {5, R(1, 6)},
                     {6, R(1, 6)}, {8, R(0)}, {9, R(0)}}};
        case 12:
            return {12, 7,
                    {{0, R(1)}, {1, R(1)}, {2, R(3, 4)}, {3, R(1, 2)}, {4, R(1, 2)}, {5, R(1, 4)},
                     {6, R(1, 8)}, {8, R(0)}, {9, R(0)}, {10, R(0)}, {11, R(0)}}};
        default: throw UnsupportedD2(d2);
    }
}

Rational normalization_constant(const ForceTable& table) {
    Rational c(0);
    for (const Site& s : ball_sites(table.ball_radius_sq).sites) c += table.f(norm_sq(s));
    return c;
}

Rational total_force(std::span<const Site> occupied, const Site& center, const ForceTable& table) {
    if (!is_admissible(occupied, table.d2)) throw std::invalid_argument("occupied set is not admissible");
    Rational sum(0);
    for (const Site& y : occupied) {
        std::int64_t q = sq_dist(center, y);
        // Sites past the ball but inside the exclusion distance carry zero force.
        if (q >= std::max(table.ball_radius_sq, table.d2))
            throw std::invalid_argument("site " + to_string(y) + " lies outside the ball");
        sum += table.f(q);
    }
    return sum;
}

Rational peierls_gap(std::int64_t d2) { return Rational(1) - force_bounds(d2).second_max; }

}  // namespace hcl

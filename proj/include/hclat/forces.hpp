#pragma once

#include "hclat/rational.hpp"
#include "hclat/site.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

namespace hcl {

// Thrown for a D^2 without a known local repelling force family.
class UnsupportedD2 : public std::invalid_argument {
public:
    explicit UnsupportedD2(std::int64_t d2);
};

struct ForceTable {
    std::int64_t d2 = 0;
    std::int64_t ball_radius_sq = 0;
    std::map<std::int64_t, Rational> forces;  // squared distance -> force

    // f(q); zero at and beyond the exclusion distance.
    Rational f(std::int64_t q) const;
};

// D^2 values with a force table: 1 (trivial) and 2,3,4,5,6,8,9,10,12.
const std::vector<std::int64_t>& supported_d2();
bool is_supported(std::int64_t d2);

ForceTable force_table(std::int64_t d2);

// C = sum of f over the verification ball.
Rational normalization_constant(const ForceTable& table);

// Total force at `center` from `occupied`. Sites past the ball but closer than
// D carry zero force. Throws on sites farther out or an inadmissible set.
Rational total_force(std::span<const Site> occupied, const Site& center, const ForceTable& table);

// Sorted multiset of squared distances from the ball center.
using Signature = std::vector<std::int64_t>;

// Visits every admissible subset of the ball (empty set included), sites
// given as indices into ball_sites(table.ball_radius_sq).sites in increasing
// order. Subsets are produced in depth-first lexicographic order. Returns the
// number of visited subsets.
std::uint64_t enumerate_ball_acs(std::int64_t d2,
                                 const std::function<void(std::span<const std::size_t>)>& visitor);

struct BallSearchReport {
    std::int64_t d2 = 0;
    std::uint64_t config_count = 0;
    Rational fstar;
    Rational second_max;
    std::int64_t max_occupancy = 0;
    std::set<Signature> signatures;
};

// Exhaustive search. `threads` only splits the work; the report is identical
// for every value.
BallSearchReport verify_forces(std::int64_t d2, unsigned threads = 1);

std::set<Signature> maximal_signatures(std::int64_t d2, unsigned threads = 1);

// Largest and second-largest total force via branch and bound (lexicographic
// candidate order, pruning on the optimistic remaining-force bound).
struct ForceBounds {
    Rational fstar;
    Rational second_max;
    std::uint64_t nodes = 0;
};
ForceBounds force_bounds(std::int64_t d2);

// 1 - second_max.
Rational peierls_gap(std::int64_t d2);

}  // namespace hcl

#include "hclat/site.hpp"

#include <stdexcept>

namespace hcl {

BallTemplate ball_sites(std::int64_t radius_sq) {
    if (radius_sq < 1) throw std::invalid_argument("ball radius_sq must be positive");
    std::int64_t r = 0;
    while ((r + 1) * (r + 1) < radius_sq) ++r;
    BallTemplate ball{radius_sq, {}};
    // Nested loops in increasing order already yield lexicographic order.
    for (std::int64_t a = -r; a <= r; ++a)
        for (std::int64_t b = -r; b <= r; ++b)
            for (std::int64_t c = -r; c <= r; ++c)
                if (a * a + b * b + c * c < radius_sq) ball.sites.push_back({a, b, c});
    return ball;
}

bool is_admissible(std::span<const Site> sites, std::int64_t d2) {
    for (std::size_t i = 0; i < sites.size(); ++i)
        for (std::size_t j = i + 1; j < sites.size(); ++j)
            if (sites[i] != sites[j] && sq_dist(sites[i], sites[j]) < d2) return false;
    return true;
}

}  // namespace hcl

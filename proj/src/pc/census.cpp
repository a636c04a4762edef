#include "hclat/builders.hpp"

#include <set>

namespace hcl {

std::int64_t orbit_census(const std::vector<PeriodicConfiguration>& seeds) {
    std::set<PeriodicConfiguration> seen;
    for (const auto& seed : seeds)
        for (const SignedPermutation& g : oh_elements()) {
            const PeriodicConfiguration image = seed.transformed(g);
            for (const Site& e : image.cell()) seen.insert(image.translated(e));
        }
    return static_cast<std::int64_t>(seen.size());
}

std::vector<PeriodicConfiguration> census_seeds(std::int64_t d2) {
    std::vector<PeriodicConfiguration> out;
    switch (d2) {
        case 2: out.push_back(build_fcc(1)); break;
        case 3: out.push_back(build_bcc(2)); break;
        case 8: out.push_back(build_fcc(2)); break;
        case 9:
            for (int axis = 1; axis <= 3; ++axis)
                for (int l = 0; l <= 1; ++l) out.push_back(build_phi9(axis, l));
            break;
        case 10:
            for (int i = 0; i < 4; ++i)
                for (int l = 0; l <= 1; ++l) out.push_back(build_phi10(i, l));
            break;
        case 12: out.push_back(build_bcc(4)); break;
        default: throw std::invalid_argument("no finite census for D^2=" + std::to_string(d2));
    }
    for (auto& pc : out) pc.set_context_d2(d2);
    return out;
}

CensusResult pc_census(std::int64_t d2) {
    if (d2 == 4 || d2 == 5 || d2 == 6) return {std::nullopt, "ℵ₀"};
    return {orbit_census(census_seeds(d2)), ""};
}

std::int64_t hcp_census() {
    std::vector<PeriodicConfiguration> seeds;
    for (int i = 0; i < 4; ++i) {
        seeds.push_back(build_layered_d5(i, "01"));
        seeds.push_back(build_layered_d5(i, "02"));
    }
    return orbit_census(seeds);
}

std::int64_t sliding_witness(std::int64_t l, std::int64_t n) {
    if (l < 1 || n < 1) throw std::invalid_argument("l and n must be positive");
    auto in_prism = [&](const Site& s) {
        return s.x1 >= 0 && s.x1 < 2 * l && s.x2 >= 0 && s.x2 < 2 * l && s.x3 >= 0 && s.x3 < n;
    };
    auto in_2z3 = [](const Site& s) { return s.x1 % 2 == 0 && s.x2 % 2 == 0 && s.x3 % 2 == 0; };

    // Inside the prism the columns over the l x l square are lifted by one.
    std::vector<Site> inner;
    for (std::int64_t a = 0; a < l; ++a)
        for (std::int64_t b = 0; b < l; ++b)
            for (std::int64_t z = 1; z < n; z += 2) inner.push_back({2 * a, 2 * b, z});

    const auto vs = short_vectors(4);
    std::set<Site> removed;
    for (const Site& p : inner)
        for (const Site& v : vs) {
            const Site y = p + v;
            if (!in_prism(y) && in_2z3(y)) removed.insert(y);
        }
    return static_cast<std::int64_t>(removed.size());
}

}  // namespace hcl

#include "hclat/builders.hpp"

namespace hcl {

PeriodicConfiguration build_cubic(std::int64_t l) {
    if (l < 1) throw std::invalid_argument("l must be positive");
    return PeriodicConfiguration::lattice({Site{l, 0, 0}, Site{0, l, 0}, Site{0, 0, l}});
}

PeriodicConfiguration build_fcc(std::int64_t l) {
    if (l < 1) throw std::invalid_argument("l must be positive");
    return PeriodicConfiguration::lattice({Site{l, l, 0}, Site{l, 0, l}, Site{0, l, l}});
}

PeriodicConfiguration build_bcc(std::int64_t side) {
    if (side < 2 || side % 2 != 0) throw std::invalid_argument("BCC side must be even and positive");
    const std::int64_t h = side / 2;
    return PeriodicConfiguration::lattice({Site{side, 0, 0}, Site{0, side, 0}, Site{h, h, h}});
}

PeriodicConfiguration build_phi9(int axis, int l) {
    if (axis < 1 || axis > 3 || l < 0 || l > 1) throw std::invalid_argument("phi9 index out of range");
    Mat3 b{Site{0, 3, 1}, Site{0, -1, 3}, Site{2, 1, 2}};
    if (l == 1)
        for (Site& r : b) r = SignedPermutation({0, 1, 2}, {1, 1, -1}).apply(r);
    if (axis == 2)
        for (Site& r : b) r = SignedPermutation({1, 0, 2}, {-1, 1, 1}).apply(r);  // pi/2 about x3
    if (axis == 3)
        for (Site& r : b) r = SignedPermutation({2, 1, 0}, {1, 1, -1}).apply(r);  // pi/2 about x2
    return PeriodicConfiguration::lattice(b);
}

PeriodicConfiguration build_phi10(int i, int l) {
    if (l < 0 || l > 1) throw std::invalid_argument("phi10 index out of range");
    const Site d = main_diagonal(i);
    const std::int64_t s2 = d.x2, s3 = d.x3;
    if (l == 0) return PeriodicConfiguration::lattice({Site{-1, -3 * s2, 4 * s3}, Site{3, -4 * s2, s3}, Site{0, 3 * s2, -s3}});
    return PeriodicConfiguration::lattice({Site{-1, 4 * s2, -3 * s3}, Site{3, s2, -4 * s3}, Site{0, -s2, 3 * s3}});
}

}  // namespace hcl

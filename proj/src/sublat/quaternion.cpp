#include "hclat/sublattice.hpp"

#include <stdexcept>

namespace hcl {

Mat3 euler_rodrigues(const Quaternion& z) {
    if (z.norm_sq() == 0) throw std::invalid_argument("the zero quaternion defines no rotation");
    const auto [a, b, c, d] = std::array{z.a, z.b, z.c, z.d};
    return {Site{a * a + b * b - c * c - d * d, 2 * b * c - 2 * a * d, 2 * b * d + 2 * a * c},
            Site{2 * b * c + 2 * a * d, a * a - b * b + c * c - d * d, 2 * c * d - 2 * a * b},
            Site{2 * b * d - 2 * a * c, 2 * c * d + 2 * a * b, a * a - b * b - c * c + d * d}};
}

Mat3 fcc_from_cubic(const Mat3& x) {
    const auto n = norm_sq(x[0]);
    if (n == 0 || norm_sq(x[1]) != n || norm_sq(x[2]) != n || dot(x[0], x[1]) != 0 || dot(x[1], x[2]) != 0 ||
        dot(x[0], x[2]) != 0)
        throw std::invalid_argument("basis rows must be orthogonal with equal norms");
    return {x[0] + x[1], x[1] + x[2], x[0] + x[2]};
}

}  // namespace hcl

#include "hclat/symmetry.hpp"

#include <algorithm>
#include <stdexcept>

namespace hcl {

SignedPermutation::SignedPermutation() : SignedPermutation({0, 1, 2}, {1, 1, 1}) {}

SignedPermutation::SignedPermutation(const std::array<int, 3>& perm, const std::array<int, 3>& signs) {
    std::array<bool, 3> used{};
    for (int r = 0; r < 3; ++r) {
        if (perm[r] < 0 || perm[r] > 2 || used[perm[r]]) throw std::invalid_argument("not a permutation");
        if (signs[r] != 1 && signs[r] != -1) throw std::invalid_argument("sign must be +-1");
        used[perm[r]] = true;
        m_[r][perm[r]] = signs[r];
    }
}

SignedPermutation SignedPermutation::inversion() { return SignedPermutation({0, 1, 2}, {-1, -1, -1}); }

int SignedPermutation::det() const {
    return m_[0][0] * (m_[1][1] * m_[2][2] - m_[1][2] * m_[2][1]) -
           m_[0][1] * (m_[1][0] * m_[2][2] - m_[1][2] * m_[2][0]) +
           m_[0][2] * (m_[1][0] * m_[2][1] - m_[1][1] * m_[2][0]);
}

Site SignedPermutation::apply(const Site& s) const {
    Site out;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            if (m_[r][c] != 0) out[r] = m_[r][c] > 0 ? s[c] : checked_sub(0, s[c]);
    return out;
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& o) const {
    SignedPermutation out;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            int v = 0;
            for (int k = 0; k < 3; ++k) v += m_[r][k] * o.m_[k][c];
            out.m_[r][c] = v;
        }
    return out;
}

SignedPermutation SignedPermutation::inverse() const {
    SignedPermutation out;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) out.m_[r][c] = m_[c][r];
    return out;
}

RotationKind rotation_kind(const SignedPermutation& g) {
    const SignedPermutation rot = g.det() > 0 ? g : SignedPermutation::inversion() * g;
    switch (rot.trace()) {
        case 3: return RotationKind::identity;
        case 1: return RotationKind::quarter_turn_axis;
        case 0: return RotationKind::third_turn_main_diagonal;
        case -1: {
            bool diagonal = rot.entry(0, 0) != 0 && rot.entry(1, 1) != 0 && rot.entry(2, 2) != 0;
            return diagonal ? RotationKind::half_turn_axis : RotationKind::half_turn_face_diagonal;
        }
        default: throw std::logic_error("not a rotation of the cube");
    }
}

const std::vector<SignedPermutation>& oh_elements() {
    static const std::vector<SignedPermutation> elements = [] {
        std::vector<SignedPermutation> out;
        std::array<int, 3> perm{0, 1, 2};
        do {
            for (int mask = 0; mask < 8; ++mask) {
                std::array<int, 3> signs{};
                for (int r = 0; r < 3; ++r) signs[r] = (mask >> (2 - r)) & 1 ? -1 : 1;
                out.emplace_back(perm, signs);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        return out;
    }();
    return elements;
}

}  // namespace hcl

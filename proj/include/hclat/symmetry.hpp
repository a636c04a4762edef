#pragma once

#include "hclat/site.hpp"

#include <array>
#include <vector>

namespace hcl {

// Element of O_h: a 3x3 matrix with one +-1 per row and column. Acts on
// column vectors, so (g * s)_r = sum_c m[r][c] * s_c.
class SignedPermutation {
public:
    SignedPermutation();  // identity
    SignedPermutation(const std::array<int, 3>& perm, const std::array<int, 3>& signs);

    static SignedPermutation identity() { return {}; }
    static SignedPermutation inversion();

    int entry(int r, int c) const { return m_[r][c]; }
    int det() const;
    int trace() const { return m_[0][0] + m_[1][1] + m_[2][2]; }

    Site apply(const Site& s) const;
    SignedPermutation operator*(const SignedPermutation& o) const;
    SignedPermutation inverse() const;

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
    friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

private:
    std::array<std::array<int, 3>, 3> m_{};
};

// The rotation part of g (g itself, or -g when g is improper), by the
// geometric items of the classical description of O_h.
enum class RotationKind {
    identity,
    quarter_turn_axis,        // +-pi/2 about a coordinate axis
    half_turn_axis,           // pi about a coordinate axis
    half_turn_face_diagonal,  // pi about a diagonal of a coordinate plane
    third_turn_main_diagonal  // +-2pi/3 about a main diagonal
};

RotationKind rotation_kind(const SignedPermutation& g);

// All 48 elements; identity first, then permutations in lexicographic order,
// each with its eight sign patterns.
const std::vector<SignedPermutation>& oh_elements();

}  // namespace hcl

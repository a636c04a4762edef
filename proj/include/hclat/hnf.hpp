#pragma once

#include "hclat/site.hpp"
#include "hclat/symmetry.hpp"

#include <array>
#include <span>
#include <vector>

namespace hcl {

// Rows are lattice generators.
using Mat3 = std::array<Site, 3>;

std::int64_t det(const Mat3& m);

// Row-style Hermite normal form of the lattice spanned by `generators`
// (any number of rows, full rank required): upper triangular, positive
// diagonal, entries above each pivot reduced into [0, pivot).
Mat3 hermite_normal_form(std::span<const Site> generators);
Mat3 hermite_normal_form(const Mat3& basis);

// Representative of s modulo the lattice of an HNF basis, inside the box
// [0,h00) x [0,h11) x [0,h22).
Site reduce_mod(const Site& s, const Mat3& hnf);

bool in_lattice(const Site& s, const Mat3& hnf);

// Coset representatives of Z^3 / L for an HNF basis, lexicographic.
std::vector<Site> cell_sites(const Mat3& hnf);

// Image of a lattice under g, in HNF.
Mat3 transform(const Mat3& basis, const SignedPermutation& g);

}  // namespace hcl

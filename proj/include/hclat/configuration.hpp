#pragma once

#include "hclat/forces.hpp"
#include "hclat/hnf.hpp"
#include "hclat/rational.hpp"
#include "hclat/symmetry.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace hcl {

class InadmissibleConfiguration : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A periodic configuration: translation lattice plus occupied offsets in one
// cell. Always held in canonical form: the basis is the HNF of the full
// period lattice (every translation mapping the configuration onto itself),
// offsets are reduced into the HNF box and sorted. Two configurations are
// equal iff they occupy the same sites.
class PeriodicConfiguration {
public:
    // `generators` span some period lattice (three or more rows, full rank).
    PeriodicConfiguration(std::span<const Site> generators, std::span<const Site> offsets,
                          std::optional<std::int64_t> context_d2 = std::nullopt);

    // A single lattice.
    static PeriodicConfiguration lattice(const Mat3& basis, std::optional<std::int64_t> context_d2 = std::nullopt);

    const Mat3& basis() const { return basis_; }
    const std::vector<Site>& offsets() const { return offsets_; }
    std::optional<std::int64_t> context_d2() const { return context_d2_; }
    void set_context_d2(std::optional<std::int64_t> d2) { context_d2_ = d2; }

    bool occupied(const Site& s) const;
    std::vector<Site> cell() const { return cell_sites(basis_); }
    std::vector<Site> occupied_in_box(const Site& lo, const Site& hi) const;

    PeriodicConfiguration translated(const Site& e) const;
    PeriodicConfiguration transformed(const SignedPermutation& g) const;

    friend bool operator==(const PeriodicConfiguration& a, const PeriodicConfiguration& b) {
        return a.basis_ == b.basis_ && a.offsets_ == b.offsets_;
    }
    friend auto operator<=>(const PeriodicConfiguration& a, const PeriodicConfiguration& b) {
        if (auto c = a.basis_ <=> b.basis_; c != 0) return c;
        return a.offsets_ <=> b.offsets_;
    }

private:
    Mat3 basis_;
    std::vector<Site> offsets_;
    std::optional<std::int64_t> context_d2_;
};

// Recomputes the canonical form (idempotent).
PeriodicConfiguration canonicalize(const PeriodicConfiguration& config);

Rational density(const PeriodicConfiguration& config);
std::int64_t shift_count(const PeriodicConfiguration& config);

bool is_admissible(const PeriodicConfiguration& config, std::int64_t d2);

// Total force on x from the occupied sites of the ball around it.
Rational ball_force(const PeriodicConfiguration& config, const Site& x, const ForceTable& table);

// Every site of one cell, vacant or occupied, feels total force exactly 1.
// Throws InadmissibleConfiguration when the configuration is not admissible.
bool is_perfect(const PeriodicConfiguration& config, std::int64_t d2);

// No vacant site can be occupied without breaking admissibility.
bool is_saturated(const PeriodicConfiguration& config, std::int64_t d2);

// Nonzero vectors v with |v|^2 < d2, lexicographic.
std::vector<Site> short_vectors(std::int64_t d2);

}  // namespace hcl

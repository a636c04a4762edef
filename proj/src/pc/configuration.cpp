#include "hclat/configuration.hpp"

#include <algorithm>

namespace hcl {

namespace {

std::vector<Site> reduce_all(std::span<const Site> sites, const Mat3& hnf) {
    std::vector<Site> out;
    out.reserve(sites.size());
    for (const Site& s : sites) out.push_back(reduce_mod(s, hnf));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

PeriodicConfiguration::PeriodicConfiguration(std::span<const Site> generators, std::span<const Site> offsets,
                                             std::optional<std::int64_t> context_d2)
    : basis_(hermite_normal_form(generators)), context_d2_(context_d2) {
    offsets_ = reduce_all(offsets, basis_);
    if (offsets_.empty()) throw std::invalid_argument("a configuration needs at least one occupied offset");

    // Extend the lattice by every offset difference that maps the set onto itself.
    std::vector<Site> gens(basis_.begin(), basis_.end());
    for (std::size_t k = 1; k < offsets_.size(); ++k) {
        const Site t = offsets_[k] - offsets_[0];
        bool period = std::all_of(offsets_.begin(), offsets_.end(), [&](const Site& o) {
            return std::binary_search(offsets_.begin(), offsets_.end(), reduce_mod(o + t, basis_));
        });
        if (period) gens.push_back(t);
    }
    if (gens.size() > 3) {
        basis_ = hermite_normal_form(gens);
        offsets_ = reduce_all(offsets_, basis_);
    }
}

PeriodicConfiguration PeriodicConfiguration::lattice(const Mat3& basis, std::optional<std::int64_t> context_d2) {
    const Site origin{};
    return PeriodicConfiguration(basis, std::span<const Site>(&origin, 1), context_d2);
}

bool PeriodicConfiguration::occupied(const Site& s) const {
    return std::binary_search(offsets_.begin(), offsets_.end(), reduce_mod(s, basis_));
}

std::vector<Site> PeriodicConfiguration::occupied_in_box(const Site& lo, const Site& hi) const {
    std::vector<Site> out;
    for (std::int64_t a = lo.x1; a <= hi.x1; ++a)
        for (std::int64_t b = lo.x2; b <= hi.x2; ++b)
            for (std::int64_t c = lo.x3; c <= hi.x3; ++c)
                if (occupied({a, b, c})) out.push_back({a, b, c});
    return out;
}

PeriodicConfiguration PeriodicConfiguration::translated(const Site& e) const {
    std::vector<Site> moved;
    moved.reserve(offsets_.size());
    for (const Site& o : offsets_) moved.push_back(o + e);
    return PeriodicConfiguration(basis_, moved, context_d2_);
}

PeriodicConfiguration PeriodicConfiguration::transformed(const SignedPermutation& g) const {
    Mat3 b{g.apply(basis_[0]), g.apply(basis_[1]), g.apply(basis_[2])};
    std::vector<Site> moved;
    moved.reserve(offsets_.size());
    for (const Site& o : offsets_) moved.push_back(g.apply(o));
    return PeriodicConfiguration(b, moved, context_d2_);
}

PeriodicConfiguration canonicalize(const PeriodicConfiguration& config) {
    return PeriodicConfiguration(config.basis(), config.offsets(), config.context_d2());
}

Rational density(const PeriodicConfiguration& config) {
    return Rational(static_cast<std::int64_t>(config.offsets().size()), det(config.basis()));
}

std::int64_t shift_count(const PeriodicConfiguration& config) { return det(config.basis()); }

std::vector<Site> short_vectors(std::int64_t d2) {
    std::vector<Site> out;
    for (const Site& s : ball_sites(d2).sites)
        if (s != Site{}) out.push_back(s);
    return out;
}

bool is_admissible(const PeriodicConfiguration& config, std::int64_t d2) {
    const auto vs = short_vectors(d2);
    for (const Site& o : config.offsets())
        for (const Site& v : vs)
            if (config.occupied(o + v)) return false;
    return true;
}

Rational ball_force(const PeriodicConfiguration& config, const Site& x, const ForceTable& table) {
    Rational sum(0);
    for (const Site& s : ball_sites(table.ball_radius_sq).sites)
        if (config.occupied(x + s)) sum += table.f(norm_sq(s));
    return sum;
}

bool is_perfect(const PeriodicConfiguration& config, std::int64_t d2) {
    const ForceTable table = force_table(d2);
    if (!is_admissible(config, d2))
        throw InadmissibleConfiguration("configuration is not admissible for D^2=" + std::to_string(d2));
    const auto ball = ball_sites(table.ball_radius_sq).sites;
    for (const Site& x : config.cell()) {
        Rational sum(0);
        for (const Site& s : ball)
            if (config.occupied(x + s)) sum += table.f(norm_sq(s));
        if (sum != Rational(1)) return false;
    }
    return true;
}

bool is_saturated(const PeriodicConfiguration& config, std::int64_t d2) {
    const auto vs = short_vectors(d2);
    for (const Site& x : config.cell()) {
        if (config.occupied(x)) continue;
        bool blocked = std::any_of(vs.begin(), vs.end(), [&](const Site& v) { return config.occupied(x + v); });
        if (!blocked) return false;
    }
    return true;
}

}  // namespace hcl

#include "hclat/excitation.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <set>

namespace hcl {

std::string to_string(InsertionType t) {
    switch (t) {
        case InsertionType::I: return "I";
        case InsertionType::IIa: return "IIa";
        case InsertionType::IIb: return "IIb";
        case InsertionType::IIc: return "IIc";
    }
    return "";
}

namespace {

// d2 = 2 l^2 for some l >= 1; returns l.
std::optional<std::int64_t> two_l_squared(std::int64_t d2) {
    if (d2 < 2 || d2 % 2 != 0) return std::nullopt;
    const auto l = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(d2 / 2))));
    if (l * l * 2 != d2) return std::nullopt;
    return l;
}

bool layered_d2(std::int64_t d2) { return d2 == 5 || two_l_squared(d2).has_value(); }

void check_insertion(const PeriodicConfiguration& pc, std::span<const Site> insertion, std::int64_t d2) {
    for (std::size_t a = 0; a < insertion.size(); ++a) {
        if (pc.occupied(insertion[a]))
            throw InvalidExcitation("inserted site " + to_string(insertion[a]) + " is occupied");
        for (std::size_t b = a + 1; b < insertion.size(); ++b)
            if (sq_dist(insertion[a], insertion[b]) < d2)
                throw InvalidExcitation("inserted sites " + to_string(insertion[a]) + " and " +
                                        to_string(insertion[b]) + " are too close");
    }
}

std::vector<Site> repelled_by(const PeriodicConfiguration& pc, const Site& x, const std::vector<Site>& shorts) {
    std::vector<Site> out;
    for (const Site& v : shorts)
        if (pc.occupied(x + v)) out.push_back(x + v);
    return out;
}

std::vector<Site> checked_removals(const PeriodicConfiguration& pc, std::span<const Site> removals,
                                   const std::vector<Site>& repelled) {
    std::vector<Site> out(removals.begin(), removals.end());
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw InvalidExcitation("duplicate removal");
    for (const Site& r : out) {
        if (!pc.occupied(r)) throw InvalidExcitation("removed site " + to_string(r) + " is vacant");
        if (std::binary_search(repelled.begin(), repelled.end(), r))
            throw InvalidExcitation("removed site " + to_string(r) + " is already repelled");
    }
    return out;
}

}  // namespace

std::vector<Site> repelled_set(const PeriodicConfiguration& pc, std::span<const Site> insertion, std::int64_t d2) {
    check_insertion(pc, insertion, d2);
    const auto shorts = short_vectors(d2);
    std::set<Site> out;
    for (const Site& x : insertion)
        for (const Site& y : repelled_by(pc, x, shorts)) out.insert(y);
    return {out.begin(), out.end()};
}

ExcitationReport excitation_report(const PeriodicConfiguration& pc, std::span<const Site> insertion, std::int64_t d2,
                                   std::span<const Site> removals) {
    const ForceTable table = force_table(d2);
    ExcitationReport r;
    r.repelled = repelled_set(pc, insertion, d2);
    const auto removed = checked_removals(pc, removals, r.repelled);
    r.inserted = static_cast<std::int64_t>(insertion.size());
    r.removed = static_cast<std::int64_t>(removed.size());
    r.energy = static_cast<std::int64_t>(r.repelled.size()) + r.removed - r.inserted;

    Rational sum(0);
    for (const Site& y : r.repelled) {
        Rational e(1);
        for (const Site& x : insertion) e -= table.f(sq_dist(x, y));
        r.excesses.emplace(y, e);
        sum += e;
    }
    r.identity_holds = sum == Rational(static_cast<std::int64_t>(r.repelled.size()) - r.inserted);
    try {
        r.pc_perfect = is_perfect(pc, d2);
    } catch (const InadmissibleConfiguration&) {
        r.pc_perfect = false;
    }
    if (insertion.size() == 1 && removed.empty() && layered_d2(d2))
        r.type = try_classify_insertion(pc, insertion[0], d2);
    return r;
}

std::optional<InsertionType> try_classify_insertion(const PeriodicConfiguration& pc, const Site& x, std::int64_t d2) {
    const Site single[] = {x};
    const auto rep = repelled_set(pc, single, d2);
    const std::size_t n = rep.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c) {
                const Site pa = rep[a] - x, pb = rep[b] - x, pc_ = rep[c] - x;
                if (dot(cross(pa, pb), pc_) != 0) continue;
                const auto side = sq_dist(rep[a], rep[b]);
                if (sq_dist(rep[b], rep[c]) != side || sq_dist(rep[a], rep[c]) != side) continue;
                const auto radius = norm_sq(pa);
                if (norm_sq(pb) != radius || norm_sq(pc_) != radius) continue;
                switch (n) {
                    case 3: return InsertionType::IIa;
                    case 4: return InsertionType::IIb;
                    case 5: return InsertionType::IIc;
                    default: return std::nullopt;
                }
            }
    if (n == 4) return InsertionType::I;
    return std::nullopt;
}

InsertionType classify_insertion(const PeriodicConfiguration& pc, const Site& x, std::int64_t d2) {
    if (auto t = try_classify_insertion(pc, x, d2)) return *t;
    throw UnclassifiableSite("site " + to_string(x) + " matches no insertion type for D^2=" + std::to_string(d2));
}

IIaCensus iia_census(const PeriodicConfiguration& pc, std::int64_t d2) {
    const auto l = two_l_squared(d2);
    if (d2 != 5 && !(l && *l % 3 == 0))
        throw std::invalid_argument("IIa census needs D^2=5 or D^2=2l^2 with 3 | l, got " + std::to_string(d2));
    if (!is_admissible(pc, d2)) throw InadmissibleConfiguration("configuration is not admissible for this D^2");
    IIaCensus c;
    for (const Site& x : pc.cell())
        if (!pc.occupied(x) && try_classify_insertion(pc, x, d2) == InsertionType::IIa) ++c.count;
    c.density = Rational(c.count, shift_count(pc));
    return c;
}

std::vector<Site> reduce_insertions(const PeriodicConfiguration& pc, std::span<const Site> insertion, std::int64_t d2) {
    check_insertion(pc, insertion, d2);
    std::vector<Site> cur(insertion.begin(), insertion.end());
    std::sort(cur.begin(), cur.end());
    cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
    const auto shorts = short_vectors(d2);
    const bool typed = layered_d2(d2);

    while (!cur.empty()) {
        if (typed && cur.size() == 1 && try_classify_insertion(pc, cur[0], d2) == InsertionType::IIa) break;
        std::vector<std::vector<Site>> rep;
        std::map<Site, int> repellers;
        for (const Site& x : cur) {
            rep.push_back(repelled_by(pc, x, shorts));
            for (const Site& y : rep.back()) ++repellers[y];
        }
        auto removable = std::find_if(rep.begin(), rep.end(), [&](const std::vector<Site>& ys) {
            return std::any_of(ys.begin(), ys.end(), [&](const Site& y) { return repellers[y] == 1; });
        });
        if (removable == rep.end()) break;
        cur.erase(cur.begin() + (removable - rep.begin()));
    }
    return cur;
}

namespace {

Rational cached_gap(std::int64_t d2) {
    static std::mutex m;
    static std::map<std::int64_t, Rational> cache;
    std::lock_guard lock(m);
    auto it = cache.find(d2);
    if (it == cache.end()) it = cache.emplace(d2, peierls_gap(d2)).first;
    return it->second;
}

}  // namespace

PeierlsResult peierls_check(const PeriodicConfiguration& pc, std::span<const Site> insertion, std::int64_t d2,
                            std::span<const Site> removals) {
    const ForceTable table = force_table(d2);
    const auto ball = ball_sites(table.ball_radius_sq).sites;
    const auto repelled = repelled_set(pc, insertion, d2);
    const auto removed = checked_removals(pc, removals, repelled);
    const std::set<Site> inserted(insertion.begin(), insertion.end());
    std::set<Site> gone(repelled.begin(), repelled.end());
    gone.insert(removed.begin(), removed.end());

    auto occupied = [&](const Site& s) { return inserted.count(s) > 0 || (pc.occupied(s) && gone.count(s) == 0); };

    std::set<Site> region;
    auto cover = [&](const std::set<Site>& changed) {
        for (const Site& c : changed)
            for (const Site& s : ball) region.insert(c - s);
    };
    cover(inserted);
    cover(gone);

    PeierlsResult r;
    r.hamiltonian = Rational(0);
    for (const Site& x : region) {
        Rational f(0);
        for (const Site& s : ball)
            if (occupied(x + s)) f += table.f(norm_sq(s));
        r.hamiltonian += Rational(1) - f;
        if (f < Rational(1)) ++r.support;
    }
    r.ball_size = static_cast<std::int64_t>(ball.size());
    r.gap = cached_gap(d2);
    r.slack = r.hamiltonian - r.gap * Rational(r.support, r.ball_size);
    r.holds = r.slack >= Rational(0);
    return r;
}

}  // namespace hcl

#include "hclat/forces.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <thread>

namespace hcl {

namespace {

// Subset of at most 128 ball sites.
struct Mask {
    std::uint64_t w[2]{0, 0};

    void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool empty() const { return (w[0] | w[1]) == 0; }
    Mask operator&(const Mask& o) const { return {{w[0] & o.w[0], w[1] & o.w[1]}}; }
    // Index of the lowest set bit; mask must be non-empty.
    std::size_t lowest() const {
        return w[0] ? static_cast<std::size_t>(std::countr_zero(w[0]))
                    : 64 + static_cast<std::size_t>(std::countr_zero(w[1]));
    }
    void clear_lowest() {
        if (w[0]) w[0] &= w[0] - 1;
        else w[1] &= w[1] - 1;
    }
};

// Ball geometry with forces scaled to integers over a common denominator.
struct Ball {
    ForceTable table;
    std::vector<Site> sites;
    std::vector<std::int64_t> q;       // squared distance to the center
    std::vector<std::int64_t> scaled;  // f(q) * denom
    std::int64_t denom = 1;
    std::vector<Mask> compatible_after;  // sites j > i compatible with i
    Mask all;

    explicit Ball(std::int64_t d2) : table(force_table(d2)), sites(ball_sites(table.ball_radius_sq).sites) {
        if (sites.size() > 128) throw std::logic_error("ball too large for the search engine");
        for (const auto& [dist, force] : table.forces) denom = std::lcm(denom, force.denominator());
        for (const Site& s : sites) {
            q.push_back(norm_sq(s));
            Rational f = table.f(q.back());
            scaled.push_back(f.numerator() * (denom / f.denominator()));
        }
        compatible_after.resize(sites.size());
        for (std::size_t i = 0; i < sites.size(); ++i) {
            all.set(i);
            for (std::size_t j = i + 1; j < sites.size(); ++j)
                if (sq_dist(sites[i], sites[j]) >= table.d2) compatible_after[i].set(j);
        }
    }

    Rational to_rational(std::int64_t scaled_value) const { return Rational(scaled_value, denom); }
};

// Running top-two statistics of the search.
struct Accumulator {
    std::uint64_t count = 0;
    std::int64_t best = -1;
    std::int64_t second = -1;
    std::int64_t max_occupancy = 0;
    std::set<Signature> best_signatures;

    void observe(std::int64_t value, const std::vector<std::size_t>& chosen, const Ball& ball) {
        ++count;
        max_occupancy = std::max<std::int64_t>(max_occupancy, static_cast<std::int64_t>(chosen.size()));
        if (value > best) {
            second = best;
            best = value;
            best_signatures.clear();
        } else if (value < best) {
            second = std::max(second, value);
            return;
        }
        Signature sig;
        sig.reserve(chosen.size());
        for (std::size_t i : chosen) sig.push_back(ball.q[i]);
        std::sort(sig.begin(), sig.end());
        best_signatures.insert(std::move(sig));
    }

    void merge(const Accumulator& o) {
        count += o.count;
        max_occupancy = std::max(max_occupancy, o.max_occupancy);
        if (o.best > best) {
            second = std::max(best, o.second);
            best = o.best;
            best_signatures = o.best_signatures;
        } else if (o.best == best) {
            second = std::max(second, o.second);
            best_signatures.insert(o.best_signatures.begin(), o.best_signatures.end());
        } else {
            second = std::max(second, o.best);
        }
    }
};

template <class Visit>
void descend(const Ball& ball, Mask candidates, std::int64_t value, std::vector<std::size_t>& chosen,
             const Visit& visit) {
    while (!candidates.empty()) {
        std::size_t i = candidates.lowest();
        candidates.clear_lowest();
        chosen.push_back(i);
        std::int64_t next = value + ball.scaled[i];
        visit(next, chosen);
        descend(ball, candidates & ball.compatible_after[i], next, chosen, visit);
        chosen.pop_back();
    }
}

// Subsets whose smallest index is `first`.
template <class Visit>
void branch(const Ball& ball, std::size_t first, const Visit& visit) {
    std::vector<std::size_t> chosen{first};
    visit(ball.scaled[first], chosen);
    descend(ball, ball.compatible_after[first], ball.scaled[first], chosen, visit);
}

}  // namespace

std::uint64_t enumerate_ball_acs(std::int64_t d2,
                                 const std::function<void(std::span<const std::size_t>)>& visitor) {
    Ball ball(d2);
    std::uint64_t count = 1;
    visitor({});
    for (std::size_t first = 0; first < ball.sites.size(); ++first)
        branch(ball, first, [&](std::int64_t, const std::vector<std::size_t>& chosen) {
            ++count;
            visitor(chosen);
        });
    return count;
}

BallSearchReport verify_forces(std::int64_t d2, unsigned threads) {
    const Ball ball(d2);
    const std::size_t n = ball.sites.size();
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));

    // Branches are dealt round-robin; merging is order-independent.
    std::vector<Accumulator> parts(threads);
    auto work = [&](unsigned t) {
        for (std::size_t first = t; first < n; first += threads)
            branch(ball, first, [&](std::int64_t v, const std::vector<std::size_t>& chosen) {
                parts[t].observe(v, chosen, ball);
            });
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    }

    Accumulator total;
    total.observe(0, {}, ball);  // the empty configuration
    for (const auto& p : parts) total.merge(p);

    BallSearchReport report;
    report.d2 = d2;
    report.config_count = total.count;
    report.fstar = ball.to_rational(total.best);
    report.second_max = ball.to_rational(total.second);
    report.max_occupancy = total.max_occupancy;
    report.signatures = std::move(total.best_signatures);
    return report;
}

std::set<Signature> maximal_signatures(std::int64_t d2, unsigned threads) {
    return verify_forces(d2, threads).signatures;
}

ForceBounds force_bounds(std::int64_t d2) {
    const Ball ball(d2);
    std::int64_t best = 0;  // the empty configuration
    std::int64_t second = -1;
    std::uint64_t nodes = 1;

    auto record = [&](std::int64_t v) {
        if (v > best) {
            second = best;
            best = v;
        } else if (v < best && v > second) {
            second = v;
        }
    };
    auto optimistic = [&](Mask m) {
        std::int64_t s = 0;
        for (; !m.empty(); m.clear_lowest()) s += ball.scaled[m.lowest()];
        return s;
    };
    auto search = [&](auto&& self, Mask candidates, std::int64_t value) -> void {
        while (!candidates.empty()) {
            // Nothing below can beat the current second-best value.
            if (value + optimistic(candidates) <= second) return;
            std::size_t i = candidates.lowest();
            candidates.clear_lowest();
            ++nodes;
            record(value + ball.scaled[i]);
            self(self, candidates & ball.compatible_after[i], value + ball.scaled[i]);
        }
    };
    search(search, ball.all, 0);
    return {ball.to_rational(best), ball.to_rational(second), nodes};
}

}  // namespace hcl

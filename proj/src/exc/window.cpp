#include "hclat/excitation.hpp"

#include <algorithm>
#include <thread>

namespace hcl {

namespace {

struct Partial {
    std::uint64_t examined = 0;
    std::uint64_t irreducible = 0;
    std::vector<std::vector<Site>> low_energy;
};

void extend(const PeriodicConfiguration& pc, std::int64_t d2, const std::vector<Site>& window, int max_size,
            std::vector<Site>& chosen, std::size_t next, Partial& out) {
    ++out.examined;
    const auto reduced = reduce_insertions(pc, chosen, d2);
    if (reduced == chosen) {
        ++out.irreducible;
        const auto energy = static_cast<std::int64_t>(repelled_set(pc, chosen, d2).size()) -
                            static_cast<std::int64_t>(chosen.size());
        if (energy <= 2) out.low_energy.push_back(chosen);
    }
    if (static_cast<int>(chosen.size()) == max_size) return;
    for (std::size_t k = next; k < window.size(); ++k) {
        const Site& s = window[k];
        if (std::any_of(chosen.begin(), chosen.end(), [&](const Site& c) { return sq_dist(c, s) < d2; })) continue;
        chosen.push_back(s);
        extend(pc, d2, window, max_size, chosen, k + 1, out);
        chosen.pop_back();
    }
}

}  // namespace

WindowCensus window_census(const PeriodicConfiguration& pc, std::int64_t d2, const Site& normal, std::int64_t gap,
                           std::int64_t layers, std::int64_t radius_sq, int max_size, unsigned threads) {
    if (gap < 1 || layers < 1 || radius_sq < 0 || max_size < 1)
        throw std::invalid_argument("window parameters must be positive");
    std::vector<Site> window;
    for (const Site& x : ball_sites(radius_sq + 1).sites) {
        const auto h = dot(x, normal);
        if (h >= 0 && h < layers * gap && !pc.occupied(x)) window.push_back(x);
    }

    threads = std::max(1u, threads);
    std::vector<Partial> parts(threads);
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                std::vector<Site> chosen;
                for (std::size_t k = t; k < window.size(); k += threads) {
                    chosen.assign(1, window[k]);
                    extend(pc, d2, window, max_size, chosen, k + 1, parts[t]);
                }
            });
    }

    WindowCensus c;
    c.window_sites = static_cast<std::int64_t>(window.size());
    c.sets_examined = 1;  // the empty set, trivially irreducible with energy 0
    c.irreducible = 1;
    for (auto& p : parts) {
        c.sets_examined += p.examined;
        c.irreducible += p.irreducible;
        for (auto& s : p.low_energy) c.low_energy.push_back(std::move(s));
    }
    std::sort(c.low_energy.begin(), c.low_energy.end());
    c.only_iia = std::all_of(c.low_energy.begin(), c.low_energy.end(), [&](const std::vector<Site>& s) {
        return s.size() == 1 && try_classify_insertion(pc, s[0], d2) == InsertionType::IIa;
    });
    return c;
}

}  // namespace hcl

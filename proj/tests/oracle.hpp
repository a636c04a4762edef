#pragma once

// Reference computations for the tests. Written against plain integer arrays
// so they share no code with the library beyond the standard library.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using P = std::array<long, 3>;

inline long n2(const P& a) { return a[0] * a[0] + a[1] * a[1] + a[2] * a[2]; }

inline long d2(const P& a, const P& b) {
    const P d{a[0] - b[0], a[1] - b[1], a[2] - b[2]};
    return n2(d);
}

// All points with |p|^2 < r2, by a plain cube scan.
inline std::vector<P> ball(long r2) {
    std::vector<P> out;
    for (long x = -4; x <= 4; ++x)
        for (long y = -4; y <= 4; ++y)
            for (long z = -4; z <= 4; ++z)
                if (x * x + y * y + z * z < r2) out.push_back({x, y, z});
    return out;
}

// Force tables as numerators over 24, copied from the published tables.
struct Table {
    long d2 = 0;
    long radius_sq = 0;
    std::map<long, long> f24;
    long f(long q) const {
        auto it = f24.find(q);
        return it == f24.end() ? 0 : it->second;
    }
};

inline Table table(long d2) {
    switch (d2) {
        case 2: return {2, 2, {{0, 24}, {1, 4}}};
        case 3: return {3, 3, {{0, 24}, {1, 4}, {2, 4}}};
        case 4: return {4, 4, {{0, 24}, {1, 12}, {2, 6}, {3, 3}}};
        case 5: return {5, 3, {{0, 24}, {1, 16}, {2, 8}}};
        case 6: return {6, 6, {{0, 24}, {1, 16}, {2, 8}, {3, 3}, {4, 4}, {5, 1}}};
        case 8: return {8, 7, {{0, 24}, {1, 12}, {2, 6}, {3, 6}, {4, 4}, {5, 3}, {6, 3}}};
        case 9: return {9, 7, {{0, 24}, {1, 16}, {2, 12}, {3, 6}, {4, 4}, {5, 4}, {6, 2}}};
        case 10: return {10, 7, {{0, 24}, {1, 20}, {2, 12}, {3, 12}, {4, 8}, {5, 4}, {6, 4}}};
        case 12: return {12, 7, {{0, 24}, {1, 24}, {2, 18}, {3, 12}, {4, 12}, {5, 6}, {6, 3}}};
        default: return {};
    }
}

struct BallResult {
    long max24 = 0;
    long second24 = 0;
    long max_occupancy = 0;
    std::uint64_t count = 0;
    std::set<std::vector<long>> signatures;
};

// Plain recursion over every admissible subset of the ball.
inline BallResult ball_search(long d2v) {
    const Table t = table(d2v);
    const auto pts = ball(t.radius_sq);
    BallResult r;
    std::set<long> values;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t, long)> rec = [&](std::size_t from, long sum) {
        ++r.count;
        values.insert(sum);
        r.max_occupancy = std::max<long>(r.max_occupancy, static_cast<long>(chosen.size()));
        if (sum > r.max24) {
            r.max24 = sum;
            r.signatures.clear();
        }
        if (sum == r.max24) {
            std::vector<long> sig;
            for (auto i : chosen) sig.push_back(n2(pts[i]));
            std::sort(sig.begin(), sig.end());
            r.signatures.insert(sig);
        }
        for (std::size_t i = from; i < pts.size(); ++i) {
            bool ok = true;
            for (auto j : chosen)
                if (d2(pts[i], pts[j]) < d2v) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(i);
            rec(i + 1, sum + t.f(n2(pts[i])));
            chosen.pop_back();
        }
    };
    rec(0, 0);
    auto it = values.rbegin();
    ++it;
    r.second24 = it == values.rend() ? 0 : *it;
    return r;
}

// Number of (m, n, k) with m^2 + n^2 + k^2 = n_sq.
inline long r3(long n_sq) {
    long c = 0;
    long lim = 0;
    while ((lim + 1) * (lim + 1) <= n_sq) ++lim;
    for (long a = -lim; a <= lim; ++a)
        for (long b = -lim; b <= lim; ++b) {
            const long rest = n_sq - a * a - b * b;
            if (rest < 0) continue;
            long c3 = 0;
            while (c3 * c3 < rest) ++c3;
            if (c3 * c3 == rest) c += rest == 0 ? 1 : 2;
        }
    return c;
}

// Upper triangular row HNF [[a,b,c],[0,d,e],[0,0,f]], as used by the
// independent sublattice count below.
struct Tri {
    long a, b, c, d, e, f;
    bool contains(const P& v) const {
        if (v[0] % a != 0) return false;
        const long k0 = v[0] / a;
        long y = v[1] - k0 * b, z = v[2] - k0 * c;
        if (y % d != 0) return false;
        const long k1 = y / d;
        z -= k1 * e;
        return z % f == 0;
    }
};

// Every index-l^3 sublattice of Z^3 containing three orthogonal vectors of
// squared length l^2, found by scanning all triangular bases.
inline std::vector<Tri> cubic_sublattices(long l) {
    std::vector<P> q;
    for (long x = -l; x <= l; ++x)
        for (long y = -l; y <= l; ++y)
            for (long z = -l; z <= l; ++z)
                if (x * x + y * y + z * z == l * l) q.push_back({x, y, z});
    const long n = l * l * l;
    std::vector<Tri> out;
    for (long a = 1; a <= n; ++a) {
        if (n % a) continue;
        for (long d = 1; d <= n / a; ++d) {
            if ((n / a) % d) continue;
            const long f = n / a / d;
            for (long b = 0; b < d; ++b)
                for (long c = 0; c < f; ++c)
                    for (long e = 0; e < f; ++e) {
                        const Tri t{a, b, c, d, e, f};
                        std::vector<P> in;
                        for (const P& v : q)
                            if (t.contains(v)) in.push_back(v);
                        bool cubic = false;
                        for (std::size_t i = 0; i < in.size() && !cubic; ++i)
                            for (std::size_t j = i + 1; j < in.size() && !cubic; ++j) {
                                const P& u = in[i];
                                const P& w = in[j];
                                if (u[0] * w[0] + u[1] * w[1] + u[2] * w[2] != 0) continue;
                                const P x{u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2],
                                          u[0] * w[1] - u[1] * w[0]};
                                if (x[0] % l || x[1] % l || x[2] % l) continue;
                                cubic = t.contains({x[0] / l, x[1] / l, x[2] / l});
                            }
                        if (cubic) out.push_back(t);
                    }
        }
    }
    return out;
}

}  // namespace oracle

#include "hclat/sublattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace hcl {

std::vector<CubicSublattice> enumerate_cubic_sublattices(std::int64_t l) {
    const auto q = quadruples(l);
    std::map<Mat3, Mat3> found;
    for (const Site& x1 : q)
        for (const Site& x2 : q) {
            if (dot(x1, x2) != 0) continue;
            const Site c = cross(x1, x2);
            if (c.x1 % l != 0 || c.x2 % l != 0 || c.x3 % l != 0) continue;
            const Mat3 basis{x1, x2, Site{c.x1 / l, c.x2 / l, c.x3 / l}};
            found.try_emplace(hermite_normal_form(basis), basis);
        }
    std::vector<CubicSublattice> out;
    out.reserve(found.size());
    for (const auto& [hnf, basis] : found) out.push_back({hnf, basis});
    return out;
}

std::vector<PredictedBasis> predicted_class_bases(std::int64_t l) {
    if (l < 1) throw std::invalid_argument("l must be positive");
    std::vector<PredictedBasis> out;
    auto add = [&](int size, ClassParameters p, std::initializer_list<Mat3> bases) {
        for (const Mat3& b : bases) out.push_back({size, p, b});
    };
    using S = Site;

    if (l % 3 == 0) {
        const std::int64_t t = l / 3;
        add(4, {0, 0, t},
            {{S{-t, 2 * t, 2 * t}, S{2 * t, -t, 2 * t}, S{2 * t, 2 * t, -t}},
             {S{t, 2 * t, 2 * t}, S{-2 * t, -t, 2 * t}, S{-2 * t, 2 * t, -t}},
             {S{-t, -2 * t, 2 * t}, S{2 * t, t, 2 * t}, S{2 * t, -2 * t, -t}},
             {S{-t, 2 * t, -2 * t}, S{2 * t, -t, -2 * t}, S{2 * t, 2 * t, t}}});
    }

    // Gaussian integers a + bi, a > b >= 1, primitive and of odd norm.
    for (std::int64_t a = 2; a * a + 1 <= l; ++a)
        for (std::int64_t b = 1; b < a; ++b) {
            const std::int64_t norm = a * a + b * b;
            if (std::gcd(a, b) != 1 || (a - b) % 2 == 0 || l % norm != 0) continue;
            const std::int64_t t = l / norm, n = (a * a - b * b) * t, k = 2 * a * b * t;
            add(6, {a, b, t},
                {{S{l, 0, 0}, S{0, n, k}, S{0, -k, n}},
                 {S{l, 0, 0}, S{0, k, n}, S{0, n, -k}},
                 {S{0, l, 0}, S{k, 0, n}, S{n, 0, -k}},
                 {S{0, l, 0}, S{n, 0, k}, S{-k, 0, n}},
                 {S{0, 0, l}, S{n, k, 0}, S{-k, n, 0}},
                 {S{0, 0, l}, S{k, n, 0}, S{n, -k, 0}}});
        }

    // Eisenstein integers a + b omega, a > 2b >= 2.
    for (std::int64_t b = 1; 3 * b * b <= l; ++b)
        for (std::int64_t a = 2 * b + 1; a * a - a * b + b * b <= l; ++a) {
            const std::int64_t norm = a * a + b * b - a * b;
            if (std::gcd(a, b) != 1 || l % norm != 0) continue;
            const std::int64_t t = l / norm, m = (a * a - a * b) * t, n = a * b * t, k = (b * b - a * b) * t;
            add(8, {a, b, t},
                {{S{m, n, k}, S{k, m, n}, S{n, k, m}},
                 {S{m, k, n}, S{n, m, k}, S{k, n, m}},
                 {S{n, -m, k}, S{m, -k, n}, S{k, -n, m}},
                 {S{k, -m, n}, S{m, -n, k}, S{n, -k, m}},
                 {S{-m, -n, k}, S{-k, -m, n}, S{-n, -k, m}},
                 {S{-m, -k, n}, S{-n, -m, k}, S{-k, -n, m}},
                 {S{-n, m, k}, S{-m, k, n}, S{-k, n, m}},
                 {S{-k, m, n}, S{-m, n, k}, S{-n, k, m}}});
        }

    // a + b sqrt(-2), a != b, a != 2b.
    for (std::int64_t a = 1; a * a <= l; ++a)
        for (std::int64_t b = 1; a * a + 2 * b * b <= l; ++b) {
            const std::int64_t norm = a * a + 2 * b * b;
            if (a == b || a == 2 * b || std::gcd(a, b) != 1 || l % norm != 0) continue;
            const std::int64_t t = l / norm, m = a * a * t, n = 2 * b * b * t, k = 2 * a * b * t, d = m - n;
            add(12, {a, b, t},
                {{S{m, n, k}, S{n, m, -k}, S{-k, k, d}},
                 {S{m, n, -k}, S{n, m, k}, S{k, -k, d}},
                 {S{n, -m, k}, S{m, -n, -k}, S{k, k, d}},
                 {S{n, -m, -k}, S{m, -n, k}, S{-k, -k, d}},
                 {S{k, m, n}, S{-k, n, m}, S{d, -k, k}},
                 {S{-k, m, n}, S{k, n, m}, S{d, k, -k}},
                 {S{k, n, -m}, S{-k, m, -n}, S{d, k, k}},
                 {S{-k, n, -m}, S{k, m, -n}, S{d, -k, -k}},
                 {S{n, k, m}, S{m, -k, n}, S{k, d, -k}},
                 {S{n, -k, m}, S{m, k, n}, S{-k, d, k}},
                 {S{-m, k, n}, S{-n, -k, m}, S{k, d, k}},
                 {S{-m, -k, n}, S{-n, k, m}, S{-k, d, -k}}});
        }
    return out;
}

std::vector<SublatticeClass> classify_classes(std::int64_t l) {
    const auto subs = enumerate_cubic_sublattices(l);
    std::map<Mat3, std::size_t> owner;
    std::vector<SublatticeClass> classes;
    for (const auto& s : subs) {
        if (owner.count(s.hnf)) continue;
        std::set<Mat3> orbit;
        int stabilizer = 0;
        for (const SignedPermutation& g : oh_elements()) {
            const Mat3 image = transform(s.hnf, g);
            orbit.insert(image);
            if (image == s.hnf) ++stabilizer;
        }
        SublatticeClass c;
        c.size = static_cast<int>(orbit.size());
        c.stabilizer_order = stabilizer;
        c.members.assign(orbit.begin(), orbit.end());
        for (const Mat3& m : c.members) owner[m] = classes.size();
        classes.push_back(std::move(c));
    }
    for (const auto& p : predicted_class_bases(l)) {
        auto it = owner.find(hermite_normal_form(p.basis));
        if (it == owner.end()) continue;
        auto& params = classes[it->second].parameters;
        if (std::find(params.begin(), params.end(), p.parameters) == params.end()) params.push_back(p.parameters);
    }
    for (auto& c : classes) std::sort(c.parameters.begin(), c.parameters.end());
    std::sort(classes.begin(), classes.end(), [](const SublatticeClass& a, const SublatticeClass& b) {
        return std::tie(a.size, a.members.front()) < std::tie(b.size, b.members.front());
    });
    return classes;
}

ClassCountComparison compare_class_counts(std::int64_t l) {
    ClassCountComparison c;
    for (const auto& cls : classify_classes(l)) ++c.oracle[cls.size];
    c.formula = {{4, l % 3 == 0 ? 1 : 0}, {6, s2(l) / 2}, {8, s2_hat(l) / 2}, {12, s2_tilde(l) / 2}};
    for (const auto& [size, count] : c.formula) {
        auto it = c.oracle.find(size);
        if ((it == c.oracle.end() ? 0 : it->second) != count) c.mismatch = true;
    }
    return c;
}

SolutionAccounting solution_accounting(std::int64_t l) {
    static const std::map<int, std::int64_t> fresh{{1, 6}, {4, 24}, {6, 24}, {8, 48}, {12, 72}, {24, 144}};
    SolutionAccounting a;
    for (const auto& cls : classify_classes(l)) {
        auto it = fresh.find(cls.size);
        if (it == fresh.end()) throw std::logic_error("unexpected class size " + std::to_string(cls.size));
        a.class_total += it->second;
    }
    a.r3 = r3_brute(l);
    std::set<Site> covered;
    for (const auto& s : enumerate_cubic_sublattices(l))
        for (const Site& row : s.orthogonal) {
            covered.insert(row);
            covered.insert(-row);
        }
    for (const Site& q : quadruples(l))
        if (!covered.count(q)) a.unextended.push_back(q);
    return a;
}

std::vector<Mat3> quaternion_lattices(std::int64_t l) {
    if (l < 1) throw std::invalid_argument("l must be positive");
    std::set<Mat3> out;
    const auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(l))) + 1;
    for (std::int64_t a = -r; a <= r; ++a)
        for (std::int64_t b = -r; b <= r; ++b)
            for (std::int64_t c = -r; c <= r; ++c)
                for (std::int64_t d = -r; d <= r; ++d) {
                    const Quaternion z{a, b, c, d};
                    if (z.norm_sq() == l) out.insert(hermite_normal_form(euler_rodrigues(z)));
                }
    return {out.begin(), out.end()};
}

bool is_primitive(const Mat3& m) {
    std::int64_t g = 0;
    for (const Site& row : m) g = std::gcd(g, std::gcd(row.x1, std::gcd(row.x2, row.x3)));
    return g == 1;
}

bool quaternion_reproducible(std::int64_t l) {
    std::set<Mat3> reached;
    for (std::int64_t k = 1; k <= l; ++k) {
        if (l % k != 0) continue;
        for (const Mat3& m : quaternion_lattices(l / k))
            reached.insert(hermite_normal_form(Mat3{k * m[0], k * m[1], k * m[2]}));
    }
    std::set<Mat3> oracle;
    for (const auto& s : enumerate_cubic_sublattices(l)) oracle.insert(s.hnf);
    return reached == oracle;
}

FccCensus fcc_census(std::int64_t l) {
    std::set<Mat3> fcc;
    for (const auto& s : enumerate_cubic_sublattices(l)) fcc.insert(hermite_normal_form(fcc_from_cubic(s.orthogonal)));
    FccCensus c;
    c.sublattices = static_cast<std::int64_t>(fcc.size());
    if (l % 3 == 0) c.continuum = true;
    else c.configurations = c.sublattices * 2 * l * l * l;
    return c;
}

}  // namespace hcl

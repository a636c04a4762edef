#include "hclat/sublattice.hpp"

#include <cmath>
#include <stdexcept>

namespace hcl {

std::int64_t Factorization::product() const {
    std::int64_t p = 1;
    for (const auto& [q, e] : factors)
        for (int i = 0; i < e; ++i) p = checked_mul(p, q);
    return p;
}

Factorization factorize(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("factorize needs a positive integer");
    Factorization f;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) f.factors.emplace_back(p, e);
    }
    if (n > 1) f.factors.emplace_back(n, 1);
    return f;
}

namespace {

std::int64_t isqrt(std::int64_t v) {
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

std::int64_t ipow(std::int64_t p, int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) r = checked_mul(r, p);
    return r;
}

template <class Pred>
std::int64_t split_count(std::int64_t l, Pred pred) {
    std::int64_t prod = 1;
    for (const auto& [p, e] : factorize(l).factors)
        if (pred(p)) prod *= 2 * e + 1;
    return prod - 1;
}

void check_positive(std::int64_t l) {
    if (l < 1) throw std::invalid_argument("l must be positive");
}

}  // namespace

std::vector<Site> quadruples(std::int64_t l) {
    check_positive(l);
    const std::int64_t l2 = l * l;
    std::vector<Site> out;
    for (std::int64_t m = -l; m <= l; ++m)
        for (std::int64_t n = -l; n <= l; ++n) {
            const std::int64_t rest = l2 - m * m - n * n;
            if (rest < 0) continue;
            const std::int64_t k = isqrt(rest);
            if (k * k != rest) continue;
            if (k == 0) out.push_back({m, n, 0});
            else {
                out.push_back({m, n, -k});
                out.push_back({m, n, k});
            }
        }
    return out;
}

std::int64_t r3_brute(std::int64_t l) { return static_cast<std::int64_t>(quadruples(l).size()); }

std::int64_t r3_formula(std::int64_t l) {
    check_positive(l);
    std::int64_t r = 6;
    for (const auto& [p, e] : factorize(l).factors) {
        if (p == 2) continue;
        const std::int64_t sign = ((p - 1) / 2) % 2 == 0 ? 1 : -1;
        r *= (ipow(p, e + 1) - 1) / (p - 1) - sign * (ipow(p, e) - 1) / (p - 1);
    }
    return r;
}

std::int64_t s2(std::int64_t l) {
    check_positive(l);
    return split_count(l, [](std::int64_t p) { return p % 4 == 1; });
}

std::int64_t s2_hat(std::int64_t l) {
    check_positive(l);
    return split_count(l, [](std::int64_t p) { return p % 3 == 1; });
}

std::int64_t s2_tilde(std::int64_t l) {
    check_positive(l);
    return split_count(l, [](std::int64_t p) { return p % 8 == 1 || p % 8 == 3; });
}

std::int64_t r_residual(std::int64_t l) {
    return r3_formula(l) - 30 + 24 * ((l * l) % 3) - 12 * s2(l) - 24 * s2_hat(l) - 36 * s2_tilde(l);
}

}  // namespace hcl

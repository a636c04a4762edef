#include "hclat/site.hpp"

#include <stdexcept>

namespace hcl {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

Site operator+(const Site& a, const Site& b) {
    return {checked_add(a.x1, b.x1), checked_add(a.x2, b.x2), checked_add(a.x3, b.x3)};
}

Site operator-(const Site& a, const Site& b) {
    return {checked_sub(a.x1, b.x1), checked_sub(a.x2, b.x2), checked_sub(a.x3, b.x3)};
}

Site operator-(const Site& a) { return Site{} - a; }

Site operator*(std::int64_t k, const Site& a) {
    return {checked_mul(k, a.x1), checked_mul(k, a.x2), checked_mul(k, a.x3)};
}

std::int64_t dot(const Site& a, const Site& b) {
    return checked_add(checked_add(checked_mul(a.x1, b.x1), checked_mul(a.x2, b.x2)), checked_mul(a.x3, b.x3));
}

Site cross(const Site& a, const Site& b) {
    return {checked_sub(checked_mul(a.x2, b.x3), checked_mul(a.x3, b.x2)),
            checked_sub(checked_mul(a.x3, b.x1), checked_mul(a.x1, b.x3)),
            checked_sub(checked_mul(a.x1, b.x2), checked_mul(a.x2, b.x1))};
}

std::int64_t norm_sq(const Site& a) { return dot(a, a); }

std::int64_t sq_dist(const Site& a, const Site& b) { return norm_sq(a - b); }

std::string to_string(const Site& s) {
    return "(" + std::to_string(s.x1) + "," + std::to_string(s.x2) + "," + std::to_string(s.x3) + ")";
}

std::size_t SiteHash::operator()(const Site& s) const noexcept {
    auto h = static_cast<std::uint64_t>(s.x1) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(s.x2) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::uint64_t>(s.x3) + 0x94D049BB133111EBULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
}

bool is_attainable(std::int64_t q) {
    if (q < 0) return false;
    for (std::int64_t a = 0; a * a <= q; ++a)
        for (std::int64_t b = a; a * a + b * b <= q; ++b) {
            std::int64_t rest = q - a * a - b * b;
            std::int64_t c = b;
            while (c * c < rest) ++c;
            if (c * c == rest) return true;
        }
    return false;
}

}  // namespace hcl

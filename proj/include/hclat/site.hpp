#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace hcl {

// Integer point (or translation vector) of Z^3. Arithmetic is overflow-checked
// and throws std::overflow_error rather than wrapping.
struct Site {
    std::int64_t x1 = 0;
    std::int64_t x2 = 0;
    std::int64_t x3 = 0;

    constexpr std::int64_t operator[](std::size_t i) const { return i == 0 ? x1 : i == 1 ? x2 : x3; }
    constexpr std::int64_t& operator[](std::size_t i) { return i == 0 ? x1 : i == 1 ? x2 : x3; }

    friend constexpr auto operator<=>(const Site&, const Site&) = default;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

Site operator+(const Site& a, const Site& b);
Site operator-(const Site& a, const Site& b);
Site operator-(const Site& a);
Site operator*(std::int64_t k, const Site& a);

std::int64_t dot(const Site& a, const Site& b);
Site cross(const Site& a, const Site& b);
std::int64_t norm_sq(const Site& a);
std::int64_t sq_dist(const Site& a, const Site& b);

std::string to_string(const Site& s);

struct SiteHash {
    std::size_t operator()(const Site& s) const noexcept;
};

// Open lattice ball {s : |s|^2 < radius_sq} around the origin, sorted lexicographically.
struct BallTemplate {
    std::int64_t radius_sq = 0;
    std::vector<Site> sites;
};

BallTemplate ball_sites(std::int64_t radius_sq);

// True iff every pair of distinct sites is at squared distance >= d2.
bool is_admissible(std::span<const Site> sites, std::int64_t d2);

// Whether q is a sum of three squares.
bool is_attainable(std::int64_t q);

}  // namespace hcl

#pragma once

#include "hclat/hnf.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace hcl {

// Integer quaternion a + b i + c j + d k.
struct Quaternion {
    std::int64_t a = 0, b = 0, c = 0, d = 0;

    std::int64_t norm_sq() const { return a * a + b * b + c * c + d * d; }
    Quaternion conj() const { return {a, -b, -c, -d}; }
};

// l R(z) with l = |z|^2: an integer matrix whose rows are orthogonal with
// squared norm l^2. Throws for z = 0.
Mat3 euler_rodrigues(const Quaternion& z);

// Rows x1+x2, x2+x3, x1+x3 of a cubic basis; throws std::invalid_argument if
// the rows are not orthogonal of equal norm.
Mat3 fcc_from_cubic(const Mat3& basis);

struct Factorization {
    std::vector<std::pair<std::int64_t, int>> factors;  // increasing primes
    std::int64_t product() const;
};

Factorization factorize(std::int64_t n);

// Integer (m, n, k) with m^2 + n^2 + k^2 = l^2, lexicographic.
std::vector<Site> quadruples(std::int64_t l);
std::int64_t r3_brute(std::int64_t l);
// Closed form of r3(l^2) from the prime decomposition of l.
std::int64_t r3_formula(std::int64_t l);

// prod(2 rho + 1) - 1 over primes p = 1 mod 4, p = 1 mod 3, p = 1 or 3 mod 8.
std::int64_t s2(std::int64_t l);
std::int64_t s2_hat(std::int64_t l);
std::int64_t s2_tilde(std::int64_t l);
// r3(l^2) - 30 + 24 (l^2 mod 3) - 12 s2 - 24 s2_hat - 36 s2_tilde; r/144 is a
// lower bound for the number of 24-classes, not a count.
std::int64_t r_residual(std::int64_t l);

struct CubicSublattice {
    Mat3 hnf;         // canonical form
    Mat3 orthogonal;  // a basis of three orthogonal rows of length l
};

// Every cubic l-sublattice of Z^3, sorted by canonical form.
std::vector<CubicSublattice> enumerate_cubic_sublattices(std::int64_t l);

// (a, b, t) of the generating quadratic-ring element; the 4-class has a = b = 0.
using ClassParameters = std::array<std::int64_t, 3>;

struct SublatticeClass {
    int size = 0;
    int stabilizer_order = 0;
    std::vector<Mat3> members;  // canonical forms, sorted
    std::vector<ClassParameters> parameters;  // template triples whose bases land in this class
};

// O_h orbits of the cubic l-sublattices, ordered by size then first member.
std::vector<SublatticeClass> classify_classes(std::int64_t l);

struct PredictedBasis {
    int class_size = 0;
    ClassParameters parameters{};
    Mat3 basis{};
};

// Bases produced by the 4-, 6-, 8- and 12-class templates for every
// admissible (a, b, t).
std::vector<PredictedBasis> predicted_class_bases(std::int64_t l);

struct ClassCountComparison {
    std::map<int, std::int64_t> oracle;   // class size -> number of classes
    std::map<int, std::int64_t> formula;  // sizes 4, 6, 8, 12
    bool mismatch = false;                // formula and oracle disagree for some size
};

ClassCountComparison compare_class_counts(std::int64_t l);

struct SolutionAccounting {
    std::int64_t class_total = 0;  // 6 + 24 #4 + 24 #6 + 48 #8 + 72 #12 + 144 #24
    std::int64_t r3 = 0;
    std::vector<Site> unextended;  // quadruples lying in no cubic sublattice
};

SolutionAccounting solution_accounting(std::int64_t l);

// Canonical forms of Z^3(z) over all quaternions z with |z|^2 = l.
std::vector<Mat3> quaternion_lattices(std::int64_t l);

// No integer k > 1 divides every entry.
bool is_primitive(const Mat3& m);

// Whether every cubic l-sublattice equals k Z^3(z) for some k >= 1 and a
// quaternion with k |z|^2 = l.
bool quaternion_reproducible(std::int64_t l);

struct FccCensus {
    std::int64_t sublattices = 0;
    std::optional<std::int64_t> configurations;  // sublattices * 2 l^3 when 3 does not divide l
    bool continuum = false;                     // 3 | l: layered configurations also exist
};

FccCensus fcc_census(std::int64_t l);

}  // namespace hcl

#include "hclat/hnf.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace hcl {

std::int64_t det(const Mat3& m) {
    return dot(m[0], cross(m[1], m[2]));
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

Mat3 hermite_normal_form(std::span<const Site> generators) {
    std::vector<Site> rows(generators.begin(), generators.end());
    if (rows.size() < 3) throw std::invalid_argument("need at least three generators");
    for (std::size_t col = 0; col < 3; ++col) {
        // Euclid on column `col` among rows [col, end) until one nonzero entry remains.
        while (true) {
            std::size_t pivot = rows.size();
            for (std::size_t r = col; r < rows.size(); ++r)
                if (rows[r][col] != 0 &&
                    (pivot == rows.size() || std::abs(rows[r][col]) < std::abs(rows[pivot][col])))
                    pivot = r;
            if (pivot == rows.size()) throw std::invalid_argument("generators are not of full rank");
            std::swap(rows[col], rows[pivot]);
            bool done = true;
            for (std::size_t r = col + 1; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                std::int64_t q = rows[r][col] / rows[col][col];
                rows[r] = rows[r] - q * rows[col];
                if (rows[r][col] != 0) done = false;
            }
            if (done) break;
        }
        if (rows[col][col] < 0) rows[col] = -rows[col];
    }
    Mat3 h{rows[0], rows[1], rows[2]};
    for (std::size_t col = 1; col < 3; ++col)
        for (std::size_t r = 0; r < col; ++r) {
            std::int64_t q = floor_div(h[r][col], h[col][col]);
            if (q != 0) h[r] = h[r] - q * h[col];
        }
    return h;
}

Mat3 hermite_normal_form(const Mat3& basis) {
    return hermite_normal_form(std::span<const Site>(basis.data(), basis.size()));
}

Site reduce_mod(const Site& s, const Mat3& hnf) {
    Site v = s;
    for (std::size_t c = 0; c < 3; ++c) {
        std::int64_t q = floor_div(v[c], hnf[c][c]);
        if (q != 0) v = v - q * hnf[c];
    }
    return v;
}

bool in_lattice(const Site& s, const Mat3& hnf) { return reduce_mod(s, hnf) == Site{}; }

std::vector<Site> cell_sites(const Mat3& hnf) {
    std::vector<Site> out;
    out.reserve(static_cast<std::size_t>(hnf[0][0] * hnf[1][1] * hnf[2][2]));
    for (std::int64_t a = 0; a < hnf[0][0]; ++a)
        for (std::int64_t b = 0; b < hnf[1][1]; ++b)
            for (std::int64_t c = 0; c < hnf[2][2]; ++c) out.push_back({a, b, c});
    return out;
}

Mat3 transform(const Mat3& basis, const SignedPermutation& g) {
    return hermite_normal_form(Mat3{g.apply(basis[0]), g.apply(basis[1]), g.apply(basis[2])});
}

}  // namespace hcl

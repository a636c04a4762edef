#include "hclat/builders.hpp"

#include <numeric>

namespace hcl {

namespace {

void check_mask(const std::string& m, const char* what) {
    if (m.empty()) throw std::invalid_argument(std::string(what) + " must not be empty");
    for (char c : m)
        if (c != '0' && c != '1') throw std::invalid_argument(std::string(what) + " may only contain 0 and 1");
}

bool bit(const std::string& m, std::int64_t idx) {
    const auto n = static_cast<std::int64_t>(m.size());
    return m[static_cast<std::size_t>(((idx % n) + n) % n)] == '1';
}

}  // namespace

PeriodicConfiguration build_d4_family(const D4Spec& spec) {
    if (spec.axis < 1 || spec.axis > 3) throw std::invalid_argument("axis must be 1..3");
    if (spec.parity != 0 && spec.parity != 1) throw std::invalid_argument("parity must be 0 or 1");
    if (spec.line_axis != 1 && spec.line_axis != 2) throw std::invalid_argument("line_axis must be 1 or 2");
    if (spec.layer_masks.empty() || spec.column_shifts.empty())
        throw std::invalid_argument("layer masks and column shifts must not be empty");

    std::int64_t lu = 1, lv = static_cast<std::int64_t>(spec.column_shifts.size());
    for (const auto& row : spec.column_shifts) {
        check_mask(row, "column shift row");
        lu = std::lcm(lu, static_cast<std::int64_t>(row.size()));
    }
    for (const auto& m : spec.layer_masks) {
        check_mask(m, "layer mask");
        const auto len = static_cast<std::int64_t>(m.size());
        if (spec.line_axis == 1) lv = std::lcm(lv, len);
        else lu = std::lcm(lu, len);
    }
    const std::int64_t pu = 2 * lu, pv = 2 * lv;
    const auto layers = static_cast<std::int64_t>(spec.layer_masks.size());
    const std::int64_t pw = 2 * layers;

    // (u, v, w) -> (x1, x2, x3)
    const int wa = spec.axis - 1;
    const int ua = wa == 0 ? 1 : 0;
    const int va = wa == 2 ? 1 : 2;
    auto to_xyz = [&](std::int64_t u, std::int64_t v, std::int64_t w) {
        Site s;
        s[static_cast<std::size_t>(ua)] = u;
        s[static_cast<std::size_t>(va)] = v;
        s[static_cast<std::size_t>(wa)] = w;
        return s;
    };

    std::vector<Site> offsets;
    for (std::int64_t k = 0; k < layers; ++k) {
        const std::string& mask = spec.layer_masks[static_cast<std::size_t>(k)];
        for (std::int64_t a = 0; a < lu; ++a)
            for (std::int64_t b = 0; b < lv; ++b) {
                std::int64_t u = 2 * a, v = 2 * b;
                if (spec.line_axis == 1 && bit(mask, b)) u += 1;
                if (spec.line_axis == 2 && bit(mask, a)) v += 1;
                const std::string& row = spec.column_shifts[static_cast<std::size_t>(v) % spec.column_shifts.size()];
                const std::int64_t w = 2 * k + spec.parity + (bit(row, u) ? 1 : 0);
                offsets.push_back(to_xyz(u, v, w));
            }
    }
    const std::vector<Site> gens{to_xyz(pu, 0, 0), to_xyz(0, pv, 0), to_xyz(0, 0, pw)};
    PeriodicConfiguration pc(gens, offsets, 4);
    if (!is_admissible(pc, 4)) throw InadmissibleConfiguration("D^2=4 family parameters give an inadmissible configuration");
    if (!is_perfect(pc, 4)) throw InadmissibleConfiguration("D^2=4 family parameters give a non-perfect configuration");
    return pc;
}

}  // namespace hcl

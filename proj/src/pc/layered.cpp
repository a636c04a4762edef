#include "hclat/builders.hpp"

#include <numeric>

namespace hcl {

Site main_diagonal(int i) {
    switch (i) {
        case 0: return {1, 1, 1};
        case 1: return {1, -1, 1};
        case 2: return {1, -1, -1};
        case 3: return {1, 1, -1};
        default: throw std::invalid_argument("main diagonal index must be 0..3");
    }
}

Site face_diagonal(int i) {
    switch (i) {
        case 0: return {1, 1, 0};
        case 1: return {-1, 1, 0};
        case 2: return {1, 0, 1};
        case 3: return {-1, 0, 1};
        case 4: return {0, 1, 1};
        case 5: return {0, -1, 1};
        default: throw std::invalid_argument("non-main diagonal index must be 0..5");
    }
}

namespace {

// Layer k occupies the mesh <g1, g2> shifted by (k * step + shift[j_k]) / den.
struct LayerModel {
    Site g1, g2;
    Site normal;  // orthogonal to g1 and g2
    Site step;
    std::vector<Site> shift;
    std::int64_t den = 1;
    std::vector<int> allowed_steps;  // empty: no transition rule beyond j_k != j_{k+1}
};

LayerModel model_for(LayerFamily family, int i, std::int64_t l) {
    LayerModel m;
    switch (family) {
        case LayerFamily::d5_triangular: {
            const Site h = main_diagonal(i);
            m.g1 = {1, -2 * h.x2, h.x3};
            m.g2 = {-1, -h.x2, 2 * h.x3};
            m.normal = h;
            m.step = h;
            m.shift = {Site{}, Site{0, h.x2, -h.x3}, Site{0, -h.x2, h.x3}};
            break;
        }
        case LayerFamily::d6_triangular: {
            const Site h = main_diagonal(i);
            m.g1 = {1, -2 * h.x2, h.x3};
            m.g2 = {-1, -h.x2, 2 * h.x3};
            m.normal = h;
            m.den = 3;
            m.step = 4 * h;
            const Site w3{-2, h.x2, h.x3};
            m.shift = {Site{}, m.g1, m.g2, w3, -m.g1, -m.g2, -w3};
            m.allowed_steps = {2, 4, 6};
            break;
        }
        case LayerFamily::d6_rhombic: {
            const Site s = face_diagonal(i);
            const Site a{1 - std::abs(s.x1), 1 - std::abs(s.x2), 1 - std::abs(s.x3)};
            // 2b, integral.
            const Site b2{s.x2 - s.x2 * std::abs(s.x3) - s.x3 + s.x3 * std::abs(s.x2),
                          s.x3 - s.x3 * std::abs(s.x1) - s.x1 + s.x1 * std::abs(s.x3),
                          s.x1 - s.x1 * std::abs(s.x2) - s.x2 + s.x2 * std::abs(s.x1)};
            m.g1 = 2 * a + b2;
            m.g2 = 2 * a - b2;
            m.normal = s;
            m.den = 2;
            m.step = 3 * s;
            m.shift = {Site{}, 2 * a + b2, 2 * a - b2};  // 2(a+b), 2(a-b)
            m.allowed_steps = {1, 2};
            break;
        }
        case LayerFamily::l2_triangular: {
            if (l < 1) throw std::invalid_argument("l must be positive");
            const Site h = main_diagonal(i);
            m.g1 = l * Site{1, -h.x2, 0};
            m.g2 = l * Site{1, 0, -h.x3};
            m.normal = h;
            m.den = 3;
            m.step = (2 * l) * h;
            m.shift = {Site{}, l * Site{-2, h.x2, h.x3}, l * Site{2, -h.x2, -h.x3}};
            break;
        }
    }
    return m;
}

// x lies in the mesh lattice <g1, g2>.
bool in_mesh(const LayerModel& m, const Site& x) {
    if (dot(x, m.normal) != 0) return false;
    return in_lattice(x, hermite_normal_form(Mat3{m.g1, m.g2, m.normal}));
}

bool divisible(const Site& s, std::int64_t d) { return s.x1 % d == 0 && s.x2 % d == 0 && s.x3 % d == 0; }

Site divide(const Site& s, std::int64_t d) { return {s.x1 / d, s.x2 / d, s.x3 / d}; }

int max_digit(LayerFamily f) { return f == LayerFamily::d6_triangular ? 6 : 2; }

const char* family_name(LayerFamily f) {
    switch (f) {
        case LayerFamily::d5_triangular: return "d5-triangular";
        case LayerFamily::d6_triangular: return "d6-triangular";
        case LayerFamily::d6_rhombic: return "d6-rhombic";
        case LayerFamily::l2_triangular: return "2l2-triangular";
    }
    return "";
}

}  // namespace

void validate(const LayerSequence& seq) {
    const std::string& d = seq.digits;
    const std::string name = family_name(seq.family);
    if (d.empty()) throw InvalidSequence(name + ": empty layer sequence");
    if (d[0] != '0') throw InvalidSequence(name + ": the sequence must start with digit 0");
    for (char c : d)
        if (c < '0' || c > '0' + max_digit(seq.family))
            throw InvalidSequence(name + ": digit '" + std::string(1, c) + "' out of range");
    const std::size_t p = d.size();
    for (std::size_t k = 0; k < p; ++k)
        if (d[k] == d[(k + 1) % p])
            throw InvalidSequence(name + ": consecutive layers " + std::to_string(k) + " and " +
                                  std::to_string(k + 1) + " repeat a digit (periodically)");

    const LayerModel m = model_for(seq.family, seq.i, 1);
    if (m.allowed_steps.empty()) return;
    for (std::size_t k = 0; k < p; ++k) {
        const Site diff = m.shift[d[(k + 1) % p] - '0'] - m.shift[d[k] - '0'];
        bool ok = false;
        for (int j : m.allowed_steps) {
            const Site rest = diff - m.shift[j];
            if (divisible(rest, m.den) && in_mesh(m, divide(rest, m.den))) ok = true;
        }
        if (!ok)
            throw InvalidSequence(name + ": step from layer " + std::to_string(k) + " to " +
                                  std::to_string(k + 1) + " is not an allowed mesh shift");
    }
}

PeriodicConfiguration build_layered(const LayerSequence& seq, std::int64_t l) {
    validate(seq);
    const LayerModel m = model_for(seq.family, seq.i, l);
    const auto p = static_cast<std::int64_t>(seq.digits.size());

    std::vector<Site> offsets;
    for (std::int64_t k = 0; k < p; ++k) {
        const Site num = k * m.step + m.shift[seq.digits[static_cast<std::size_t>(k)] - '0'];
        if (!divisible(num, m.den))
            throw NonIntegralSite("layer " + std::to_string(k) + " of sequence " + seq.digits +
                                  " does not lie in Z^3");
        offsets.push_back(divide(num, m.den));
    }
    const Site period = p * m.step;
    if (!divisible(period, m.den))
        throw NonIntegralSite("the period of sequence " + seq.digits + " is not a Z^3 translation");

    std::optional<std::int64_t> d2;
    switch (seq.family) {
        case LayerFamily::d5_triangular: d2 = 5; break;
        case LayerFamily::d6_triangular:
        case LayerFamily::d6_rhombic: d2 = 6; break;
        case LayerFamily::l2_triangular: d2 = 2 * l * l; break;
    }
    return PeriodicConfiguration(Mat3{m.g1, m.g2, divide(period, m.den)}, offsets, d2);
}

PeriodicConfiguration build_layered_d5(int i, const std::string& digits) {
    return build_layered({LayerFamily::d5_triangular, i, digits});
}

PeriodicConfiguration build_layered_d6_tri(int i, const std::string& digits) {
    return build_layered({LayerFamily::d6_triangular, i, digits});
}

PeriodicConfiguration build_layered_d6_rhombic(int i, const std::string& digits) {
    return build_layered({LayerFamily::d6_rhombic, i, digits});
}

PeriodicConfiguration build_layered_2l2(std::int64_t l, int i, const std::string& digits) {
    return build_layered({LayerFamily::l2_triangular, i, digits}, l);
}

}  // namespace hcl

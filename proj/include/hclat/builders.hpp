#pragma once

#include "hclat/configuration.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hcl {

// Raised when a construction would place a particle off Z^3.
class NonIntegralSite : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised when a layer sequence breaks its family's rules.
class InvalidSequence : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

PeriodicConfiguration build_cubic(std::int64_t l);  // lZ^3
PeriodicConfiguration build_fcc(std::int64_t l);    // lA_3
PeriodicConfiguration build_bcc(std::int64_t side); // side Z^3 plus the body center; side even

// axis in {1,2,3}, l in {0,1}; determinant 20.
PeriodicConfiguration build_phi9(int axis, int l);
// i in {0..3} (main diagonal), l in {0,1}; determinant 26.
PeriodicConfiguration build_phi10(int i, int l);

enum class LayerFamily { d5_triangular, d6_triangular, d6_rhombic, l2_triangular };

// Periodic layer sequence; `digits` is one period, repeated in both directions.
struct LayerSequence {
    LayerFamily family = LayerFamily::d5_triangular;
    int i = 0;  // diagonal index
    std::string digits;
};

// Sign pattern (1, s2, s3) of main diagonal i.
Site main_diagonal(int i);
// Non-main diagonal (s1, s2, s3) for i in {0..5}.
Site face_diagonal(int i);

// Checks digits and transition rules; throws InvalidSequence.
void validate(const LayerSequence& seq);

PeriodicConfiguration build_layered_d5(int i, const std::string& digits);
PeriodicConfiguration build_layered_d6_tri(int i, const std::string& digits);
PeriodicConfiguration build_layered_d6_rhombic(int i, const std::string& digits);
// D^2 = 2l^2 triangular meshes; throws NonIntegralSite when a layer leaves Z^3.
PeriodicConfiguration build_layered_2l2(std::int64_t l, int i, const std::string& digits);
PeriodicConfiguration build_layered(const LayerSequence& seq, std::int64_t l = 1);

// D^2 = 4 family. Coordinates (u, v, w) put w along `axis` and u, v along
// the remaining axes in increasing order. Complete layers sit at
// w = 2k + parity and start from the square 2-mesh; line m of layer k (the
// line v = 2m when line_axis is 1, u = 2m when it is 2) is moved by one unit
// along itself when layer_masks[k][m] is '1' (indices taken periodically).
// A particle at (u, v) is then lifted by one in w when
// column_shifts[v][u] is '1' (periodic in both indices).
struct D4Spec {
    int axis = 3;
    int parity = 0;
    int line_axis = 1;
    std::vector<std::string> layer_masks{"0"};
    std::vector<std::string> column_shifts{"0"};
};

// Throws InadmissibleConfiguration if the result is not a D^2=4 perfect configuration.
PeriodicConfiguration build_d4_family(const D4Spec& spec);

// Count of distinct configurations among O_h images and Z^3 shifts of `seeds`.
std::int64_t orbit_census(const std::vector<PeriodicConfiguration>& seeds);

struct CensusResult {
    std::optional<std::int64_t> count;  // empty: countably many periodic PCs
    std::string marker;                 // "ℵ₀" when count is empty
};

// Finite censuses for D^2 in {2,3,8,9,10,12}; aleph-null marker for 4, 5, 6.
CensusResult pc_census(std::int64_t d2);

// The paper-constructor seeds for a finite-census D^2.
std::vector<PeriodicConfiguration> census_seeds(std::int64_t d2);

// Orbit census of the two-layer (HCP type) D^2=5 configurations.
std::int64_t hcp_census();

// Glue the l x l column-shifted configuration into 2Z^3 inside a prism of
// height n; returns the number of 2Z^3 particles that must be removed.
std::int64_t sliding_witness(std::int64_t l, std::int64_t n);

}  // namespace hcl

#pragma once

#include "hclat/configuration.hpp"

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hcl {

// An insertion or removal that does not fit its configuration.
class InvalidExcitation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised by classify_insertion when the repelled set has none of the known shapes.
class UnclassifiableSite : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class InsertionType { I, IIa, IIb, IIc };

std::string to_string(InsertionType t);

// Occupied sites within squared distance < d2 of some inserted site; sorted.
// Throws InvalidExcitation when an inserted site is occupied or two inserted
// sites are closer than the exclusion distance.
std::vector<Site> repelled_set(const PeriodicConfiguration& pc, std::span<const Site> insertion, std::int64_t d2);

struct ExcitationReport {
    std::int64_t inserted = 0;
    std::int64_t removed = 0;  // pure removals, outside the repelled set
    std::vector<Site> repelled;
    std::map<Site, Rational> excesses;
    std::int64_t energy = 0;  // repelled + removed - inserted
    bool pc_perfect = false;
    bool identity_holds = false;  // sum of excesses == repelled - inserted
    std::optional<InsertionType> type;
};

// Insert `insertion`, drop the repelled particles and additionally remove the
// occupied sites in `removals`. A removal-only excitation has energy equal to
// the number of removed particles.
ExcitationReport excitation_report(const PeriodicConfiguration& pc, std::span<const Site> insertion, std::int64_t d2,
                                   std::span<const Site> removals = {});

// Shape of the repelled set of a single inserted site: a triangle of repelled
// sites around x in its plane plus 0, 1 or 2 further sites (IIa, IIb, IIc), or
// four sites and no such triangle (I).
InsertionType classify_insertion(const PeriodicConfiguration& pc, const Site& x, std::int64_t d2);
std::optional<InsertionType> try_classify_insertion(const PeriodicConfiguration& pc, const Site& x, std::int64_t d2);

struct IIaCensus {
    std::int64_t count = 0;  // per fundamental cell
    Rational density;
};

// Type IIa insertion sites of a layered configuration. d2 must be 5, or 2l^2
// with 3 | l.
IIaCensus iia_census(const PeriodicConfiguration& pc, std::int64_t d2);

// Repeatedly drops the lexicographically smallest inserted site that is the
// only one repelling some particle. Stops when no such site exists or when a
// single type IIa insertion remains.
std::vector<Site> reduce_insertions(const PeriodicConfiguration& pc, std::span<const Site> insertion, std::int64_t d2);

struct PeierlsResult {
    bool holds = false;
    Rational hamiltonian;  // sum over x of 1 - F_X(x)
    std::int64_t support = 0;  // number of x with F_X(x) < 1
    std::int64_t ball_size = 0;
    Rational gap;
    Rational slack;  // hamiltonian - gap * support / ball_size
};

PeierlsResult peierls_check(const PeriodicConfiguration& pc, std::span<const Site> insertion, std::int64_t d2,
                            std::span<const Site> removals = {});

struct WindowCensus {
    std::int64_t window_sites = 0;
    std::uint64_t sets_examined = 0;
    std::uint64_t irreducible = 0;
    std::vector<std::vector<Site>> low_energy;  // irreducible sets of energy <= 2
    bool only_iia = false;                      // every low-energy set is a single IIa insertion
};

// Exhaustive scan of insertion sets of at most `max_size` sites drawn from
// the vacant sites x of `pc` with |x|^2 <= radius_sq lying in `layers`
// consecutive layer slabs normal to `normal` (slab k: k*gap <= x.normal < (k+1)*gap).
WindowCensus window_census(const PeriodicConfiguration& pc, std::int64_t d2, const Site& normal, std::int64_t gap,
                           std::int64_t layers, std::int64_t radius_sq, int max_size = 3, unsigned threads = 1);

}  // namespace hcl

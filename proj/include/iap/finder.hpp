#pragma once

#include <iap/graph.hpp>
#include <iap/progression.hpp>
#include <iap/sieve.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace iap {

/// Which family the finder scans first. Every scan order ends with all(), so
/// the search is complete whatever the choice.
enum class FamilyChoice { automatic, coprime, prime, all };

FamilyChoice parse_family_choice(const std::string & text);
std::string to_string(FamilyChoice choice);

/// Grid-derived edge-budget constant; reproduced by derive_epsilon().
inline constexpr double pinned_epsilon = 0.199199;

struct FinderConfig
{
    double eta = 0.1;
    double epsilon = pinned_epsilon;
    /// n >= factor * k^2 log k selects the coprime family first. Defaults to 2 / eta.
    std::optional<double> regime_threshold_factor;
    FamilyChoice family = FamilyChoice::automatic;
    /// Largest n tried by n0_upper_bound.
    Int n0_horizon = 200'000;

    double threshold_factor() const noexcept { return regime_threshold_factor.value_or(2.0 / eta); }
    /// Throws std::invalid_argument unless 0 < eta <= 1 and 0 < epsilon < 1.
    void validate() const;
};

struct Witness
{
    Progression progression;
    DifferenceFamily family_used;
    Int aps_scanned = 0;
    bool certified = false;
};

/// Largest B with B * h_max < F, where F is the family size and h_max the most
/// family progressions sharing one pair. Any graph with at most B edges and no
/// forbidden vertex misses some family progression entirely.
Int certified_edge_budget(Int n, Int k, const DifferenceFamily & family, const SieveTable & table);

/// True when n sits in the large regime, n >= factor * k^2 log k.
bool large_regime(Int n, Int k, const FinderConfig & cfg);

/// Families in the order find_independent_ap scans them.
std::vector<DifferenceFamily> scan_order(Int n, Int k, const FinderConfig & cfg);

/// First independent k-progression in scan order, or nothing if none exists.
/// `certified` is set when the graph has no forbidden vertex and its edge
/// count is within the budget of the family that produced the witness.
std::optional<Witness> find_independent_ap(const IntGraph & g, Int k, const FinderConfig & cfg,
        const SieveTable & table);

std::optional<Witness> find_rainbow_ap(const Coloring & c, Int k, const FinderConfig & cfg,
        const SieveTable & table);

std::optional<Witness> find_unmapped_ap(const PermutationMap & p, Int k, FixedPointMode mode,
        const FinderConfig & cfg, const SieveTable & table);

/// ceil(m k^2 log k / epsilon). Throws for k < 3 or m < 1.
Int sr_upper_bound(Int m, Int k, const FinderConfig & cfg);

/// ceil(k^2 log k / epsilon). Throws for k < 3.
Int tk_upper_bound(Int k, const FinderConfig & cfg);

/// Least n with n <= certified_edge_budget(n, k, first family of scan_order).
/// Throws HorizonError if no n up to cfg.n0_horizon qualifies. The table must
/// reach the horizon.
Int n0_upper_bound(Int k, const FinderConfig & cfg, const SieveTable & table);

class HorizonError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Fraction of `trials` uniform random e-edge graphs on [n] with an
/// independent k-progression (any difference).
double empirical_probe(Int n, Int k, Int e, Int trials, std::uint64_t seed);

/// The grid behind pinned_epsilon: k in [3, 8], n = k * s for the listed s.
struct EpsilonGrid
{
    Int k_min = 3;
    Int k_max = 8;
    std::vector<Int> scales{2, 3, 4, 6, 8, 12, 16, 24, 32, 48, 64, 96, 128, 192, 256, 384, 512};
};

struct EpsilonDerivation
{
    double epsilon;  ///< floor(1e6 * min ratio) / 1e6
    double raw_minimum;
    Int argmin_n;
    Int argmin_k;
};

/// For each grid point the largest valid constant is (B + 1) k^2 log k / n^2,
/// with B the budget of the finder's first family. Returns the minimum.
EpsilonDerivation derive_epsilon(const SieveTable & table, const EpsilonGrid & grid = {});

}

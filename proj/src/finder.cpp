#include <iap/finder.hpp>
#include <iap/random.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace iap {

namespace
{
    double k2logk(Int k)
    {
        double kd = static_cast<double>(k);
        return kd * kd * std::log(kd);
    }

    void require_application_k(Int k)
    {
        if (k < 3)
            throw std::invalid_argument("application bounds need k >= 3, got " + std::to_string(k));
    }

    Int ceil_to_int(double x)
    {
        if (! std::isfinite(x) || x > static_cast<double>(std::numeric_limits<Int>::max() / 2))
            throw std::overflow_error("bound does not fit in a 64-bit integer");
        return static_cast<Int>(std::ceil(x));
    }
}

FamilyChoice parse_family_choice(const std::string & text)
{
    if (text == "auto")
        return FamilyChoice::automatic;
    if (text == "coprime")
        return FamilyChoice::coprime;
    if (text == "prime")
        return FamilyChoice::prime;
    if (text == "all")
        return FamilyChoice::all;
    throw std::invalid_argument("family must be auto, coprime, prime or all, got '" + text + "'");
}

std::string to_string(FamilyChoice choice)
{
    switch (choice) {
        case FamilyChoice::automatic: return "auto";
        case FamilyChoice::coprime: return "coprime";
        case FamilyChoice::prime: return "prime";
        case FamilyChoice::all: return "all";
    }
    return "?";
}

void FinderConfig::validate() const
{
    if (! (eta > 0.0 && eta <= 1.0))
        throw std::invalid_argument("eta must lie in (0, 1]");
    if (! (epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("epsilon must lie in (0, 1)");
    if (! (threshold_factor() > 0.0) || ! std::isfinite(threshold_factor()))
        throw std::invalid_argument("regime threshold factor must be positive");
    if (n0_horizon < 1)
        throw std::invalid_argument("n0 horizon must be positive");
}

Int certified_edge_budget(Int n, Int k, const DifferenceFamily & family, const SieveTable & table)
{
    if (k < 2 || n < k)
        return 0;
    Int total = count_aps(n, k, family, table);
    if (total == 0)
        return 0;
    Int hits = max_pair_hits(n, k, family, table);
    return (total - 1) / hits;
}

bool large_regime(Int n, Int k, const FinderConfig & cfg)
{
    return static_cast<double>(n) >= cfg.threshold_factor() * k2logk(k);
}

std::vector<DifferenceFamily> scan_order(Int n, Int k, const FinderConfig & cfg)
{
    auto coprime = DifferenceFamily::coprime_to(std::max<Int>(k, 1));
    auto prime = DifferenceFamily::prime();
    auto all = DifferenceFamily::all();
    switch (cfg.family) {
        case FamilyChoice::automatic:
            if (large_regime(n, k, cfg))
                return {coprime, prime, all};
            return {prime, coprime, all};
        case FamilyChoice::coprime:
            return {coprime, all};
        case FamilyChoice::prime:
            return {prime, all};
        case FamilyChoice::all:
            return {all};
    }
    return {all};
}

std::optional<Witness> find_independent_ap(const IntGraph & g, Int k, const FinderConfig & cfg,
        const SieveTable & table)
{
    if (k < 1)
        throw std::invalid_argument("progression length must be positive");
    if (table.limit() < g.n())
        throw std::invalid_argument("sieve table does not cover [1, n]");

    Int scanned = 0;
    for (const auto & family : scan_order(g.n(), k, cfg)) {
        std::optional<Progression> hit;
        scanned += for_each_ap(g.n(), k, family, table, [&] (const Progression & p) {
            if (is_independent(g, p)) {
                hit = p;
                return false;
            }
            return true;
        });
        if (hit) {
            bool certified = k >= 2 && g.forbidden_count() == 0
                && g.edge_count() <= certified_edge_budget(g.n(), k, family, table);
            return Witness{*hit, family, scanned, certified};
        }
    }
    return std::nullopt;
}

std::optional<Witness> find_rainbow_ap(const Coloring & c, Int k, const FinderConfig & cfg,
        const SieveTable & table)
{
    return find_independent_ap(from_coloring(c), k, cfg, table);
}

std::optional<Witness> find_unmapped_ap(const PermutationMap & p, Int k, FixedPointMode mode,
        const FinderConfig & cfg, const SieveTable & table)
{
    return find_independent_ap(from_permutation(p, mode), k, cfg, table);
}

Int sr_upper_bound(Int m, Int k, const FinderConfig & cfg)
{
    require_application_k(k);
    if (m < 1)
        throw std::invalid_argument("multiplicity bound m must be positive");
    return ceil_to_int(static_cast<double>(m) * k2logk(k) / cfg.epsilon);
}

Int tk_upper_bound(Int k, const FinderConfig & cfg)
{
    require_application_k(k);
    return ceil_to_int(k2logk(k) / cfg.epsilon);
}

Int n0_upper_bound(Int k, const FinderConfig & cfg, const SieveTable & table)
{
    require_application_k(k);
    Int horizon = std::min(cfg.n0_horizon, table.limit());

    // h_max never decreases in n for a fixed family, so the last exact value
    // is a lower bound that lets most n be rejected from F alone.
    std::optional<DifferenceFamily> cached_family;
    Int hits_lower = 1;
    for (Int n = k ; n <= horizon ; ++n) {
        auto family = scan_order(n, k, cfg).front();
        if (! cached_family || ! (*cached_family == family)) {
            cached_family = family;
            hits_lower = 1;
        }
        Int total = count_aps(n, k, family, table);
        if (total == 0 || (total - 1) / hits_lower < n)
            continue;
        hits_lower = max_pair_hits(n, k, family, table);
        if ((total - 1) / hits_lower >= n)
            return n;
    }
    throw HorizonError("no n <= " + std::to_string(horizon) + " has n <= certified edge budget for k = "
            + std::to_string(k));
}

double empirical_probe(Int n, Int k, Int e, Int trials, std::uint64_t seed)
{
    if (trials < 1)
        throw std::invalid_argument("probe needs at least one trial");
    if (n < 1 || k < 1)
        throw std::invalid_argument("probe needs n, k >= 1");

    Rng rng(seed);
    Int successes = 0;
    for (Int t = 0 ; t < trials ; ++t) {
        IntGraph g = random_graph(n, e, rng);
        bool found = false;
        Int max_diff = k == 1 ? 1 : (n - 1) / (k - 1);
        for (Int d = 1 ; d <= max_diff && ! found ; ++d)
            for (Int a = 1 ; a + (k - 1) * d <= n && ! found ; ++a)
                found = is_independent(g, Progression{a, d, k});
        if (found)
            ++successes;
    }
    return static_cast<double>(successes) / static_cast<double>(trials);
}

EpsilonDerivation derive_epsilon(const SieveTable & table, const EpsilonGrid & grid)
{
    FinderConfig cfg;
    EpsilonDerivation result{0.0, std::numeric_limits<double>::infinity(), 0, 0};
    for (Int k = grid.k_min ; k <= grid.k_max ; ++k) {
        for (Int scale : grid.scales) {
            Int n = k * scale;
            auto family = scan_order(n, k, cfg).front();
            Int budget = certified_edge_budget(n, k, family, table);
            double nd = static_cast<double>(n);
            double ratio = static_cast<double>(budget + 1) * k2logk(k) / (nd * nd);
            if (ratio < result.raw_minimum) {
                result.raw_minimum = ratio;
                result.argmin_n = n;
                result.argmin_k = k;
            }
        }
    }
    result.epsilon = std::floor(result.raw_minimum * 1e6) / 1e6;
    return result;
}

}

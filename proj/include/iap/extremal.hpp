#pragma once

#include <iap/finder.hpp>
#include <iap/graph.hpp>

#include <optional>
#include <string>
#include <vector>

namespace iap {

/// COMPLETE: the search space was covered, so the verdict is proven.
/// EXHAUSTED: a budget ran out first; the absence of a witness means nothing.
enum class Outcome { complete, exhausted };

std::string to_string(Outcome outcome);

struct SearchBudget
{
    Int node_limit = 50'000'000;
    double time_limit = 60.0;  ///< seconds
};

struct ColoringSearchResult
{
    std::optional<Coloring> witness;
    Outcome outcome = Outcome::complete;
    Int nodes = 0;
};

struct PermutationSearchResult
{
    std::optional<PermutationMap> witness;
    Outcome outcome = Outcome::complete;
    Int nodes = 0;
};

/// Direct checks that scan every k-progression in [n].
bool has_rainbow_ap(const Coloring & c, Int k);
bool has_free_ap(const PermutationMap & p, Int k, FixedPointMode mode);

/// Number of set partitions of [n] with block size <= max_block and at most
/// max_blocks blocks (negative: unbounded), counted by the same canonical
/// enumeration the colouring searches use.
Int count_canonical_partitions(Int n, Int max_block, Int max_blocks = -1);

/// A colouring of [n] with every colour used at most m times and no rainbow
/// k-progression. Colourings are canonical set partitions (blocks numbered by
/// least element); a branch dies as soon as a progression ending at the newest
/// element is rainbow.
ColoringSearchResult exists_coloring_without_rainbow(Int n, Int m, Int k, const SearchBudget & budget);

/// Same, restricted to colourings of [t m] using exactly t colours m times each.
ColoringSearchResult exists_equinumerous_coloring_without_rainbow(Int t, Int m, Int k,
        const SearchBudget & budget);

struct SizeVerdict
{
    Int n = 0;
    std::optional<bool> bad_exists;  ///< empty when the search was exhausted
    Outcome outcome = Outcome::complete;
    Int nodes = 0;
};

struct SrResult
{
    std::optional<Int> value;
    Outcome outcome = Outcome::complete;
    std::vector<SizeVerdict> steps;
};

/// Least n <= n_max such that every colouring of [n] with multiplicity <= m
/// has a rainbow k-progression, with every n' in (n, n_max] confirmed too.
SrResult sr_exact(Int m, Int k, Int n_max, const SearchBudget & budget);

/// A permutation of [n] for which no k-progression A has pi(A) ∩ A empty
/// (weak mode ignores fixed points). Images are assigned to 1, 2, ... in
/// order; a branch dies once some progression can no longer be hit.
PermutationSearchResult exists_permutation_without_free_ap(Int n, Int k, FixedPointMode mode,
        const SearchBudget & budget);

struct PermutationVerdict
{
    SizeVerdict verdict;
    std::optional<PermutationMap> witness;
};

struct N0Report
{
    Int k = 0;
    FixedPointMode mode = FixedPointMode::weak;
    Int n_max = 0;
    std::vector<PermutationVerdict> steps;
    std::optional<Int> largest_bad;
    std::optional<Int> n0_upper_bound;  ///< empty if the horizon ran out
    std::optional<Int> n0_exact;        ///< only under the soundness rule
    std::string note;
};

N0Report n0_probe(Int k, FixedPointMode mode, Int n_max, const SearchBudget & budget,
        const FinderConfig & cfg, const SieveTable & table);

struct ColoringVerdict
{
    Int m = 0;
    SizeVerdict verdict;
    std::optional<Coloring> witness;
};

struct TkReport
{
    Int t = 0;
    Int k = 0;
    Int m_max = 0;
    std::vector<ColoringVerdict> steps;
    bool all_forced = false;  ///< every m <= m_max forces a rainbow progression
    std::string note;
};

TkReport tk_probe(Int t, Int k, Int m_max, const SearchBudget & budget);

}

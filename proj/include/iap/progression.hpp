#pragma once

#include <iap/sieve.hpp>

#include <string>
#include <vector>

namespace iap {

/// start, start + diff, ..., start + (length - 1) * diff.
struct Progression
{
    Int start = 1;
    Int diff = 1;
    Int length = 1;

    Int at(Int i) const noexcept { return start + i * diff; }
    Int last() const noexcept { return start + (length - 1) * diff; }
    bool contains(Int x) const noexcept;

    friend bool operator==(const Progression &, const Progression &) = default;
};

std::vector<Int> elements(const Progression & p);

/// Which common differences a progression family admits.
class DifferenceFamily
{
public:
    enum class Kind { all, coprime_to_k, prime };

    static DifferenceFamily all() { return DifferenceFamily(Kind::all, 0); }
    /// d == 1 or spf(d) > k.
    static DifferenceFamily coprime_to(Int k);
    static DifferenceFamily prime() { return DifferenceFamily(Kind::prime, 0); }

    /// Inverse of name(): "all", "prime", "coprime:K".
    static DifferenceFamily parse(const std::string & name);

    Kind kind() const noexcept { return kind_; }
    Int k() const noexcept { return k_; }
    bool needs_table() const noexcept { return kind_ != Kind::all; }

    /// The table must cover d unless the family is all().
    bool admits(Int d, const SieveTable & table) const;
    std::string name() const;

    friend bool operator==(const DifferenceFamily &, const DifferenceFamily &) = default;

private:
    DifferenceFamily(Kind kind, Int k) : kind_(kind), k_(k) {}

    Kind kind_;
    Int k_;
};

/// Visits every k-term progression in [n] with an admitted difference, in
/// (diff, start) order. k == 1 yields the n singletons with diff 1. The
/// visitor returns false to stop early; the function returns the number of
/// progressions visited.
template <typename Visitor>
Int for_each_ap(Int n, Int k, const DifferenceFamily & family, const SieveTable & table, Visitor && visit)
{
    Int visited = 0;
    if (k < 1 || n < k)
        return visited;
    if (k == 1) {
        for (Int a = 1 ; a <= n ; ++a) {
            ++visited;
            if (! visit(Progression{a, 1, 1}))
                return visited;
        }
        return visited;
    }
    for (Int d = 1 ; (k - 1) * d <= n - 1 ; ++d) {
        if (! family.admits(d, table))
            continue;
        for (Int a = 1 ; a + (k - 1) * d <= n ; ++a) {
            ++visited;
            if (! visit(Progression{a, d, k}))
                return visited;
        }
    }
    return visited;
}

std::vector<Progression> enumerate_aps(Int n, Int k, const DifferenceFamily & family, const SieveTable & table);

/// Size of the family without materialising it.
Int count_aps(Int n, Int k, const DifferenceFamily & family, const SieveTable & table);

/// floor(n/2) * |X ∩ [floor(n/2k)]|: starts from the lower half, coprime
/// differences small enough that the whole progression stays inside [n].
/// Throws std::invalid_argument when n < 2k.
Int restricted_family_size(Int n, Int k, const SieveTable & table);

/// All family progressions in [n] of length k that contain both u and v,
/// in (diff, start) order. Throws std::invalid_argument if u == v.
std::vector<Progression> aps_containing_pair(Int u, Int v, Int n, Int k,
        const DifferenceFamily & family, const SieveTable & table);

/// |aps_containing_pair(u, v, ...)| without building the list.
Int count_aps_containing_pair(Int u, Int v, Int n, Int k,
        const DifferenceFamily & family, const SieveTable & table);

/// Maximum over all pairs u < v in [n] of count_aps_containing_pair.
Int max_pair_hits(Int n, Int k, const DifferenceFamily & family, const SieveTable & table);

}

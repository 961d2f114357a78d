#include <iap/progression.hpp>

#include <algorithm>
#include <stdexcept>

namespace iap {

namespace
{
    Int floor_div(Int a, Int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
    Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

    /// Number of k-term progressions with difference d inside [n] that contain
    /// u and u + q*d. j is the position of u in the progression.
    Int hits_for_difference(Int u, Int d, Int q, Int n, Int k)
    {
        Int hi = std::min(k - 1 - q, (u - 1) / d);
        Int lo = std::max<Int>(0, ceil_div(u + (k - 1) * d - n, d));
        return hi >= lo ? hi - lo + 1 : 0;
    }

    void check_pair(Int & u, Int & v, Int n, Int k)
    {
        if (u == v)
            throw std::invalid_argument("pair endpoints must differ");
        if (u > v)
            std::swap(u, v);
        if (u < 1 || v > n)
            throw std::out_of_range("pair outside [1, n]");
        if (k < 2)
            throw std::invalid_argument("pair incidence needs k >= 2");
    }
}

bool Progression::contains(Int x) const noexcept
{
    if (x < start || x > last())
        return false;
    return (x - start) % diff == 0;
}

std::vector<Int> elements(const Progression & p)
{
    std::vector<Int> result;
    result.reserve(static_cast<std::size_t>(p.length));
    for (Int i = 0 ; i < p.length ; ++i)
        result.push_back(p.at(i));
    return result;
}

DifferenceFamily DifferenceFamily::coprime_to(Int k)
{
    if (k < 1)
        throw std::invalid_argument("coprime family needs k >= 1");
    return DifferenceFamily(Kind::coprime_to_k, k);
}

DifferenceFamily DifferenceFamily::parse(const std::string & name)
{
    if (name == "all")
        return all();
    if (name == "prime")
        return prime();
    const std::string prefix = "coprime:";
    if (name.rfind(prefix, 0) == 0) {
        std::size_t used = 0;
        auto rest = name.substr(prefix.size());
        Int k = 0;
        try {
            k = std::stoll(rest, &used);
        }
        catch (const std::exception &) {
            used = 0;
        }
        if (used == rest.size() && used > 0)
            return coprime_to(k);
    }
    throw std::invalid_argument("unknown difference family '" + name + "'");
}

bool DifferenceFamily::admits(Int d, const SieveTable & table) const
{
    if (d < 1)
        return false;
    switch (kind_) {
        case Kind::all:
            return true;
        case Kind::coprime_to_k:
            return d == 1 || table.spf(d) > k_;
        case Kind::prime:
            return table.is_prime(d);
    }
    return false;
}

std::string DifferenceFamily::name() const
{
    switch (kind_) {
        case Kind::all:
            return "all";
        case Kind::coprime_to_k:
            return "coprime:" + std::to_string(k_);
        case Kind::prime:
            return "prime";
    }
    return "?";
}

std::vector<Progression> enumerate_aps(Int n, Int k, const DifferenceFamily & family, const SieveTable & table)
{
    std::vector<Progression> result;
    for_each_ap(n, k, family, table, [&] (const Progression & p) {
        result.push_back(p);
        return true;
    });
    return result;
}

Int count_aps(Int n, Int k, const DifferenceFamily & family, const SieveTable & table)
{
    if (k < 1 || n < k)
        return 0;
    if (k == 1)
        return n;
    Int total = 0;
    for (Int d = 1 ; (k - 1) * d <= n - 1 ; ++d)
        if (family.admits(d, table))
            total += n - (k - 1) * d;
    return total;
}

Int restricted_family_size(Int n, Int k, const SieveTable & table)
{
    if (k < 1 || n < 2 * k)
        throw std::invalid_argument("restricted_family_size needs n >= 2k");
    Int max_diff = n / (2 * k);
    return (n / 2) * static_cast<Int>(coprime_differences(table, max_diff, k).size());
}

std::vector<Progression> aps_containing_pair(Int u, Int v, Int n, Int k,
        const DifferenceFamily & family, const SieveTable & table)
{
    check_pair(u, v, n, k);
    std::vector<Progression> result;
    Int gap = v - u;
    for (Int d = 1 ; d <= gap ; ++d) {
        if (gap % d != 0 || gap / d > k - 1 || ! family.admits(d, table))
            continue;
        Int q = gap / d;
        // smallest start first
        for (Int j = k - 1 - q ; j >= 0 ; --j) {
            Int a = u - j * d;
            if (a >= 1 && a + (k - 1) * d <= n)
                result.push_back(Progression{a, d, k});
        }
    }
    return result;
}

Int count_aps_containing_pair(Int u, Int v, Int n, Int k,
        const DifferenceFamily & family, const SieveTable & table)
{
    check_pair(u, v, n, k);
    Int gap = v - u;
    Int total = 0;
    for (Int q = 1 ; q <= k - 1 && q <= gap ; ++q)
        if (gap % q == 0 && family.admits(gap / q, table))
            total += hits_for_difference(u, gap / q, q, n, k);
    return total;
}

Int max_pair_hits(Int n, Int k, const DifferenceFamily & family, const SieveTable & table)
{
    if (k < 2 || n < k)
        return 0;

    // divisors[g] holds (d, q) with g = q*d, q <= k-1 and d admitted
    struct Split { Int d; Int q; };
    std::vector<std::vector<Split>> splits(static_cast<std::size_t>(n));
    for (Int d = 1 ; (k - 1) * d <= n - 1 ; ++d) {
        if (! family.admits(d, table))
            continue;
        for (Int q = 1 ; q <= k - 1 ; ++q)
            splits[q * d].push_back(Split{d, q});
    }

    // Per (d, q) the hit count is a step function of u that only rises at
    // u = 1 + j*d, so the maximum over u sits at one of those points.
    Int best = 0;
    std::vector<Int> candidates;
    for (Int gap = 1 ; gap <= n - 1 ; ++gap) {
        const auto & here = splits[gap];
        if (here.empty())
            continue;
        candidates.assign(1, 1);
        for (const auto & s : here)
            for (Int j = 1 ; j <= k - 1 - s.q ; ++j)
                candidates.push_back(1 + j * s.d);
        for (Int u : candidates) {
            if (u + gap > n)
                continue;
            Int total = 0;
            for (const auto & s : here)
                total += hits_for_difference(u, s.d, s.q, n, k);
            best = std::max(best, total);
        }
    }
    return best;
}

}

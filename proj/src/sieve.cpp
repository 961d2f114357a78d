#include <iap/sieve.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace iap {

namespace
{
    void check_range(const SieveTable & table, Int x, const char * what)
    {
        if (x > table.limit())
            throw std::out_of_range(std::string(what) + ": " + std::to_string(x)
                    + " exceeds sieve limit " + std::to_string(table.limit()));
    }

    bool rough(const SieveTable & table, Int m, Int y)
    {
        return m == 1 || table.spf(m) > y;
    }
}

SieveTable::SieveTable(Int limit, Int memory_guard) :
    limit_(limit)
{
    if (limit < 2)
        throw std::invalid_argument("sieve limit must be at least 2, got " + std::to_string(limit));
    if (limit > memory_guard)
        throw std::invalid_argument("sieve limit " + std::to_string(limit)
                + " exceeds memory guard " + std::to_string(memory_guard));

    spf_.assign(static_cast<std::size_t>(limit) + 1, 0);
    for (Int i = 2 ; i <= limit ; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = static_cast<std::uint32_t>(i);
            primes_.push_back(i);
        }
        // linear sieve: each composite is struck exactly once, by its spf
        for (Int p : primes_) {
            if (p > spf_[i] || p * i > limit)
                break;
            spf_[p * i] = static_cast<std::uint32_t>(p);
        }
    }
}

Int SieveTable::spf(Int m) const
{
    if (m < 2 || m > limit_)
        throw std::out_of_range("spf undefined for " + std::to_string(m));
    return spf_[m];
}

bool SieveTable::is_prime(Int m) const
{
    return m >= 2 && spf(m) == m;
}

SieveTable build_sieve(Int limit, Int memory_guard)
{
    return SieveTable(limit, memory_guard);
}

Int prime_count(const SieveTable & table, Int x)
{
    if (x < 0)
        throw std::out_of_range("prime_count: negative argument");
    check_range(table, x, "prime_count");
    auto primes = table.primes();
    return std::upper_bound(primes.begin(), primes.end(), x) - primes.begin();
}

Int phi_count(const SieveTable & table, Int x, Int y)
{
    if (x < 1 || y < 1)
        throw std::out_of_range("phi_count: need x >= 1 and y >= 1");
    check_range(table, x, "phi_count");
    Int count = 0;
    for (Int m = 1 ; m <= x ; ++m)
        if (rough(table, m, y))
            ++count;
    return count;
}

std::vector<Int> coprime_differences(const SieveTable & table, Int n, Int k)
{
    if (n < 1 || k < 1)
        throw std::out_of_range("coprime_differences: need n >= 1 and k >= 1");
    check_range(table, n, "coprime_differences");
    std::vector<Int> result;
    for (Int d = 1 ; d <= n ; ++d)
        if (rough(table, d, k))
            result.push_back(d);
    return result;
}

Lemma1Ratio lemma1_ratio(const SieveTable & table, Int n, Int k)
{
    if (k < 2)
        throw std::invalid_argument("lemma1_ratio: k must be at least 2");
    return Lemma1Ratio{phi_count(table, n, k), static_cast<double>(n) / std::log(static_cast<double>(k))};
}

}

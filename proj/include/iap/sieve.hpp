#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace iap {

using Int = std::int64_t;

/// Smallest-prime-factor table and ascending prime list over [2, limit].
///
/// Immutable once built; every query is a pure read.
class SieveTable
{
public:
    static constexpr Int default_memory_guard = 100'000'000;

    /// Throws std::invalid_argument if limit < 2 or limit > memory_guard.
    explicit SieveTable(Int limit, Int memory_guard = default_memory_guard);

    Int limit() const noexcept { return limit_; }

    /// Smallest prime factor of m, for 2 <= m <= limit.
    Int spf(Int m) const;
    bool is_prime(Int m) const;
    std::span<const Int> primes() const noexcept { return primes_; }

private:
    Int limit_;
    std::vector<std::uint32_t> spf_;
    std::vector<Int> primes_;
};

SieveTable build_sieve(Int limit, Int memory_guard = SieveTable::default_memory_guard);

/// pi(x): number of primes <= x.
Int prime_count(const SieveTable & table, Int x);

/// Number of m in [1, x] whose prime factors all exceed y. 1 always counts.
Int phi_count(const SieveTable & table, Int x, Int y);

/// Ascending d in [1, n] with d == 1 or spf(d) > k, i.e. coprime to every j in [2, k].
std::vector<Int> coprime_differences(const SieveTable & table, Int n, Int k);

/// Phi(n, k) * log(k) / n with the count kept exact.
struct Lemma1Ratio
{
    Int phi;             ///< exact Phi(n, k)
    double denominator;  ///< n / log(k)

    double value() const noexcept { return static_cast<double>(phi) / denominator; }
};

/// Throws std::invalid_argument for k < 2.
Lemma1Ratio lemma1_ratio(const SieveTable & table, Int n, Int k);

}

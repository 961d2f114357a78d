#include <support/oracles.hpp>

#include <algorithm>
#include <numeric>

namespace iap::oracle {

bool is_prime_trial(Int m)
{
    if (m < 2)
        return false;
    for (Int q = 2 ; q * q <= m ; ++q)
        if (m % q == 0)
            return false;
    return true;
}

bool coprime_to_all_up_to(Int d, Int k)
{
    for (Int j = 2 ; j <= k ; ++j)
        if (std::gcd(d, j) != 1)
            return false;
    return true;
}

Int prime_count_trial(Int x)
{
    Int count = 0;
    for (Int m = 2 ; m <= x ; ++m)
        count += is_prime_trial(m);
    return count;
}

Int phi_trial(Int x, Int y)
{
    Int count = 0;
    for (Int m = 1 ; m <= x ; ++m) {
        bool ok = true;
        for (Int q = 2 ; q <= y && q <= m && ok ; ++q)
            if (m % q == 0)
                ok = false;
        count += ok;
    }
    return count;
}

DiffPredicate any_difference()
{
    return [] (Int) { return true; };
}

DiffPredicate prime_difference()
{
    return [] (Int d) { return is_prime_trial(d); };
}

DiffPredicate coprime_difference(Int k)
{
    return [k] (Int d) { return coprime_to_all_up_to(d, k); };
}

std::vector<Progression> all_aps(Int n, Int k, const DiffPredicate & pred)
{
    std::vector<Progression> result;
    for (Int d = 1 ; d <= n ; ++d)
        for (Int a = 1 ; a <= n ; ++a)
            if (a + (k - 1) * d <= n && pred(d))
                result.push_back(Progression{a, d, k});
    return result;
}

std::vector<Progression> aps_through(Int u, Int v, Int n, Int k, const DiffPredicate & pred)
{
    std::vector<Progression> result;
    for (const auto & p : all_aps(n, k, pred)) {
        bool has_u = false, has_v = false;
        for (Int i = 0 ; i < k ; ++i) {
            has_u |= p.start + i * p.diff == u;
            has_v |= p.start + i * p.diff == v;
        }
        if (has_u && has_v)
            result.push_back(p);
    }
    return result;
}

Int max_pair_hits(Int n, Int k, const DiffPredicate & pred)
{
    std::vector<Int> tally(static_cast<std::size_t>((n + 1) * (n + 1)), 0);
    for (const auto & p : all_aps(n, k, pred))
        for (Int i = 0 ; i < k ; ++i)
            for (Int j = i + 1 ; j < k ; ++j)
                ++tally[(p.start + i * p.diff) * (n + 1) + p.start + j * p.diff];
    return tally.empty() ? 0 : *std::max_element(tally.begin(), tally.end());
}

bool independent_naive(const IntGraph & g, const Progression & p)
{
    std::vector<Int> xs;
    for (Int i = 0 ; i < p.length ; ++i)
        xs.push_back(p.start + i * p.diff);
    for (Int x : xs)
        if (g.forbidden(x))
            return false;
    for (Int x : xs)
        for (Int y : xs)
            if (x != y && g.adjacent(x, y))
                return false;
    return true;
}

bool has_independent_ap(const IntGraph & g, Int k)
{
    for (const auto & p : all_aps(g.n(), k, any_difference()))
        if (independent_naive(g, p))
            return true;
    return false;
}

bool rainbow(const Coloring & c, const Progression & p)
{
    std::vector<Int> colours;
    for (Int i = 0 ; i < p.length ; ++i)
        colours.push_back(c.color_of(p.start + i * p.diff));
    std::sort(colours.begin(), colours.end());
    return std::adjacent_find(colours.begin(), colours.end()) == colours.end();
}

bool unmapped(const PermutationMap & p, const Progression & a, FixedPointMode mode)
{
    std::vector<Int> xs;
    for (Int i = 0 ; i < a.length ; ++i)
        xs.push_back(a.start + i * a.diff);
    for (Int x : xs) {
        Int y = p.image(x);
        if (mode == FixedPointMode::weak && y == x)
            continue;
        if (std::find(xs.begin(), xs.end(), y) != xs.end())
            return false;
    }
    return true;
}

Int partition_count(Int n, Int max_block, Int max_blocks)
{
    if (max_blocks < 0 || max_blocks > n)
        max_blocks = n;
    // table[i][b]: partitions of an i-set into at most b blocks of size <= max_block
    std::vector<std::vector<Int>> binom(static_cast<std::size_t>(n + 1), std::vector<Int>(static_cast<std::size_t>(n + 1), 0));
    for (Int i = 0 ; i <= n ; ++i) {
        binom[i][0] = 1;
        for (Int j = 1 ; j <= i ; ++j)
            binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
    }
    std::vector<std::vector<Int>> table(static_cast<std::size_t>(n + 1),
            std::vector<Int>(static_cast<std::size_t>(max_blocks + 1), 0));
    for (Int b = 0 ; b <= max_blocks ; ++b)
        table[0][b] = 1;
    for (Int i = 1 ; i <= n ; ++i)
        for (Int b = 1 ; b <= max_blocks ; ++b)
            for (Int j = 0 ; j < max_block && j <= i - 1 ; ++j)
                table[i][b] += binom[i - 1][j] * table[i - 1 - j][b - 1];
    return table[n][max_blocks];
}

bool bad_coloring_exists_bruteforce(Int n, Int m, Int k)
{
    std::vector<Int> colours(static_cast<std::size_t>(n), 0);
    auto aps = all_aps(n, k, any_difference());
    for (;;) {
        std::vector<Int> count(static_cast<std::size_t>(n), 0);
        bool ok = true;
        for (Int c : colours)
            if (++count[c] > m)
                ok = false;
        if (ok) {
            Coloring col(colours);
            bool any = false;
            for (const auto & p : aps)
                any = any || rainbow(col, p);
            if (! any)
                return true;
        }
        Int pos = 0;
        while (pos < n && ++colours[pos] == n)
            colours[pos++] = 0;
        if (pos == n)
            return false;
    }
}

bool bad_permutation_exists_bruteforce(Int n, Int k, FixedPointMode mode)
{
    std::vector<Int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    auto aps = all_aps(n, k, any_difference());
    do {
        PermutationMap p(images);
        bool any = false;
        for (const auto & a : aps)
            any = any || unmapped(p, a, mode);
        if (! any)
            return true;
    } while (std::next_permutation(images.begin(), images.end()));
    return false;
}

IntGraph adversarial_greedy_graph(Int n, Int k, const DiffPredicate & pred, Int edges)
{
    auto aps = all_aps(n, k, pred);
    auto index = [n] (Int u, Int v) { return static_cast<std::size_t>(u * (n + 1) + v); };
    std::vector<Int> live(static_cast<std::size_t>((n + 1) * (n + 1)), 0);
    std::vector<std::vector<std::size_t>> through(live.size());
    for (std::size_t id = 0 ; id < aps.size() ; ++id) {
        const auto & p = aps[id];
        for (Int i = 0 ; i < k ; ++i)
            for (Int j = i + 1 ; j < k ; ++j) {
                auto at = index(p.start + i * p.diff, p.start + j * p.diff);
                ++live[at];
                through[at].push_back(id);
            }
    }
    std::vector<bool> dead(aps.size(), false);

    IntGraph g(n);
    for (Int e = 0 ; e < edges ; ++e) {
        Int best_u = 0, best_v = 0, best = -1;
        for (Int u = 1 ; u <= n ; ++u)
            for (Int v = u + 1 ; v <= n ; ++v)
                if (! g.adjacent(u, v) && live[index(u, v)] > best) {
                    best = live[index(u, v)];
                    best_u = u;
                    best_v = v;
                }
        if (best < 0)
            break;
        g.add_edge(best_u, best_v);
        for (auto id : through[index(best_u, best_v)]) {
            if (dead[id])
                continue;
            dead[id] = true;
            const auto & p = aps[id];
            for (Int i = 0 ; i < k ; ++i)
                for (Int j = i + 1 ; j < k ; ++j)
                    --live[index(p.start + i * p.diff, p.start + j * p.diff)];
        }
    }
    return g;
}

}

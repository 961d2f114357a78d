#include <iap/random.hpp>

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace iap {

std::uint64_t Rng::below(std::uint64_t bound)
{
    if (bound == 0)
        throw std::invalid_argument("empty range");
    // reject the top partial copy of [0, bound)
    std::uint64_t limit = engine_.max() - (engine_.max() - bound + 1) % bound;
    for (;;) {
        std::uint64_t x = engine_();
        if (x <= limit)
            return x % bound;
    }
}

Int Rng::between(Int lo, Int hi)
{
    if (hi < lo)
        throw std::invalid_argument("empty range");
    return lo + static_cast<Int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

IntGraph random_graph(Int n, Int edges, Rng & rng)
{
    Int pairs = n * (n - 1) / 2;
    if (edges < 0 || edges > pairs)
        throw std::invalid_argument("edge count outside [0, n(n-1)/2]");

    // Floyd's sampling over pair indices, then map each index to (u, v).
    std::unordered_set<Int> chosen;
    std::vector<Int> order;
    order.reserve(static_cast<std::size_t>(edges));
    for (Int j = pairs - edges ; j < pairs ; ++j) {
        Int t = static_cast<Int>(rng.below(static_cast<std::uint64_t>(j) + 1));
        Int pick = chosen.insert(t).second ? t : j;
        if (pick == j)
            chosen.insert(j);
        order.push_back(pick);
    }

    // row u (1-based) holds the pairs (u, u+1..n); first[u - 1] is its first index
    std::vector<Int> first(static_cast<std::size_t>(n));
    for (Int u = 1 ; u < n ; ++u)
        first[u] = first[u - 1] + (n - u);

    IntGraph g(n);
    for (Int index : order) {
        Int u = static_cast<Int>(std::upper_bound(first.begin(), first.end(), index) - first.begin());
        g.add_edge(u, u + 1 + index - first[u - 1]);
    }
    return g;
}

PermutationMap random_permutation(Int n, Rng & rng)
{
    std::vector<Int> images(static_cast<std::size_t>(n));
    for (Int i = 0 ; i < n ; ++i)
        images[i] = i + 1;
    rng.shuffle(images);
    return PermutationMap(std::move(images));
}

Coloring random_coloring(Int n, Int m, Rng & rng)
{
    if (n < 1 || m < 1)
        throw std::invalid_argument("random_coloring needs n, m >= 1");
    std::vector<Int> order(static_cast<std::size_t>(n));
    for (Int i = 0 ; i < n ; ++i)
        order[i] = i;
    rng.shuffle(order);
    std::vector<Int> colors(static_cast<std::size_t>(n));
    Int pos = 0;
    Int color = 0;
    while (pos < n) {
        Int size = std::min(rng.between(1, m), n - pos);
        for (Int i = 0 ; i < size ; ++i)
            colors[order[pos + i]] = color;
        pos += size;
        ++color;
    }
    return Coloring(colors);
}

Coloring block_coloring(Int n, Int m)
{
    std::vector<Int> colors(static_cast<std::size_t>(n));
    for (Int i = 0 ; i < n ; ++i)
        colors[i] = i / m;
    return Coloring(colors);
}

Coloring round_robin_coloring(Int n, Int m)
{
    Int classes = (n + m - 1) / m;
    std::vector<Int> colors(static_cast<std::size_t>(n));
    for (Int i = 0 ; i < n ; ++i)
        colors[i] = i % classes;
    return Coloring(colors);
}

}

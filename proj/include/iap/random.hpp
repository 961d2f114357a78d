#pragma once

#include <iap/graph.hpp>

#include <cstdint>
#include <random>

namespace iap {

/// All randomness goes through mt19937_64, whose output sequence is fixed by
/// the standard. Bounded draws use rejection sampling rather than
/// std::uniform_int_distribution so results do not depend on the library.
class Rng
{
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [lo, hi].
    Int between(Int lo, Int hi);

    template <typename T>
    void shuffle(std::vector<T> & items)
    {
        for (std::size_t i = items.size() ; i > 1 ; --i)
            std::swap(items[i - 1], items[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

/// Uniform over graphs on [n] with exactly `edges` edges.
IntGraph random_graph(Int n, Int edges, Rng & rng);

/// Uniform random permutation of [n].
PermutationMap random_permutation(Int n, Rng & rng);

/// Random colouring of [n] with every class of size at most m: the vertices
/// are shuffled and cut into blocks whose sizes are drawn from [1, m].
Coloring random_coloring(Int n, Int m, Rng & rng);

/// Consecutive runs of length m: 1..m get colour 0, m+1..2m colour 1, ...
Coloring block_coloring(Int n, Int m);

/// i gets colour (i - 1) mod ceil(n / m), so every class has at most m members.
Coloring round_robin_coloring(Int n, Int m);

}

#pragma once

#include <iap/progression.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace iap {

/// Simple undirected graph on the vertex set [n] = {1, ..., n}.
///
/// Self-relations never become edges; they mark the vertex forbidden, which
/// excludes it from every independent set.
class IntGraph
{
public:
    static constexpr Int max_vertices = 40'000;

    explicit IntGraph(Int n);

    Int n() const noexcept { return n_; }
    Int edge_count() const noexcept { return edge_count_; }
    Int forbidden_count() const noexcept { return forbidden_count_; }

    /// Adds {u, v}; u == v forbids u instead. Returns true if anything changed.
    bool add_edge(Int u, Int v);
    bool forbid(Int v);

    bool adjacent(Int u, Int v) const;
    bool forbidden(Int v) const;
    std::vector<Int> forbidden_vertices() const;
    Int degree(Int v) const;

    /// Each edge once, as (u, v) with u < v, lexicographic.
    std::vector<std::pair<Int, Int>> edges() const;

private:
    void check_vertex(Int v) const;
    bool test_bit(const std::uint64_t * row, Int v) const noexcept;

    Int n_;
    std::size_t words_;
    std::vector<std::uint64_t> adjacency_;
    std::vector<std::uint64_t> forbidden_;
    Int edge_count_ = 0;
    Int forbidden_count_ = 0;
};

/// Throws std::out_of_range naming the offending (1-based) edge position.
IntGraph from_edge_list(Int n, std::span<const std::pair<Int, Int>> edges);

/// A colouring of [n]; labels are interned to dense ids in order of first use.
class Coloring
{
public:
    /// colors[i - 1] is the colour id of i; ids are arbitrary integers.
    explicit Coloring(std::span<const Int> colors);
    static Coloring from_labels(std::span<const std::string> labels);

    Int n() const noexcept { return static_cast<Int>(color_of_.size()); }
    /// Dense colour id (0-based) of vertex i in [1, n].
    Int color_of(Int i) const;
    const std::string & label_of(Int i) const;
    Int color_count() const noexcept { return static_cast<Int>(multiplicity_.size()); }
    std::span<const Int> multiplicity() const noexcept { return multiplicity_; }
    Int max_multiplicity() const noexcept { return max_multiplicity_; }
    /// Dense ids of [1, n] in order.
    std::span<const Int> colors() const noexcept { return color_of_; }

private:
    Coloring() = default;
    void finish();

    std::vector<Int> color_of_;
    std::vector<std::string> labels_;
    std::vector<Int> multiplicity_;
    Int max_multiplicity_ = 0;
};

/// A bijection [n] -> [n].
class PermutationMap
{
public:
    /// images[i - 1] = pi(i). Throws std::invalid_argument if not a bijection.
    explicit PermutationMap(std::vector<Int> images);
    static PermutationMap identity(Int n);
    static PermutationMap reversal(Int n);

    Int n() const noexcept { return static_cast<Int>(image_.size()); }
    Int image(Int i) const;
    std::span<const Int> images() const noexcept { return image_; }

    friend bool operator==(const PermutationMap &, const PermutationMap &) = default;

private:
    std::vector<Int> image_;
};

/// How fixed points i == pi(i) are treated by the permutation reduction.
enum class FixedPointMode
{
    strict,  ///< i is forbidden, so pi(i) ∉ A holds literally
    weak     ///< i is unconstrained
};

FixedPointMode parse_mode(const std::string & text);
std::string to_string(FixedPointMode mode);

/// Disjoint union of cliques, one per colour class.
IntGraph from_coloring(const Coloring & c);

/// Edges {i, pi(i)} for every non-fixed i.
IntGraph from_permutation(const PermutationMap & p, FixedPointMode mode);

/// No two elements adjacent and none forbidden. Throws std::out_of_range if p
/// leaves [g.n()].
bool is_independent(const IntGraph & g, const Progression & p);

}

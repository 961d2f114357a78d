#include <iap/graph.hpp>

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace iap {

IntGraph::IntGraph(Int n) :
    n_(n)
{
    if (n < 1)
        throw std::invalid_argument("graph needs at least one vertex");
    if (n > max_vertices)
        throw std::invalid_argument("graph on " + std::to_string(n) + " vertices exceeds limit "
                + std::to_string(max_vertices));
    words_ = static_cast<std::size_t>(n + 64) / 64;
    adjacency_.assign(words_ * static_cast<std::size_t>(n + 1), 0);
    forbidden_.assign(words_, 0);
}

void IntGraph::check_vertex(Int v) const
{
    if (v < 1 || v > n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " outside [1, " + std::to_string(n_) + "]");
}

bool IntGraph::test_bit(const std::uint64_t * row, Int v) const noexcept
{
    return (row[v >> 6] >> (v & 63)) & 1U;
}

bool IntGraph::add_edge(Int u, Int v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        return forbid(u);
    if (adjacent(u, v))
        return false;
    adjacency_[words_ * u + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    adjacency_[words_ * v + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    ++edge_count_;
    return true;
}

bool IntGraph::forbid(Int v)
{
    check_vertex(v);
    if (forbidden(v))
        return false;
    forbidden_[v >> 6] |= std::uint64_t{1} << (v & 63);
    ++forbidden_count_;
    return true;
}

bool IntGraph::adjacent(Int u, Int v) const
{
    check_vertex(u);
    check_vertex(v);
    return test_bit(adjacency_.data() + words_ * u, v);
}

bool IntGraph::forbidden(Int v) const
{
    check_vertex(v);
    return test_bit(forbidden_.data(), v);
}

std::vector<Int> IntGraph::forbidden_vertices() const
{
    std::vector<Int> result;
    for (Int v = 1 ; v <= n_ ; ++v)
        if (test_bit(forbidden_.data(), v))
            result.push_back(v);
    return result;
}

Int IntGraph::degree(Int v) const
{
    check_vertex(v);
    Int total = 0;
    for (std::size_t w = 0 ; w < words_ ; ++w)
        total += std::popcount(adjacency_[words_ * v + w]);
    return total;
}

std::vector<std::pair<Int, Int>> IntGraph::edges() const
{
    std::vector<std::pair<Int, Int>> result;
    result.reserve(static_cast<std::size_t>(edge_count_));
    for (Int u = 1 ; u <= n_ ; ++u)
        for (Int v = u + 1 ; v <= n_ ; ++v)
            if (test_bit(adjacency_.data() + words_ * u, v))
                result.emplace_back(u, v);
    return result;
}

IntGraph from_edge_list(Int n, std::span<const std::pair<Int, Int>> edges)
{
    IntGraph g(n);
    for (std::size_t i = 0 ; i < edges.size() ; ++i) {
        auto [u, v] = edges[i];
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::out_of_range("edge " + std::to_string(i + 1) + " (" + std::to_string(u) + ", "
                    + std::to_string(v) + ") has a vertex outside [1, " + std::to_string(n) + "]");
        g.add_edge(u, v);
    }
    return g;
}

Coloring::Coloring(std::span<const Int> colors)
{
    std::map<Int, Int> dense;
    for (Int c : colors) {
        auto [it, inserted] = dense.emplace(c, static_cast<Int>(dense.size()));
        if (inserted)
            labels_.push_back(std::to_string(c));
        color_of_.push_back(it->second);
    }
    finish();
}

Coloring Coloring::from_labels(std::span<const std::string> labels)
{
    Coloring c;
    std::map<std::string, Int> dense;
    for (const auto & label : labels) {
        auto [it, inserted] = dense.emplace(label, static_cast<Int>(dense.size()));
        if (inserted)
            c.labels_.push_back(label);
        c.color_of_.push_back(it->second);
    }
    c.finish();
    return c;
}

void Coloring::finish()
{
    if (color_of_.empty())
        throw std::invalid_argument("colouring of an empty set");
    multiplicity_.assign(labels_.size(), 0);
    for (Int c : color_of_)
        ++multiplicity_[c];
    max_multiplicity_ = *std::max_element(multiplicity_.begin(), multiplicity_.end());
}

Int Coloring::color_of(Int i) const
{
    if (i < 1 || i > n())
        throw std::out_of_range("colour query outside [1, n]");
    return color_of_[i - 1];
}

const std::string & Coloring::label_of(Int i) const
{
    return labels_[color_of(i)];
}

PermutationMap::PermutationMap(std::vector<Int> images) :
    image_(std::move(images))
{
    Int n = static_cast<Int>(image_.size());
    if (n < 1)
        throw std::invalid_argument("permutation of an empty set");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (std::size_t i = 0 ; i < image_.size() ; ++i) {
        Int v = image_[i];
        if (v < 1 || v > n)
            throw std::invalid_argument("image of " + std::to_string(i + 1) + " is " + std::to_string(v)
                    + ", outside [1, " + std::to_string(n) + "]");
        if (seen[v])
            throw std::invalid_argument("value " + std::to_string(v) + " is the image of two points");
        seen[v] = true;
    }
}

PermutationMap PermutationMap::identity(Int n)
{
    std::vector<Int> images(static_cast<std::size_t>(n));
    for (Int i = 0 ; i < n ; ++i)
        images[i] = i + 1;
    return PermutationMap(std::move(images));
}

PermutationMap PermutationMap::reversal(Int n)
{
    std::vector<Int> images(static_cast<std::size_t>(n));
    for (Int i = 0 ; i < n ; ++i)
        images[i] = n - i;
    return PermutationMap(std::move(images));
}

Int PermutationMap::image(Int i) const
{
    if (i < 1 || i > n())
        throw std::out_of_range("permutation query outside [1, n]");
    return image_[i - 1];
}

FixedPointMode parse_mode(const std::string & text)
{
    if (text == "strict")
        return FixedPointMode::strict;
    if (text == "weak")
        return FixedPointMode::weak;
    throw std::invalid_argument("mode must be strict or weak, got '" + text + "'");
}

std::string to_string(FixedPointMode mode)
{
    return mode == FixedPointMode::strict ? "strict" : "weak";
}

IntGraph from_coloring(const Coloring & c)
{
    IntGraph g(c.n());
    std::vector<std::vector<Int>> classes(static_cast<std::size_t>(c.color_count()));
    for (Int i = 1 ; i <= c.n() ; ++i)
        classes[c.color_of(i)].push_back(i);
    for (const auto & members : classes)
        for (std::size_t a = 0 ; a < members.size() ; ++a)
            for (std::size_t b = a + 1 ; b < members.size() ; ++b)
                g.add_edge(members[a], members[b]);
    return g;
}

IntGraph from_permutation(const PermutationMap & p, FixedPointMode mode)
{
    IntGraph g(p.n());
    for (Int i = 1 ; i <= p.n() ; ++i) {
        Int j = p.image(i);
        if (i != j)
            g.add_edge(i, j);
        else if (mode == FixedPointMode::strict)
            g.forbid(i);
    }
    return g;
}

bool is_independent(const IntGraph & g, const Progression & p)
{
    if (p.start < 1 || p.last() > g.n())
        throw std::out_of_range("progression leaves [1, " + std::to_string(g.n()) + "]");
    for (Int i = 0 ; i < p.length ; ++i) {
        Int x = p.at(i);
        if (g.forbidden(x))
            return false;
        for (Int j = i + 1 ; j < p.length ; ++j)
            if (g.adjacent(x, p.at(j)))
                return false;
    }
    return true;
}

}

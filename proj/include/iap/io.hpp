#pragma once

#include <iap/graph.hpp>

#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace iap {

/// Malformed input; line() is 1-based, 0 when no single line is to blame.
class ParseError : public std::runtime_error
{
public:
    ParseError(const std::string & what, int line);
    int line() const noexcept { return line_; }

private:
    int line_;
};

struct EdgeListInput
{
    IntGraph graph;
    Int loops = 0;  ///< "v v" lines, recorded as forbidden vertices
};

/// One "u v" pair per line, 1-indexed, '#' starts a comment. n defaults to the
/// largest vertex mentioned; a vertex above an explicit n is an error.
EdgeListInput read_edge_list(std::istream & in, std::optional<Int> n = std::nullopt);

/// Lines "i c" with integer i and arbitrary token c; every i in [1, n] must
/// appear exactly once. n defaults to the largest i.
Coloring read_coloring(std::istream & in, std::optional<Int> n = std::nullopt);

/// A single line of n images, or lines "i pi(i)". Validated as a bijection.
PermutationMap read_permutation(std::istream & in);

EdgeListInput read_edge_list_file(const std::string & path, std::optional<Int> n = std::nullopt);
Coloring read_coloring_file(const std::string & path, std::optional<Int> n = std::nullopt);
PermutationMap read_permutation_file(const std::string & path);

void write_edge_list(std::ostream & out, const IntGraph & g);
void write_coloring(std::ostream & out, const Coloring & c);
void write_permutation(std::ostream & out, const PermutationMap & p);

}

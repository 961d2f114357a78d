#include <iap/io.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

namespace iap {

namespace
{
    struct DataLine
    {
        int number;
        std::vector<std::string> tokens;
    };

    std::vector<DataLine> data_lines(std::istream & in)
    {
        std::vector<DataLine> result;
        std::string line;
        int number = 0;
        while (std::getline(in, line)) {
            ++number;
            if (auto hash = line.find('#') ; hash != std::string::npos)
                line.erase(hash);
            std::istringstream words(line);
            DataLine data{number, {}};
            for (std::string word ; words >> word ; )
                data.tokens.push_back(word);
            if (! data.tokens.empty())
                result.push_back(std::move(data));
        }
        return result;
    }

    Int parse_int(const std::string & token, int line)
    {
        Int value = 0;
        auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || end != token.data() + token.size())
            throw ParseError("expected an integer, got '" + token + "'", line);
        return value;
    }

    Int parse_vertex(const std::string & token, int line, std::optional<Int> n)
    {
        Int v = parse_int(token, line);
        if (v < 1)
            throw ParseError("vertex " + token + " is not positive", line);
        if (n && v > *n)
            throw ParseError("vertex " + token + " exceeds n = " + std::to_string(*n), line);
        return v;
    }

    std::ifstream open(const std::string & path)
    {
        std::ifstream in(path);
        if (! in)
            throw ParseError("cannot open '" + path + "'", 0);
        return in;
    }
}

ParseError::ParseError(const std::string & what, int line) :
    std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
    line_(line)
{
}

EdgeListInput read_edge_list(std::istream & in, std::optional<Int> n)
{
    if (n && *n < 1)
        throw ParseError("n must be positive", 0);
    std::vector<std::pair<Int, Int>> edges;
    Int largest = 0;
    for (const auto & data : data_lines(in)) {
        if (data.tokens.size() != 2)
            throw ParseError("expected two vertices", data.number);
        Int u = parse_vertex(data.tokens[0], data.number, n);
        Int v = parse_vertex(data.tokens[1], data.number, n);
        largest = std::max({largest, u, v});
        edges.emplace_back(u, v);
    }
    Int vertices = n.value_or(largest);
    if (vertices < 1)
        throw ParseError("empty edge list and no vertex count given", 0);
    if (vertices > IntGraph::max_vertices)
        throw ParseError("graph on " + std::to_string(vertices) + " vertices exceeds the supported size", 0);

    EdgeListInput result{IntGraph(vertices), 0};
    for (auto [u, v] : edges) {
        if (u == v)
            ++result.loops;
        result.graph.add_edge(u, v);
    }
    return result;
}

Coloring read_coloring(std::istream & in, std::optional<Int> n)
{
    std::vector<std::pair<Int, std::string>> entries;
    std::vector<int> lines;
    Int largest = 0;
    for (const auto & data : data_lines(in)) {
        if (data.tokens.size() != 2)
            throw ParseError("expected 'i colour'", data.number);
        Int i = parse_vertex(data.tokens[0], data.number, n);
        largest = std::max(largest, i);
        entries.emplace_back(i, data.tokens[1]);
        lines.push_back(data.number);
    }
    Int size = n.value_or(largest);
    if (size < 1)
        throw ParseError("empty colouring", 0);

    std::vector<std::string> labels(static_cast<std::size_t>(size));
    std::vector<int> seen(static_cast<std::size_t>(size), 0);
    for (std::size_t e = 0 ; e < entries.size() ; ++e) {
        auto & [i, label] = entries[e];
        if (seen[i - 1])
            throw ParseError(std::to_string(i) + " is coloured twice", lines[e]);
        seen[i - 1] = lines[e];
        labels[i - 1] = label;
    }
    for (Int i = 1 ; i <= size ; ++i)
        if (! seen[i - 1])
            throw ParseError(std::to_string(i) + " has no colour", 0);
    return Coloring::from_labels(labels);
}

PermutationMap read_permutation(std::istream & in)
{
    auto lines = data_lines(in);
    if (lines.empty())
        throw ParseError("empty permutation", 0);

    std::vector<Int> images;
    if (lines.size() == 1) {
        for (const auto & token : lines[0].tokens)
            images.push_back(parse_int(token, lines[0].number));
    }
    else {
        Int size = static_cast<Int>(lines.size());
        images.assign(static_cast<std::size_t>(size), 0);
        for (const auto & data : lines) {
            if (data.tokens.size() != 2)
                throw ParseError("expected 'i image'", data.number);
            Int i = parse_vertex(data.tokens[0], data.number, size);
            Int v = parse_int(data.tokens[1], data.number);
            if (images[i - 1] != 0)
                throw ParseError("image of " + std::to_string(i) + " given twice", data.number);
            if (v < 1)
                throw ParseError("image " + data.tokens[1] + " is not positive", data.number);
            images[i - 1] = v;
        }
    }
    try {
        return PermutationMap(std::move(images));
    }
    catch (const std::invalid_argument & e) {
        throw ParseError(std::string("not a permutation: ") + e.what(), 0);
    }
}

EdgeListInput read_edge_list_file(const std::string & path, std::optional<Int> n)
{
    auto in = open(path);
    return read_edge_list(in, n);
}

Coloring read_coloring_file(const std::string & path, std::optional<Int> n)
{
    auto in = open(path);
    return read_coloring(in, n);
}

PermutationMap read_permutation_file(const std::string & path)
{
    auto in = open(path);
    return read_permutation(in);
}

void write_edge_list(std::ostream & out, const IntGraph & g)
{
    out << "# n " << g.n() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    for (Int v : g.forbidden_vertices())
        out << v << ' ' << v << '\n';
}

void write_coloring(std::ostream & out, const Coloring & c)
{
    for (Int i = 1 ; i <= c.n() ; ++i)
        out << i << ' ' << c.label_of(i) << '\n';
}

void write_permutation(std::ostream & out, const PermutationMap & p)
{
    for (Int i = 1 ; i <= p.n() ; ++i)
        out << (i > 1 ? " " : "") << p.image(i);
    out << '\n';
}

}

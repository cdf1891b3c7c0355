#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace topclose {

using Vertex = std::uint32_t;
using Count = std::uint64_t;

inline constexpr Vertex kNoVertex = static_cast<Vertex>(-1);

/// Thrown when an operation is called with arguments outside its contract
/// (wrong graph kind, out-of-range parameters).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed edge-list input. Carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string &what);

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Immutable CSR adjacency over dense vertex ids 0..n-1.
///
/// Undirected graphs store every edge once in each direction, so
/// arc_count() is twice the number of edges and degree() is deg(v).
/// For directed graphs degree() is the out-degree. Self-loops and
/// duplicate arcs never survive construction. Neighbour lists are sorted.
class Graph {
public:
    using Arc = std::pair<Vertex, Vertex>;

    Graph() = default;

    /// Builds a graph from an arbitrary arc list. Self-loops are dropped and
    /// duplicates removed; for undirected graphs (u,v) and (v,u) denote the
    /// same edge. Labels default to the decimal vertex id.
    static Graph from_arcs(std::size_t node_count, std::vector<Arc> arcs, bool directed,
                           std::vector<std::string> labels = {});

    [[nodiscard]] std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    /// Stored arcs (the m of every m*n budget in this library).
    [[nodiscard]] Count arc_count() const noexcept { return targets_.size(); }
    /// Edges for undirected graphs, arcs for directed ones.
    [[nodiscard]] Count edge_count() const noexcept { return directed_ ? arc_count() : arc_count() / 2; }
    [[nodiscard]] bool directed() const noexcept { return directed_; }

    [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const noexcept {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    [[nodiscard]] Count degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

    [[nodiscard]] std::span<const Count> offsets() const noexcept { return offsets_; }
    [[nodiscard]] std::span<const Vertex> targets() const noexcept { return targets_; }

    [[nodiscard]] const std::string &label(Vertex v) const { return labels_[v]; }
    [[nodiscard]] std::span<const std::string> labels() const noexcept { return labels_; }

    /// Arcs in CSR order; for undirected graphs each edge appears once with u < v.
    [[nodiscard]] std::vector<Arc> arcs() const;

private:
    std::vector<Count> offsets_;
    std::vector<Vertex> targets_;
    std::vector<std::string> labels_;
    bool directed_ = false;
};

/// Per-vertex distances from one BFS. Unreached vertices hold kUnreached.
struct BfsResult {
    static constexpr std::uint32_t kUnreached = static_cast<std::uint32_t>(-1);

    std::vector<std::uint32_t> distance;
    Count visited = 0;        // r(source)
    Count arcs_traversed = 0; // sum of out-degrees over visited vertices
    Count farness = 0;        // sum of distances over visited vertices
};

BfsResult bfs(const Graph &g, Vertex source);

// Edge-list I/O. Lines starting with '#' are comments; a data line is two
// whitespace-separated vertex tokens. Tokens get dense ids in
// first-appearance order.
Graph load_edge_list(std::istream &in, bool directed);
Graph load_edge_list_file(const std::string &path, bool directed);

/// Writes a '#' header (n, m, directedness) and one "u v" line per edge,
/// using labels. Isolated vertices are written as "v v" so that reloading
/// the output keeps them.
void write_edge_list(std::ostream &out, const Graph &g);

} // namespace topclose

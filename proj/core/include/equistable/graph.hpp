#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace equistable {

using Vertex = int;

/// Sorted list of distinct vertex indices.
using VertexSet = std::vector<Vertex>;

/// Thrown when edge-list input violates the canonical format.
/// `line()` is the 1-based line number the error was detected on.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// Simple undirected graph on vertices 0..n-1, immutable after construction.
/// Neighbor lists are sorted ascending with no duplicates and no self-loops.
class Graph {
public:
    /// Edgeless graph on n >= 1 vertices.
    explicit Graph(int n);

    /// Builds from an edge list. Throws std::invalid_argument on
    /// out-of-range endpoints, self-loops, or duplicate edges.
    Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    /// Adopts pre-built adjacency lists. The caller guarantees sortedness,
    /// symmetry, and absence of loops/duplicates; only cheap shape checks run.
    static Graph from_adjacency(std::vector<std::vector<Vertex>> adjacency);

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(Vertex u, Vertex v) const;

private:
    Graph() = default;

    int n_ = 0;
    long long m_ = 0;
    std::vector<std::vector<Vertex>> adj_;
};

/// Parses the canonical edge-list format: optional `#` comment lines, a
/// `n m` header, then exactly m lines `u v` with 0 <= u < v < n.
/// Duplicate edges, self-loops, reversed endpoints, and n = 0 are rejected
/// with the offending line number.
Graph parse_graph(std::string_view text);

/// Emits the canonical edge-list form: `n m` header, then edges sorted
/// lexicographically, one per line, LF endings.
std::string serialize_graph(const Graph& g);

/// Deterministic maximal stable set: scan vertices in ascending index order
/// (the start vertex first when given), keeping each vertex whose neighbors
/// were all skipped so far.
VertexSet greedy_maximal_stable_set(const Graph& g, std::optional<Vertex> start = std::nullopt);

bool is_stable(const Graph& g, const VertexSet& s);

/// True iff s is stable and every vertex outside s has a neighbor in s.
bool is_maximal_stable(const Graph& g, const VertexSet& s);

constexpr int kDeletedVertex = -1;

struct DeleteResult {
    Graph graph;
    std::vector<int> old_to_new;  // kDeletedVertex for removed vertices
};

/// Induced subgraph on V \ victims with order-preserving renumbering.
/// victims must be a sorted subset of V and must not cover all of V.
DeleteResult delete_vertices(const Graph& g, const VertexSet& victims);

}  // namespace equistable

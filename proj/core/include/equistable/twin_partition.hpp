#pragma once

#include <vector>

#include "equistable/graph.hpp"

namespace equistable {

enum class ClassKind { Clique, Stable, Singleton };

const char* to_string(ClassKind kind);

struct TwinClass {
    int id = 0;
    VertexSet members;  // sorted ascending, nonempty
    ClassKind kind = ClassKind::Singleton;

    int size() const { return static_cast<int>(members.size()); }
};

/// The twin partition of a graph: classes ordered by smallest member,
/// class_of mapping each vertex to its class id.
struct TwinPartition {
    std::vector<TwinClass> classes;
    std::vector<int> class_of;

    int pi() const { return static_cast<int>(classes.size()); }
    int vertex_count() const { return static_cast<int>(class_of.size()); }
};

/// Graph on twin classes: two classes are adjacent iff they see each other
/// (every cross pair is an edge). Simple and loop-free; adjacency lists
/// sorted ascending.
struct QuotientGraph {
    int class_count = 0;
    std::vector<std::vector<int>> adj;

    bool sees(int a, int b) const;
};

/// Computes the twin partition. Vertices u, v are twins iff they have the
/// same neighbors other than u and v; classes are found by fingerprinting
/// open neighborhoods (false twins) and closed neighborhoods (true twins),
/// with hash collisions resolved by exact comparison. Runs in O(n + m) up
/// to hashing.
TwinPartition twin_partition(const Graph& g);

/// Builds the quotient graph from one representative per class; sound
/// because distinct twin classes either see or miss each other.
QuotientGraph quotient_graph(const Graph& g, const TwinPartition& tp);

}  // namespace equistable

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "equistable/graph.hpp"

namespace equistable::testing {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

inline Graph path_graph(int n) {
    EdgeList edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

inline Graph cycle_graph(int n) {
    EdgeList edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(0, n - 1);
    return Graph(n, edges);
}

inline Graph complete_graph(int n) {
    if (n <= 2048) {
        EdgeList edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
        return Graph(n, edges);
    }
    std::vector<std::vector<Vertex>> adjacency(n);
    for (int v = 0; v < n; ++v) {
        adjacency[v].reserve(n - 1);
        for (int u = 0; u < n; ++u)
            if (u != v) adjacency[v].push_back(u);
    }
    return Graph::from_adjacency(std::move(adjacency));
}

inline Graph edgeless_graph(int n) { return Graph(n); }

// Center is vertex 0.
inline Graph star_graph(int leaves) {
    EdgeList edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph(leaves + 1, edges);
}

inline Graph complete_bipartite(int a, int b) {
    EdgeList edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph(a + b, edges);
}

inline Graph random_graph(int n, double p, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution flip(p);
    EdgeList edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (flip(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

// Uniform graph with exactly m distinct edges.
inline Graph random_graph_nm(int n, long long m, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<std::vector<Vertex>> adjacency(n);
    long long placed = 0;
    while (placed < m) {
        int u = pick(rng), v = pick(rng);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        auto& list = adjacency[u];
        if (std::find(list.begin(), list.end(), v) != list.end()) continue;
        list.push_back(v);
        adjacency[v].push_back(u);
        ++placed;
    }
    for (auto& list : adjacency) std::sort(list.begin(), list.end());
    return Graph::from_adjacency(std::move(adjacency));
}

// Blows a small pattern graph up into twin classes: class i induces a clique
// or a stable set of size sizes[i], and two classes see each other exactly
// when the pattern has the edge.
inline Graph blowup_graph(const Graph& pattern, const std::vector<int>& sizes,
                          const std::vector<bool>& clique_kind) {
    int n = 0;
    std::vector<int> offset(sizes.size());
    for (size_t i = 0; i < sizes.size(); ++i) {
        offset[i] = n;
        n += sizes[i];
    }
    EdgeList edges;
    for (size_t i = 0; i < sizes.size(); ++i) {
        if (clique_kind[i])
            for (int a = 0; a < sizes[i]; ++a)
                for (int b = a + 1; b < sizes[i]; ++b)
                    edges.emplace_back(offset[i] + a, offset[i] + b);
        for (Vertex j : pattern.neighbors(static_cast<Vertex>(i))) {
            if (j < static_cast<Vertex>(i)) continue;
            for (int a = 0; a < sizes[i]; ++a)
                for (int b = 0; b < sizes[j]; ++b)
                    edges.emplace_back(offset[i] + a, offset[j] + b);
        }
    }
    return Graph(n, edges);
}

inline Graph random_blowup(uint64_t seed, int max_classes = 4, int max_class_size = 4) {
    std::mt19937_64 rng(seed);
    int p = std::uniform_int_distribution<int>(1, max_classes)(rng);
    Graph pattern = random_graph(p, 0.5, rng());
    std::vector<int> sizes(p);
    std::vector<bool> kinds(p);
    for (int i = 0; i < p; ++i) {
        sizes[i] = std::uniform_int_distribution<int>(1, max_class_size)(rng);
        kinds[i] = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
    }
    return blowup_graph(pattern, sizes, kinds);
}

// All maximal stable sets by filtering all 2^n subsets; the reference for
// the branching enumerator.
inline std::vector<VertexSet> mss_by_filtering(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<VertexSet> out;
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
        VertexSet s;
        for (int v = 0; v < n; ++v)
            if (mask & (uint64_t{1} << v)) s.push_back(v);
        if (is_maximal_stable(g, s)) out.push_back(std::move(s));
    }
    return out;
}

// Pairwise twin test straight from the definition: same neighbors other
// than u and v.
inline bool twins_by_definition(const Graph& g, Vertex u, Vertex v) {
    VertexSet nu, nv;
    for (Vertex x : g.neighbors(u))
        if (x != v) nu.push_back(x);
    for (Vertex x : g.neighbors(v))
        if (x != u) nv.push_back(x);
    return nu == nv;
}

}  // namespace equistable::testing

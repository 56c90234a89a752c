#include "equistable/twin_partition.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

namespace equistable {

const char* to_string(ClassKind kind) {
    switch (kind) {
        case ClassKind::Clique: return "clique";
        case ClassKind::Stable: return "stable";
        case ClassKind::Singleton: return "singleton";
    }
    return "?";
}

bool QuotientGraph::sees(int a, int b) const {
    const auto& list = adj[a];
    return std::binary_search(list.begin(), list.end(), b);
}

namespace {

uint64_t mix(uint64_t h, uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 27;
    return h;
}

uint64_t open_hash(const Graph& g, Vertex v) {
    uint64_t h = 0x243f6a8885a308d3ULL ^ static_cast<uint64_t>(g.degree(v));
    for (Vertex nb : g.neighbors(v)) h = mix(h, static_cast<uint64_t>(nb));
    return h;
}

uint64_t closed_hash(const Graph& g, Vertex v) {
    uint64_t h = 0x243f6a8885a308d3ULL ^ static_cast<uint64_t>(g.degree(v) + 1);
    bool placed = false;
    for (Vertex nb : g.neighbors(v)) {
        if (!placed && v < nb) {
            h = mix(h, static_cast<uint64_t>(v));
            placed = true;
        }
        h = mix(h, static_cast<uint64_t>(nb));
    }
    if (!placed) h = mix(h, static_cast<uint64_t>(v));
    return h;
}

bool same_open_neighborhood(const Graph& g, Vertex u, Vertex v) {
    return g.neighbors(u) == g.neighbors(v);
}

// N[u] == N[v], compared by walking both sorted lists with the self vertex
// merged in.
bool same_closed_neighborhood(const Graph& g, Vertex u, Vertex v) {
    if (g.degree(u) != g.degree(v)) return false;
    auto closed_at = [&](Vertex w, int i) {
        const auto& list = g.neighbors(w);
        // position of w in sorted N[w]
        auto it = std::lower_bound(list.begin(), list.end(), w);
        int self_pos = static_cast<int>(it - list.begin());
        if (i < self_pos) return list[i];
        if (i == self_pos) return w;
        return list[i - 1];
    };
    const int len = g.degree(u) + 1;
    for (int i = 0; i < len; ++i)
        if (closed_at(u, i) != closed_at(v, i)) return false;
    return true;
}

// Buckets vertices by hash, splits buckets into groups of exactly-equal
// neighborhoods, and appends every group of size >= 2 to `groups`.
template <typename HashFn, typename EqFn>
void collect_groups(const std::vector<Vertex>& pool, HashFn&& hash, EqFn&& equal,
                    std::vector<VertexSet>& groups, std::vector<char>& grouped) {
    std::unordered_map<uint64_t, std::vector<int>> buckets;  // hash -> group indices
    std::vector<VertexSet> all;
    buckets.reserve(pool.size() * 2);
    for (Vertex v : pool) {
        uint64_t h = hash(v);
        auto& candidates = buckets[h];
        bool found = false;
        for (int gi : candidates) {
            if (equal(all[gi].front(), v)) {
                all[gi].push_back(v);
                found = true;
                break;
            }
        }
        if (!found) {
            candidates.push_back(static_cast<int>(all.size()));
            all.push_back({v});
        }
    }
    for (auto& group : all) {
        if (group.size() < 2) continue;
        for (Vertex v : group) grouped[v] = 1;
        groups.push_back(std::move(group));
    }
}

}  // namespace

TwinPartition twin_partition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> grouped(n, 0);

    std::vector<Vertex> pool(n);
    for (Vertex v = 0; v < n; ++v) pool[v] = v;

    // False twins: identical open neighborhoods (implies non-adjacency).
    std::vector<VertexSet> stable_groups;
    collect_groups(
        pool, [&](Vertex v) { return open_hash(g, v); },
        [&](Vertex u, Vertex v) { return same_open_neighborhood(g, u, v); }, stable_groups,
        grouped);

    // True twins: identical closed neighborhoods (implies adjacency). A
    // vertex with a false twin cannot also have a true twin, so the pools
    // are disjoint.
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v)
        if (!grouped[v]) rest.push_back(v);
    std::vector<VertexSet> clique_groups;
    collect_groups(
        rest, [&](Vertex v) { return closed_hash(g, v); },
        [&](Vertex u, Vertex v) { return same_closed_neighborhood(g, u, v); }, clique_groups,
        grouped);

    TwinPartition tp;
    for (auto& members : stable_groups)
        tp.classes.push_back(TwinClass{0, std::move(members), ClassKind::Stable});
    for (auto& members : clique_groups)
        tp.classes.push_back(TwinClass{0, std::move(members), ClassKind::Clique});
    for (Vertex v = 0; v < n; ++v)
        if (!grouped[v]) tp.classes.push_back(TwinClass{0, {v}, ClassKind::Singleton});

    std::sort(tp.classes.begin(), tp.classes.end(),
              [](const TwinClass& a, const TwinClass& b) {
                  return a.members.front() < b.members.front();
              });
    tp.class_of.assign(n, -1);
    for (int id = 0; id < static_cast<int>(tp.classes.size()); ++id) {
        tp.classes[id].id = id;
        for (Vertex v : tp.classes[id].members) tp.class_of[v] = id;
    }
    return tp;
}

QuotientGraph quotient_graph(const Graph& g, const TwinPartition& tp) {
    const int p = tp.pi();
    QuotientGraph q;
    q.class_count = p;
    q.adj.assign(p, {});
    std::vector<int> stamp(p, -1);
    for (int c = 0; c < p; ++c) {
        Vertex rep = tp.classes[c].members.front();
        for (Vertex nb : g.neighbors(rep)) {
            int d = tp.class_of[nb];
            if (d == c || stamp[d] == c) continue;
            stamp[d] = c;
            q.adj[c].push_back(d);
        }
        std::sort(q.adj[c].begin(), q.adj[c].end());
    }
    return q;
}

}  // namespace equistable

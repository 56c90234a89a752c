#include "equistable/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace equistable {

namespace {

void check_vertex_list(const Graph& g, const VertexSet& s, const char* who) {
    Vertex prev = -1;
    for (Vertex v : s) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument(std::string(who) + ": vertex index out of range");
        if (v <= prev)
            throw std::invalid_argument(std::string(who) + ": vertex list must be sorted and distinct");
        prev = v;
    }
}

}  // namespace

Graph::Graph(int n) {
    if (n < 1) throw std::invalid_argument("Graph: vertex count must be at least 1");
    n_ = n;
    m_ = 0;
    adj_.assign(n, {});
}

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) : Graph(n) {
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            throw std::invalid_argument("Graph: duplicate edge");
    }
    m_ = static_cast<long long>(edges.size());
}

Graph Graph::from_adjacency(std::vector<std::vector<Vertex>> adjacency) {
    Graph g;
    g.n_ = static_cast<int>(adjacency.size());
    if (g.n_ < 1) throw std::invalid_argument("Graph: vertex count must be at least 1");
    long long total = 0;
    for (const auto& list : adjacency) total += static_cast<long long>(list.size());
    if (total % 2 != 0) throw std::invalid_argument("Graph: adjacency is not symmetric");
    g.m_ = total / 2;
    g.adj_ = std::move(adjacency);
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

namespace {

// One physical line of input with its 1-based number; comment lines removed.
struct Line {
    int number;
    std::string_view text;
};

bool parse_int(std::string_view token, long long& out) {
    if (token.empty()) return false;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc() && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    std::vector<Line> lines;
    {
        int number = 1;
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t nl = text.find('\n', pos);
            std::string_view raw = (nl == std::string_view::npos)
                                       ? text.substr(pos)
                                       : text.substr(pos, nl - pos);
            bool last = nl == std::string_view::npos;
            bool blank = split_tokens(raw).empty();
            if (!raw.empty() && raw.front() == '#') {
                // comment, skip
            } else if (!(last && blank)) {
                lines.push_back({number, raw});
            }
            if (last) break;
            pos = nl + 1;
            ++number;
        }
    }

    if (lines.empty()) throw ParseError(1, "missing header line");

    long long n = 0, m = 0;
    {
        auto tokens = split_tokens(lines[0].text);
        if (tokens.size() != 2 || !parse_int(tokens[0], n) || !parse_int(tokens[1], m))
            throw ParseError(lines[0].number, "malformed header, expected 'n m'");
        if (n == 0) throw ParseError(lines[0].number, "empty graph (n = 0) is not accepted");
        if (n < 0 || n > (1LL << 30)) throw ParseError(lines[0].number, "vertex count out of range");
        if (m < 0 || m > n * (n - 1) / 2)
            throw ParseError(lines[0].number, "edge count exceeds maximum possible");
    }

    if (static_cast<long long>(lines.size()) - 1 < m) {
        int where = lines.empty() ? 1 : lines.back().number;
        throw ParseError(where, "unexpected end of input, expected " + std::to_string(m) + " edge lines");
    }
    if (static_cast<long long>(lines.size()) - 1 > m)
        throw ParseError(lines[1 + m].number, "trailing content after the declared edges");

    struct EdgeAt {
        long long key;
        int line;
    };
    std::vector<EdgeAt> edges;
    edges.reserve(static_cast<size_t>(m));
    std::vector<std::vector<Vertex>> adjacency(static_cast<size_t>(n));
    for (long long i = 0; i < m; ++i) {
        const Line& line = lines[static_cast<size_t>(i) + 1];
        auto tokens = split_tokens(line.text);
        long long u = 0, v = 0;
        if (tokens.size() != 2 || !parse_int(tokens[0], u) || !parse_int(tokens[1], v))
            throw ParseError(line.number, "malformed edge line, expected 'u v'");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(line.number, "vertex index out of range");
        if (u == v) throw ParseError(line.number, "self-loop");
        if (u > v) throw ParseError(line.number, "edge endpoints must satisfy u < v");
        edges.push_back({u * n + v, line.number});
        adjacency[static_cast<size_t>(u)].push_back(static_cast<Vertex>(v));
        adjacency[static_cast<size_t>(v)].push_back(static_cast<Vertex>(u));
    }

    std::sort(edges.begin(), edges.end(), [](const EdgeAt& a, const EdgeAt& b) {
        return a.key != b.key ? a.key < b.key : a.line < b.line;
    });
    for (size_t i = 1; i < edges.size(); ++i)
        if (edges[i].key == edges[i - 1].key)
            throw ParseError(edges[i].line, "duplicate edge");

    for (auto& list : adjacency) std::sort(list.begin(), list.end());
    return Graph::from_adjacency(std::move(adjacency));
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v : g.neighbors(u))
            if (u < v) out << u << ' ' << v << '\n';
    return std::move(out).str();
}

VertexSet greedy_maximal_stable_set(const Graph& g, std::optional<Vertex> start) {
    const int n = g.vertex_count();
    std::vector<char> selected(n, 0), blocked(n, 0);
    auto take = [&](Vertex v) {
        selected[v] = 1;
        for (Vertex nb : g.neighbors(v)) blocked[nb] = 1;
    };
    if (start) {
        if (*start < 0 || *start >= n)
            throw std::invalid_argument("greedy_maximal_stable_set: start vertex out of range");
        take(*start);
    }
    for (Vertex v = 0; v < n; ++v)
        if (!selected[v] && !blocked[v]) take(v);

    VertexSet result;
    for (Vertex v = 0; v < n; ++v)
        if (selected[v]) result.push_back(v);
    return result;
}

bool is_stable(const Graph& g, const VertexSet& s) {
    check_vertex_list(g, s, "is_stable");
    std::vector<char> in(g.vertex_count(), 0);
    for (Vertex v : s) in[v] = 1;
    for (Vertex v : s)
        for (Vertex nb : g.neighbors(v))
            if (nb > v && in[nb]) return false;
    return true;
}

bool is_maximal_stable(const Graph& g, const VertexSet& s) {
    check_vertex_list(g, s, "is_maximal_stable");
    std::vector<char> in(g.vertex_count(), 0);
    for (Vertex v : s) in[v] = 1;
    for (Vertex v : s)
        for (Vertex nb : g.neighbors(v))
            if (nb > v && in[nb]) return false;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (in[v]) continue;
        bool dominated = false;
        for (Vertex nb : g.neighbors(v))
            if (in[nb]) {
                dominated = true;
                break;
            }
        if (!dominated) return false;
    }
    return true;
}

DeleteResult delete_vertices(const Graph& g, const VertexSet& victims) {
    check_vertex_list(g, victims, "delete_vertices");
    const int n = g.vertex_count();
    if (static_cast<int>(victims.size()) == n)
        throw std::invalid_argument("delete_vertices: cannot delete all vertices");

    std::vector<int> old_to_new(n, kDeletedVertex);
    {
        size_t vi = 0;
        int next = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (vi < victims.size() && victims[vi] == v) {
                ++vi;
                continue;
            }
            old_to_new[v] = next++;
        }
    }

    std::vector<std::vector<Vertex>> adjacency(n - victims.size());
    for (Vertex v = 0; v < n; ++v) {
        if (old_to_new[v] == kDeletedVertex) continue;
        auto& list = adjacency[old_to_new[v]];
        for (Vertex nb : g.neighbors(v))
            if (old_to_new[nb] != kDeletedVertex) list.push_back(old_to_new[nb]);
    }
    return DeleteResult{Graph::from_adjacency(std::move(adjacency)), std::move(old_to_new)};
}

}  // namespace equistable

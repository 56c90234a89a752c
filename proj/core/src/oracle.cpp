#include "equistable/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_set>

namespace equistable {
namespace oracle {

namespace {

constexpr int kHardMaskCap = 62;   // subset masks live in one uint64_t
constexpr int kHardSweepCap = 30;  // full 2^n sweeps

void require(bool ok, const std::string& message) {
    if (!ok) throw CapExceeded(message);
}

std::vector<uint64_t> neighbor_masks(const Graph& g) {
    std::vector<uint64_t> nb(g.vertex_count(), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (Vertex u : g.neighbors(v)) nb[v] |= uint64_t{1} << u;
    return nb;
}

void enumerate_mss_masks(const std::vector<uint64_t>& nb, uint64_t full, uint64_t chosen,
                         uint64_t excluded, std::vector<uint64_t>& out) {
    uint64_t undecided = full & ~(chosen | excluded);
    if (undecided == 0) {
        for (uint64_t rest = full & ~chosen; rest != 0; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            if ((nb[v] & chosen) == 0) return;  // v could still be added
        }
        out.push_back(chosen);
        return;
    }
    int v = std::countr_zero(undecided);
    uint64_t bit = uint64_t{1} << v;
    enumerate_mss_masks(nb, full, chosen | bit, excluded | nb[v], out);
    // excluding v is pointless unless a neighbor can still dominate it
    if ((nb[v] & (chosen | (undecided & ~bit))) != 0)
        enumerate_mss_masks(nb, full, chosen, excluded | bit, out);
}

std::vector<uint64_t> maximal_stable_masks(const Graph& g) {
    auto nb = neighbor_masks(g);
    uint64_t full = (g.vertex_count() == 64) ? ~uint64_t{0}
                                             : ((uint64_t{1} << g.vertex_count()) - 1);
    std::vector<uint64_t> out;
    enumerate_mss_masks(nb, full, 0, 0, out);
    return out;
}

void validate_structure(const Graph& g, const EquistableStructure& s) {
    if (static_cast<int>(s.weights.size()) != g.vertex_count())
        throw std::invalid_argument("structure: weights length must equal the vertex count");
    for (int w : s.weights)
        if (w < 1) throw std::invalid_argument("structure: weights must be positive");
    if (s.target < 1) throw std::invalid_argument("structure: target must be positive");
}

// Gray-code sweep over all subsets, comparing the weight-sum-equals-target
// predicate against membership in the given maximal-stable-set masks.
bool sweep_against_masks(const Graph& g, const EquistableStructure& s,
                         const std::vector<uint64_t>& mss_masks) {
    const int n = g.vertex_count();
    const uint64_t subsets = uint64_t{1} << n;

    std::vector<char> is_mss_small;
    std::unordered_set<uint64_t> is_mss_large;
    const bool dense = n <= 26;
    if (dense) {
        is_mss_small.assign(static_cast<size_t>(subsets), 0);
        for (uint64_t m : mss_masks) is_mss_small[static_cast<size_t>(m)] = 1;
    } else {
        is_mss_large.insert(mss_masks.begin(), mss_masks.end());
    }
    auto is_mss = [&](uint64_t mask) {
        return dense ? is_mss_small[static_cast<size_t>(mask)] != 0
                     : is_mss_large.count(mask) != 0;
    };

    long long sum = 0;
    uint64_t gray = 0;
    if ((sum == s.target) != is_mss(gray)) return false;
    for (uint64_t i = 1; i < subsets; ++i) {
        uint64_t next = i ^ (i >> 1);
        int bit = std::countr_zero(i);
        if (next & (uint64_t{1} << bit))
            sum += s.weights[bit];
        else
            sum -= s.weights[bit];
        gray = next;
        if ((sum == s.target) != is_mss(gray)) return false;
    }
    return true;
}

}  // namespace

std::vector<VertexSet> enumerate_maximal_stable_sets(const Graph& g, const OracleLimits& limits,
                                                     bool force) {
    const int n = g.vertex_count();
    require(n <= kHardMaskCap, "enumerate_maximal_stable_sets: instance too large even when forced");
    require(force || n <= limits.max_n_subsets,
            "enumerate_maximal_stable_sets: instance exceeds the oracle cap");
    std::vector<VertexSet> out;
    for (uint64_t mask : maximal_stable_masks(g)) {
        VertexSet s;
        for (uint64_t rest = mask; rest != 0; rest &= rest - 1)
            s.push_back(std::countr_zero(rest));
        out.push_back(std::move(s));
    }
    return out;
}

bool verify_structure_exhaustive(const Graph& g, const EquistableStructure& s,
                                 const OracleLimits& limits, bool force) {
    validate_structure(g, s);
    const int n = g.vertex_count();
    require(n <= kHardSweepCap, "verify_structure_exhaustive: instance too large even when forced");
    require(force || n <= limits.max_n_subsets,
            "verify_structure_exhaustive: instance exceeds the oracle cap");
    return sweep_against_masks(g, s, maximal_stable_masks(g));
}

bool verify_structure_quotient(const Graph& g, const EquistableStructure& s) {
    validate_structure(g, s);
    TwinPartition tp = twin_partition(g);

    // Each weight value must live inside a single twin class, and a clique
    // class must be monochromatic; otherwise no equistable function looks
    // like this.
    const int max_weight = *std::max_element(s.weights.begin(), s.weights.end());
    std::vector<int> class_of_weight(max_weight + 1, -1);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        int w = s.weights[v];
        int c = tp.class_of[v];
        if (class_of_weight[w] == -1)
            class_of_weight[w] = c;
        else if (class_of_weight[w] != c)
            return false;
    }
    for (const TwinClass& c : tp.classes) {
        if (c.kind != ClassKind::Clique) continue;
        for (Vertex v : c.members)
            if (s.weights[v] != s.weights[c.members.front()]) return false;
    }

    WeightAssignment wa;
    wa.k = max_weight;
    for (const TwinClass& c : tp.classes) {
        std::vector<std::pair<int, int>> level;  // (weight, count) within the class
        for (Vertex v : c.members) {
            int w = s.weights[v];
            auto it = std::find_if(level.begin(), level.end(),
                                   [w](const auto& e) { return e.first == w; });
            if (it == level.end())
                level.emplace_back(w, 1);
            else
                it->second += 1;
        }
        std::sort(level.begin(), level.end());
        for (auto [w, count] : level) wa.blocks.push_back(WeightBlock{c.id, count, w});
    }

    QuotientGraph q = quotient_graph(g, tp);
    VertexSet fixed_mss = greedy_maximal_stable_set(g);
    return check_weight_assignment(g, q, tp, wa, fixed_mss, s.target).has_value();
}

std::optional<std::pair<int, EquistableStructure>> min_k_exhaustive(const Graph& g, int k_max,
                                                                    const OracleLimits& limits,
                                                                    bool force) {
    if (k_max < 1) throw std::invalid_argument("min_k_exhaustive: k_max must be positive");
    const int n = g.vertex_count();
    require(force || n <= limits.max_n_candidates,
            "min_k_exhaustive: instance exceeds the oracle cap");

    TwinPartition tp = twin_partition(g);
    VertexSet fixed_mss = greedy_maximal_stable_set(g);
    auto mss_masks = maximal_stable_masks(g);
    for (int k = std::max(1, tp.pi()); k <= k_max; ++k) {
        CandidateEnumerator en(tp, k);
        while (auto wa = en.next()) {
            long long t = compute_target(g, tp, *wa, fixed_mss);
            EquistableStructure s = materialize_structure(tp, *wa, t);
            if (sweep_against_masks(g, s, mss_masks)) return std::make_pair(k, std::move(s));
        }
    }
    return std::nullopt;
}

std::optional<std::pair<int, EquistableStructure>> min_k_naive(const Graph& g, int k_max,
                                                               const OracleLimits& limits,
                                                               bool force) {
    if (k_max < 1) throw std::invalid_argument("min_k_naive: k_max must be positive");
    (void)limits;
    const int n = g.vertex_count();
    require(force || n <= 8, "min_k_naive: instance exceeds the naive cap of 8 vertices");
    require(n <= 16 && k_max <= 8, "min_k_naive: search space too large even when forced");

    VertexSet fixed_mss = greedy_maximal_stable_set(g);
    auto mss_masks = maximal_stable_masks(g);
    for (int k = 1; k <= k_max; ++k) {
        EquistableStructure s;
        s.weights.assign(n, 1);
        for (;;) {
            long long t = 0;
            for (Vertex v : fixed_mss) t += s.weights[v];
            s.target = t;
            if (sweep_against_masks(g, s, mss_masks)) return std::make_pair(k, s);
            int pos = 0;
            while (pos < n && s.weights[pos] == k) s.weights[pos++] = 1;
            if (pos == n) break;
            ++s.weights[pos];
        }
    }
    return std::nullopt;
}

}  // namespace oracle
}  // namespace equistable

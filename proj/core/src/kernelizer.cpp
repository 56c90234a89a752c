#include "equistable/kernelizer.hpp"

#include <algorithm>
#include <climits>
#include <limits>
#include <stdexcept>

namespace equistable {

const char* to_string(RejectReason reason) {
    switch (reason) {
        case RejectReason::TooManyClasses: return "TooManyClasses";
        case RejectReason::BigStableClass: return "BigStableClass";
        case RejectReason::TwoBigClasses: return "TwoBigClasses";
        case RejectReason::HeavyStableClass: return "HeavyStableClass";
    }
    return "?";
}

namespace {

constexpr long long kNoLimit = std::numeric_limits<long long>::max();

long long sat_mul(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    if (a > kNoLimit / b) return kNoLimit;
    return a * b;
}

long long sat_add(long long a, long long b) {
    if (a > kNoLimit - b) return kNoLimit;
    return a + b;
}

// k^3(k+1), k^5 and k^5 + k^4, saturating for absurdly large k.
long long case1_clique_cap(long long k) { return sat_mul(sat_mul(sat_mul(k, k), k), k + 1); }
long long k_to_5(long long k) { return sat_mul(sat_mul(sat_mul(sat_mul(k, k), k), k), k); }
long long kernel_k_vertex_bound(long long k) {
    return sat_add(k_to_5(k), sat_mul(sat_mul(sat_mul(k, k), k), k));
}

Kernel identity_kernel(const Graph& g, KernelMode mode) {
    Kernel kernel{g, std::vector<int>(g.vertex_count()), {}, mode};
    for (Vertex v = 0; v < g.vertex_count(); ++v) kernel.old_to_new[v] = v;
    return kernel;
}

void enforce_vertex_bound(const Kernel& kernel, long long bound, const char* who) {
    if (kernel.graph.vertex_count() > bound)
        throw std::logic_error(std::string(who) + ": kernel exceeds its vertex bound");
}

}  // namespace

Kernel clique_reduce(const Graph& g, const TwinPartition& tp, long long r) {
    if (r < 1) throw std::invalid_argument("clique_reduce: r must be positive");
    VertexSet victims;
    std::vector<ReductionStep> steps;
    for (const TwinClass& c : tp.classes) {
        if (c.kind != ClassKind::Clique || c.size() <= r) continue;
        CliqueTruncation step;
        step.representative = c.members.front();
        step.deleted.assign(c.members.begin() + static_cast<size_t>(r), c.members.end());
        victims.insert(victims.end(), step.deleted.begin(), step.deleted.end());
        steps.push_back(std::move(step));
    }
    if (victims.empty()) return identity_kernel(g, KernelMode::KCase1);

    std::sort(victims.begin(), victims.end());
    DeleteResult result = delete_vertices(g, victims);
    return Kernel{std::move(result.graph), std::move(result.old_to_new),
                  LiftingRecipe{std::move(steps)}, KernelMode::KCase1};
}

KernelOutcome kernel_target_t(const Graph& g, long long t) {
    if (t < 1) throw std::invalid_argument("kernel_target_t: t must be positive");
    TwinPartition tp = twin_partition(g);
    if (tp.pi() > t) return RejectReason::TooManyClasses;
    for (const TwinClass& c : tp.classes)
        if (c.kind == ClassKind::Stable && c.size() > t) return RejectReason::BigStableClass;

    Kernel kernel = clique_reduce(g, tp, t);
    kernel.mode = KernelMode::TargetT;
    enforce_vertex_bound(kernel, sat_mul(t, t), "kernel_target_t");
    return kernel;
}

KernelOutcome kernel_k(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("kernel_k: k must be positive");
    TwinPartition tp = twin_partition(g);
    if (tp.pi() > k) return RejectReason::TooManyClasses;

    const long long big = sat_mul(k, k + 1);
    int big_count = 0;
    int big_stable = -1;  // class id of a big stable class, if any
    for (const TwinClass& c : tp.classes) {
        if (c.size() < big) continue;
        ++big_count;
        if (c.kind == ClassKind::Stable) big_stable = c.id;
    }
    if (big_stable >= 0 && big_count >= 2) return RejectReason::TwoBigClasses;

    const long long bound = kernel_k_vertex_bound(k);
    if (big_stable < 0) {
        // Case 1: all big classes (if any) are cliques.
        Kernel kernel = clique_reduce(g, tp, case1_clique_cap(k));
        enforce_vertex_bound(kernel, bound, "kernel_k");
        return kernel;
    }

    // Case 2: a unique big stable class X.
    const TwinClass& x = tp.classes[big_stable];
    QuotientGraph q = quotient_graph(g, tp);
    if (q.adj[x.id].empty()) {
        // X is isolated in the quotient graph, i.e. a set of isolated
        // vertices; shrink it to k^5 members when larger.
        const long long keep = k_to_5(k);
        if (x.size() > keep) {
            StableTruncation step;
            step.survivors.assign(x.members.begin(), x.members.begin() + static_cast<size_t>(keep));
            step.deleted.assign(x.members.begin() + static_cast<size_t>(keep), x.members.end());
            DeleteResult result = delete_vertices(g, step.deleted);
            Kernel kernel{std::move(result.graph), std::move(result.old_to_new),
                          LiftingRecipe{{ReductionStep{std::move(step)}}}, KernelMode::KCase2};
            enforce_vertex_bound(kernel, bound, "kernel_k");
            return kernel;
        }
        Kernel kernel = identity_kernel(g, KernelMode::KCase2);
        enforce_vertex_bound(kernel, bound, "kernel_k");
        return kernel;
    }

    // X sees some class Y; a maximal stable set grown from Y avoids X.
    int y = q.adj[x.id].front();
    VertexSet s = greedy_maximal_stable_set(g, tp.classes[y].members.front());
    if (static_cast<long long>(x.size()) > sat_mul(k, static_cast<long long>(s.size())))
        return RejectReason::HeavyStableClass;
    Kernel kernel = identity_kernel(g, KernelMode::KCase2);
    enforce_vertex_bound(kernel, bound, "kernel_k");
    return kernel;
}

EquistableStructure normalize_constant_on_class(const Graph& g, const EquistableStructure& s,
                                                const TwinClass& x) {
    if (static_cast<int>(s.weights.size()) != g.vertex_count())
        throw std::invalid_argument("normalize_constant_on_class: weights length mismatch");
    if (x.members.empty())
        throw std::invalid_argument("normalize_constant_on_class: empty class");
    for (Vertex v : x.members) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("normalize_constant_on_class: class member out of range");
        if (!g.neighbors(v).empty())
            throw std::invalid_argument("normalize_constant_on_class: class is not isolated");
    }

    const int max_weight = *std::max_element(s.weights.begin(), s.weights.end());
    std::vector<long long> count(max_weight + 1, 0);
    long long class_weight = 0;
    for (Vertex v : x.members) {
        ++count[s.weights[v]];
        class_weight += s.weights[v];
    }
    const long long size = static_cast<long long>(x.members.size());
    int pick = 0;
    for (int w = 1; w <= max_weight; ++w) {
        if (count[w] * max_weight >= size) {  // count >= |X| / k by pigeonhole
            pick = w;
            break;
        }
    }
    if (pick == 0) throw std::logic_error("normalize_constant_on_class: pigeonhole choice failed");

    EquistableStructure out = s;
    for (Vertex v : x.members) out.weights[v] = pick;
    out.target = s.target - class_weight + static_cast<long long>(pick) * size;
    return out;
}

EquistableStructure lift_structure(const EquistableStructure& s_kernel, const LiftingRecipe& recipe,
                                   const Graph& g_original) {
    const int n = g_original.vertex_count();
    VertexSet victims;
    for (const ReductionStep& step : recipe.steps) {
        const VertexSet& deleted = std::holds_alternative<CliqueTruncation>(step)
                                       ? std::get<CliqueTruncation>(step).deleted
                                       : std::get<StableTruncation>(step).deleted;
        victims.insert(victims.end(), deleted.begin(), deleted.end());
    }
    std::sort(victims.begin(), victims.end());
    if (std::adjacent_find(victims.begin(), victims.end()) != victims.end())
        throw std::invalid_argument("lift_structure: recipe deletes a vertex twice");
    for (Vertex v : victims)
        if (v < 0 || v >= n) throw std::invalid_argument("lift_structure: deleted vertex out of range");

    const int kernel_n = n - static_cast<int>(victims.size());
    if (static_cast<int>(s_kernel.weights.size()) != kernel_n)
        throw std::invalid_argument("lift_structure: structure does not match the kernel size");

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

    EquistableStructure out;
    out.weights.assign(n, 0);
    out.target = s_kernel.target;
    for (Vertex v = 0; v < n; ++v)
        if (old_to_new[v] != kDeletedVertex) out.weights[v] = s_kernel.weights[old_to_new[v]];

    for (const ReductionStep& step : recipe.steps) {
        if (std::holds_alternative<CliqueTruncation>(step)) {
            const auto& clique = std::get<CliqueTruncation>(step);
            if (clique.representative < 0 || clique.representative >= n ||
                old_to_new[clique.representative] == kDeletedVertex)
                throw std::invalid_argument("lift_structure: representative did not survive");
            int w = s_kernel.weights[old_to_new[clique.representative]];
            for (Vertex v : clique.deleted) out.weights[v] = w;
        } else {
            const auto& stable = std::get<StableTruncation>(step);
            if (stable.survivors.empty())
                throw std::invalid_argument("lift_structure: stable truncation without survivors");
            int w = -1;
            for (Vertex v : stable.survivors) {
                if (v < 0 || v >= n || old_to_new[v] == kDeletedVertex)
                    throw std::invalid_argument("lift_structure: survivor did not survive");
                int wv = s_kernel.weights[old_to_new[v]];
                if (w == -1) w = wv;
                if (wv != w)
                    throw std::logic_error(
                        "lift_structure: kernel structure is not constant on a truncated stable "
                        "class; normalize first");
            }
            for (Vertex v : stable.deleted) out.weights[v] = w;
            out.target += static_cast<long long>(w) * static_cast<long long>(stable.deleted.size());
        }
    }
    return out;
}

namespace {

// Locates the surviving part of a truncated stable class inside the kernel's
// own twin partition and rewrites the structure to be constant there.
EquistableStructure normalize_for_recipe(const Kernel& kernel, const EquistableStructure& s) {
    const StableTruncation* stable = nullptr;
    for (const ReductionStep& step : kernel.recipe.steps)
        if (std::holds_alternative<StableTruncation>(step))
            stable = &std::get<StableTruncation>(step);
    if (!stable) return s;

    VertexSet kernel_members;
    for (Vertex v : stable->survivors) kernel_members.push_back(kernel.old_to_new[v]);
    std::sort(kernel_members.begin(), kernel_members.end());

    TwinPartition tp = twin_partition(kernel.graph);
    const TwinClass& cls = tp.classes[tp.class_of[kernel_members.front()]];
    if (cls.members != kernel_members)
        throw std::logic_error("recognize_fpt: truncated class does not survive as a twin class");
    return normalize_constant_on_class(kernel.graph, s, cls);
}

}  // namespace

FptOutcome recognize_fpt_outcome(const Graph& g, int k, int threads) {
    KernelOutcome outcome = kernel_k(g, k);
    if (std::holds_alternative<RejectReason>(outcome))
        return FptOutcome{std::nullopt, std::get<RejectReason>(outcome), 0};

    Kernel& kernel = std::get<Kernel>(outcome);
    FptOutcome result;
    result.kernel_vertices = kernel.graph.vertex_count();
    auto s = recognize(kernel.graph, k, std::nullopt, threads);
    if (!s) return result;

    EquistableStructure lifted = lift_structure(normalize_for_recipe(kernel, *s), kernel.recipe, g);
    if (kernel.mode == KernelMode::KCase1 && lifted.target > case1_clique_cap(k))
        throw std::logic_error("recognize_fpt: accepted target exceeds the case-1 bound");
    result.structure = std::move(lifted);
    return result;
}

FptOutcome recognize_target_fpt_outcome(const Graph& g, long long t, std::optional<int> max_weight,
                                        int threads) {
    KernelOutcome outcome = kernel_target_t(g, t);
    if (std::holds_alternative<RejectReason>(outcome))
        return FptOutcome{std::nullopt, std::get<RejectReason>(outcome), 0};

    Kernel& kernel = std::get<Kernel>(outcome);
    FptOutcome result;
    result.kernel_vertices = kernel.graph.vertex_count();
    // Weights in a target-t structure never exceed t; an explicit bound can
    // only tighten this.
    long long k = max_weight ? std::min<long long>(*max_weight, t) : t;
    if (k < 1) return result;
    auto s = recognize(kernel.graph, static_cast<int>(std::min<long long>(k, INT_MAX)), t, threads);
    if (!s) return result;

    result.structure = lift_structure(*s, kernel.recipe, g);  // clique steps only: target preserved
    return result;
}

}  // namespace equistable

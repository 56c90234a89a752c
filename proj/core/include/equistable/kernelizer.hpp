#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "equistable/graph.hpp"
#include "equistable/recognizer.hpp"
#include "equistable/twin_partition.hpp"

namespace equistable {

/// A clique class was cut down to its lowest-indexed members. Deleted
/// vertices inherit the representative's weight; the target is unchanged.
struct CliqueTruncation {
    VertexSet deleted;     // original-graph indices
    Vertex representative; // lowest surviving member of the class
};

/// A stable class was cut down to its lowest-indexed members. Lifting
/// requires the kernel structure to be constant on the survivors; deleted
/// vertices take that constant weight i and the target grows by
/// i * deleted.size().
struct StableTruncation {
    VertexSet deleted;    // original-graph indices
    VertexSet survivors;  // original-graph indices
};

using ReductionStep = std::variant<CliqueTruncation, StableTruncation>;

struct LiftingRecipe {
    std::vector<ReductionStep> steps;  // in application order
};

enum class RejectReason { TooManyClasses, BigStableClass, TwoBigClasses, HeavyStableClass };

const char* to_string(RejectReason reason);

/// Which branch produced the kernel; drives diagnostics and the applicable
/// size bound.
enum class KernelMode { TargetT, KCase1, KCase2 };

struct Kernel {
    Graph graph;
    std::vector<int> old_to_new;  // kDeletedVertex for removed vertices
    LiftingRecipe recipe;
    KernelMode mode = KernelMode::KCase1;
};

using KernelOutcome = std::variant<Kernel, RejectReason>;

/// Truncates every clique class to at most r members (keeping the
/// lowest-indexed ones); stable and singleton classes are untouched.
Kernel clique_reduce(const Graph& g, const TwinPartition& tp, long long r);

/// Kernel for target-t recognition: rejects when the class count or some
/// stable class exceeds t, otherwise clique-reduces with r = t. The kernel
/// has at most t^2 vertices.
KernelOutcome kernel_target_t(const Graph& g, long long t);

/// Kernel for k-bounded recognition. Rejects when the class count exceeds k,
/// or when two classes of size >= k(k+1) exist with one of them stable, or
/// when a big seen stable class outweighs every maximal stable set avoiding
/// it. Otherwise produces a kernel of at most k^5 + k^4 vertices: clique
/// reduction with r = k^3(k+1), or truncation of a single big isolated
/// stable class to k^5 members.
KernelOutcome kernel_k(const Graph& g, int k);

/// Rewrites the structure to be constant on the stable class X (which must
/// be isolated, i.e. a set of isolated vertices), picking the smallest
/// weight i carried by at least |X|/k members for k the largest weight in
/// use. The target becomes t - w(X) + i|X|.
EquistableStructure normalize_constant_on_class(const Graph& g, const EquistableStructure& s,
                                                const TwinClass& x);

/// Replays the recipe in reverse on the original graph: clique-truncated
/// vertices inherit the representative's weight, stable-truncated vertices
/// take the constant weight of the surviving part (which must be constant),
/// shifting the target accordingly.
EquistableStructure lift_structure(const EquistableStructure& s_kernel, const LiftingRecipe& recipe,
                                   const Graph& g_original);

struct FptOutcome {
    std::optional<EquistableStructure> structure;
    std::optional<RejectReason> reject_reason;  // set when the kernel rejected
    int kernel_vertices = 0;                    // 0 when rejected
};

/// Full pipeline for k-equistability: kernelize, recognize on the kernel,
/// normalize when a stable truncation occurred, and lift the structure back
/// to the input graph.
FptOutcome recognize_fpt_outcome(const Graph& g, int k, int threads = 1);

/// Full pipeline for target-t equistability (only clique truncations occur,
/// so the target carries over unchanged). max_weight optionally tightens the
/// weight bound below t.
FptOutcome recognize_target_fpt_outcome(const Graph& g, long long t,
                                        std::optional<int> max_weight = std::nullopt,
                                        int threads = 1);

inline std::optional<EquistableStructure> recognize_fpt(const Graph& g, int k, int threads = 1) {
    return recognize_fpt_outcome(g, k, threads).structure;
}

inline std::optional<EquistableStructure> recognize_target_fpt(const Graph& g, long long t,
                                                               int threads = 1) {
    return recognize_target_fpt_outcome(g, t, std::nullopt, threads).structure;
}

}  // namespace equistable

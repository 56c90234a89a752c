#pragma once

#include <optional>
#include <vector>

#include "equistable/graph.hpp"
#include "equistable/twin_partition.hpp"

namespace equistable {

/// One nonempty weight level: `size` vertices of one twin class all carrying
/// `weight`. Since each weight value lies inside a single twin class, a
/// candidate weight function is fully described by its blocks.
struct WeightBlock {
    int class_id = 0;
    int size = 0;    // >= 1
    int weight = 0;  // in [1, k], distinct across blocks
};

/// A candidate weight function up to permutation of weights within each twin
/// class. Clique and singleton classes carry exactly one block; a stable
/// class of size s is cut into an ordered composition of s. At most k blocks.
struct WeightAssignment {
    int k = 0;
    std::vector<WeightBlock> blocks;
};

/// Per-block selection counts; entry j ranges over 0..blocks[j].size. A
/// count vector stands for every vertex set picking exactly x[j] vertices
/// from block j.
using CountVector = std::vector<int>;

/// Explicit witness: per-vertex weights plus the common target weight of all
/// maximal stable sets.
struct EquistableStructure {
    std::vector<int> weights;  // length n, values >= 1
    long long target = 0;
};

/// Streams every admissible WeightAssignment in a fixed deterministic order:
/// classes in partition order, stable-class compositions in lexicographic
/// order, weight injections in lexicographic order. When a target is
/// prescribed, candidates that provably cannot reach it (a block weight
/// above t, or a stable class whose forced total exceeds t) are skipped;
/// this never drops a function achieving target t.
class CandidateEnumerator {
public:
    CandidateEnumerator(const TwinPartition& tp, int k,
                        std::optional<long long> prescribed_target = std::nullopt);

    /// Next candidate, or nullopt once exhausted.
    std::optional<WeightAssignment> next();

private:
    struct ClassState {
        int class_id = 0;
        int size = 0;
        bool splittable = false;    // stable class of size >= 2
        std::vector<int> parts;     // current composition of `size`
    };

    int budget(int index, int prefix_parts) const;
    bool reset_from(int index);
    bool advance_profile();
    void first_injection();
    bool advance_injection();
    WeightAssignment current() const;
    bool admissible(const WeightAssignment& wa) const;

    int k_ = 0;
    std::optional<long long> target_;
    std::vector<ClassState> classes_;
    std::vector<int> weights_;  // current injection, one weight per block
    int total_parts_ = 0;
    bool fresh_ = true;
    bool done_ = false;
};

/// Materializes all candidates; intended for small instances and tests.
std::vector<WeightAssignment> enumerate_candidates(
    const TwinPartition& tp, int k, std::optional<long long> prescribed_target = std::nullopt);

/// w-weight of the fixed maximal stable set, computed block-wise: a stable
/// class is contained in the set entirely or not at all, a clique or
/// singleton class meets it in at most one vertex.
long long compute_target(const Graph& g, const TwinPartition& tp, const WeightAssignment& wa,
                         const VertexSet& fixed_mss);

/// True iff every vertex set with exactly x[j] vertices from block j is a
/// maximal stable set. Decided over blocks and classes using the quotient
/// graph, in O(q^2) for q blocks.
bool vector_is_max_stable(const QuotientGraph& q, const TwinPartition& tp,
                          const WeightAssignment& wa, const CountVector& x);

/// Assigns block weights to class members in ascending vertex order.
EquistableStructure materialize_structure(const TwinPartition& tp, const WeightAssignment& wa,
                                          long long target);

/// Full test of one candidate: computes the target from the fixed maximal
/// stable set, then verifies over the whole capacity box that the selected
/// weight sum equals the target exactly when the vector encodes maximal
/// stable sets. Returns the materialized structure on success.
std::optional<EquistableStructure> check_weight_assignment(
    const Graph& g, const QuotientGraph& q, const TwinPartition& tp, const WeightAssignment& wa,
    const VertexSet& fixed_mss, std::optional<long long> prescribed_target = std::nullopt);

/// Decides k-equistability (optionally with a prescribed target) by checking
/// candidates in enumeration order; returns the structure of the first
/// accepted candidate. The answer and the returned structure are independent
/// of the number of worker threads.
std::optional<EquistableStructure> recognize(const Graph& g, int k,
                                             std::optional<long long> prescribed_target = std::nullopt,
                                             int threads = 1);

}  // namespace equistable

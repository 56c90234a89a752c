#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "equistable/graph.hpp"
#include "equistable/recognizer.hpp"

namespace equistable {
namespace oracle {

/// Instance-size caps for the exponential ground-truth procedures. Exceeding
/// a cap requires an explicit force flag; absolute safety limits apply even
/// then (62 vertices for subset masks, 30 for full 2^n sweeps).
struct OracleLimits {
    int max_n_subsets = 24;     // cap for 2^n subset enumeration
    int max_n_candidates = 12;  // cap for minimal-k search
};

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// All maximal stable sets, sorted lexicographically. Enumerates by
/// branching on the lowest-indexed undecided vertex and filtering for
/// maximality.
std::vector<VertexSet> enumerate_maximal_stable_sets(const Graph& g,
                                                     const OracleLimits& limits = {},
                                                     bool force = false);

/// Definition-level check: over all 2^n subsets S, w(S) = t holds exactly
/// for the maximal stable sets. Throws std::invalid_argument on malformed
/// structures (wrong length, nonpositive weights or target).
bool verify_structure_exhaustive(const Graph& g, const EquistableStructure& s,
                                 const OracleLimits& limits = {}, bool force = false);

/// Polynomial-space check: rejects weight functions whose value classes span
/// twin classes or split a clique class, then reruns the count-vector test
/// with the structure's target prescribed. Exponential only in the number of
/// weight blocks.
bool verify_structure_quotient(const Graph& g, const EquistableStructure& s);

/// Smallest k <= k_max admitting an equistable function bounded by k, with a
/// witness verified exhaustively; nullopt when none exists.
std::optional<std::pair<int, EquistableStructure>> min_k_exhaustive(
    const Graph& g, int k_max, const OracleLimits& limits = {}, bool force = false);

/// Fully naive variant searching all k^n weight functions (not just the
/// twin-refining candidate family); usable only for tiny instances and meant
/// for validating the candidate family itself.
std::optional<std::pair<int, EquistableStructure>> min_k_naive(
    const Graph& g, int k_max, const OracleLimits& limits = {}, bool force = false);

}  // namespace oracle
}  // namespace equistable

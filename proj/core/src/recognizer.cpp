#include "equistable/recognizer.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace equistable {

namespace {

// Lexicographically smallest composition of s into at most max_parts parts.
std::vector<int> smallest_composition(int s, int max_parts) {
    std::vector<int> c;
    if (s <= max_parts) {
        c.assign(s, 1);
    } else {
        c.assign(max_parts - 1, 1);
        c.push_back(s - (max_parts - 1));
    }
    return c;
}

// In-place lexicographic successor among compositions with at most max_parts
// parts; false when exhausted. Relies on c having at most max_parts parts.
bool next_composition(std::vector<int>& c, int max_parts) {
    int suffix = 0;
    for (int j = static_cast<int>(c.size()) - 1; j >= 0; --j) {
        int tail_sum = suffix - 1;
        int tail_room = max_parts - (j + 1);
        if (tail_sum == 0) {
            c.resize(j + 1);
            c[j] += 1;
            return true;
        }
        if (tail_sum >= 1 && tail_room >= 1) {
            c[j] += 1;
            c.resize(j + 1);
            auto tail = smallest_composition(tail_sum, tail_room);
            c.insert(c.end(), tail.begin(), tail.end());
            return true;
        }
        suffix += c[j];
    }
    return false;
}

}  // namespace

CandidateEnumerator::CandidateEnumerator(const TwinPartition& tp, int k,
                                         std::optional<long long> prescribed_target)
    : k_(k), target_(prescribed_target) {
    if (k < 1) throw std::invalid_argument("CandidateEnumerator: k must be positive");
    classes_.reserve(tp.classes.size());
    for (const TwinClass& c : tp.classes) {
        ClassState state;
        state.class_id = c.id;
        state.size = c.size();
        state.splittable = c.kind == ClassKind::Stable && c.size() >= 2;
        classes_.push_back(state);
    }
}

int CandidateEnumerator::budget(int index, int prefix_parts) const {
    int after = static_cast<int>(classes_.size()) - index - 1;
    return k_ - prefix_parts - after;
}

bool CandidateEnumerator::reset_from(int index) {
    int prefix_parts = 0;
    for (int i = 0; i < index; ++i) prefix_parts += static_cast<int>(classes_[i].parts.size());
    for (int i = index; i < static_cast<int>(classes_.size()); ++i) {
        int cap = budget(i, prefix_parts);
        if (cap < 1) return false;
        classes_[i].parts = classes_[i].splittable ? smallest_composition(classes_[i].size, cap)
                                                   : std::vector<int>{classes_[i].size};
        prefix_parts += static_cast<int>(classes_[i].parts.size());
    }
    total_parts_ = prefix_parts;
    return true;
}

bool CandidateEnumerator::advance_profile() {
    int j = static_cast<int>(classes_.size()) - 1;
    while (j >= 0) {
        if (!classes_[j].splittable) {
            --j;
            continue;
        }
        int prefix_parts = 0;
        for (int i = 0; i < j; ++i) prefix_parts += static_cast<int>(classes_[i].parts.size());
        if (next_composition(classes_[j].parts, budget(j, prefix_parts))) {
            if (reset_from(j + 1)) {
                total_parts_ = prefix_parts + static_cast<int>(classes_[j].parts.size());
                for (int i = j + 1; i < static_cast<int>(classes_.size()); ++i)
                    total_parts_ += static_cast<int>(classes_[i].parts.size());
                return true;
            }
            continue;  // this composition leaves no room downstream; try the next one
        }
        --j;
    }
    return false;
}

void CandidateEnumerator::first_injection() {
    weights_.resize(total_parts_);
    for (int i = 0; i < total_parts_; ++i) weights_[i] = i + 1;
}

bool CandidateEnumerator::advance_injection() {
    const int q = total_parts_;
    std::vector<char> used(k_ + 1, 0);
    for (int i = 0; i < q; ++i) used[weights_[i]] = 1;
    for (int pos = q - 1; pos >= 0; --pos) {
        used[weights_[pos]] = 0;
        int v = weights_[pos] + 1;
        while (v <= k_ && used[v]) ++v;
        if (v <= k_) {
            weights_[pos] = v;
            used[v] = 1;
            int fill = 1;
            for (int i = pos + 1; i < q; ++i) {
                while (used[fill]) ++fill;
                weights_[i] = fill;
                used[fill] = 1;
            }
            return true;
        }
    }
    return false;
}

WeightAssignment CandidateEnumerator::current() const {
    WeightAssignment wa;
    wa.k = k_;
    wa.blocks.reserve(total_parts_);
    int block = 0;
    for (const ClassState& state : classes_)
        for (int part : state.parts)
            wa.blocks.push_back(WeightBlock{state.class_id, part, weights_[block++]});
    return wa;
}

bool CandidateEnumerator::admissible(const WeightAssignment& wa) const {
    if (!target_) return true;
    long long t = *target_;
    long long class_sum = 0;
    int prev_class = -1;
    bool prev_splittable = false;
    size_t state_index = 0;
    for (const WeightBlock& b : wa.blocks) {
        if (b.weight > t) return false;  // every vertex lies in some maximal stable set
        if (b.class_id != prev_class) {
            if (prev_splittable && class_sum > t) return false;
            while (classes_[state_index].class_id != b.class_id) ++state_index;
            prev_class = b.class_id;
            prev_splittable = classes_[state_index].splittable;
            class_sum = 0;
        }
        // a stable class is wholly contained in some maximal stable set
        class_sum += static_cast<long long>(b.weight) * b.size;
    }
    if (prev_splittable && class_sum > t) return false;
    return true;
}

std::optional<WeightAssignment> CandidateEnumerator::next() {
    while (!done_) {
        if (fresh_) {
            fresh_ = false;
            if (classes_.empty() || static_cast<int>(classes_.size()) > k_ || !reset_from(0)) {
                done_ = true;
                break;
            }
            first_injection();
        } else if (!advance_injection()) {
            if (!advance_profile()) {
                done_ = true;
                break;
            }
            first_injection();
        }
        WeightAssignment wa = current();
        if (admissible(wa)) return wa;
    }
    return std::nullopt;
}

std::vector<WeightAssignment> enumerate_candidates(const TwinPartition& tp, int k,
                                                   std::optional<long long> prescribed_target) {
    CandidateEnumerator en(tp, k, prescribed_target);
    std::vector<WeightAssignment> out;
    while (auto wa = en.next()) out.push_back(std::move(*wa));
    return out;
}

long long compute_target(const Graph& g, const TwinPartition& tp, const WeightAssignment& wa,
                         const VertexSet& fixed_mss) {
    (void)g;
    std::vector<char> touched(tp.classes.size(), 0);
    for (Vertex v : fixed_mss) touched[tp.class_of[v]] = 1;
    long long t = 0;
    for (const WeightBlock& b : wa.blocks) {
        if (!touched[b.class_id]) continue;
        if (tp.classes[b.class_id].kind == ClassKind::Stable)
            t += static_cast<long long>(b.weight) * b.size;  // class fully inside
        else
            t += b.weight;  // exactly one member inside
    }
    return t;
}

namespace {

struct CheckScratch {
    std::vector<long long> selected;  // per class, number of selected vertices
    std::vector<int> positive;        // class ids with selected > 0

    void resize(int class_count) { selected.assign(class_count, 0); }
};

bool vector_is_max_stable_impl(const QuotientGraph& q, const TwinPartition& tp,
                               const WeightAssignment& wa, const CountVector& x,
                               CheckScratch& scratch) {
    const int p = tp.pi();
    std::fill(scratch.selected.begin(), scratch.selected.end(), 0);
    scratch.positive.clear();
    for (size_t j = 0; j < wa.blocks.size(); ++j)
        scratch.selected[wa.blocks[j].class_id] += x[j];

    // Stability: at most one vertex per clique/singleton class, and no two
    // selected classes that see each other.
    for (int c = 0; c < p; ++c) {
        if (scratch.selected[c] <= 0) continue;
        if (tp.classes[c].kind != ClassKind::Stable && scratch.selected[c] > 1) return false;
        scratch.positive.push_back(c);
    }
    for (int c : scratch.positive)
        for (int d : q.adj[c])
            if (scratch.selected[d] > 0) return false;

    // Maximality: every class with an unselected vertex must be dominated,
    // either from a seen class or (for a clique class) from within.
    for (int c = 0; c < p; ++c) {
        if (scratch.selected[c] >= tp.classes[c].size()) continue;
        if (tp.classes[c].kind != ClassKind::Stable && scratch.selected[c] >= 1) continue;
        bool dominated = false;
        for (int d : q.adj[c])
            if (scratch.selected[d] > 0) {
                dominated = true;
                break;
            }
        if (!dominated) return false;
    }
    return true;
}

}  // namespace

bool vector_is_max_stable(const QuotientGraph& q, const TwinPartition& tp,
                          const WeightAssignment& wa, const CountVector& x) {
    if (x.size() != wa.blocks.size())
        throw std::invalid_argument("vector_is_max_stable: count vector length mismatch");
    for (size_t j = 0; j < x.size(); ++j)
        if (x[j] < 0 || x[j] > wa.blocks[j].size)
            throw std::invalid_argument("vector_is_max_stable: count exceeds block capacity");
    CheckScratch scratch;
    scratch.resize(tp.pi());
    return vector_is_max_stable_impl(q, tp, wa, x, scratch);
}

EquistableStructure materialize_structure(const TwinPartition& tp, const WeightAssignment& wa,
                                          long long target) {
    EquistableStructure s;
    s.weights.assign(tp.vertex_count(), 0);
    s.target = target;
    std::vector<int> cursor(tp.classes.size(), 0);
    for (const WeightBlock& b : wa.blocks) {
        const auto& members = tp.classes[b.class_id].members;
        for (int i = 0; i < b.size; ++i) s.weights[members[cursor[b.class_id]++]] = b.weight;
    }
    return s;
}

std::optional<EquistableStructure> check_weight_assignment(
    const Graph& g, const QuotientGraph& q, const TwinPartition& tp, const WeightAssignment& wa,
    const VertexSet& fixed_mss, std::optional<long long> prescribed_target) {
    const long long t = compute_target(g, tp, wa, fixed_mss);
    if (prescribed_target && *prescribed_target != t) return std::nullopt;

    const int blocks = static_cast<int>(wa.blocks.size());
    CountVector x(blocks, 0);
    CheckScratch scratch;
    scratch.resize(tp.pi());
    long long sum = 0;
    for (;;) {
        bool encodes_mss = vector_is_max_stable_impl(q, tp, wa, x, scratch);
        if ((sum == t) != encodes_mss) return std::nullopt;
        int j = 0;
        while (j < blocks) {
            if (x[j] < wa.blocks[j].size) {
                ++x[j];
                sum += wa.blocks[j].weight;
                break;
            }
            sum -= static_cast<long long>(wa.blocks[j].weight) * x[j];
            x[j] = 0;
            ++j;
        }
        if (j == blocks) break;
    }
    return materialize_structure(tp, wa, t);
}

namespace {

std::optional<EquistableStructure> recognize_sequential(
    const Graph& g, const QuotientGraph& q, const TwinPartition& tp, CandidateEnumerator& en,
    const VertexSet& fixed_mss, std::optional<long long> prescribed_target) {
    while (auto wa = en.next())
        if (auto s = check_weight_assignment(g, q, tp, *wa, fixed_mss, prescribed_target))
            return s;
    return std::nullopt;
}

// Workers claim batches of consecutive candidates; the accepted candidate
// with the smallest enumeration index wins, so the result does not depend
// on scheduling.
std::optional<EquistableStructure> recognize_parallel(
    const Graph& g, const QuotientGraph& q, const TwinPartition& tp, CandidateEnumerator& en,
    const VertexSet& fixed_mss, std::optional<long long> prescribed_target, int threads) {
    constexpr int kBatch = 64;
    std::mutex gen_mutex, result_mutex;
    std::atomic<long long> best_index{LLONG_MAX};
    std::optional<EquistableStructure> best;
    long long next_index = 0;
    std::exception_ptr failure;

    auto worker = [&] {
        try {
            for (;;) {
                std::vector<std::pair<long long, WeightAssignment>> batch;
                {
                    std::lock_guard<std::mutex> lock(gen_mutex);
                    if (next_index >= best_index.load(std::memory_order_relaxed)) return;
                    for (int i = 0; i < kBatch; ++i) {
                        auto wa = en.next();
                        if (!wa) break;
                        batch.emplace_back(next_index++, std::move(*wa));
                    }
                }
                if (batch.empty()) return;
                for (auto& [index, wa] : batch) {
                    if (index >= best_index.load(std::memory_order_relaxed)) break;
                    if (auto s = check_weight_assignment(g, q, tp, wa, fixed_mss, prescribed_target)) {
                        std::lock_guard<std::mutex> lock(result_mutex);
                        if (index < best_index.load(std::memory_order_relaxed)) {
                            best_index.store(index, std::memory_order_relaxed);
                            best = std::move(s);
                        }
                    }
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(result_mutex);
            if (!failure) failure = std::current_exception();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return best;
}

}  // namespace

std::optional<EquistableStructure> recognize(const Graph& g, int k,
                                             std::optional<long long> prescribed_target,
                                             int threads) {
    if (k < 1) throw std::invalid_argument("recognize: k must be positive");
    if (prescribed_target && *prescribed_target < 1)
        throw std::invalid_argument("recognize: target must be positive");

    TwinPartition tp = twin_partition(g);
    if (tp.pi() > k) return std::nullopt;
    if (prescribed_target) {
        if (static_cast<long long>(tp.pi()) > *prescribed_target) return std::nullopt;
        for (const TwinClass& c : tp.classes)
            if (c.kind == ClassKind::Stable && static_cast<long long>(c.size()) > *prescribed_target)
                return std::nullopt;
    }

    QuotientGraph q = quotient_graph(g, tp);
    VertexSet fixed_mss = greedy_maximal_stable_set(g);
    CandidateEnumerator en(tp, k, prescribed_target);
    if (threads <= 1)
        return recognize_sequential(g, q, tp, en, fixed_mss, prescribed_target);
    return recognize_parallel(g, q, tp, en, fixed_mss, prescribed_target, threads);
}

}  // namespace equistable

#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "alliance/alliance.hpp"
#include "alliance/capacity.hpp"
#include "alliance/error.hpp"
#include "alliance/exact.hpp"
#include "alliance/graph.hpp"
#include "alliance/type_partition.hpp"

namespace alliance {

/// x_i = |C_i ∩ S| per type class.
using ClassCountVector = std::vector<int>;

namespace detail {

inline void require_counts(const TypeGraph &tg, const ClassCountVector &x) {
    if (x.size() != tg.count())
        throw std::invalid_argument("class count vector has length " + std::to_string(x.size()) + ", expected " +
                                    std::to_string(tg.count()));
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] < 0 || x[i] > tg.sizes[i])
            throw std::invalid_argument("x_" + std::to_string(i) + " = " + std::to_string(x[i]) + " outside [0," +
                                        std::to_string(tg.sizes[i]) + "]");
}

/// Protection of a member of class j when class i holds x[i] solution
/// vertices. Independent class: 1 + Σ_{N_H(j)} 2x_i >= Σ_{N_H(j)} n_i.
/// Clique class: Σ_{N_H[j]} 2x_i >= Σ_{N_H[j]} n_i.
inline bool class_protected(const TypeGraph &tg, const ClassCountVector &x, std::size_t j) {
    long long lhs = 0, rhs = 0;
    for (int i : tg.adjacency[j]) {
        lhs += 2LL * x[i];
        rhs += tg.sizes[i];
    }
    if (tg.kinds[j] == ClassKind::clique) {
        lhs += 2LL * x[j];
        rhs += tg.sizes[j];
    } else {
        lhs += 1;
    }
    return lhs >= rhs;
}

inline bool class_da_unchecked(const TypeGraph &tg, const ClassCountVector &y) {
    bool any = false;
    for (std::size_t j = 0; j < y.size(); ++j) {
        if (y[j] == 0) continue;
        any = true;
        if (!class_protected(tg, y, j)) return false;
    }
    return any;
}

/// Calls f on every vector whose i-th entry is drawn from choices[i].
template <class F>
bool for_each_product(const std::vector<std::vector<int>> &choices, F &&f) {
    ClassCountVector y(choices.size(), 0);
    auto rec = [&](auto &&self, std::size_t i) -> bool {
        if (i == choices.size()) return f(static_cast<const ClassCountVector &>(y));
        for (int c : choices[i]) {
            y[i] = c;
            if (!self(self, i + 1)) return false;
        }
        return true;
    };
    return rec(rec, 0);
}

}  // namespace detail

/// Whether any materialisation of y is a defensive alliance. The zero vector
/// is not.
inline bool class_da_check(const TypeGraph &tg, const ClassCountVector &y) {
    detail::require_counts(tg, y);
    return detail::class_da_unchecked(tg, y);
}

/// Reduced candidate set L'(x): entries from {0, x_i - 1, x_i}, minus x and 0.
inline std::vector<ClassCountVector> reduced_subvectors(const ClassCountVector &x) {
    std::vector<std::vector<int>> choices(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        choices[i] = {0};
        if (x[i] >= 2) choices[i].push_back(x[i] - 1);
        if (x[i] >= 1) choices[i].push_back(x[i]);
    }
    std::vector<ClassCountVector> out;
    detail::for_each_product(choices, [&](const ClassCountVector &y) {
        bool zero = std::all_of(y.begin(), y.end(), [](int v) { return v == 0; });
        if (!zero && y != x) out.push_back(y);
        return true;
    });
    return out;
}

/// Given that x passes class_da_check, true iff no vector of L'(x) does.
/// That is equivalent to global minimality of any materialisation of x.
inline bool class_minimality_check(const TypeGraph &tg, const ClassCountVector &x) {
    detail::require_counts(tg, x);
    if (!detail::class_da_unchecked(tg, x))
        throw std::invalid_argument("class_minimality_check requires a vector that forms an alliance");
    for (const auto &y : reduced_subvectors(x))
        if (detail::class_da_unchecked(tg, y)) return false;
    return true;
}

/// The x_i lowest-indexed vertices of every class.
inline VertexSet materialize_witness(const TypePartition &p, const ClassCountVector &x) {
    if (x.size() != p.count()) throw std::invalid_argument("class count vector length mismatch");
    std::vector<Vertex> members;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < 0 || x[i] > p.class_size(i))
            throw std::invalid_argument("x_" + std::to_string(i) + " outside [0, |C_i|]");
        members.insert(members.end(), p.classes[i].begin(), p.classes[i].begin() + x[i]);
    }
    if (members.empty()) throw std::invalid_argument("all-zero class vector: alliances are non-empty");
    return VertexSet(std::move(members));
}

struct NdSolveResult {
    SolveResult result;
    TypePartition partition;
    ClassCountVector counts;  ///< empty unless found
    /// "enumeration" or "class-certificate"; empty unless found
    std::string verified_by;
};

namespace detail {

/// Branch and bound over class count vectors. Classes are branched in order
/// of decreasing size; within a class larger counts are tried first.
class NdSearch {
public:
    NdSearch(const TypeGraph &tg, int k_min) : tg_(tg), k_min_(k_min) {
        order_.resize(tg.count());
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return tg.sizes[a] > tg.sizes[b]; });
        position_.resize(tg.count());
        for (std::size_t d = 0; d < order_.size(); ++d) position_[order_[d]] = static_cast<int>(d);
        remaining_.assign(order_.size() + 1, 0);
        for (std::size_t d = order_.size(); d-- > 0;) remaining_[d] = remaining_[d + 1] + tg.sizes[order_[d]];
    }

    /// Optimistic completion bound once the first `depth` classes in branch
    /// order are fixed: every unfixed class at full size.
    long long upper_bound(std::size_t depth, long long assigned_sum) const { return assigned_sum + remaining_[depth]; }

    const std::vector<int> &branch_order() const { return order_; }

    void run() {
        x_.assign(tg_.count(), 0);
        best_sum_ = k_min_ - 1;
        best_.clear();
        recurse(0, 0);
    }

    bool found() const { return !best_.empty(); }
    const ClassCountVector &best() const { return best_; }

private:
    /// A fixed class with members must stay protectable when every unfixed
    /// class is filled completely; protection only improves as counts grow.
    bool feasible_prefix(std::size_t depth) {
        ClassCountVector opt = x_;
        for (std::size_t d = depth; d < order_.size(); ++d) opt[order_[d]] = tg_.sizes[order_[d]];
        for (std::size_t d = 0; d < depth; ++d) {
            int j = order_[d];
            if (x_[j] > 0 && !class_protected(tg_, opt, static_cast<std::size_t>(j))) return false;
        }
        return true;
    }

    void recurse(std::size_t depth, long long sum) {
        if (upper_bound(depth, sum) <= best_sum_) return;
        if (!feasible_prefix(depth)) return;
        if (depth == order_.size()) {
            if (class_da_unchecked(tg_, x_) && class_minimality_check(tg_, x_)) {
                best_sum_ = sum;
                best_ = x_;
            }
            return;
        }
        int j = order_[depth];
        for (int c = tg_.sizes[j]; c >= 0; --c) {
            x_[j] = c;
            recurse(depth + 1, sum + c);
        }
        x_[j] = 0;
    }

    const TypeGraph &tg_;
    int k_min_;
    std::vector<int> order_, position_;
    std::vector<long long> remaining_;
    ClassCountVector x_, best_;
    long long best_sum_ = 0;
};

}  // namespace detail

/// Maximum globally minimal defensive alliance via class count vectors.
inline NdSolveResult solve_nd(const Graph &g, int k_min, const Capacity &cap = Capacity::from_environment()) {
    detail::require_kmin(k_min);
    NdSolveResult out;
    out.partition = compute_type_partition(g);
    if (static_cast<int>(out.partition.count()) > cap.nd_classes)
        throw capacity_error("solve_nd: neighbourhood diversity " + std::to_string(out.partition.count()) +
                             " exceeds the guard of " + std::to_string(cap.nd_classes));
    auto tg = build_type_graph(g, out.partition);
    detail::NdSearch search(tg, k_min);
    search.run();
    if (!search.found()) return out;

    out.counts = search.best();
    auto witness = materialize_witness(out.partition, out.counts);
    if (static_cast<int>(witness.size()) <= std::min(cap.enumeration_set, Capacity::hard_limit)) {
        if (!is_globally_minimal(g, witness, cap.enumeration_set))
            throw invariant_violation("nd witness failed the subset enumeration check");
        out.verified_by = "enumeration";
    } else {
        if (!is_defensive_alliance(g, witness) || !class_minimality_check(tg, out.counts))
            throw invariant_violation("nd witness failed the class-level certificate");
        out.verified_by = "class-certificate";
    }
    out.result = SolveResult::of(std::move(witness));
    return out;
}

}  // namespace alliance

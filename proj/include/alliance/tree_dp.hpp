#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "alliance/alliance.hpp"
#include "alliance/error.hpp"
#include "alliance/exact.hpp"
#include "alliance/graph.hpp"

namespace alliance {

/// A DP value that is either a finite size or minus infinity. Sums never
/// touch a numeric sentinel.
class Score {
public:
    constexpr Score() = default;  // minus infinity
    constexpr explicit Score(std::int64_t v) : value_(v) {}

    static constexpr Score minus_infinity() { return Score{}; }

    constexpr bool finite() const { return value_.has_value(); }
    constexpr std::int64_t value() const {
        if (!value_) throw std::logic_error("value of minus infinity");
        return *value_;
    }

    friend constexpr bool operator==(Score, Score) = default;
    friend constexpr std::strong_ordering operator<=>(Score a, Score b) {
        if (!a.finite() || !b.finite()) return a.finite() <=> b.finite();
        return *a.value_ <=> *b.value_;
    }

private:
    std::optional<std::int64_t> value_;
};

enum class TreeState { out, in_children, in_parent };  // 0, 1_c, 1_p

inline const char *to_string(TreeState s) {
    switch (s) {
        case TreeState::out: return "0";
        case TreeState::in_children: return "1c";
        case TreeState::in_parent: return "1p";
    }
    return "?";
}

struct RootedTree {
    Vertex root = 0;
    std::vector<Vertex> parent;                 ///< -1 at the root
    std::vector<std::vector<Vertex>> children;  ///< ascending
    std::vector<Vertex> order;                  ///< BFS order from the root
};

/// Throws std::invalid_argument unless g is a tree (connected, m = n - 1).
inline RootedTree root_tree(const Graph &g, Vertex root = 0) {
    if (g.order() == 0) throw std::invalid_argument("the empty graph is not a tree");
    if (!g.valid_vertex(root)) throw std::invalid_argument("root " + std::to_string(root) + " is not a vertex");
    if (g.size() != static_cast<std::size_t>(g.order() - 1))
        throw std::invalid_argument(g.size() >= static_cast<std::size_t>(g.order()) ? "graph has a cycle"
                                                                                    : "graph is disconnected");
    RootedTree t;
    t.root = root;
    t.parent.assign(static_cast<std::size_t>(g.order()), -1);
    t.children.resize(static_cast<std::size_t>(g.order()));
    t.order.reserve(static_cast<std::size_t>(g.order()));
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    seen[root] = 1;
    t.order.push_back(root);
    for (std::size_t head = 0; head < t.order.size(); ++head) {
        Vertex v = t.order[head];
        for (Vertex u : g.neighbors(v))
            if (!seen[u]) {
                seen[u] = 1;
                t.parent[u] = v;
                t.children[v].push_back(u);
                t.order.push_back(u);
            }
    }
    if (t.order.size() != static_cast<std::size_t>(g.order())) throw std::invalid_argument("graph has a cycle");
    return t;
}

/// A_v(0), A_v(1_c), A_v(1_p) per vertex. `chosen` holds, per vertex, the
/// children taken in state 1_p, ordered by descending A(1_p) then index;
/// states 1_p / 1_c / root 1_c use its first ⌈(d-2)/2⌉ / ⌈d/2⌉ / ⌊d/2⌋ entries.
struct DPTable {
    std::vector<Score> out, in_children, in_parent;
    std::vector<std::vector<Vertex>> ranked_children;
    std::vector<Vertex> best_out_child;  ///< argmax child for A(0), -1 for leaves
    std::vector<TreeState> best_out_child_state;

    Score at(Vertex v, TreeState s) const {
        switch (s) {
            case TreeState::out: return out[v];
            case TreeState::in_children: return in_children[v];
            case TreeState::in_parent: return in_parent[v];
        }
        return {};
    }
};

namespace detail {

inline long long ceil_half(long long x) { return x >= 0 ? (x + 1) / 2 : -((-x) / 2); }

/// Children in the solution for a vertex with d children in state s.
inline long long required_children(TreeState s, long long d, bool is_root) {
    if (is_root) return d / 2;
    return s == TreeState::in_parent ? ceil_half(d - 2) : ceil_half(d);
}

inline Score top_sum(const DPTable &t, const std::vector<Vertex> &ranked, long long need) {
    if (need < 0 || need > static_cast<long long>(ranked.size())) return Score::minus_infinity();
    std::int64_t sum = 1;
    for (long long i = 0; i < need; ++i) {
        Score s = t.in_parent[ranked[i]];
        if (!s.finite()) return Score::minus_infinity();
        sum += s.value();
    }
    return Score(sum);
}

}  // namespace detail

/// Bottom-up fill. Per vertex the dominant cost is ranking the children by
/// A(1_p), so the whole table costs O(n log n).
inline DPTable compute_dp(const RootedTree &t) {
    const std::size_t n = t.parent.size();
    DPTable dp;
    dp.out.assign(n, Score(0));
    dp.in_children.assign(n, Score::minus_infinity());
    dp.in_parent.assign(n, Score::minus_infinity());
    dp.ranked_children.resize(n);
    dp.best_out_child.assign(n, -1);
    dp.best_out_child_state.assign(n, TreeState::out);

    for (auto it = t.order.rbegin(); it != t.order.rend(); ++it) {
        Vertex v = *it;
        const auto &kids = t.children[v];
        bool is_root = v == t.root;
        if (kids.empty() && !is_root) continue;  // leaf: (0, -inf, -inf)

        Score best(0);
        for (Vertex c : kids)
            for (TreeState s : {TreeState::out, TreeState::in_children}) {
                Score cand = dp.at(c, s);
                if (cand > best) {
                    best = cand;
                    dp.best_out_child[v] = c;
                    dp.best_out_child_state[v] = s;
                }
            }
        dp.out[v] = best;

        auto &ranked = dp.ranked_children[v];
        ranked = kids;
        std::stable_sort(ranked.begin(), ranked.end(),
                         [&](Vertex a, Vertex b) { return dp.in_parent[a] > dp.in_parent[b]; });

        const auto d = static_cast<long long>(kids.size());
        dp.in_children[v] = detail::top_sum(dp, ranked, detail::required_children(TreeState::in_children, d, is_root));
        if (!is_root)
            dp.in_parent[v] = detail::top_sum(dp, ranked, detail::required_children(TreeState::in_parent, d, false));
    }
    return dp;
}

/// Members of the alliance encoded by (v, s) in the table.
inline VertexSet reconstruct_tree_alliance(const RootedTree &t, const DPTable &dp, Vertex v, TreeState s) {
    std::vector<Vertex> members;
    std::vector<std::pair<Vertex, TreeState>> stack{{v, s}};
    while (!stack.empty()) {
        auto [x, st] = stack.back();
        stack.pop_back();
        if (st == TreeState::out) {
            if (dp.out[x] > Score(0) && dp.best_out_child[x] >= 0)
                stack.emplace_back(dp.best_out_child[x], dp.best_out_child_state[x]);
            continue;
        }
        members.push_back(x);
        auto need = detail::required_children(st, static_cast<long long>(t.children[x].size()), x == t.root);
        for (long long i = 0; i < need; ++i) stack.emplace_back(dp.ranked_children[x][i], TreeState::in_parent);
    }
    return VertexSet(std::move(members));
}

/// Maximum globally minimal defensive alliance of a tree, reported only when
/// it has at least k_min members. The witness is checked against the
/// connected-and-all-marginal certificate before it is returned.
inline SolveResult solve_tree(const Graph &g, int k_min, Vertex root = 0) {
    detail::require_kmin(k_min);
    auto t = root_tree(g, root);
    auto dp = compute_dp(t);
    Score best = std::max(dp.out[t.root], dp.in_children[t.root]);
    if (!best.finite() || best.value() < k_min) return SolveResult::none();
    TreeState s = dp.in_children[t.root] >= dp.out[t.root] ? TreeState::in_children : TreeState::out;
    auto witness = reconstruct_tree_alliance(t, dp, t.root, s);
    if (static_cast<std::int64_t>(witness.size()) != best.value())
        throw invariant_violation("tree witness has " + std::to_string(witness.size()) + " members, table says " +
                                  std::to_string(best.value()));
    if (!certify_sufficient_minimality(g, witness))
        throw invariant_violation("tree witness is not connected with all members marginal");
    return SolveResult::of(std::move(witness));
}

}  // namespace alliance

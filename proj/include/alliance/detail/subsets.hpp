#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "alliance/graph.hpp"

namespace alliance::detail {

using Mask = std::uint64_t;

inline Mask bit(int i) { return Mask{1} << i; }

/// A universe of at most 64 vertices with bitmask adjacency. Degrees are the
/// degrees in the full host graph, so alliance tests account for neighbours
/// outside the universe.
struct LocalGraph {
    std::vector<Vertex> vertices;  ///< local index -> host vertex, ascending
    std::vector<Mask> adj;
    std::vector<int> degree;

    static LocalGraph induced(const Graph &g, std::span<const Vertex> universe) {
        LocalGraph lg;
        lg.vertices.assign(universe.begin(), universe.end());
        const int k = static_cast<int>(universe.size());
        lg.adj.assign(static_cast<std::size_t>(k), 0);
        lg.degree.resize(static_cast<std::size_t>(k));
        std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
        for (int i = 0; i < k; ++i) local[universe[i]] = i;
        for (int i = 0; i < k; ++i) {
            lg.degree[i] = g.degree(universe[i]);
            for (Vertex u : g.neighbors(universe[i]))
                if (local[u] >= 0) lg.adj[i] |= bit(local[u]);
        }
        return lg;
    }

    int size() const { return static_cast<int>(vertices.size()); }
    Mask all() const { return size() == 64 ? ~Mask{0} : bit(size()) - 1; }

    /// Each member v of t satisfies d_t(v) + 1 >= deg(v) - d_t(v).
    bool is_alliance(Mask t) const {
        if (t == 0) return false;
        for (Mask rest = t; rest; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            if (2 * std::popcount(adj[v] & t) + 1 < degree[v]) return false;
        }
        return true;
    }

    std::vector<Vertex> members(Mask t) const {
        std::vector<Vertex> out;
        for (; t; t &= t - 1) out.push_back(vertices[std::countr_zero(t)]);
        return out;
    }
};

/// ESU-style enumeration: every connected subset containing `anchor`, inside
/// `allowed`, is visited exactly once. `allowed` restricts extension
/// candidates; passing only vertices above the anchor yields each connected
/// set once across anchors. The visitor returns false to stop.
template <class Visit>
bool extend_connected(const LocalGraph &lg, Mask allowed, Mask sub, Mask ext, Mask closed, Visit &visit) {
    if (!visit(sub)) return false;
    while (ext) {
        int w = std::countr_zero(ext);
        ext &= ext - 1;
        Mask next_ext = ext | (lg.adj[w] & allowed & ~closed);
        if (!extend_connected(lg, allowed, sub | bit(w), next_ext, closed | lg.adj[w] | bit(w), visit))
            return false;
    }
    return true;
}

/// Visits every non-empty connected subset of `universe` exactly once.
/// Returns false if the visitor stopped the enumeration.
template <class Visit>
bool for_each_connected_subset(const LocalGraph &lg, Mask universe, Visit &&visit) {
    for (Mask anchors = universe; anchors; anchors &= anchors - 1) {
        int v = std::countr_zero(anchors);
        Mask upto = v == 63 ? ~Mask{0} : bit(v + 1) - 1;
        Mask above = universe & ~upto;
        Mask closed = lg.adj[v] | bit(v);
        if (!extend_connected(lg, above, bit(v), lg.adj[v] & above, closed, visit)) return false;
    }
    return true;
}

/// Visits every connected subset of `universe` that contains `anchor`.
template <class Visit>
bool for_each_connected_subset_containing(const LocalGraph &lg, Mask universe, int anchor, Visit &&visit) {
    Mask allowed = universe & ~bit(anchor);
    Mask closed = lg.adj[anchor] | bit(anchor);
    return extend_connected(lg, allowed, bit(anchor), lg.adj[anchor] & allowed, closed, visit);
}

/// True iff no non-empty proper subset of `t` is an alliance. Only connected
/// subsets are examined: some component of any alliance is itself one.
inline bool has_no_proper_suballiance(const LocalGraph &lg, Mask t) {
    return for_each_connected_subset(lg, t, [&](Mask sub) { return sub == t || !lg.is_alliance(sub); });
}

}  // namespace alliance::detail

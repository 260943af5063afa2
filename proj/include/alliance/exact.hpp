#pragma once

#include <bit>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "alliance/alliance.hpp"
#include "alliance/capacity.hpp"
#include "alliance/detail/subsets.hpp"
#include "alliance/error.hpp"
#include "alliance/graph.hpp"
#include "alliance/weighted.hpp"

namespace alliance {

struct SolveResult {
    bool found = false;
    VertexSet witness;  ///< empty unless found

    std::size_t size() const noexcept { return witness.size(); }

    static SolveResult none() { return {}; }
    static SolveResult of(VertexSet s) { return {true, std::move(s)}; }
};

namespace detail {

inline void require_kmin(int k_min) {
    if (k_min < 2) throw std::invalid_argument("k_min must be at least 2, got " + std::to_string(k_min));
}

inline void require_universe(std::size_t size, int guard, const char *who) {
    int limit = std::min(guard, Capacity::hard_limit);
    if (static_cast<int>(size) > limit)
        throw capacity_error(std::string(who) + ": search universe of " + std::to_string(size) +
                             " vertices exceeds the guard of " + std::to_string(limit));
}

/// Keeps the largest candidate, ties going to the lexicographically smallest
/// member list.
struct BestAlliance {
    int size = 0;
    std::vector<Vertex> members;

    bool accept_size(int s) const { return s >= size; }

    void offer(const LocalGraph &lg, Mask t) {
        int s = std::popcount(t);
        auto m = lg.members(t);
        if (members.empty() || s > size || m < members) {
            size = s;
            members = std::move(m);
        }
    }

    SolveResult result() const {
        return members.empty() ? SolveResult::none() : SolveResult::of(VertexSet(members));
    }
};

/// Vertices of degree at least two, minus `excluded`. No globally minimal
/// alliance of size >= 2 contains a vertex of degree at most one.
inline std::vector<Vertex> live_vertices(const Graph &g, const std::vector<char> *excluded = nullptr) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) >= 2 && !(excluded && (*excluded)[v])) out.push_back(v);
    return out;
}

}  // namespace detail

/// Maximum globally minimal defensive alliance with at least k_min members,
/// by enumeration of connected sets over vertices of degree >= 2.
inline SolveResult max_gmda_bruteforce(const Graph &g, int k_min,
                                       const Capacity &cap = Capacity::from_environment()) {
    detail::require_kmin(k_min);
    auto universe = detail::live_vertices(g);
    detail::require_universe(universe.size(), cap.bruteforce_vertices, "max_gmda_bruteforce");
    auto lg = detail::LocalGraph::induced(g, universe);
    detail::BestAlliance best;
    best.size = k_min;
    detail::for_each_connected_subset(lg, lg.all(), [&](detail::Mask t) {
        int s = std::popcount(t);
        if (best.accept_size(s) && lg.is_alliance(t) && detail::has_no_proper_suballiance(lg, t)) best.offer(lg, t);
        return true;
    });
    return best.result();
}

/// Is there a globally minimal defensive alliance (of any size) containing r?
/// The witness is the largest such set, ties broken lexicographically.
inline SolveResult rooted_exists_bruteforce(const Graph &g, Vertex r,
                                            const Capacity &cap = Capacity::from_environment()) {
    if (!g.valid_vertex(r)) throw std::invalid_argument("root " + std::to_string(r) + " is not a vertex");
    if (g.degree(r) <= 1) return SolveResult::of(VertexSet{r});
    auto universe = detail::live_vertices(g);
    detail::require_universe(universe.size(), cap.bruteforce_vertices, "rooted_exists_bruteforce");
    auto lg = detail::LocalGraph::induced(g, universe);
    int anchor = static_cast<int>(std::lower_bound(universe.begin(), universe.end(), r) - universe.begin());
    detail::BestAlliance best;
    detail::for_each_connected_subset_containing(lg, lg.all(), anchor, [&](detail::Mask t) {
        if (best.accept_size(std::popcount(t)) && lg.is_alliance(t) && detail::has_no_proper_suballiance(lg, t))
            best.offer(lg, t);
        return true;
    });
    return best.result();
}

/// Maximum globally minimal alliance S with necessary ⊆ S, S ∩ forbidden = ∅
/// and |S| >= k_min. Forbidden vertices must have degree one.
inline SolveResult annotated_max_gmda(const Graph &g, const VertexSet &necessary, const VertexSet &forbidden,
                                      int k_min, const Capacity &cap = Capacity::from_environment()) {
    detail::require_kmin(k_min);
    require_members_of(g, necessary);
    require_members_of(g, forbidden);
    for (Vertex v : forbidden)
        if (g.degree(v) != 1)
            throw std::invalid_argument("forbidden vertex " + std::to_string(v) + " has degree " +
                                        std::to_string(g.degree(v)) + ", expected 1");
    if (necessary.intersects(forbidden)) throw std::invalid_argument("necessary and forbidden sets overlap");

    auto excluded = forbidden.mask(g.order());
    auto universe = detail::live_vertices(g, &excluded);
    detail::require_universe(universe.size(), cap.bruteforce_vertices, "annotated_max_gmda");
    for (Vertex v : necessary)
        if (!std::binary_search(universe.begin(), universe.end(), v)) return SolveResult::none();

    auto lg = detail::LocalGraph::induced(g, universe);
    detail::Mask required = 0;
    for (Vertex v : necessary)
        required |= detail::bit(static_cast<int>(std::lower_bound(universe.begin(), universe.end(), v) - universe.begin()));

    detail::BestAlliance best;
    best.size = k_min;
    auto visit = [&](detail::Mask t) {
        if ((t & required) == required && best.accept_size(std::popcount(t)) && lg.is_alliance(t) &&
            detail::has_no_proper_suballiance(lg, t))
            best.offer(lg, t);
        return true;
    };
    if (required) detail::for_each_connected_subset_containing(lg, lg.all(), std::countr_zero(required), visit);
    else detail::for_each_connected_subset(lg, lg.all(), visit);
    return best.result();
}

/// The lexicographically first k-clique, by plain backtracking.
inline std::optional<VertexSet> find_k_clique(const Graph &g, int k) {
    if (k < 1) throw std::invalid_argument("clique size must be positive");
    std::vector<Vertex> pick;
    auto search = [&](auto &&self, Vertex from) -> bool {
        if (static_cast<int>(pick.size()) == k) return true;
        for (Vertex v = from; v < g.order(); ++v) {
            if (g.order() - v < k - static_cast<int>(pick.size())) return false;
            bool ok = true;
            for (Vertex u : pick) ok = ok && g.adjacent(u, v);
            if (!ok) continue;
            pick.push_back(v);
            if (self(self, v + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    if (!search(search, 0)) return std::nullopt;
    return VertexSet(pick);
}

/// Some orientation with every weighted outdegree at most r, or nullopt.
/// Depth-first over edges in input order, trying u -> v before v -> u.
inline std::optional<Orientation> mmo_bruteforce(const WeightedGraph &gw, long long r,
                                                 const Capacity &cap = Capacity::from_environment()) {
    if (static_cast<int>(gw.size()) > cap.mmo_edges)
        throw capacity_error("mmo_bruteforce: " + std::to_string(gw.size()) + " edges exceed the guard of " +
                             std::to_string(cap.mmo_edges));
    const auto &edges = gw.edges();
    std::vector<long long> out(static_cast<std::size_t>(gw.order()), 0);
    Orientation o;
    o.forward.assign(edges.size(), 1);

    auto search = [&](auto &&self, std::size_t e) -> bool {
        if (e == edges.size()) return true;
        for (char fwd : {char{1}, char{0}}) {
            Vertex t = fwd ? edges[e].u : edges[e].v;
            if (out[t] + edges[e].weight > r) continue;
            out[t] += edges[e].weight;
            o.forward[e] = fwd;
            if (self(self, e + 1)) return true;
            out[t] -= edges[e].weight;
        }
        return false;
    };
    if (!search(search, 0)) return std::nullopt;
    return o;
}

}  // namespace alliance

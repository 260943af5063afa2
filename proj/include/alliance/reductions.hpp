#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "alliance/alliance.hpp"
#include "alliance/error.hpp"
#include "alliance/graph.hpp"
#include "alliance/weighted.hpp"

namespace alliance {

/// Role name -> vertices. Every vertex of a generated instance appears in
/// exactly one role; original vertices sit under "G".
using RoleTable = std::map<std::string, std::vector<Vertex>>;

struct AnnotatedInstance {
    Graph graph;
    VertexSet necessary;
    VertexSet forbidden;
    long long k = 0;
    RoleTable roles;

    const std::vector<Vertex> &role(const std::string &name) const {
        auto it = roles.find(name);
        if (it == roles.end()) throw std::invalid_argument("instance has no role '" + name + "'");
        return it->second;
    }
};

/// Every role vertex is a vertex, no vertex appears twice, and every vertex
/// is covered. Throws std::invalid_argument on the first violation.
inline void require_role_partition(int n, const RoleTable &roles) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::size_t count = 0;
    for (const auto &[name, vs] : roles)
        for (Vertex v : vs) {
            if (v < 0 || v >= n) throw std::invalid_argument("role " + name + " lists non-vertex " + std::to_string(v));
            if (seen[v]++) throw std::invalid_argument("vertex " + std::to_string(v) + " appears in two roles");
            ++count;
        }
    if (count != static_cast<std::size_t>(n))
        throw std::invalid_argument("roles cover " + std::to_string(count) + " of " + std::to_string(n) + " vertices");
}

namespace detail {

/// Appends vertices and edges in call order, so numbering follows the order
/// in which roles are created.
class InstanceBuilder {
public:
    explicit InstanceBuilder(int base_order) : n_(base_order) {}

    Vertex order() const { return n_; }

    std::vector<Vertex> add(const std::string &role, long long count) {
        if (roles_.count(role)) throw std::logic_error("role " + role + " created twice");
        std::vector<Vertex> vs;
        vs.reserve(static_cast<std::size_t>(count));
        for (long long i = 0; i < count; ++i) vs.push_back(n_++);
        roles_[role] = vs;
        return vs;
    }

    /// count degree-one vertices hanging from v.
    std::vector<Vertex> pendants(const std::string &role, Vertex v, long long count) {
        auto vs = add(role, count);
        for (Vertex p : vs) {
            edge(v, p);
            forbidden_.push_back(p);
        }
        return vs;
    }

    void edge(Vertex a, Vertex b) { edges_.emplace_back(a, b); }
    void role(const std::string &name, std::vector<Vertex> vs) { roles_[name] = std::move(vs); }
    void forbid(const std::vector<Vertex> &vs) { forbidden_.insert(forbidden_.end(), vs.begin(), vs.end()); }

    std::vector<Edge> &edges() { return edges_; }
    RoleTable &roles() { return roles_; }
    std::vector<Vertex> &forbidden() { return forbidden_; }

    Graph graph() const { return Graph::from_edges(n_, edges_); }

private:
    Vertex n_;
    std::vector<Edge> edges_;
    RoleTable roles_;
    std::vector<Vertex> forbidden_;
};

inline std::vector<Vertex> iota_vertices(int n) {
    std::vector<Vertex> vs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) vs[i] = i;
    return vs;
}

inline std::string key(const std::string &name, long long a) { return name + "[" + std::to_string(a) + "]"; }
inline std::string key(const std::string &name, long long a, long long b) {
    return name + "[" + std::to_string(a) + "," + std::to_string(b) + "]";
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Clique on s-regular graphs -> rooted minimal alliance
// ---------------------------------------------------------------------------

/// Vertex numbering: the n original vertices keep 0..n-1, then r = n, then
/// K = z_1..z_{n-2k}, then the n-2k pendants of r, then the n-s-2 pendants of
/// each original vertex in vertex order.
struct RootedInstance {
    Graph graph;
    Vertex root = 0;
    int base_order = 0;  ///< n of the clique instance
    int k = 0;
    int s = 0;  ///< regularity of the clique instance
    std::vector<Vertex> clique_gadget;
    RoleTable roles;

    const std::vector<Vertex> &role(const std::string &name) const {
        auto it = roles.find(name);
        if (it == roles.end()) throw std::invalid_argument("instance has no role '" + name + "'");
        return it->second;
    }
};

inline RootedInstance reduce_clique_to_rooted(const Graph &g, int k) {
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("clique instance must have at least one vertex");
    if (k < 2) throw std::invalid_argument("k must be at least 2, got " + std::to_string(k));
    const int s = g.degree(0);
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) != s)
            throw std::invalid_argument("graph is not regular: deg(0) = " + std::to_string(s) + ", deg(" +
                                        std::to_string(v) + ") = " + std::to_string(g.degree(v)));
    if (n - 2 * k < 1)
        throw std::invalid_argument("n - 2k = " + std::to_string(n - 2 * k) + " but the clique gadget needs at least one vertex");
    if (n - s - 2 < 0) throw std::invalid_argument("n - s - 2 = " + std::to_string(n - s - 2) + " is negative");

    detail::InstanceBuilder b(n);
    for (auto [u, v] : g.edges()) b.edge(u, v);
    b.role("G", detail::iota_vertices(n));
    Vertex r = b.add("r", 1).front();
    auto clique = b.add("K", n - 2 * k);
    for (std::size_t i = 0; i < clique.size(); ++i) {
        for (std::size_t j = i + 1; j < clique.size(); ++j) b.edge(clique[i], clique[j]);
        for (Vertex v = 0; v < n; ++v) b.edge(clique[i], v);
        b.edge(clique[i], r);
    }
    b.pendants("V_r_box", r, n - 2 * k);
    for (Vertex v = 0; v < n; ++v) b.pendants(detail::key("V_u_box", v), v, n - s - 2);

    RootedInstance inst;
    inst.graph = b.graph();
    inst.root = r;
    inst.base_order = n;
    inst.k = k;
    inst.s = s;
    inst.clique_gadget = std::move(clique);
    inst.roles = std::move(b.roles());
    return inst;
}

/// S = C ∪ K ∪ {r} for a k-clique C of the original graph.
inline VertexSet lift_clique_witness(const RootedInstance &inst, const VertexSet &c) {
    if (static_cast<int>(c.size()) != inst.k)
        throw std::invalid_argument("expected a clique of size " + std::to_string(inst.k) + ", got " +
                                    std::to_string(c.size()) + " vertices");
    for (Vertex v : c)
        if (v < 0 || v >= inst.base_order)
            throw std::invalid_argument("vertex " + std::to_string(v) + " is not an original vertex");
    for (auto a = c.begin(); a != c.end(); ++a)
        for (auto b = std::next(a); b != c.end(); ++b)
            if (!inst.graph.adjacent(*a, *b))
                throw std::invalid_argument("vertices " + std::to_string(*a) + " and " + std::to_string(*b) +
                                            " are not adjacent");
    std::vector<Vertex> members(c.begin(), c.end());
    members.insert(members.end(), inst.clique_gadget.begin(), inst.clique_gadget.end());
    members.push_back(inst.root);
    return VertexSet(std::move(members));
}

// ---------------------------------------------------------------------------
// Minimum Maximum Outdegree -> GMDA^FN -> GMDA^F -> GMDA
// ---------------------------------------------------------------------------

/// One complementary pair (u^v_i, v^u_j) and its x/y gadget.
struct ComplementaryPair {
    std::size_t edge = 0;
    Vertex tail_side = 0;  ///< the vertex of V_uv (attached to u)
    Vertex head_side = 0;  ///< the vertex of V_vu (attached to v)
    Vertex x = 0;
    Vertex y = 0;
};

struct MmoChain {
    AnnotatedInstance fn;  ///< with necessary and forbidden vertices
    AnnotatedInstance f;   ///< necessary vertices eliminated
    Graph plain;           ///< same graph as f, annotations dropped
    long long plain_k = 0;
    long long r = 0;
    std::vector<ComplementaryPair> pairs;
};

namespace detail {

inline std::string side_key(Vertex a, Vertex b) { return key("V", a, b); }

/// For edge (u,v) with weight w: pairs (u^v_i, v^u_i), i = 1..w, then
/// (u^v_{i+1}, v^u_i), i = 1..w-1.
inline std::vector<std::pair<int, int>> pair_pattern(int w) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < w; ++i) out.emplace_back(i, i);
    for (int i = 0; i + 1 < w; ++i) out.emplace_back(i + 1, i);
    return out;
}

}  // namespace detail

/// Step 1. Numbering: original vertices 0..n-1; per vertex v ascending
/// H[v], H_box[v], V_box[v]; per edge (u,v) in input order V[u,v],
/// V_box[u,v], V[v,u], V_box[v,u], then the connection pendants
/// V_box[u^v_i] / V_box[v^u_i]; per complementary pair p in order x[p],
/// y[p], X_box[p], Y_box[p].
inline AnnotatedInstance reduce_mmo_to_fn(const WeightedGraph &gw, long long r,
                                          std::vector<ComplementaryPair> *pairs_out = nullptr) {
    if (r < 1) throw std::invalid_argument("r must be at least 1, got " + std::to_string(r));
    // Each component would yield its own alliance, so the union could never
    // be globally minimal. Orientations split by component anyway.
    if (!is_connected(gw.graph())) throw std::invalid_argument("weighted graph must be connected");
    const int n = gw.order();
    const auto &E = gw.edges();
    std::vector<long long> pair_load(static_cast<std::size_t>(n), 0);  // Σ(2w-1) over incident edges
    for (const auto &e : E) {
        pair_load[e.u] += 2LL * e.weight - 1;
        pair_load[e.v] += 2LL * e.weight - 1;
    }

    detail::InstanceBuilder b(n);
    b.role("G", detail::iota_vertices(n));
    std::vector<Vertex> necessary = detail::iota_vertices(n);

    for (Vertex v = 0; v < n; ++v) {
        auto h = b.add(detail::key("H", v), 2 * r);
        for (Vertex x : h) b.edge(v, x);
        auto hb = b.add(detail::key("H_box", v), 2 * r);
        for (std::size_t i = 0; i < h.size(); ++i) b.edge(h[i], hb[i]);
        b.forbid(hb);
        b.pendants(detail::key("V_box", v), v, 1 + pair_load[v]);
    }

    std::vector<ComplementaryPair> pairs;
    for (std::size_t ei = 0; ei < E.size(); ++ei) {
        const auto [u, v, w] = E[ei];
        auto tail_side = b.add(detail::side_key(u, v), w);
        for (Vertex x : tail_side) b.edge(u, x);
        b.pendants(detail::key("V_box", u, v), u, w);
        auto head_side = b.add(detail::side_key(v, u), w);
        for (Vertex x : head_side) b.edge(v, x);
        b.pendants(detail::key("V_box", v, u), v, w);

        auto pattern = detail::pair_pattern(w);
        std::vector<int> tail_pairs(static_cast<std::size_t>(w), 0), head_pairs(static_cast<std::size_t>(w), 0);
        for (auto [i, j] : pattern) {
            ++tail_pairs[i];
            ++head_pairs[j];
        }
        for (int i = 0; i < w; ++i)
            b.pendants("V_box[" + std::to_string(u) + "^" + std::to_string(v) + "_" + std::to_string(i + 1) + "]",
                       tail_side[i], tail_pairs[i] == 1 ? 3 : 4);
        for (int i = 0; i < w; ++i)
            b.pendants("V_box[" + std::to_string(v) + "^" + std::to_string(u) + "_" + std::to_string(i + 1) + "]",
                       head_side[i], head_pairs[i] == 1 ? 3 : 4);
        for (auto [i, j] : pattern) pairs.push_back({ei, tail_side[i], head_side[j], 0, 0});
    }

    for (std::size_t p = 0; p < pairs.size(); ++p) {
        auto &cp = pairs[p];
        cp.x = b.add(detail::key("x", static_cast<long long>(p)), 1).front();
        cp.y = b.add(detail::key("y", static_cast<long long>(p)), 1).front();
        const auto &e = E[cp.edge];
        for (Vertex t : {cp.tail_side, cp.head_side, cp.y, e.u, e.v}) b.edge(cp.x, t);
        b.pendants(detail::key("X_box", static_cast<long long>(p)), cp.x, 4);
        b.pendants(detail::key("Y_box", static_cast<long long>(p)), cp.y, 2);
        necessary.push_back(cp.x);
        necessary.push_back(cp.y);
    }

    AnnotatedInstance inst;
    inst.graph = b.graph();
    inst.necessary = VertexSet(std::move(necessary));
    inst.forbidden = VertexSet(std::move(b.forbidden()));
    inst.k = static_cast<long long>(n) * (r + 1) + 6 * gw.total_weight() - 2 * static_cast<long long>(E.size());
    inst.roles = std::move(b.roles());
    if (pairs_out) *pairs_out = std::move(pairs);
    return inst;
}

/// Step 2. Each necessary vertex u gets a cycle Vu[u] of length 4N (N the
/// vertex count of the input graph) whose vertices are adjacent to u and carry
/// four pendants each (Vx_box[u]), plus 4N pendants on u itself (Vu_box[u]).
/// Blocks are appended per necessary vertex in ascending order.
inline AnnotatedInstance eliminate_necessary(const AnnotatedInstance &in) {
    const long long len = 4LL * in.graph.order();
    detail::InstanceBuilder b(in.graph.order());
    for (auto [u, v] : in.graph.edges()) b.edge(u, v);
    b.roles() = in.roles;
    b.forbid(in.forbidden.members());
    for (Vertex u : in.necessary) {
        auto cycle = b.add(detail::key("Vu", u), len);
        for (long long i = 0; i < len; ++i) {
            b.edge(u, cycle[i]);
            b.edge(cycle[i], cycle[(i + 1) % len]);
        }
        auto all = b.add(detail::key("Vx_box", u), 4 * len);
        for (long long i = 0; i < 4 * len; ++i) b.edge(cycle[i / 4], all[i]);
        b.forbid(all);
        b.pendants(detail::key("Vu_box", u), u, len);
    }
    AnnotatedInstance out;
    out.graph = b.graph();
    out.forbidden = VertexSet(std::move(b.forbidden()));
    out.k = in.k + len * static_cast<long long>(in.necessary.size());
    out.roles = std::move(b.roles());
    return out;
}

/// All three instances of the chain. The plain instance is the F instance
/// with its annotations dropped and the same target.
inline MmoChain reduce_mmo_chain(const WeightedGraph &gw, long long r) {
    MmoChain chain;
    chain.r = r;
    chain.fn = reduce_mmo_to_fn(gw, r, &chain.pairs);
    chain.f = eliminate_necessary(chain.fn);
    chain.plain = chain.f.graph;
    chain.plain_k = chain.f.k;
    return chain;
}

/// The alliance V_△ ∪ ⋃_{u->v} V_vu ∪ {h^v_i : i <= r + w_out(v)} of the FN
/// instance. Requires every weighted outdegree to be at most r.
inline VertexSet lift_mmo_witness(const AnnotatedInstance &fn, const WeightedGraph &gw, const Orientation &o,
                                  long long r) {
    auto out = weighted_outdegrees(gw, o);
    for (Vertex v = 0; v < gw.order(); ++v)
        if (out[v] > r)
            throw std::invalid_argument("vertex " + std::to_string(v) + " has weighted outdegree " +
                                        std::to_string(out[v]) + " > r = " + std::to_string(r));
    std::vector<Vertex> members(fn.necessary.begin(), fn.necessary.end());
    for (std::size_t e = 0; e < gw.size(); ++e) {
        const auto &side = fn.role(detail::side_key(head(gw, o, e), tail(gw, o, e)));
        members.insert(members.end(), side.begin(), side.end());
    }
    for (Vertex v = 0; v < gw.order(); ++v) {
        const auto &h = fn.role(detail::key("H", v));
        if (static_cast<long long>(h.size()) != 2 * r)
            throw std::invalid_argument("instance was built for a different r");
        members.insert(members.end(), h.begin(), h.begin() + (r + out[v]));
    }
    VertexSet s(std::move(members));
    if (static_cast<long long>(s.size()) != fn.k)
        throw invariant_violation("lifted set has " + std::to_string(s.size()) + " vertices, k = " + std::to_string(fn.k));
    return s;
}

/// u -> v iff V_vu ⊆ S. s must be an alliance of the FN instance that
/// respects the annotations; each edge must have exactly one side in s.
inline Orientation extract_orientation(const AnnotatedInstance &fn, const WeightedGraph &gw, const VertexSet &s) {
    require_members_of(fn.graph, s);
    for (Vertex v : fn.necessary)
        if (!s.contains(v)) throw std::invalid_argument("set misses necessary vertex " + std::to_string(v));
    if (s.intersects(fn.forbidden)) throw std::invalid_argument("set contains a forbidden vertex");
    if (!is_defensive_alliance(fn.graph, s)) throw std::invalid_argument("set is not a defensive alliance");

    auto inside = [&](const std::vector<Vertex> &side) {
        std::size_t c = 0;
        for (Vertex x : side) c += s.contains(x);
        return c == side.size() ? 1 : c == 0 ? 0 : -1;
    };
    Orientation o;
    o.forward.resize(gw.size());
    for (std::size_t e = 0; e < gw.size(); ++e) {
        const auto &[u, v, w] = gw.edges()[e];
        int at_u = inside(fn.role(detail::side_key(u, v)));
        int at_v = inside(fn.role(detail::side_key(v, u)));
        if (at_u < 0 || at_v < 0 || at_u == at_v)
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") does not have exactly one side set in the solution");
        o.forward[e] = static_cast<char>(at_v);
    }
    long long r = static_cast<long long>(fn.role(detail::key("H", 0)).size()) / 2;
    if (gw.order() > 0 && max_weighted_outdegree(gw, o) > r)
        throw invariant_violation("extracted orientation exceeds outdegree " + std::to_string(r));
    return o;
}

/// S' = S ∪ ⋃_{u ∈ V_△} Vu[u]. The plain instance shares the F graph, so
/// the result is valid for both.
inline VertexSet lift_fn_to_plain(const AnnotatedInstance &fn, const AnnotatedInstance &f, const VertexSet &s_fn) {
    require_members_of(fn.graph, s_fn);
    detail::require_nonempty(s_fn, "lift_fn_to_plain");
    for (Vertex v : fn.necessary)
        if (!s_fn.contains(v)) throw std::invalid_argument("set misses necessary vertex " + std::to_string(v));
    if (s_fn.intersects(fn.forbidden)) throw std::invalid_argument("set contains a forbidden vertex");
    if (!is_defensive_alliance(fn.graph, s_fn)) throw std::invalid_argument("set is not a defensive alliance");
    std::vector<Vertex> members(s_fn.begin(), s_fn.end());
    for (Vertex u : fn.necessary) {
        const auto &cycle = f.role(detail::key("Vu", u));
        members.insert(members.end(), cycle.begin(), cycle.end());
    }
    return VertexSet(std::move(members));
}

inline VertexSet lift_fn_to_plain(const MmoChain &chain, const VertexSet &s_fn) {
    return lift_fn_to_plain(chain.fn, chain.f, s_fn);
}

}  // namespace alliance

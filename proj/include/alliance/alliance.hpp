#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "alliance/capacity.hpp"
#include "alliance/detail/subsets.hpp"
#include "alliance/error.hpp"
#include "alliance/graph.hpp"

namespace alliance {

enum class ProtectionStatus { unprotected, marginal, strong };

inline const char *to_string(ProtectionStatus s) {
    switch (s) {
        case ProtectionStatus::unprotected: return "unprotected";
        case ProtectionStatus::marginal: return "marginal";
        case ProtectionStatus::strong: return "strong";
    }
    return "?";
}

namespace detail {

struct SideCounts {
    int inside = 0;   ///< d_S(v)
    int outside = 0;  ///< d_{S^c}(v)
};

inline SideCounts side_counts(const Graph &g, const std::vector<char> &in, Vertex v) {
    SideCounts c;
    for (Vertex u : g.neighbors(v)) (in[u] ? c.inside : c.outside)++;
    return c;
}

/// Moving one in-set neighbour out shifts one unit from `inside` to
/// `outside`; the effect does not depend on which neighbour moves.
inline ProtectionStatus classify(SideCounts c) {
    if (c.inside + 1 < c.outside) return ProtectionStatus::unprotected;
    if (c.inside >= 1 && c.inside <= c.outside) return ProtectionStatus::marginal;
    return ProtectionStatus::strong;
}

inline void require_nonempty(const VertexSet &s, const char *what) {
    if (s.empty()) throw std::invalid_argument(std::string(what) + ": alliances are non-empty");
}

}  // namespace detail

inline ProtectionStatus protection_status(const Graph &g, const VertexSet &s, Vertex v) {
    if (!s.contains(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " is not in the set");
    return detail::classify(detail::side_counts(g, s.mask(g.order()), v));
}

inline bool is_defensive_alliance(const Graph &g, const VertexSet &s) {
    detail::require_nonempty(s, "is_defensive_alliance");
    auto in = s.mask(g.order());
    for (Vertex v : s) {
        auto c = detail::side_counts(g, in, v);
        if (c.inside + 1 < c.outside) return false;
    }
    return true;
}

/// An alliance none of whose one-vertex deletions is an alliance.
inline bool is_locally_minimal(const Graph &g, const VertexSet &s) {
    detail::require_nonempty(s, "is_locally_minimal");
    if (!is_defensive_alliance(g, s)) return false;
    if (s.size() == 1) return true;
    for (Vertex v : s)
        if (is_defensive_alliance(g, s.without(v))) return false;
    return true;
}

/// An alliance with no alliance among its non-empty proper subsets. Sets
/// larger than `guard` are refused; use certify_sufficient_minimality there.
inline bool is_globally_minimal(const Graph &g, const VertexSet &s,
                                int guard = Capacity::from_environment().enumeration_set) {
    detail::require_nonempty(s, "is_globally_minimal");
    require_members_of(g, s);
    if (static_cast<int>(s.size()) > guard || static_cast<int>(s.size()) > Capacity::hard_limit)
        throw capacity_error("is_globally_minimal: |S| = " + std::to_string(s.size()) +
                             " exceeds the enumeration guard of " + std::to_string(guard));
    auto lg = detail::LocalGraph::induced(g, s.members());
    if (!lg.is_alliance(lg.all())) return false;
    return detail::has_no_proper_suballiance(lg, lg.all());
}

/// Connected with every member marginally protected. Sufficient, not
/// necessary, for global minimality.
inline bool certify_sufficient_minimality(const Graph &g, const VertexSet &s) {
    detail::require_nonempty(s, "certify_sufficient_minimality");
    auto in = s.mask(g.order());
    for (Vertex v : s)
        if (detail::classify(detail::side_counts(g, in, v)) != ProtectionStatus::marginal) return false;
    return is_connected_induced(g, s);
}

struct ProtectionReport {
    std::vector<std::pair<Vertex, ProtectionStatus>> status;  ///< one entry per member, ascending
    bool connected = false;
    bool is_alliance = false;
};

inline ProtectionReport protection_report(const Graph &g, const VertexSet &s) {
    detail::require_nonempty(s, "protection_report");
    auto in = s.mask(g.order());
    ProtectionReport r;
    r.is_alliance = true;
    for (Vertex v : s) {
        auto st = detail::classify(detail::side_counts(g, in, v));
        r.status.emplace_back(v, st);
        if (st == ProtectionStatus::unprotected) r.is_alliance = false;
    }
    r.connected = is_connected_induced(g, s);
    return r;
}

}  // namespace alliance

#pragma once

// Independent oracles and fixtures shared by the unit and acceptance tests.
// The oracles deliberately avoid the library's enumerators: they work on
// plain bitmasks over all subsets.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "alliance/generators.hpp"
#include "alliance/graph.hpp"
#include "alliance/io.hpp"
#include "alliance/type_partition.hpp"

namespace oracle {

using alliance::Graph;
using alliance::Vertex;
using alliance::VertexSet;
using Bits = std::uint32_t;

inline Graph fixture(const std::string &name) {
    return alliance::parse_graph(alliance::read_file(std::string(ALLIANCE_DATA_DIR) + "/" + name));
}

inline std::string fixture_path(const std::string &name) { return std::string(ALLIANCE_DATA_DIR) + "/" + name; }

/// Spider fixture: label L is vertex L - 1.
inline VertexSet labels(std::initializer_list<int> ls) {
    std::vector<Vertex> v;
    for (int l : ls) v.push_back(l - 1);
    return VertexSet(std::move(v));
}

inline Bits to_bits(const VertexSet &s) {
    Bits b = 0;
    for (Vertex v : s) b |= Bits{1} << v;
    return b;
}

inline VertexSet from_bits(Bits b) {
    std::vector<Vertex> v;
    for (int i = 0; b; ++i, b >>= 1)
        if (b & 1) v.push_back(i);
    return VertexSet(std::move(v));
}

/// d_S(v) + 1 >= d_{S^c}(v) for all v in S, straight from adjacency.
inline bool alliance_bits(const Graph &g, Bits s) {
    if (!s) return false;
    for (int v = 0; v < g.order(); ++v) {
        if (!(s >> v & 1)) continue;
        int in = 0, out = 0;
        for (int u = 0; u < g.order(); ++u)
            if (g.adjacent(u, v)) (s >> u & 1 ? in : out)++;
        if (in + 1 < out) return false;
    }
    return true;
}

/// No non-empty proper subset, connected or not, is an alliance.
inline bool globally_minimal_bits(const Graph &g, Bits s) {
    if (!alliance_bits(g, s)) return false;
    for (Bits t = (s - 1) & s; t; t = (t - 1) & s)
        if (alliance_bits(g, t)) return false;
    return true;
}

/// Largest globally minimal alliance with at least k_min vertices over all
/// 2^n subsets; 0 when there is none.
inline int max_gmda_size(const Graph &g, int k_min) {
    int best = 0;
    const Bits all = (Bits{1} << g.order()) - 1;
    for (Bits s = 1; s <= all && s != 0; ++s) {
        int c = std::popcount(s);
        if (c < k_min || c <= best) continue;
        if (globally_minimal_bits(g, s)) best = c;
    }
    return best;
}

/// Full L(x) scan: some y != x, y != 0, 0 <= y <= x componentwise passes the
/// class protection inequalities, written out again from the definitions.
inline bool class_alliance(const alliance::TypeGraph &tg, const std::vector<int> &y) {
    bool any = false;
    for (std::size_t j = 0; j < y.size(); ++j) {
        if (!y[j]) continue;
        any = true;
        long long twice_in = 0, total = 0;
        for (std::size_t i = 0; i < y.size(); ++i) {
            bool nb = tg.adjacency[j].end() != std::find(tg.adjacency[j].begin(), tg.adjacency[j].end(), static_cast<int>(i));
            bool self = i == j && tg.kinds[j] == alliance::ClassKind::clique;
            if (nb || self) {
                twice_in += 2LL * y[i];
                total += tg.sizes[i];
            }
        }
        long long slack = tg.kinds[j] == alliance::ClassKind::independent ? 1 : 0;
        if (twice_in + slack < total) return false;
    }
    return any;
}

inline bool full_scan_minimal(const alliance::TypeGraph &tg, const std::vector<int> &x) {
    std::vector<int> y(x.size(), 0);
    for (;;) {
        std::size_t i = 0;
        while (i < y.size() && y[i] == x[i]) y[i++] = 0;
        if (i == y.size()) return true;
        ++y[i];
        if (y != x && class_alliance(tg, y)) return false;
    }
}

/// A graph with a planted type structure: `classes` classes with random
/// sizes summing to at most max_n, random kinds and a random type graph.
inline Graph blown_up(alliance::Rng &rng, int classes, int max_n) {
    std::vector<int> size(static_cast<std::size_t>(classes), 1);
    for (int extra = static_cast<int>(rng.between(0, max_n - classes)); extra > 0; --extra)
        ++size[rng.below(static_cast<std::uint64_t>(classes))];
    std::vector<int> first(static_cast<std::size_t>(classes) + 1, 0);
    for (int i = 0; i < classes; ++i) first[i + 1] = first[i] + size[i];
    std::vector<alliance::Edge> edges;
    for (int i = 0; i < classes; ++i) {
        bool clique = rng.coin(0.5);
        for (int a = first[i]; a < first[i + 1]; ++a)
            for (int b = a + 1; b < first[i + 1]; ++b)
                if (clique) edges.emplace_back(a, b);
        for (int j = i + 1; j < classes; ++j)
            if (rng.coin(0.5))
                for (int a = first[i]; a < first[i + 1]; ++a)
                    for (int b = first[j]; b < first[j + 1]; ++b) edges.emplace_back(a, b);
    }
    return Graph::from_edges(first.back(), edges);
}

}  // namespace oracle

#pragma once

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "alliance/error.hpp"
#include "alliance/graph.hpp"

namespace alliance {

struct WeightedEdge {
    Vertex u = 0;
    Vertex v = 0;
    int weight = 1;

    friend bool operator==(const WeightedEdge &, const WeightedEdge &) = default;
};

/// Simple graph with positive integer edge weights. Edges keep their input
/// order and orientation (u, v); gadget numbering depends on both.
class WeightedGraph {
public:
    WeightedGraph() = default;

    WeightedGraph(int n, std::vector<WeightedEdge> edges) : edges_(std::move(edges)) {
        std::vector<Edge> plain;
        plain.reserve(edges_.size());
        for (const auto &e : edges_) {
            if (e.weight < 1)
                throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                            ") has non-positive weight " + std::to_string(e.weight));
            plain.emplace_back(e.u, e.v);
        }
        graph_ = Graph::from_edges(n, plain);
    }

    const Graph &graph() const noexcept { return graph_; }
    int order() const noexcept { return graph_.order(); }
    std::size_t size() const noexcept { return edges_.size(); }
    const std::vector<WeightedEdge> &edges() const noexcept { return edges_; }

    /// ω, the sum of all edge weights.
    long long total_weight() const {
        long long s = 0;
        for (const auto &e : edges_) s += e.weight;
        return s;
    }

    friend bool operator==(const WeightedGraph &, const WeightedGraph &) = default;

private:
    Graph graph_;
    std::vector<WeightedEdge> edges_;
};

/// One direction per edge of a WeightedGraph: forward[e] means u -> v for
/// edges()[e], otherwise v -> u.
struct Orientation {
    std::vector<char> forward;

    friend bool operator==(const Orientation &, const Orientation &) = default;
};

inline Vertex tail(const WeightedGraph &gw, const Orientation &o, std::size_t e) {
    return o.forward[e] ? gw.edges()[e].u : gw.edges()[e].v;
}
inline Vertex head(const WeightedGraph &gw, const Orientation &o, std::size_t e) {
    return o.forward[e] ? gw.edges()[e].v : gw.edges()[e].u;
}

inline void require_orientation_of(const WeightedGraph &gw, const Orientation &o) {
    if (o.forward.size() != gw.size())
        throw std::invalid_argument("orientation has " + std::to_string(o.forward.size()) + " entries for " +
                                    std::to_string(gw.size()) + " edges");
}

/// w_out per vertex.
inline std::vector<long long> weighted_outdegrees(const WeightedGraph &gw, const Orientation &o) {
    require_orientation_of(gw, o);
    std::vector<long long> out(static_cast<std::size_t>(gw.order()), 0);
    for (std::size_t e = 0; e < gw.size(); ++e) out[tail(gw, o, e)] += gw.edges()[e].weight;
    return out;
}

inline std::vector<long long> weighted_indegrees(const WeightedGraph &gw, const Orientation &o) {
    require_orientation_of(gw, o);
    std::vector<long long> in(static_cast<std::size_t>(gw.order()), 0);
    for (std::size_t e = 0; e < gw.size(); ++e) in[head(gw, o, e)] += gw.edges()[e].weight;
    return in;
}

inline long long max_weighted_outdegree(const WeightedGraph &gw, const Orientation &o) {
    auto out = weighted_outdegrees(gw, o);
    return out.empty() ? 0 : *std::max_element(out.begin(), out.end());
}

/// "n m" header then m lines "u v w", w a positive integer.
inline WeightedGraph parse_weighted_graph(std::string_view text) {
    long long n = -1, m = -1;
    std::vector<WeightedEdge> edges;
    std::set<std::pair<Vertex, Vertex>> seen;
    detail::for_each_data_line(text, [&](std::size_t line, const std::vector<long long> &f) {
        if (n < 0) {
            if (f.size() != 2 || f[0] < 0 || f[1] < 0)
                throw parse_error(line, "expected header 'n m' with non-negative integers");
            n = f[0];
            m = f[1];
            return;
        }
        if (f.size() != 3) throw parse_error(line, "expected weighted edge 'u v w'");
        if (static_cast<long long>(edges.size()) == m) throw parse_error(line, "more edges than declared");
        if (f[0] < 0 || f[1] < 0 || f[0] >= n || f[1] >= n)
            throw parse_error(line, "vertex index out of range [0," + std::to_string(n) + ")");
        if (f[0] == f[1]) throw parse_error(line, "self-loop at vertex " + std::to_string(f[0]));
        if (f[2] < 1 || f[2] > 1'000'000) throw parse_error(line, "weight must be a positive integer");
        std::pair<Vertex, Vertex> key{static_cast<Vertex>(std::min(f[0], f[1])), static_cast<Vertex>(std::max(f[0], f[1]))};
        if (!seen.insert(key).second) throw parse_error(line, "duplicate edge");
        edges.push_back({static_cast<Vertex>(f[0]), static_cast<Vertex>(f[1]), static_cast<int>(f[2])});
    });
    if (n < 0) throw parse_error(0, "missing header 'n m'");
    if (static_cast<long long>(edges.size()) != m)
        throw parse_error(0, "declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return WeightedGraph(static_cast<int>(n), std::move(edges));
}

inline std::string format_weighted_graph(const WeightedGraph &gw) {
    std::ostringstream out;
    out << gw.order() << ' ' << gw.size() << '\n';
    for (const auto &e : gw.edges()) out << e.u << ' ' << e.v << ' ' << e.weight << '\n';
    return out.str();
}

}  // namespace alliance

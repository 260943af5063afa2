#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "alliance/graph.hpp"
#include "alliance/weighted.hpp"

namespace alliance {

/// std::mt19937_64 output is fixed by the standard but the distributions are
/// not, so bounded integers and doubles are derived here by hand.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound), bound > 0, by rejection of the biased tail.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("Rng::below(0)");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        for (;;) {
            std::uint64_t x = engine_();
            if (x < limit) return x % bound;
        }
    }

    /// Uniform in [lo, hi].
    long long between(long long lo, long long hi) {
        if (lo > hi) throw std::invalid_argument("Rng::between with lo > hi");
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    /// Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool coin(double p) { return unit() < p; }

    template <class T>
    void shuffle(std::vector<T> &v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

/// Uniform labelled tree on n >= 1 vertices via a random Prüfer sequence.
inline Graph random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("tree needs n >= 1, got " + std::to_string(n));
    if (n == 1) return Graph::from_edges(1, {});
    if (n == 2) return Graph::from_edges(2, {{0, 1}});
    Rng rng(seed);
    std::vector<int> code(static_cast<std::size_t>(n - 2));
    for (auto &c : code) c = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));

    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int c : code) ++degree[c];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.insert(v);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n - 1));
    for (int c : code) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, c);
        if (--degree[c] == 1) leaves.insert(c);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
    return Graph::from_edges(n, edges);
}

/// Erdős–Rényi G(n, p), pairs visited in lexicographic order.
inline Graph random_gnp(int n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gnp needs n >= 1, got " + std::to_string(n));
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gnp needs 0 <= p <= 1");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.coin(p)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

/// Random s-regular graph: a circulant start, 10m degree-preserving double
/// edge swaps, then a random relabelling.
inline Graph random_regular(int n, int s, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("regular needs n >= 1, got " + std::to_string(n));
    if (s < 0 || s >= n) throw std::invalid_argument("regular needs 0 <= s < n");
    if ((static_cast<long long>(n) * s) % 2 != 0)
        throw std::invalid_argument("no " + std::to_string(s) + "-regular graph on " + std::to_string(n) +
                                    " vertices: n*s is odd");
    Rng rng(seed);
    std::set<Edge> edges;
    auto norm = [](int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; };
    for (int v = 0; v < n; ++v) {
        for (int d = 1; d <= s / 2; ++d) edges.insert(norm(v, (v + d) % n));
        if (s % 2 == 1) edges.insert(norm(v, (v + n / 2) % n));
    }
    std::vector<Edge> list(edges.begin(), edges.end());
    const std::size_t m = list.size();
    for (std::size_t step = 0; m >= 2 && step < 10 * m; ++step) {
        std::size_t i = rng.below(m), j = rng.below(m);
        if (i == j) continue;
        auto [a, b] = list[i];
        auto [c, d] = list[j];
        if (rng.coin(0.5)) std::swap(c, d);
        // a-b, c-d  ->  a-c, b-d
        if (a == c || b == d || edges.count(norm(a, c)) || edges.count(norm(b, d))) continue;
        edges.erase(list[i]);
        edges.erase(list[j]);
        list[i] = norm(a, c);
        list[j] = norm(b, d);
        edges.insert(list[i]);
        edges.insert(list[j]);
    }
    std::vector<int> label(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) label[v] = v;
    rng.shuffle(label);
    std::vector<Edge> out;
    out.reserve(m);
    for (auto [a, b] : list) out.emplace_back(label[a], label[b]);
    return Graph::from_edges(n, out);
}

/// m distinct random edges on n vertices with weights in [1, max_weight];
/// each edge keeps a random endpoint order.
inline WeightedGraph random_weighted(int n, int m, int max_weight, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("weighted needs n >= 1");
    if (max_weight < 1) throw std::invalid_argument("weighted needs max weight >= 1");
    const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || m > pairs)
        throw std::invalid_argument("cannot place " + std::to_string(m) + " edges on " + std::to_string(n) + " vertices");
    Rng rng(seed);
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    rng.shuffle(all);
    std::vector<WeightedEdge> edges;
    for (int i = 0; i < m; ++i) {
        auto [u, v] = all[i];
        if (rng.coin(0.5)) std::swap(u, v);
        edges.push_back({u, v, static_cast<int>(rng.between(1, max_weight))});
    }
    return WeightedGraph(n, std::move(edges));
}

/// Like random_weighted, but the first n - 1 edges form a random spanning tree.
inline WeightedGraph random_connected_weighted(int n, int m, int max_weight, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("weighted needs n >= 1");
    if (max_weight < 1) throw std::invalid_argument("weighted needs max weight >= 1");
    const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    if (m < n - 1 || m > pairs)
        throw std::invalid_argument("a connected graph on " + std::to_string(n) + " vertices cannot have " +
                                    std::to_string(m) + " edges");
    Rng rng(seed);
    auto tree = random_tree(n, rng.next()).edges();
    std::vector<Edge> rest;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (std::find(tree.begin(), tree.end(), Edge{u, v}) == tree.end()) rest.emplace_back(u, v);
    rng.shuffle(rest);
    tree.insert(tree.end(), rest.begin(), rest.begin() + (m - (n - 1)));
    std::vector<WeightedEdge> edges;
    for (auto [u, v] : tree) {
        if (rng.coin(0.5)) std::swap(u, v);
        edges.push_back({u, v, static_cast<int>(rng.between(1, max_weight))});
    }
    return WeightedGraph(n, std::move(edges));
}

}  // namespace alliance

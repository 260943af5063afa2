#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <queue>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alliance/error.hpp"

namespace alliance {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1, stored as CSR with
/// sorted neighbour lists.
class Graph {
public:
    Graph() = default;

    /// Throws std::invalid_argument on self-loops, duplicate edges or
    /// out-of-range endpoints. Edge order and orientation are irrelevant.
    static Graph from_edges(int n, std::span<const Edge> edges) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        Graph g;
        g.n_ = n;
        g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                            ") has an endpoint outside [0," + std::to_string(n) + ")");
            if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
            ++g.offsets_[u + 1];
            ++g.offsets_[v + 1];
        }
        for (int v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
        g.targets_.resize(g.offsets_.back());
        std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
        for (auto [u, v] : edges) {
            g.targets_[fill[u]++] = v;
            g.targets_[fill[v]++] = u;
        }
        for (int v = 0; v < n; ++v) {
            auto first = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
            auto last = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
            std::sort(first, last);
            if (auto dup = std::adjacent_find(first, last); dup != last)
                throw std::invalid_argument("duplicate edge (" + std::to_string(v) + "," +
                                            std::to_string(*dup) + ")");
        }
        return g;
    }

    static Graph from_edges(int n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return targets_.size() / 2; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }
    int degree(Vertex v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }

    bool adjacent(Vertex u, Vertex v) const {
        auto nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    bool valid_vertex(Vertex v) const noexcept { return v >= 0 && v < n_; }

    /// Edges as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(size());
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    friend bool operator==(const Graph &, const Graph &) = default;

private:
    int n_ = 0;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> targets_;
};

/// A set of vertices kept as a sorted, duplicate-free list.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}
    explicit VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    bool contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }
    const std::vector<Vertex> &members() const noexcept { return members_; }

    /// Membership indicator over [0, n). Throws if a member lies outside the range.
    std::vector<char> mask(int n) const {
        std::vector<char> m(static_cast<std::size_t>(n), 0);
        for (Vertex v : members_) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("vertex " + std::to_string(v) + " outside [0," +
                                            std::to_string(n) + ")");
            m[v] = 1;
        }
        return m;
    }

    VertexSet without(Vertex v) const {
        VertexSet out = *this;
        auto it = std::lower_bound(out.members_.begin(), out.members_.end(), v);
        if (it != out.members_.end() && *it == v) out.members_.erase(it);
        return out;
    }

    VertexSet united(const VertexSet &other) const {
        std::vector<Vertex> merged;
        merged.reserve(size() + other.size());
        std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(merged));
        VertexSet out;
        out.members_ = std::move(merged);
        return out;
    }

    bool includes(const VertexSet &other) const {
        return std::includes(begin(), end(), other.begin(), other.end());
    }

    bool intersects(const VertexSet &other) const {
        auto a = begin(), b = other.begin();
        while (a != end() && b != other.end()) {
            if (*a == *b) return true;
            if (*a < *b) ++a;
            else ++b;
        }
        return false;
    }

    friend bool operator==(const VertexSet &, const VertexSet &) = default;
    friend auto operator<=>(const VertexSet &a, const VertexSet &b) { return a.members_ <=> b.members_; }

private:
    std::vector<Vertex> members_;
};

inline void require_members_of(const Graph &g, const VertexSet &s) {
    if (!s.empty() && (s.members().front() < 0 || s.members().back() >= g.order()))
        throw std::invalid_argument("vertex set has members outside [0," + std::to_string(g.order()) +
                                    ")");
}

/// True iff G[s] is connected. A single vertex is connected.
inline bool is_connected_induced(const Graph &g, const VertexSet &s) {
    if (s.empty()) throw std::invalid_argument("connectivity of an empty vertex set is undefined");
    auto in = s.mask(g.order());
    std::vector<Vertex> stack{s.members().front()};
    in[stack.back()] = 0;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : g.neighbors(v))
            if (in[u]) {
                in[u] = 0;
                ++reached;
                stack.push_back(u);
            }
    }
    return reached == s.size();
}

inline bool is_connected(const Graph &g) {
    if (g.order() == 0) return true;
    std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
    return is_connected_induced(g, VertexSet(std::move(all)));
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && ws(s.front())) s.remove_prefix(1);
    while (!s.empty() && ws(s.back())) s.remove_suffix(1);
    return s;
}

/// Splits a data line into integer fields. Returns false on any non-integer token.
inline bool split_ints(std::string_view line, std::vector<long long> &out) {
    out.clear();
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i == line.size()) break;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        long long value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
        if (ec != std::errc() || ptr != line.data() + j) return false;
        out.push_back(value);
        i = j;
    }
    return true;
}

/// Iterates over non-blank, non-comment lines, passing (1-based line number, fields).
template <class F>
void for_each_data_line(std::string_view text, F &&f) {
    std::size_t line_no = 0;
    std::vector<long long> fields;
    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        if (!split_ints(line, fields)) throw parse_error(line_no, "malformed line '" + std::string(line) + "'");
        f(line_no, fields);
    }
}

}  // namespace detail

/// Parses "n m" followed by m lines "u v" (0-based). Lines starting with '#'
/// are comments.
inline Graph parse_graph(std::string_view text) {
    long long n = -1, m = -1;
    std::vector<Edge> edges;
    std::vector<std::size_t> edge_line;
    detail::for_each_data_line(text, [&](std::size_t line, const std::vector<long long> &f) {
        if (n < 0) {
            if (f.size() != 2 || f[0] < 0 || f[1] < 0)
                throw parse_error(line, "expected header 'n m' with non-negative integers");
            n = f[0];
            m = f[1];
            if (n > 100'000'000) throw parse_error(line, "vertex count too large");
            return;
        }
        if (f.size() != 2) throw parse_error(line, "expected edge 'u v'");
        if (static_cast<long long>(edges.size()) == m) throw parse_error(line, "more edges than declared");
        auto [u, v] = std::pair{f[0], f[1]};
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw parse_error(line, "vertex index out of range [0," + std::to_string(n) + ")");
        if (u == v) throw parse_error(line, "self-loop at vertex " + std::to_string(u));
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        edge_line.push_back(line);
    });
    if (n < 0) throw parse_error(0, "missing header 'n m'");
    if (static_cast<long long>(edges.size()) != m)
        throw parse_error(0, "declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));

    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    auto key = [&](std::size_t i) { return std::minmax(edges[i].first, edges[i].second); };
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return key(a) < key(b); });
    for (std::size_t i = 1; i < order.size(); ++i)
        if (key(order[i]) == key(order[i - 1])) throw parse_error(edge_line[order[i]], "duplicate edge");

    return Graph::from_edges(static_cast<int>(n), edges);
}

/// Inverse of parse_graph: header then edges (u < v) in lexicographic order.
inline std::string format_graph(const Graph &g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace alliance

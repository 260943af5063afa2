#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "alliance/graph.hpp"

namespace alliance {

enum class ClassKind { clique, independent };

inline const char *to_string(ClassKind k) { return k == ClassKind::clique ? "clique" : "independent"; }

/// Neighbourhood-diversity classes. Classes are sorted internally and ordered
/// by their smallest member. Singleton classes are labelled clique.
struct TypePartition {
    std::vector<std::vector<Vertex>> classes;
    std::vector<ClassKind> kinds;

    std::size_t count() const noexcept { return classes.size(); }
    int class_size(std::size_t i) const { return static_cast<int>(classes[i].size()); }

    /// class index of every vertex; throws unless the classes partition [0, n).
    std::vector<int> class_of(int n) const {
        std::vector<int> owner(static_cast<std::size_t>(n), -1);
        for (std::size_t i = 0; i < classes.size(); ++i)
            for (Vertex v : classes[i]) {
                if (v < 0 || v >= n) throw std::invalid_argument("class member outside vertex range");
                if (owner[v] != -1) throw std::invalid_argument("vertex " + std::to_string(v) + " in two classes");
                owner[v] = static_cast<int>(i);
            }
        for (int v = 0; v < n; ++v)
            if (owner[v] == -1) throw std::invalid_argument("vertex " + std::to_string(v) + " in no class");
        return owner;
    }
};

/// N(u)\{v} == N(v)\{u}
inline bool same_type(const Graph &g, Vertex u, Vertex v) {
    auto a = g.neighbors(u);
    auto b = g.neighbors(v);
    std::size_t i = 0, j = 0;
    for (;;) {
        while (i < a.size() && a[i] == v) ++i;
        while (j < b.size() && b[j] == u) ++j;
        if (i == a.size() || j == b.size()) return i == a.size() && j == b.size();
        if (a[i] != b[j]) return false;
        ++i;
        ++j;
    }
}

/// Minimum partition into type classes by pairwise comparison against each
/// class representative. O(n^2 * max degree).
inline TypePartition compute_type_partition(const Graph &g) {
    if (g.order() == 0) throw std::invalid_argument("type partition of the empty graph is undefined");
    TypePartition p;
    std::vector<char> assigned(static_cast<std::size_t>(g.order()), 0);
    for (Vertex rep = 0; rep < g.order(); ++rep) {
        if (assigned[rep]) continue;
        std::vector<Vertex> cls{rep};
        assigned[rep] = 1;
        for (Vertex v = rep + 1; v < g.order(); ++v)
            if (!assigned[v] && g.degree(v) == g.degree(rep) && same_type(g, rep, v)) {
                cls.push_back(v);
                assigned[v] = 1;
            }
        bool clique = cls.size() == 1 || g.adjacent(cls[0], cls[1]);
        p.kinds.push_back(clique ? ClassKind::clique : ClassKind::independent);
        p.classes.push_back(std::move(cls));
    }
    return p;
}

/// Quotient of G by a type partition.
struct TypeGraph {
    std::vector<int> sizes;
    std::vector<ClassKind> kinds;
    std::vector<std::vector<int>> adjacency;  ///< sorted class indices, no self entries

    std::size_t count() const noexcept { return sizes.size(); }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 0; i < static_cast<int>(count()); ++i)
            for (int j : adjacency[i])
                if (i < j) out.emplace_back(i, j);
        return out;
    }
};

/// Throws std::invalid_argument if `p` is not a valid type partition of `g`:
/// classes must partition V, match their kind, and be joined all-or-nothing.
inline TypeGraph build_type_graph(const Graph &g, const TypePartition &p) {
    if (p.kinds.size() != p.classes.size()) throw std::invalid_argument("partition kinds/classes length mismatch");
    auto owner = p.class_of(g.order());
    const std::size_t k = p.count();

    TypeGraph tg;
    tg.kinds = p.kinds;
    tg.adjacency.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (p.classes[i].empty()) throw std::invalid_argument("empty class");
        tg.sizes.push_back(p.class_size(i));
    }

    // Count cross edges per class pair and compare against |C_i| * |C_j|.
    std::vector<std::vector<long long>> cross(k, std::vector<long long>(k, 0));
    for (auto [u, v] : g.edges()) {
        int a = owner[u], b = owner[v];
        ++cross[a][b];
        if (a != b) ++cross[b][a];
    }
    for (std::size_t i = 0; i < k; ++i) {
        long long s = tg.sizes[i];
        long long inside = cross[i][i];
        bool clique = p.kinds[i] == ClassKind::clique;
        if (clique && inside != s * (s - 1) / 2)
            throw std::invalid_argument("class " + std::to_string(i) + " labelled clique is not a clique");
        if (!clique && inside != 0)
            throw std::invalid_argument("class " + std::to_string(i) + " labelled independent has inner edges");
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j || cross[i][j] == 0) continue;
            if (cross[i][j] != s * tg.sizes[j])
                throw std::invalid_argument("classes " + std::to_string(i) + " and " + std::to_string(j) +
                                            " are joined by a partial set of edges");
            tg.adjacency[i].push_back(static_cast<int>(j));
        }
    }
    return tg;
}

}  // namespace alliance

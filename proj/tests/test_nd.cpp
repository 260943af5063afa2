#include <gtest/gtest.h>

#include <numeric>

#include "alliance/exact.hpp"
#include "alliance/generators.hpp"
#include "alliance/nd_solver.hpp"
#include "support.hpp"

using namespace alliance;

namespace {

struct Sample {
    Graph g;
    TypePartition p;
    TypeGraph tg;
};

Sample sample(Rng &rng, int max_n) {
    int n = static_cast<int>(rng.between(1, max_n));
    Graph g = rng.coin(0.5) ? random_gnp(n, rng.unit(), rng.next())
                            : oracle::blown_up(rng, static_cast<int>(rng.between(1, std::min(n, 6))), n);
    auto p = compute_type_partition(g);
    auto tg = build_type_graph(g, p);
    return {std::move(g), std::move(p), std::move(tg)};
}

template <class F>
void for_each_vector(const std::vector<int> &upper, F &&f) {
    std::vector<int> x(upper.size(), 0);
    for (;;) {
        f(static_cast<const std::vector<int> &>(x));
        std::size_t i = 0;
        while (i < x.size() && x[i] == upper[i]) x[i++] = 0;
        if (i == x.size()) return;
        ++x[i];
    }
}

}  // namespace

TEST(ClassVectors, ArgumentChecks) {
    auto g = oracle::fixture("twins10.txt");
    auto p = compute_type_partition(g);
    auto tg = build_type_graph(g, p);
    EXPECT_FALSE(class_da_check(tg, std::vector<int>(5, 0)));
    EXPECT_THROW(class_da_check(tg, {1, 1}), std::invalid_argument);
    EXPECT_THROW(class_da_check(tg, {2, 0, 0, 0, 0}), std::invalid_argument);
    EXPECT_THROW(class_minimality_check(tg, {1, 0, 0, 0, 0}), std::invalid_argument);  // not an alliance
    EXPECT_THROW(materialize_witness(p, std::vector<int>(5, 0)), std::invalid_argument);
    EXPECT_EQ(materialize_witness(p, {1, 1, 0, 0, 2}), (VertexSet{0, 1, 6, 7}));
}

TEST(ClassVectors, ReducedFamily) {
    auto l = reduced_subvectors({2, 1, 0});
    // {0,1,2} x {0,1} x {0} minus the zero vector and x itself
    EXPECT_EQ(l.size(), 4u);
    for (const auto &y : l) {
        EXPECT_NE(y, (std::vector<int>{2, 1, 0}));
        EXPECT_NE(y, (std::vector<int>{0, 0, 0}));
    }
    EXPECT_TRUE(reduced_subvectors({1}).empty());
    EXPECT_EQ(reduced_subvectors({5}).size(), 1u);  // only {4}
}

TEST(ClassVectors, FaithfulToMaterialisedSets) {
    Rng rng(101);
    for (int trial = 0; trial < 150; ++trial) {
        auto s = sample(rng, 10);
        for_each_vector(s.tg.sizes, [&](const std::vector<int> &x) {
            if (std::accumulate(x.begin(), x.end(), 0) == 0) return;
            auto set = materialize_witness(s.p, x);
            bool da = class_da_check(s.tg, x);
            ASSERT_EQ(da, is_defensive_alliance(s.g, set)) << format_graph(s.g);
            if (da) {
                ASSERT_EQ(class_minimality_check(s.tg, x), is_globally_minimal(s.g, set)) << format_graph(s.g);
            }
        });
    }
}

TEST(ClassVectors, ReducedScanMatchesFullScan) {
    Rng rng(111);
    int compared = 0;
    for (int trial = 0; trial < 200; ++trial) {
        auto s = sample(rng, 10);
        for_each_vector(s.tg.sizes, [&](const std::vector<int> &x) {
            if (!oracle::class_alliance(s.tg, x)) return;
            ++compared;
            ASSERT_EQ(class_minimality_check(s.tg, x), oracle::full_scan_minimal(s.tg, x));
        });
    }
    EXPECT_GT(compared, 500);
}

TEST(SolveNd, TwinsGraph) {
    auto g = oracle::fixture("twins10.txt");
    auto r = solve_nd(g, 2);
    ASSERT_TRUE(r.result.found);
    EXPECT_EQ(static_cast<int>(r.result.size()), oracle::max_gmda_size(g, 2));
    EXPECT_EQ(r.verified_by, "enumeration");
    EXPECT_EQ(std::accumulate(r.counts.begin(), r.counts.end(), 0), static_cast<int>(r.result.size()));
}

TEST(SolveNd, MatchesBruteForce) {
    Rng rng(121);
    for (int trial = 0; trial < 150; ++trial) {
        auto s = sample(rng, 12);
        if (s.p.count() > 10) continue;
        int k_min = static_cast<int>(rng.between(2, 3));
        auto nd = solve_nd(s.g, k_min);
        auto bf = max_gmda_bruteforce(s.g, k_min);
        ASSERT_EQ(nd.result.found, bf.found) << format_graph(s.g);
        ASSERT_EQ(nd.result.size(), bf.size()) << format_graph(s.g);
        if (nd.result.found) {
            ASSERT_TRUE(is_globally_minimal(s.g, nd.result.witness));
        }
    }
}

TEST(SolveNd, LargeClassesUseTheClassCertificate) {
    // Two independent classes of 15 joined completely: K_{15,15}. The
    // witness exceeds the enumeration guard, so the class-level check is used.
    std::vector<Edge> edges;
    for (int a = 0; a < 15; ++a)
        for (int b = 15; b < 30; ++b) edges.emplace_back(a, b);
    auto g = Graph::from_edges(30, edges);
    Capacity cap;
    cap.enumeration_set = 10;
    auto r = solve_nd(g, 2, cap);
    ASSERT_TRUE(r.result.found);
    EXPECT_EQ(r.verified_by, "class-certificate");
    EXPECT_EQ(r.result.size(), 14u);  // seven on each side
    EXPECT_TRUE(is_defensive_alliance(g, r.result.witness));
}

TEST(SolveNd, Guards) {
    Capacity cap;
    cap.nd_classes = 2;
    EXPECT_THROW(solve_nd(oracle::fixture("c5.txt"), 2, cap), capacity_error);
    EXPECT_THROW(solve_nd(oracle::fixture("c5.txt"), 1), std::invalid_argument);
}

TEST(SolveNd, UpperBoundIsAdmissible) {
    Rng rng(131);
    for (int trial = 0; trial < 100; ++trial) {
        auto s = sample(rng, 10);
        detail::NdSearch search(s.tg, 2);
        const auto &order = search.branch_order();
        for_each_vector(s.tg.sizes, [&](const std::vector<int> &x) {
            if (!oracle::class_alliance(s.tg, x) || !oracle::full_scan_minimal(s.tg, x)) return;
            long long total = std::accumulate(x.begin(), x.end(), 0LL), prefix = 0;
            for (std::size_t d = 0; d <= order.size(); ++d) {
                ASSERT_GE(search.upper_bound(d, prefix), total);
                if (d < order.size()) prefix += x[order[d]];
            }
        });
    }
}

#include <gtest/gtest.h>

#include <cstdlib>

#include "alliance/alliance.hpp"
#include "alliance/generators.hpp"
#include "support.hpp"

using namespace alliance;
using oracle::labels;

namespace {

const VertexSet spider_s1 = labels({7, 2, 9, 3, 11, 4, 13, 5, 15, 6});

/// Marginal by simulation: move one in-set neighbour out and re-test.
bool marginal_by_removal(const Graph &g, const VertexSet &s, Vertex v) {
    int in = 0, out = 0;
    for (Vertex u : g.neighbors(v)) (s.contains(u) ? in : out)++;
    if (in + 1 < out || in == 0) return false;
    for (Vertex u : g.neighbors(v))
        if (s.contains(u)) return (in - 1) + 1 < out + 1;
    return false;
}

Graph random_graph(Rng &rng, int n) { return random_gnp(n, 0.2 + 0.6 * rng.unit(), rng.next()); }

}  // namespace

TEST(Protection, CycleOfFive) {
    auto g = oracle::fixture("c5.txt");
    EXPECT_TRUE(is_defensive_alliance(g, {0, 1}));
    EXPECT_FALSE(is_defensive_alliance(g, {0}));
    EXPECT_EQ(protection_status(g, {0, 1}, 0), ProtectionStatus::marginal);
    EXPECT_TRUE(is_locally_minimal(g, {0, 1}));
    EXPECT_FALSE(is_locally_minimal(g, {0, 1, 2, 3, 4}));
    EXPECT_TRUE(is_defensive_alliance(g, {0, 1, 2, 3, 4}));
    EXPECT_TRUE(certify_sufficient_minimality(g, {0, 1}));
}

TEST(Protection, DegreeOneVertexAloneIsStrong) {
    auto p2 = Graph::from_edges(2, {{0, 1}});
    EXPECT_EQ(protection_status(p2, {0}, 0), ProtectionStatus::strong);
    EXPECT_TRUE(is_globally_minimal(p2, {0}));
    EXPECT_TRUE(is_locally_minimal(p2, {0}));
}

TEST(Protection, Errors) {
    auto g = oracle::fixture("c5.txt");
    EXPECT_THROW(protection_status(g, {0, 1}, 2), std::invalid_argument);
    EXPECT_THROW(is_defensive_alliance(g, {}), std::invalid_argument);
    EXPECT_THROW(is_locally_minimal(g, {}), std::invalid_argument);
    EXPECT_THROW(is_globally_minimal(g, {}), std::invalid_argument);
    EXPECT_THROW(certify_sufficient_minimality(g, {}), std::invalid_argument);
    EXPECT_THROW(is_defensive_alliance(g, {7}), std::invalid_argument);
}

TEST(Minimality, SpiderTree) {
    auto g = oracle::fixture("spider.txt");
    EXPECT_TRUE(is_globally_minimal(g, labels({1, 2, 3})));
    EXPECT_TRUE(certify_sufficient_minimality(g, labels({1, 2, 3})));
    EXPECT_TRUE(is_locally_minimal(g, spider_s1));
    EXPECT_FALSE(is_globally_minimal(g, spider_s1));
    EXPECT_TRUE(is_defensive_alliance(g, labels({2, 7})));
    EXPECT_FALSE(is_globally_minimal(g, labels({2, 7, 3, 9})));
    EXPECT_FALSE(is_globally_minimal(g, labels({16, 26})));
}

TEST(Minimality, CertificateIsNotNecessary) {
    auto g = oracle::fixture("k25_edge.txt");
    VertexSet s{0, 1, 2, 3};
    EXPECT_TRUE(is_globally_minimal(g, s));
    EXPECT_FALSE(certify_sufficient_minimality(g, s));
    EXPECT_EQ(protection_status(g, s, 2), ProtectionStatus::strong);
    EXPECT_EQ(protection_status(g, s, 3), ProtectionStatus::strong);
    EXPECT_EQ(protection_status(g, s, 0), ProtectionStatus::marginal);
}

TEST(Minimality, EnumerationGuard) {
    auto g = oracle::fixture("spider.txt");
    EXPECT_THROW(is_globally_minimal(g, spider_s1, 9), capacity_error);
    EXPECT_NO_THROW(is_globally_minimal(g, spider_s1, 10));
}

TEST(Minimality, CapacityFromEnvironment) {
    ::setenv("ALLIANCE_CAPACITY", "7", 1);
    auto c = Capacity::from_environment();
    EXPECT_EQ(c.enumeration_set, 7);
    EXPECT_EQ(c.bruteforce_vertices, 7);
    ::setenv("ALLIANCE_CAPACITY", "seven", 1);
    EXPECT_THROW(Capacity::from_environment(), std::invalid_argument);
    ::setenv("ALLIANCE_CAPACITY", "65", 1);
    EXPECT_THROW(Capacity::from_environment(), std::invalid_argument);
    ::unsetenv("ALLIANCE_CAPACITY");
    EXPECT_EQ(Capacity::from_environment().enumeration_set, 24);
}

TEST(Minimality, AgreesWithAllSubsetOracle) {
    Rng rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        int n = static_cast<int>(rng.between(1, 10));
        auto g = random_graph(rng, n);
        oracle::Bits s = static_cast<oracle::Bits>(rng.between(1, (1 << n) - 1));
        auto set = oracle::from_bits(s);
        ASSERT_EQ(is_defensive_alliance(g, set), oracle::alliance_bits(g, s));
        ASSERT_EQ(is_globally_minimal(g, set), oracle::globally_minimal_bits(g, s)) << format_graph(g);
    }
}

TEST(Properties, ComponentsOfAnAllianceAreAlliances) {
    Rng rng(31);
    int checked = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        int n = static_cast<int>(rng.between(2, 14));
        auto g = random_gnp(n, 0.25, rng.next());
        oracle::Bits s = static_cast<oracle::Bits>(rng.between(1, (1 << n) - 1));
        auto set = oracle::from_bits(s);
        if (!is_defensive_alliance(g, set)) continue;
        ++checked;
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (Vertex v : set) {
            if (seen[v]) continue;
            std::vector<Vertex> comp{v}, stack{v};
            seen[v] = 1;
            while (!stack.empty()) {
                Vertex x = stack.back();
                stack.pop_back();
                for (Vertex y : g.neighbors(x))
                    if (set.contains(y) && !seen[y]) {
                        seen[y] = 1;
                        comp.push_back(y);
                        stack.push_back(y);
                    }
            }
            ASSERT_TRUE(is_defensive_alliance(g, VertexSet(comp)));
        }
    }
    EXPECT_GT(checked, 100);
}

TEST(Properties, ImplicationChainAndDegreeOneRule) {
    Rng rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        int n = static_cast<int>(rng.between(2, 10));
        auto g = random_graph(rng, n);
        for (oracle::Bits s = 1; s < (oracle::Bits{1} << n); ++s) {
            auto set = oracle::from_bits(s);
            bool global = is_globally_minimal(g, set);
            bool local = is_locally_minimal(g, set);
            bool da = is_defensive_alliance(g, set);
            ASSERT_TRUE(!global || local);
            ASSERT_TRUE(!local || da);
            if (certify_sufficient_minimality(g, set)) {
                ASSERT_TRUE(global);
            }
            if (global && set.size() >= 2) {
                ASSERT_TRUE(is_connected_induced(g, set));
                for (Vertex v : set) ASSERT_GE(g.degree(v), 2);
            }
        }
    }
}

TEST(Properties, DegreeOneRuleUpToTwelve) {
    Rng rng(43);
    for (int trial = 0; trial < 6; ++trial) {
        int n = 12;
        auto g = random_gnp(n, 0.2 + 0.1 * trial, rng.next());
        for (oracle::Bits s = 1; s < (oracle::Bits{1} << n); ++s) {
            if (std::popcount(s) < 2 || !oracle::alliance_bits(g, s)) continue;
            auto set = oracle::from_bits(s);
            if (!is_globally_minimal(g, set)) continue;
            ASSERT_TRUE(is_connected_induced(g, set));
            for (Vertex v : set) ASSERT_GE(g.degree(v), 2);
        }
    }
}

TEST(Properties, ClosedFormMarginality) {
    Rng rng(51);
    for (int trial = 0; trial < 500; ++trial) {
        int n = static_cast<int>(rng.between(1, 12));
        auto g = random_graph(rng, n);
        auto set = oracle::from_bits(static_cast<oracle::Bits>(rng.between(1, (1 << n) - 1)));
        for (Vertex v : set) {
            auto st = protection_status(g, set, v);
            ASSERT_EQ(st == ProtectionStatus::marginal, marginal_by_removal(g, set, v));
        }
    }
}

TEST(Properties, TreeCharacterisation) {
    for (int seed = 0; seed < 25; ++seed) {
        int n = 4 + seed % 9;  // 4..12
        auto t = random_tree(n, 1000 + seed);
        for (oracle::Bits s = 1; s < (oracle::Bits{1} << n); ++s) {
            if (std::popcount(s) < 2) continue;
            auto set = oracle::from_bits(s);
            if (!is_connected_induced(t, set)) continue;
            ASSERT_EQ(is_globally_minimal(t, set), certify_sufficient_minimality(t, set)) << seed << " " << s;
        }
    }
}

TEST(Report, MatchesPredicates) {
    auto g = oracle::fixture("k25_edge.txt");
    auto r = protection_report(g, {0, 1, 2, 3});
    EXPECT_TRUE(r.is_alliance);
    EXPECT_TRUE(r.connected);
    ASSERT_EQ(r.status.size(), 4u);
    EXPECT_EQ(r.status[2].second, ProtectionStatus::strong);
    auto bad = protection_report(oracle::fixture("c5.txt"), {0, 2});
    EXPECT_FALSE(bad.is_alliance);
    EXPECT_FALSE(bad.connected);
}

// Copyright 2026 The tempspan Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <set>

#include "tempspan/generators.h"
#include "tempspan/verify.h"
#include "test_util.h"

namespace tempspan {
namespace {

using testing::kUnreached;
using testing::oracle_distances;

bool OracleWithin(std::uint32_t dg, std::uint32_t dh, double a, double b) {
  if (dg == kUnreached) return true;
  if (dh == kUnreached) return false;
  return dh <= a * dg + b + 1e-9;
}

TEST(WithinStretchTest, InfinityConventions) {
  const Distance inf;
  EXPECT_TRUE(within_stretch(inf, inf, 1, 0));
  EXPECT_TRUE(within_stretch(inf, Distance(3), 1, 0));
  EXPECT_FALSE(within_stretch(Distance(3), inf, 100, 100));
  EXPECT_TRUE(within_stretch(Distance(2), Distance(6), 3, 0));
  EXPECT_FALSE(within_stretch(Distance(2), Distance(7), 3, 0));
  EXPECT_TRUE(within_stretch(Distance(2), Distance(7), 3, 1));
  // 49 * (1 / 49) rounds to just below 1, so the guard matters here.
  const double almost_one = 49.0 * (1.0 / 49.0);
  ASSERT_LT(almost_one * 1000, 1000.0);
  EXPECT_TRUE(within_stretch(Distance(1000), Distance(1000), almost_one, 0));
}

TEST(VerifyAllPairsTest, DetectsAMissingEdge) {
  const TemporalGraph g(3, {{0, 1, 1}, {1, 2, 2}, {0, 2, 3}});
  const Subgraph h(g, {0, 1});
  const auto bad = verify_spanner_all_pairs(h, 1, 0);
  EXPECT_FALSE(bad.ok);
  EXPECT_EQ(bad.pairs_checked, 6u);
  // 0 -> 2 grows to 2 hops; 2 -> 0 becomes unreachable.
  EXPECT_EQ(bad.violations, 2u);
  ASSERT_TRUE(bad.worst.has_value());
  EXPECT_EQ(bad.worst->u, 2u);
  EXPECT_EQ(bad.worst->v, 0u);
  EXPECT_TRUE(bad.worst->in_h.is_infinite());
  const auto j = nlohmann::json::parse(bad.to_json());
  EXPECT_TRUE(j["worst"]["dh"].is_null());
  EXPECT_EQ(j["violations"], 2);
  EXPECT_FALSE(j["ok"].get<bool>());
}

TEST(VerifyAllPairsTest, RejectsNonSubgraph) {
  const TemporalGraph g(3, {{0, 1, 1}});
  const TemporalGraph h(3, {{0, 1, 2}});
  EXPECT_FALSE(is_subgraph_of(h, g));
  EXPECT_THROW(verify_spanner_all_pairs(g, h, 1, 0), std::invalid_argument);
}

TEST(VerifyAllPairsTest, AgreesWithOracleOnSmallGraphs) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    Rng rng(seed + 500);
    const std::size_t n = 2 + rng.below(7);
    const TemporalGraph g =
        gen_random_graph(n, 0.6, static_cast<Label>(1 + rng.below(5)), seed);
    std::vector<EdgeId> kept;
    for (EdgeId id = 0; id < g.num_edges(); ++id) {
      if (rng.bernoulli(0.7)) kept.push_back(id);
    }
    const Subgraph h(g, kept);
    const TemporalGraph hg = h.to_graph();
    for (double alpha : {1.0, 2.0, 3.0}) {
      std::size_t want = 0;
      for (Vertex u = 0; u < n; ++u) {
        const auto dg = oracle_distances(g, u);
        const auto dh = oracle_distances(hg, u);
        for (Vertex v = 0; v < n; ++v) {
          if (u != v && !OracleWithin(dg[v], dh[v], alpha, 0)) ++want;
        }
      }
      const auto r = verify_spanner_all_pairs(h, alpha, 0, 1 + seed % 3);
      EXPECT_EQ(r.violations, want) << "seed " << seed;
      EXPECT_EQ(r.ok, want == 0);
      EXPECT_EQ(r.pairs_checked, n * (n - 1));
    }
  }
}

TEST(VerifySingleSourceTest, AgreesWithOracleOnSmallGraphs) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    Rng rng(seed + 900);
    const std::size_t n = 2 + rng.below(7);
    const TemporalGraph g =
        gen_random_graph(n, 0.6, static_cast<Label>(1 + rng.below(5)), seed);
    std::vector<EdgeId> kept;
    for (EdgeId id = 0; id < g.num_edges(); ++id) {
      if (rng.bernoulli(0.6)) kept.push_back(id);
    }
    const Subgraph h(g, kept);
    const TemporalGraph hg = h.to_graph();
    const Vertex s = static_cast<Vertex>(rng.below(n));
    for (double beta : {0.0, 1.0}) {
      std::size_t want = 0;
      for (Label tau : g.labels()) {
        const auto dg = oracle_distances(g, s, tau);
        const auto dh = oracle_distances(hg, s, tau);
        for (Vertex v = 0; v < n; ++v) {
          if (v != s && !OracleWithin(dg[v], dh[v], 1, beta)) ++want;
        }
      }
      const auto r = verify_ss_restricted(h, s, 1, beta);
      EXPECT_EQ(r.violations, want) << "seed " << seed;
      if (r.worst && r.violations > 0) EXPECT_TRUE(r.worst->tau.has_value());
    }
  }
}

TEST(EnumeratePathsTest, TriangleHasTwoRoutes) {
  const TemporalGraph g(3, {{0, 1, 1}, {1, 2, 2}, {0, 2, 3}});
  const auto paths = enumerate_paths(g, 0, 2, 5);
  ASSERT_EQ(paths.size(), 2u);
  std::set<std::size_t> lengths{paths[0].length(), paths[1].length()};
  EXPECT_EQ(lengths, (std::set<std::size_t>{1, 2}));
  EXPECT_EQ(enumerate_paths(g, 0, 2, 1).size(), 1u);
  // Backwards, the two-hop route would need labels 2 then 1.
  EXPECT_EQ(enumerate_paths(g, 2, 0, 5).size(), 1u);
}

TEST(EnumeratePathsTest, VisitsEmptyPathAndStopsEarly) {
  const TemporalGraph g(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
  std::size_t seen = 0;
  for_each_temporal_path(g, 0, 3, [&](const TemporalPath&) {
    ++seen;
    return true;
  });
  EXPECT_EQ(seen, 4u);
  seen = 0;
  for_each_temporal_path(g, 0, 3, [&](const TemporalPath&) {
    return ++seen < 2;
  });
  EXPECT_EQ(seen, 2u);
}

TEST(RngTest, ReproducibleAndBounded) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
  Rng c(7);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_LT(c.below(13), 13u);
    const double u = c.unit();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    const auto x = c.between(5, 9);
    EXPECT_GE(x, 5u);
    EXPECT_LE(x, 9u);
  }
  EXPECT_THROW(c.below(0), std::invalid_argument);
}

TEST(GeneratorTest, RandomCliqueShape) {
  const TemporalGraph g = gen_random_clique(30, 4, 1, false);
  EXPECT_TRUE(g.is_simple_clique());
  EXPECT_EQ(g.num_edges(), 30u * 29 / 2);
  for (const auto& e : g.edges()) {
    EXPECT_GE(e.label, 1u);
    EXPECT_LE(e.label, 4u);
  }
  const TemporalGraph two = gen_random_clique(2, 1, 9, false);
  EXPECT_EQ(two.num_edges(), 1u);
}

TEST(GeneratorTest, LocallyDistinctLabels) {
  for (std::size_t n : {5u, 16u, 33u}) {
    const TemporalGraph g = gen_random_clique(n, 3 * n, n, true);
    EXPECT_TRUE(g.is_simple_clique());
    for (Vertex v = 0; v < n; ++v) {
      std::set<Label> seen;
      for (const auto& inc : g.incident(v)) {
        EXPECT_TRUE(seen.insert(inc.label).second);
        EXPECT_LE(inc.label, 3 * n);
      }
    }
  }
  EXPECT_THROW(gen_random_clique(10, 9, 1, true), std::invalid_argument);
  EXPECT_THROW(gen_random_clique(10, 0, 1, false), std::invalid_argument);
}

TEST(GeneratorTest, DeterministicPerSeed) {
  EXPECT_EQ(gen_random_clique(20, 5, 3, false).edges(),
            gen_random_clique(20, 5, 3, false).edges());
  EXPECT_NE(gen_random_clique(20, 5, 3, false).edges(),
            gen_random_clique(20, 5, 4, false).edges());
  EXPECT_EQ(gen_random_graph(30, 0.3, 6, 8).edges(),
            gen_random_graph(30, 0.3, 6, 8).edges());
}

TEST(GeneratorTest, RandomGraphExtremes) {
  EXPECT_EQ(gen_random_graph(12, 0.0, 3, 1).num_edges(), 0u);
  EXPECT_EQ(gen_random_graph(12, 1.0, 3, 1).num_edges(), 66u);
  EXPECT_THROW(gen_random_graph(12, 1.5, 3, 1), std::invalid_argument);
  EXPECT_THROW(gen_random_graph(12, 0.5, 0, 1), std::invalid_argument);
}

TEST(LbCliqueTest, LabelCounts) {
  for (std::size_t n : {4u, 8u}) {
    const TemporalGraph g = gen_lb_clique_2spanner(n);
    std::size_t counts[4] = {0, 0, 0, 0};
    for (const auto& e : g.edges()) ++counts[e.label];
    const std::size_t half = n / 2;
    EXPECT_EQ(counts[1], half * (half - 1) / 2);
    EXPECT_EQ(counts[2], half * half);
    EXPECT_EQ(counts[3], half * (half - 1) / 2);
  }
  EXPECT_THROW(gen_lb_clique_2spanner(7), std::invalid_argument);
  EXPECT_THROW(gen_lb_clique_2spanner(0), std::invalid_argument);
}

TEST(LbCliqueTest, CertificateAndParity) {
  for (std::size_t n : {4u, 8u}) {
    const TemporalGraph g = gen_lb_clique_2spanner(n);
    const auto cert = certify_lb_clique(g);
    EXPECT_TRUE(cert.ok());
    EXPECT_EQ(cert.cross_edges_checked, n * n / 4);
    EXPECT_TRUE(lb_clique_parity_holds(g));
  }
}

TEST(LbCliqueTest, TamperedInstanceFails) {
  // Relabeling one edge inside B to 3 opens a two-hop detour a -> b' -> b.
  std::vector<TemporalEdge> edges = gen_lb_clique_2spanner(6).edges();
  for (auto& e : edges) {
    if (e.u == 3 && e.v == 4) e.label = 3;
  }
  const TemporalGraph g(6, edges);
  const auto cert = certify_lb_clique(g);
  EXPECT_FALSE(cert.ok());
  EXPECT_FALSE(cert.removal_ok);
  EXPECT_FALSE(cert.failures.empty());
  EXPECT_FALSE(lb_clique_parity_holds(g));
}

}  // namespace
}  // namespace tempspan

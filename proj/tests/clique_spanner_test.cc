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

#include "tempspan/clique_spanner.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "tempspan/generators.h"
#include "tempspan/path.h"
#include "tempspan/verify.h"

namespace tempspan {
namespace {

std::size_t full_size(std::size_t n) { return n * (n - 1) / 2; }

TEST(ClusterTargetSizeTest, MatchesClosedForm) {
  for (std::size_t n : {16u, 64u, 100u, 1000u}) {
    for (int k = 2; k <= 5; ++k) {
      for (int i = 1; i < k; ++i) {
        const double v = std::pow(n, double(i) / k) *
                         std::pow(std::log(double(n)), double(k - i) / k);
        EXPECT_EQ(cluster_target_size(n, i, k),
                  static_cast<std::size_t>(std::ceil(v)));
      }
    }
  }
  // ceil(sqrt(100 ln 100)) = ceil(21.46) = 22.
  EXPECT_EQ(cluster_target_size(100, 1, 2), 22u);
}

TEST(CliqueSpannerTest, TwoVerticesKeepTheEdge) {
  const TemporalGraph g(2, {{0, 1, 4}});
  const auto r = build_spanner_3(g);
  EXPECT_EQ(r.spanner.kept(), (std::vector<EdgeId>{0}));
  EXPECT_EQ(build_spanner_5(g).spanner.kept(), (std::vector<EdgeId>{0}));
}

TEST(CliqueSpannerTest, RejectsBadInput) {
  const TemporalGraph path(3, {{0, 1, 1}, {1, 2, 1}});
  EXPECT_THROW(build_spanner_3(path), std::invalid_argument);
  const TemporalGraph one(1, {});
  EXPECT_THROW(build_spanner_3(one), std::invalid_argument);
  const TemporalGraph g = gen_random_clique(8, 3, 1, false);
  EXPECT_THROW(build_spanner_2k1(g, 1), std::invalid_argument);
  EXPECT_THROW(build_spanner_2k1(g, 5), std::invalid_argument);
  EXPECT_NO_THROW(build_spanner_2k1(g, 4));
}

TEST(CliqueSpannerTest, ThreeSpannerOnMidSizeClique) {
  const TemporalGraph g = gen_random_clique(100, 50, 3, false);
  const auto r = build_spanner_3(g);
  const auto report = verify_spanner_all_pairs(r.spanner, 3, 0);
  EXPECT_TRUE(report.ok) << report.to_json();
  EXPECT_LT(r.spanner.num_edges(), full_size(100));
}

TEST(CliqueSpannerTest, ThreeSpannerOnLowerBoundClique) {
  const TemporalGraph g = gen_lb_clique_2spanner(8);
  const auto r = build_spanner_3(g);
  EXPECT_TRUE(verify_spanner_all_pairs(r.spanner, 3, 0).ok);
}

TEST(CliqueSpannerTest, FiveSpannerAndClimbPaths) {
  const TemporalGraph g = gen_random_clique(150, 150, 9, true);
  const auto r = build_spanner_5(g);
  ASSERT_FALSE(r.hierarchy.degenerate);
  ASSERT_EQ(r.hierarchy.levels.size(), 2u);
  EXPECT_TRUE(verify_spanner_all_pairs(r.spanner, 5, 0).ok);
  for (Vertex u = 0; u < 150; ++u) {
    for (int i = 0; i <= 2; ++i) {
      const TemporalPath p = climb_path(g, r.hierarchy, u, i);
      EXPECT_EQ(p.length(), 2u * i);
      EXPECT_TRUE(is_temporal_walk(p));
      for (EdgeId id : p.ids()) EXPECT_TRUE(r.spanner.contains(id));
    }
  }
}

TEST(CliqueSpannerTest, DeepHierarchyOnLocallyDistinctClique) {
  const TemporalGraph g = gen_random_clique(128, 128, 5, true);
  const auto r = build_spanner_2k1(g, 7);
  ASSERT_FALSE(r.hierarchy.degenerate);
  EXPECT_TRUE(verify_spanner_all_pairs(r.spanner, 13, 0).ok);
  EXPECT_LT(r.spanner.num_edges(), full_size(128));
}

// Structural invariants of every clustering level.
void CheckHierarchy(const TemporalGraph& g, const CliqueSpanner& r) {
  const ClusterHierarchy& h = r.hierarchy;
  const std::size_t n = g.num_vertices();
  std::vector<Vertex> prev = h.special_set(0);
  ASSERT_EQ(prev.size(), n);
  for (int i = 1; i <= static_cast<int>(h.levels.size()); ++i) {
    const ClusterLevel& level = h.levels[i - 1];
    EXPECT_EQ(level.index, i);
    EXPECT_EQ(level.active, prev);
    // Every neighbor set is hit and the assigned center is in it.
    for (std::size_t a = 0; a < level.active.size(); ++a) {
      const auto& s = level.neighbor_sets[a];
      EXPECT_LE(s.size(), level.target_size);
      EXPECT_NE(std::find(s.begin(), s.end(), level.center_of[a]), s.end());
      EXPECT_EQ(g.edge(level.center_edge[a]).other(level.active[a]),
                level.center_of[a]);
    }
    // Clusters partition the active set.
    std::multiset<Vertex> members;
    for (const auto& c : level.clusters) members.insert(c.begin(), c.end());
    EXPECT_EQ(members, std::multiset<Vertex>(level.active.begin(),
                                             level.active.end()));
    // The special vertex has the largest label to its center.
    for (std::size_t c = 0; c < level.centers.size(); ++c) {
      const Vertex x = level.centers[c];
      const Vertex z = level.specials[c];
      const Label lz = g.edge(level.special_edge[c]).label;
      EXPECT_EQ(g.edge(level.special_edge[c]).other(x), z);
      for (Vertex u : level.clusters[c]) {
        const EdgeId e = level.center_edge[level.active_index(u)];
        EXPECT_LE(g.edge(e).label, lz);
      }
    }
    EXPECT_EQ(h.special_set(i), level.specials);
    prev = level.specials;
  }
}

TEST(CliqueSpannerTest, HierarchyInvariants) {
  for (std::size_t n : {20u, 64u}) {
    for (int k = 2; k <= 4; ++k) {
      const TemporalGraph g = gen_random_clique(n, 6, n * 10 + k, false);
      const auto r = build_spanner_2k1(g, k);
      ASSERT_FALSE(r.hierarchy.degenerate);
      CheckHierarchy(g, r);
    }
  }
}

// Sum over levels using the targets capped by the remaining unconsumed edges
// of each vertex, computed here from scratch.
PhaseCounts FormulaCounts(const ClusterHierarchy& h) {
  const std::size_t n = h.num_vertices;
  PhaseCounts out;
  std::size_t used = 0, prefix = 0;
  for (const ClusterLevel& level : h.levels) {
    const std::size_t eff = std::min(level.target_size, n - 1 - used);
    used += eff;
    prefix += eff;
    out.initialization += level.active.size() * eff;
    out.first_augmentation += level.active.size() * prefix;
  }
  out.second_augmentation = n * h.levels.back().specials.size();
  return out;
}

TEST(CliqueSpannerTest, PhaseCountsMatchSizeFormula) {
  for (std::size_t n : {16u, 64u, 128u}) {
    for (int k : {2, 3, 4}) {
      const TemporalGraph g = gen_random_clique(n, n, n + k, false);
      const auto r = build_spanner_2k1(g, k);
      ASSERT_FALSE(r.hierarchy.degenerate);
      const PhaseCounts want = FormulaCounts(r.hierarchy);
      const PhaseCounts& got = r.hierarchy.phase_counts;
      EXPECT_EQ(got.initialization, want.initialization);
      EXPECT_EQ(got.first_augmentation, want.first_augmentation);
      EXPECT_EQ(got.second_augmentation, want.second_augmentation);
      const std::size_t total = got.initialization + got.first_augmentation +
                                got.second_augmentation;
      EXPECT_LE(r.spanner.num_edges(), total);
      EXPECT_LE(total, r.hierarchy.size_bound());
    }
  }
}

TEST(CliqueSpannerTest, DeterministicAndJsonShaped) {
  const TemporalGraph g = gen_random_clique(40, 7, 77, false);
  const auto a = build_spanner_2k1(g, 3);
  const auto b = build_spanner_2k1(g, 3);
  EXPECT_EQ(a.spanner.kept(), b.spanner.kept());
  EXPECT_EQ(a.hierarchy.to_json(), b.hierarchy.to_json());
  const std::string js = a.hierarchy.to_json();
  for (const char* key : {"\"phase_counts\"", "\"levels\"", "\"hitting_set\"",
                          "\"special\""}) {
    EXPECT_NE(js.find(key), std::string::npos) << key;
  }
}

TEST(CliqueSpannerTest, ParallelEdgesCollapseToMinimumLabel) {
  std::vector<TemporalEdge> edges;
  for (Vertex u = 0; u < 6; ++u) {
    for (Vertex v = u + 1; v < 6; ++v) {
      edges.push_back({u, v, 5});
      edges.push_back({u, v, 1 + (u + v) % 3});
    }
  }
  const TemporalGraph g(6, edges);
  const auto r = build_spanner_3(g);
  for (EdgeId id : r.spanner.kept()) EXPECT_NE(g.edge(id).label, 5u);
  EXPECT_TRUE(verify_spanner_all_pairs(r.spanner, 3, 0).ok);
}

}  // namespace
}  // namespace tempspan

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

#include "tempspan/profile.h"

#include <gtest/gtest.h>

#include "tempspan/generators.h"
#include "tempspan/path.h"
#include "tempspan/verify.h"
#include "test_util.h"

namespace tempspan {
namespace {

using testing::as_hops;
using testing::oracle_distances;

// s=0, a=1, b=2 with edges (s,a,1), (a,b,2), (s,b,3).
TemporalGraph triangle() {
  return TemporalGraph(3, {{0, 1, 1}, {1, 2, 2}, {0, 2, 3}});
}

TEST(RestrictedProfileTest, TriangleDistancesPerLabel) {
  const TemporalGraph g = triangle();
  const auto p = restricted_profile(g, 0);
  EXPECT_TRUE(p.distance(2, 1).is_infinite());
  EXPECT_EQ(p.distance(2, 2), Distance(2));
  EXPECT_EQ(p.distance(2, 3), Distance(1));
  EXPECT_EQ(p.distance(2), Distance(1));
  EXPECT_EQ(p.distance(1, 1), Distance(1));
  EXPECT_EQ(p.distance(0, 0), Distance(0));
  ASSERT_EQ(p.records(2).size(), 2u);
  EXPECT_EQ(p.records(2)[0].label, 2u);
  EXPECT_EQ(p.records(2)[1].label, 3u);
}

TEST(RestrictedProfileTest, ReverseDirectionRespectsLabelOrder) {
  const TemporalGraph g = triangle();
  // From b: (b,a,2) then (a,s,1) decreases, so only the direct edge works.
  EXPECT_EQ(distance(g, 2, 0), Distance(1));
  const TemporalGraph path(3, {{0, 1, 2}, {1, 2, 1}});
  EXPECT_TRUE(distance(path, 0, 2).is_infinite());
  EXPECT_EQ(distance(path, 2, 0), Distance(2));
}

TEST(RestrictedProfileTest, EqualLabelsMayRepeatAlongAPath) {
  const TemporalGraph g(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
  EXPECT_EQ(distance(g, 0, 3), Distance(3));
}

TEST(RestrictedProfileTest, MatchesStateSpaceOracleOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Rng rng(seed);
    const std::size_t n = 2 + rng.below(7);
    const Label L = static_cast<Label>(1 + rng.below(5));
    const TemporalGraph g = gen_random_graph(n, 0.5, L, seed * 7 + 1);
    for (Vertex s = 0; s < n; ++s) {
      const auto p = restricted_profile(g, s);
      for (Label tau = 1; tau <= L; ++tau) {
        const auto want = oracle_distances(g, s, tau);
        for (Vertex v = 0; v < n; ++v) {
          ASSERT_EQ(as_hops(p.distance(v, tau)), want[v])
              << "seed " << seed << " s " << s << " v " << v << " tau "
              << tau;
        }
      }
    }
  }
}

TEST(RestrictedProfileTest, MatchesExhaustiveEnumeration) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const TemporalGraph g = gen_random_graph(6, 0.6, 4, seed + 1000);
    for (Vertex s = 0; s < 6; ++s) {
      const auto p = restricted_profile(g, s);
      std::vector<std::vector<std::uint32_t>> best(
          5, std::vector<std::uint32_t>(6, testing::kUnreached));
      for_each_temporal_path(g, s, 6, [&](const TemporalPath& path) {
        Label top = 0;
        for (const auto& e : path.edges()) top = std::max(top, e.label);
        for (Label tau = std::max<Label>(top, 1); tau <= 4; ++tau) {
          auto& b = best[tau][path.end()];
          b = std::min<std::uint32_t>(b, path.length());
        }
        return true;
      });
      for (Label tau = 1; tau <= 4; ++tau) {
        for (Vertex v = 0; v < 6; ++v) {
          ASSERT_EQ(as_hops(p.distance(v, tau)), best[tau][v]);
        }
      }
    }
  }
}

TEST(RestrictedProfileTest, MonotoneInTauAndFullAtTheTop) {
  const TemporalGraph g = gen_random_graph(30, 0.2, 6, 5);
  for (Vertex s = 0; s < 30; s += 7) {
    const auto p = restricted_profile(g, s);
    const auto full = distances_from(g, s);
    for (Vertex v = 0; v < 30; ++v) {
      for (Label tau = 2; tau <= 6; ++tau) {
        EXPECT_LE(p.distance(v, tau), p.distance(v, tau - 1));
      }
      EXPECT_EQ(p.distance(v, 6), full[v]);
      EXPECT_EQ(p.distance(v), full[v]);
    }
  }
}

TEST(RestrictedProfileTest, ReconstructedPathsAreShortestAndValid) {
  const TemporalGraph g = gen_random_graph(25, 0.25, 5, 11);
  for (Vertex s = 0; s < 25; s += 4) {
    const auto p = restricted_profile(g, s);
    for (Vertex v = 0; v < 25; ++v) {
      for (Label tau = 1; tau <= 5; ++tau) {
        const Distance d = p.distance(v, tau);
        if (d.is_infinite()) {
          EXPECT_THROW(reconstruct_path(p, v, tau), std::invalid_argument);
          continue;
        }
        const TemporalPath path = reconstruct_path(p, v, tau);
        ASSERT_TRUE(is_temporal_path(g, path));
        EXPECT_EQ(path.length(), d.hops());
        EXPECT_EQ(path.start(), s);
        EXPECT_EQ(path.end(), v);
        for (const auto& e : path.edges()) EXPECT_LE(e.label, tau);

        // Every prefix ending at u through an edge of label t is itself a
        // shortest t-restricted path.
        for (std::size_t i = 0; i < path.length(); ++i) {
          const Vertex u = path.vertices()[i + 1];
          const Label t = path.edges()[i].label;
          EXPECT_EQ(p.distance(u, t), Distance(static_cast<std::uint32_t>(i + 1)));
        }
      }
    }
  }
}

TEST(RestrictedProfileTest, RejectsBadVertices) {
  const TemporalGraph g = triangle();
  EXPECT_THROW(restricted_profile(g, 3), std::invalid_argument);
  EXPECT_THROW(distance(g, 0, 3), std::invalid_argument);
}

}  // namespace
}  // namespace tempspan

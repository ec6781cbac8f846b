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

// Single-source temporal spanners and preservers.
//
// Every construction here is driven by one RestrictedDistanceProfile of the
// source. For each target v a small "menu" of shortest tau-restricted paths
// approximates d^tau(s, v) for every tau at once; the spanner keeps only the
// tails of long menu paths and reroutes through a hitting set of those tails.

#ifndef TEMPSPAN_SINGLE_SOURCE_H_
#define TEMPSPAN_SINGLE_SOURCE_H_

#include <cstddef>
#include <vector>

#include "tempspan/graph.h"
#include "tempspan/path.h"
#include "tempspan/profile.h"

namespace tempspan {

enum class MenuMode { kMultiplicative, kAdditive };

struct PathMenu {
  struct Entry {
    Label tau;
    TemporalPath path;
  };

  Vertex target = 0;
  MenuMode mode = MenuMode::kMultiplicative;
  double delta = 0;
  // Ascending tau, strictly decreasing path length.
  std::vector<Entry> entries;

  // The shortest entry usable under label bound tau, or nullptr.
  const Entry* best_at(Label tau) const;
};

// Scans tau upward and keeps a shortest tau-restricted path whenever it beats
// the last kept length t by the slack: d^tau * (1 + delta) < t in
// multiplicative mode, d^tau + delta < t in additive mode. The first finite
// distance is always kept. Throws std::invalid_argument for delta <= 0.
PathMenu build_path_menu(const RestrictedDistanceProfile& profile, Vertex v,
                         double delta, MenuMode mode);
PathMenu build_path_menu(const TemporalGraph& g, Vertex s, Vertex v,
                         double delta, MenuMode mode);

struct SingleSourceParams {
  int k = 1;
  double delta = 0;
};

// k = floor(log2 n) and delta = (1 + epsilon)^{1/k} - 1, so (1 + delta)^k is
// 1 + epsilon.
SingleSourceParams params_from_epsilon(std::size_t n, double epsilon);
// k = floor(log2 n) and delta = beta / k, so k * delta is beta.
SingleSourceParams params_from_beta(std::size_t n, double beta);

// l_i = ceil(n^{(i+1)/k} (ln n)^{1-(i+1)/k}); l_{k-1} = n.
std::size_t tail_budget(std::size_t n, int i, int k);

struct SingleSourceSpanner {
  Subgraph spanner;
  std::vector<PathMenu> menus;                 // indexed by target vertex
  std::vector<std::size_t> tail_budgets;       // l_0 .. l_{k-1}
  std::vector<std::vector<Vertex>> hit_sets;   // R_0 .. R_{k-1}
};

// Guarantees, for every v and tau, d^tau_H(s, v) <= (1 + delta)^k d^tau_G(s, v)
// (multiplicative) or d^tau_G(s, v) + k delta (additive). Throws
// std::invalid_argument for k < 1, delta <= 0 or a bad source.
SingleSourceSpanner build_ss_spanner(const TemporalGraph& g, Vertex s, int k,
                                     double delta, MenuMode mode);

// Keeps the recorded final edge of one shortest tau-restricted path for every
// (v, tau) at which d^tau(s, v) improves. Exact for every tau, at most nL
// edges.
Subgraph build_ss_preserver(const TemporalGraph& g, Vertex s);

}  // namespace tempspan

#endif  // TEMPSPAN_SINGLE_SOURCE_H_

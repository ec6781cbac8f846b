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

#include "tempspan/single_source.h"

#include <cmath>
#include <optional>
#include <stdexcept>

#include "tempspan/hitting_set.h"

namespace tempspan {

const PathMenu::Entry* PathMenu::best_at(Label tau) const {
  const Entry* best = nullptr;
  for (const Entry& e : entries) {
    if (e.tau > tau) break;
    best = &e;
  }
  return best;
}

PathMenu build_path_menu(const RestrictedDistanceProfile& profile, Vertex v,
                         double delta, MenuMode mode) {
  if (!(delta > 0)) throw std::invalid_argument("delta must be positive");
  if (v >= profile.num_vertices()) {
    throw std::invalid_argument("target out of range");
  }
  PathMenu menu;
  menu.target = v;
  menu.mode = mode;
  menu.delta = delta;
  // d^tau only changes at the records of v, so scanning the records visits
  // every tau at which the keep test can switch.
  std::optional<double> incumbent;
  for (const auto& rec : profile.records(v)) {
    const double d = rec.hops;
    bool keep = !incumbent.has_value();
    if (!keep) {
      keep = mode == MenuMode::kMultiplicative ? d < *incumbent / (1 + delta)
                                               : d < *incumbent - delta;
    }
    if (!keep) continue;
    menu.entries.push_back({rec.label, reconstruct_path(profile, v, rec.label)});
    incumbent = static_cast<double>(menu.entries.back().path.length());
  }
  return menu;
}

PathMenu build_path_menu(const TemporalGraph& g, Vertex s, Vertex v,
                         double delta, MenuMode mode) {
  const RestrictedDistanceProfile profile = restricted_profile(g, s);
  return build_path_menu(profile, v, delta, mode);
}

namespace {

int floor_log2(std::size_t n) {
  int r = 0;
  while ((n >> (r + 1)) > 0) ++r;
  return r;
}

}  // namespace

SingleSourceParams params_from_epsilon(std::size_t n, double epsilon) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
  SingleSourceParams p;
  p.k = floor_log2(n);
  p.delta = std::pow(1 + epsilon, 1.0 / p.k) - 1;
  return p;
}

SingleSourceParams params_from_beta(std::size_t n, double beta) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  if (!(beta > 0)) throw std::invalid_argument("beta must be positive");
  SingleSourceParams p;
  p.k = floor_log2(n);
  p.delta = beta / p.k;
  return p;
}

std::size_t tail_budget(std::size_t n, int i, int k) {
  if (i + 1 >= k) return n;
  const double nd = static_cast<double>(n);
  const double e = static_cast<double>(i + 1) / k;
  return static_cast<std::size_t>(
      std::ceil(std::pow(nd, e) * std::pow(std::log(nd), 1 - e)));
}

SingleSourceSpanner build_ss_spanner(const TemporalGraph& g, Vertex s, int k,
                                     double delta, MenuMode mode) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (!(delta > 0)) throw std::invalid_argument("delta must be positive");
  const std::size_t n = g.num_vertices();
  if (s >= n) throw std::invalid_argument("source out of range");

  const RestrictedDistanceProfile profile = restricted_profile(g, s);
  SingleSourceSpanner out{Subgraph(g), {}, {}, {}};
  out.menus.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    out.menus.push_back(build_path_menu(profile, v, delta, mode));
  }
  for (int i = 0; i < k; ++i) out.tail_budgets.push_back(tail_budget(n, i, k));

  std::vector<Vertex> all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  out.hit_sets.push_back(std::move(all));

  std::vector<EdgeId> kept;
  auto keep_tails = [&](const std::vector<Vertex>& roots, std::size_t budget) {
    for (Vertex v : roots) {
      for (const auto& entry : out.menus[v].entries) {
        const TemporalPath t = tail(entry.path, budget);
        kept.insert(kept.end(), t.ids().begin(), t.ids().end());
      }
    }
  };
  keep_tails(out.hit_sets[0], out.tail_budgets[0]);

  for (int i = 1; i < k; ++i) {
    const std::size_t budget = out.tail_budgets[i - 1];
    SetCollection long_tails{n, {}};
    for (Vertex v : out.hit_sets[i - 1]) {
      for (const auto& entry : out.menus[v].entries) {
        if (entry.path.length() > budget) {
          long_tails.sets.push_back(tail(entry.path, budget).vertices());
        }
      }
    }
    std::vector<Vertex> hit = greedy_hitting_set(long_tails);
    if (!hits_all(long_tails, hit)) {
      throw std::logic_error("hitting set misses a long path");
    }
    keep_tails(hit, out.tail_budgets[i]);
    out.hit_sets.push_back(std::move(hit));
  }
  out.spanner = make_subgraph(g, std::move(kept));
  return out;
}

Subgraph build_ss_preserver(const TemporalGraph& g, Vertex s) {
  const RestrictedDistanceProfile profile = restricted_profile(g, s);
  std::vector<EdgeId> kept;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (const auto& rec : profile.records(v)) {
      if (rec.pred != kNoEdge) kept.push_back(rec.pred);
    }
  }
  return make_subgraph(g, std::move(kept));
}

}  // namespace tempspan

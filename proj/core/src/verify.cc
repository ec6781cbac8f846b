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

#include "tempspan/verify.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "tempspan/profile.h"

namespace tempspan {

namespace {

constexpr double kRoundingGuard = 1e-9;

nlohmann::json distance_json(Distance d) {
  if (d.is_infinite()) return nullptr;
  return d.hops();
}

// Accumulates pairs; merge() is associative so per-worker partial results
// can be combined in any grouping.
class Accumulator {
 public:
  Accumulator(double alpha, double beta) : alpha_(alpha), beta_(beta) {}

  void add(Vertex u, Vertex v, Distance in_g, Distance in_h,
           std::optional<Label> tau) {
    ++pairs_;
    if (in_g.is_infinite()) return;
    const bool good = within_stretch(in_g, in_h, alpha_, beta_);
    if (!good) ++violations_;
    if (in_h.is_finite() && in_g.hops() > 0) {
      max_ratio_ = std::max(
          max_ratio_, static_cast<double>(in_h.hops()) / in_g.hops());
    }
    const double slack =
        in_h.is_infinite()
            ? -std::numeric_limits<double>::infinity()
            : alpha_ * in_g.hops() + beta_ - static_cast<double>(in_h.hops());
    StretchReport::Pair pair{u, v, in_g, in_h, tau};
    if (!worst_ || better_witness(slack, pair, worst_slack_, *worst_)) {
      worst_ = pair;
      worst_slack_ = slack;
    }
  }

  void merge(const Accumulator& other) {
    pairs_ += other.pairs_;
    violations_ += other.violations_;
    max_ratio_ = std::max(max_ratio_, other.max_ratio_);
    if (other.worst_ &&
        (!worst_ || better_witness(other.worst_slack_, *other.worst_,
                                   worst_slack_, *worst_))) {
      worst_ = other.worst_;
      worst_slack_ = other.worst_slack_;
    }
  }

  void fill(StretchReport& r) const {
    r.pairs_checked = pairs_;
    r.violations = violations_;
    r.worst = worst_;
    r.max_ratio = max_ratio_;
    r.ok = violations_ == 0;
  }

 private:
  static bool better_witness(double slack, const StretchReport::Pair& p,
                             double cur_slack,
                             const StretchReport::Pair& cur) {
    if (slack != cur_slack) return slack < cur_slack;
    return std::tuple(p.tau.value_or(0), p.u, p.v) <
           std::tuple(cur.tau.value_or(0), cur.u, cur.v);
  }

  double alpha_, beta_;
  std::size_t pairs_ = 0;
  std::size_t violations_ = 0;
  double max_ratio_ = 0;
  std::optional<StretchReport::Pair> worst_;
  double worst_slack_ = 0;
};

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

std::string StretchReport::to_json() const {
  nlohmann::json j;
  j["n"] = num_vertices;
  j["m_g"] = edges_g;
  j["m_h"] = edges_h;
  j["alpha"] = alpha;
  j["beta"] = beta;
  j["ok"] = ok;
  j["pairs_checked"] = pairs_checked;
  j["violations"] = violations;
  j["max_ratio"] = max_ratio;
  if (worst) {
    nlohmann::json w = {{"u", worst->u},
                        {"v", worst->v},
                        {"dg", distance_json(worst->in_g)},
                        {"dh", distance_json(worst->in_h)}};
    if (worst->tau) w["tau"] = *worst->tau;
    j["worst"] = std::move(w);
  } else {
    j["worst"] = nullptr;
  }
  j["elapsed_ms"] = elapsed_ms;
  return j.dump();
}

bool within_stretch(Distance in_g, Distance in_h, double alpha, double beta) {
  if (in_g.is_infinite()) return true;
  if (in_h.is_infinite()) return false;
  return static_cast<double>(in_h.hops()) <=
         alpha * in_g.hops() + beta + kRoundingGuard;
}

bool is_subgraph_of(const TemporalGraph& h, const TemporalGraph& g) {
  if (h.num_vertices() != g.num_vertices()) return false;
  return std::all_of(h.edges().begin(), h.edges().end(),
                     [&](const TemporalEdge& e) {
                       return g.find_edge(e.u, e.v, e.label) != kNoEdge;
                     });
}

StretchReport verify_spanner_all_pairs(const TemporalGraph& g,
                                       const TemporalGraph& h, double alpha,
                                       double beta, unsigned workers) {
  if (!is_subgraph_of(h, g)) {
    throw std::invalid_argument("h is not a subgraph of g");
  }
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = g.num_vertices();
  const unsigned w = std::max(1u, std::min<unsigned>(workers, n ? n : 1));

  std::vector<Accumulator> parts(w, Accumulator(alpha, beta));
  auto run = [&](unsigned t) {
    for (Vertex u = t; u < n; u += w) {
      const auto dg = distances_from(g, u);
      const auto dh = distances_from(h, u);
      for (Vertex v = 0; v < n; ++v) {
        if (v != u) parts[t].add(u, v, dg[v], dh[v], std::nullopt);
      }
    }
  };
  if (w == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < w; ++t) threads.emplace_back(run, t);
    for (auto& th : threads) th.join();
  }
  for (unsigned t = 1; t < w; ++t) parts[0].merge(parts[t]);

  StretchReport r;
  r.num_vertices = n;
  r.edges_g = g.num_edges();
  r.edges_h = h.num_edges();
  r.alpha = alpha;
  r.beta = beta;
  parts[0].fill(r);
  r.elapsed_ms = elapsed_since(start);
  return r;
}

StretchReport verify_spanner_all_pairs(const Subgraph& h, double alpha,
                                       double beta, unsigned workers) {
  return verify_spanner_all_pairs(h.parent(), h.to_graph(), alpha, beta,
                                  workers);
}

StretchReport verify_ss_restricted(const TemporalGraph& g,
                                   const TemporalGraph& h, Vertex s,
                                   double alpha, double beta) {
  if (!is_subgraph_of(h, g)) {
    throw std::invalid_argument("h is not a subgraph of g");
  }
  const auto start = std::chrono::steady_clock::now();
  const auto pg = restricted_profile(g, s);
  const auto ph = restricted_profile(h, s);
  Accumulator acc(alpha, beta);
  for (Label tau : g.labels()) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (v == s) continue;
      acc.add(s, v, pg.distance(v, tau), ph.distance(v, tau), tau);
    }
  }
  StretchReport r;
  r.num_vertices = g.num_vertices();
  r.edges_g = g.num_edges();
  r.edges_h = h.num_edges();
  r.alpha = alpha;
  r.beta = beta;
  acc.fill(r);
  r.elapsed_ms = elapsed_since(start);
  return r;
}

StretchReport verify_ss_restricted(const Subgraph& h, Vertex s, double alpha,
                                   double beta) {
  return verify_ss_restricted(h.parent(), h.to_graph(), s, alpha, beta);
}

void for_each_temporal_path(
    const TemporalGraph& g, Vertex s, std::size_t max_len,
    const std::function<bool(const TemporalPath&)>& visit) {
  if (s >= g.num_vertices()) throw std::invalid_argument("source out of range");
  std::vector<bool> on_path(g.num_vertices(), false);
  TemporalPath path(s);
  on_path[s] = true;

  std::function<bool(const TemporalPath&, Label)> extend =
      [&](const TemporalPath& cur, Label min_label) -> bool {
    if (!visit(cur)) return false;
    if (cur.length() == max_len) return true;
    for (const Incidence& inc : g.incident(cur.end())) {
      if (inc.label < min_label || on_path[inc.neighbor]) continue;
      TemporalPath next = cur;
      next.push_back(g.edge(inc.edge), inc.edge);
      on_path[inc.neighbor] = true;
      const bool go_on = extend(next, inc.label);
      on_path[inc.neighbor] = false;
      if (!go_on) return false;
    }
    return true;
  };
  extend(path, 0);
}

std::vector<TemporalPath> enumerate_paths(const TemporalGraph& g, Vertex s,
                                          Vertex v, std::size_t max_len) {
  if (v >= g.num_vertices()) throw std::invalid_argument("target out of range");
  std::vector<TemporalPath> out;
  for_each_temporal_path(g, s, max_len, [&](const TemporalPath& p) {
    if (p.end() == v) out.push_back(p);
    return true;
  });
  return out;
}

}  // namespace tempspan

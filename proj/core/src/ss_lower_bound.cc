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

#include "tempspan/ss_lower_bound.h"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <set>
#include <stdexcept>
#include <utility>

#include "tempspan/profile.h"
#include "tempspan/verify.h"

namespace tempspan {

namespace {

// Hops of the next path over the vertex numbering 0..count-1 of the previous
// one; the last vertex (numbered count-1) is never visited.
std::vector<std::size_t> hop_sequence(std::size_t count, std::size_t mu) {
  std::vector<std::size_t> seq{0};
  if (count < 2 || mu > count - 2) return seq;
  seq.push_back(mu);
  std::size_t j = mu;
  while (true) {
    std::size_t next;
    if (j % 2 == 1) {
      if (j < 3) break;
      next = j - 3;
    } else {
      next = j + 5;
    }
    if (next > count - 2) break;
    seq.push_back(next);
    j = next;
  }
  return seq;
}

std::vector<std::int64_t> levels_from_base(const std::vector<Vertex>& base,
                                           std::size_t n) {
  std::vector<std::int64_t> level(n, 0);
  for (std::size_t j = 1; j < base.size(); ++j) {
    level[base[j]] = level[base[j - 1]] + (j % 2 == 1 ? 5 : -3);
  }
  return level;
}

std::vector<std::vector<std::int64_t>> sigma_table(
    const std::vector<std::vector<Vertex>>& paths,
    const std::vector<std::int64_t>& level) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& p : paths) {
    std::vector<std::int64_t> row;
    for (std::size_t j = 1; j < p.size(); ++j) {
      row.push_back(level[p[j]] - level[p[j - 1]]);
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::pair<Vertex, Vertex> unordered(Vertex a, Vertex b) {
  return a < b ? std::pair(a, b) : std::pair(b, a);
}

}  // namespace

int lower_bound_offset(int beta) {
  if (beta < 0) throw std::invalid_argument("beta must be >= 0");
  return beta % 2 == 0 ? beta + 7 : beta + 8;
}

LowerBoundInstance generate_ss_lb(int h, int beta, std::size_t max_vertices) {
  if (h < 1) throw std::invalid_argument("h must be >= 1");
  if (beta < 0) throw std::invalid_argument("beta must be >= 0");
  const std::size_t n = static_cast<std::size_t>(13 + beta) * h;
  if (n > max_vertices) {
    throw std::invalid_argument("instance would have " + std::to_string(n) +
                                " vertices, above the limit of " +
                                std::to_string(max_vertices));
  }
  const int mu = lower_bound_offset(beta);

  std::vector<std::vector<Vertex>> paths;
  std::vector<Vertex> base(n);
  for (Vertex v = 0; v < n; ++v) base[v] = v;
  paths.push_back(base);
  for (int i = 2; i <= h; ++i) {
    const auto& prev = paths.back();
    std::vector<Vertex> next;
    for (std::size_t idx : hop_sequence(prev.size(), mu)) {
      next.push_back(prev[idx]);
    }
    paths.push_back(std::move(next));
  }

  std::vector<TemporalEdge> edges;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto& p = paths[i];
    for (std::size_t j = 1; j < p.size(); ++j) {
      edges.push_back({p[j - 1], p[j], static_cast<Label>(i + 1)});
    }
  }

  LowerBoundInstance inst{TemporalGraph(n, std::move(edges)), 0, beta, h, mu,
                          std::move(paths), {}, {}};
  inst.level = levels_from_base(inst.paths[0], n);
  inst.sigma = sigma_table(inst.paths, inst.level);
  return inst;
}

std::string LowerBoundInstance::sidecar_json() const {
  nlohmann::json j;
  j["source"] = source;
  j["beta"] = beta;
  j["h"] = h;
  j["mu"] = mu;
  j["paths"] = paths;
  j["level"] = level;
  j["sigma"] = sigma;
  return j.dump(2) + "\n";
}

LowerBoundInstance lower_bound_from_sidecar(TemporalGraph graph,
                                            const std::string& json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed sidecar: ") + e.what());
  }
  LowerBoundInstance inst{std::move(graph), 0, 0, 0, 0, {}, {}, {}};
  try {
    inst.source = j.at("source").get<Vertex>();
    inst.beta = j.at("beta").get<int>();
    inst.h = j.at("h").get<int>();
    inst.mu = j.at("mu").get<int>();
    inst.paths = j.at("paths").get<std::vector<std::vector<Vertex>>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed sidecar: ") + e.what());
  }
  const std::size_t n = inst.graph.num_vertices();
  if (inst.h < 1 || inst.paths.size() != static_cast<std::size_t>(inst.h)) {
    throw std::invalid_argument("sidecar path count does not match h");
  }
  for (std::size_t i = 0; i < inst.paths.size(); ++i) {
    const auto& p = inst.paths[i];
    if (p.empty() || p.front() != inst.source) {
      throw std::invalid_argument("sidecar path does not start at the source");
    }
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (p[k] >= n) throw std::invalid_argument("sidecar vertex out of range");
      if (k > 0 && inst.graph.find_edge(p[k - 1], p[k],
                                        static_cast<Label>(i + 1)) == kNoEdge) {
        throw std::invalid_argument("sidecar path edge missing from graph");
      }
    }
  }
  if (inst.paths[0].size() != n) {
    throw std::invalid_argument("first sidecar path is not Hamiltonian");
  }
  // Levels and sigma are recomputed so a tampered table cannot vouch for
  // itself.
  inst.level = levels_from_base(inst.paths[0], n);
  inst.sigma = sigma_table(inst.paths, inst.level);
  return inst;
}

LowerBoundCertificate certify_lb(const LowerBoundInstance& inst,
                                 std::size_t enumeration_limit) {
  LowerBoundCertificate cert;
  const std::size_t n = inst.graph.num_vertices();
  const auto fail = [&](bool& flag, std::string why) {
    flag = false;
    cert.failures.push_back(std::move(why));
  };

  // (a) No vertex pair appears on two paths.
  std::set<std::pair<Vertex, Vertex>> seen;
  for (int i = 1; i <= inst.h; ++i) {
    const auto& p = inst.paths[i - 1];
    for (std::size_t j = 1; j < p.size(); ++j) {
      if (!seen.insert(unordered(p[j - 1], p[j])).second) {
        fail(cert.edge_disjoint, "edge-disjointness: path " +
                                     std::to_string(i) + " reuses pair (" +
                                     std::to_string(p[j - 1]) + ", " +
                                     std::to_string(p[j]) + ")");
      }
    }
  }

  // (b) Per-path lengths, and (e) their sum.
  std::int64_t total = 0;
  for (int i = 1; i <= inst.h; ++i) {
    const auto len = static_cast<std::int64_t>(inst.path_length(i));
    total += len;
    const std::int64_t bound = static_cast<std::int64_t>(n) -
                               static_cast<std::int64_t>(i - 1) * inst.beta -
                               13 * i;
    if (len < bound) {
      fail(cert.length_bound, "length bound: |pi_" + std::to_string(i) +
                                  "| = " + std::to_string(len) + " < " +
                                  std::to_string(bound));
    }
  }
  const double nd = static_cast<double>(n);
  const double size_bound = (nd * nd - 13 * nd) / (2.0 * (inst.beta + 13));
  if (static_cast<double>(total) < size_bound) {
    fail(cert.total_size, "total size: " + std::to_string(total) + " < " +
                              std::to_string(size_bound));
  }

  // (c) Edge types, skipping the edge at the source.
  for (int i = 1; i <= inst.h; ++i) {
    const auto& row = inst.sigma[i - 1];
    for (std::size_t j = 2; j <= row.size(); ++j) {
      const std::int64_t want = j % 2 == 0 ? -(4 * i - 1) : 4 * i + 1;
      if (row[j - 1] != want) {
        fail(cert.sigma_types, "edge types: pi_" + std::to_string(i) +
                                   " edge " + std::to_string(j) +
                                   " has sigma " + std::to_string(row[j - 1]) +
                                   ", expected " + std::to_string(want));
      }
    }
  }

  // (d) Uniqueness within the additive budget.
  if (n <= enumeration_limit) {
    cert.uniqueness_checked = true;
    const auto dist = distances_from(inst.graph, inst.source);
    for (int i = 1; i <= inst.h; ++i) {
      const Vertex z = inst.terminal(i);
      if (z == inst.source) continue;
      const std::size_t budget = dist[z].hops() + inst.beta;
      const auto found = enumerate_paths(inst.graph, inst.source, z, budget);
      const bool same =
          found.size() == 1 && found[0].vertices() == inst.paths[i - 1];
      if (!same) {
        fail(cert.unique_paths,
             "uniqueness: " + std::to_string(found.size()) +
                 " temporal paths reach z_" + std::to_string(i) +
                 " within d + beta = " + std::to_string(budget) +
                 (found.size() == 1 ? " but it is not pi_i" : ""));
      }
    }
  }
  return cert;
}

}  // namespace tempspan

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

#include "tempspan/generators.h"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "tempspan/profile.h"
#include "tempspan/verify.h"

namespace tempspan {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = -bound % bound;
  while (true) {
    const std::uint64_t x = engine_();
    if (x >= limit) return x % bound;
  }
}

double Rng::unit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

TemporalGraph gen_random_clique(std::size_t n, Label lifetime,
                                std::uint64_t seed, bool locally_distinct) {
  if (lifetime < 1) throw std::invalid_argument("L must be >= 1");
  if (locally_distinct && lifetime < n) {
    throw std::invalid_argument("locally distinct labels need L >= n");
  }
  Rng rng(seed);
  std::vector<TemporalEdge> edges;
  edges.reserve(n * (n ? n - 1 : 0) / 2);
  if (!locally_distinct) {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        edges.push_back({u, v, static_cast<Label>(rng.between(1, lifetime))});
      }
    }
    return TemporalGraph(n, std::move(edges));
  }
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  // A uniformly random n-subset of {1..L} in random order.
  std::vector<Label> pool(lifetime);
  std::iota(pool.begin(), pool.end(), 1);
  for (std::size_t c = 0; c < n; ++c) {
    std::swap(pool[c], pool[c + rng.below(lifetime - c)]);
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      edges.push_back({u, v, pool[(perm[u] + perm[v]) % n]});
    }
  }
  return TemporalGraph(n, std::move(edges));
}

TemporalGraph gen_random_graph(std::size_t n, double p, Label lifetime,
                               std::uint64_t seed) {
  if (lifetime < 1) throw std::invalid_argument("L must be >= 1");
  if (!(p >= 0 && p <= 1)) throw std::invalid_argument("p must be in [0, 1]");
  Rng rng(seed);
  std::vector<TemporalEdge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) {
        edges.push_back({u, v, static_cast<Label>(rng.between(1, lifetime))});
      }
    }
  }
  return TemporalGraph(n, std::move(edges));
}

TemporalGraph gen_lb_clique_2spanner(std::size_t n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("the lower-bound clique needs an even n >= 2");
  }
  std::vector<TemporalEdge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const bool au = lb_clique_in_a(n, u), av = lb_clique_in_a(n, v);
      const Label label = au && av ? 3 : (!au && !av ? 1 : 2);
      edges.push_back({u, v, label});
    }
  }
  return TemporalGraph(n, std::move(edges));
}

LbCliqueCertificate certify_lb_clique(const TemporalGraph& g) {
  LbCliqueCertificate cert;
  const std::size_t n = g.num_vertices();
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const TemporalEdge& e = g.edge(id);
    if (lb_clique_in_a(n, e.u) == lb_clique_in_a(n, e.v)) continue;
    const Vertex a = lb_clique_in_a(n, e.u) ? e.u : e.v;
    const Vertex b = e.other(a);
    ++cert.cross_edges_checked;

    const Distance direct = distance(g, a, b);
    if (direct != Distance(1)) {
      cert.direct_ok = false;
      cert.failures.push_back("d(" + std::to_string(a) + ", " +
                              std::to_string(b) + ") is not 1");
    }
    std::vector<EdgeId> rest;
    rest.reserve(g.num_edges() - 1);
    for (EdgeId other = 0; other < g.num_edges(); ++other) {
      if (other != id) rest.push_back(other);
    }
    const TemporalGraph without = Subgraph(g, std::move(rest)).to_graph();
    const Distance after = distance(without, a, b);
    if (after != Distance(3)) {
      cert.removal_ok = false;
      std::ostringstream why;
      why << "removing (" << a << ", " << b << ") leaves distance " << after
          << ", expected 3";
      cert.failures.push_back(why.str());
    }
  }
  return cert;
}

bool lb_clique_parity_holds(const TemporalGraph& g) {
  const std::size_t n = g.num_vertices();
  for (Vertex a = 0; a < n; ++a) {
    if (!lb_clique_in_a(n, a)) continue;
    bool ok = true;
    for_each_temporal_path(g, a, n, [&](const TemporalPath& p) {
      if (p.empty() || lb_clique_in_a(n, p.end())) return true;
      for (const TemporalEdge& e : p.edges()) {
        if (e.label != 2) ok = false;
      }
      if (p.length() % 2 == 0) ok = false;
      return ok;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace tempspan

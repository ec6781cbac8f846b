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

#ifndef TEMPSPAN_GENERATORS_H_
#define TEMPSPAN_GENERATORS_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tempspan/graph.h"

namespace tempspan {

// Seeded random source with a fixed algorithm: std::mt19937_64 (whose output
// sequence the C++ standard pins down) plus bounded draws by rejection
// sampling and unit reals from the top 53 bits. The std distributions are
// implementation-defined and are not used, so seeds reproduce everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }
  // Uniform in [0, 1).
  double unit();
  bool bernoulli(double p) { return unit() < p; }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Complete graph with labels uniform in {1..L}. With locally_distinct, the
// labels come from the proper coloring c(u, v) = (u + v) mod n under a random
// vertex permutation and a random injection of the n colors into {1..L}, so
// edges sharing a vertex never share a label; this needs L >= n. Throws
// std::invalid_argument for L < 1 or L < n with locally_distinct.
TemporalGraph gen_random_clique(std::size_t n, Label lifetime,
                                std::uint64_t seed, bool locally_distinct);

// Erdos-Renyi G(n, p) with labels uniform in {1..L}. Pairs (u, v), u < v, are
// visited in lexicographic order; each draws its coin and, if kept, its label.
TemporalGraph gen_random_graph(std::size_t n, double p, Label lifetime,
                               std::uint64_t seed);

// Clique split into A = {0..n/2-1} and B = {n/2..n-1}: label 3 inside A,
// label 1 inside B, label 2 across. Every temporal 2-spanner keeps all n^2/4
// cross edges. Throws std::invalid_argument for odd n or n < 2.
TemporalGraph gen_lb_clique_2spanner(std::size_t n);

// True for the vertices of side A in gen_lb_clique_2spanner(n).
inline bool lb_clique_in_a(std::size_t n, Vertex v) { return v < n / 2; }

struct LbCliqueCertificate {
  std::size_t cross_edges_checked = 0;
  // d(a, b) = 1 in g for every cross edge (a, b), a in A.
  bool direct_ok = true;
  // d(a, b) = 3 once (a, b) is removed.
  bool removal_ok = true;
  std::vector<std::string> failures;

  bool ok() const { return direct_ok && removal_ok && cross_edges_checked > 0; }
};

// For every edge (a, b) with a in A and b in B, checks d_g(a, b) = 1 and
// d_{g - (a,b)}(a, b) = 3, which certifies that every temporal 2-spanner
// keeps the edge.
LbCliqueCertificate certify_lb_clique(const TemporalGraph& g);

// Enumerates every temporal path from A to B and checks that it uses only
// label-2 edges and has odd length. Exhaustive; meant for n <= 10.
bool lb_clique_parity_holds(const TemporalGraph& g);

}  // namespace tempspan

#endif  // TEMPSPAN_GENERATORS_H_

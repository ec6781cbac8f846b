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

#include "tempspan/hitting_set.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tempspan {

namespace {

std::vector<Vertex> distinct(std::vector<Vertex> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

std::size_t SetCollection::min_size() const {
  if (sets.empty()) return 0;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& s : sets) best = std::min(best, distinct(s).size());
  return best;
}

std::vector<Vertex> greedy_hitting_set(const SetCollection& collection) {
  const std::size_t n = collection.universe_size;
  const std::size_t m = collection.sets.size();

  // containing[x] lists the sets that contain x.
  std::vector<std::vector<std::size_t>> containing(n);
  std::vector<std::size_t> coverage(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    const std::vector<Vertex> s = distinct(collection.sets[i]);
    if (s.empty()) throw std::invalid_argument("empty set in collection");
    for (Vertex x : s) {
      if (x >= n) throw std::invalid_argument("element outside the universe");
      containing[x].push_back(i);
      ++coverage[x];
    }
  }

  std::vector<bool> hit(m, false);
  std::vector<std::vector<Vertex>> members(m);
  for (Vertex x = 0; x < n; ++x) {
    for (std::size_t i : containing[x]) members[i].push_back(x);
  }

  std::vector<Vertex> chosen;
  std::size_t unhit = m;
  while (unhit > 0) {
    Vertex best = 0;
    for (Vertex x = 1; x < n; ++x) {
      if (coverage[x] > coverage[best]) best = x;
    }
    chosen.push_back(best);
    for (std::size_t i : containing[best]) {
      if (hit[i]) continue;
      hit[i] = true;
      --unhit;
      for (Vertex y : members[i]) --coverage[y];
    }
  }
  return chosen;
}

std::size_t hitting_set_size_bound(const SetCollection& collection) {
  const std::size_t m = collection.sets.size();
  const std::size_t l = collection.min_size();
  if (m == 0 || l == 0) return 0;
  const double bound = static_cast<double>(collection.universe_size) /
                       static_cast<double>(l) * std::log(static_cast<double>(m));
  return static_cast<std::size_t>(std::ceil(bound)) + 1;
}

bool hits_all(const SetCollection& collection,
              const std::vector<Vertex>& hitting) {
  std::vector<Vertex> r = distinct(hitting);
  for (const auto& s : collection.sets) {
    bool any = std::any_of(s.begin(), s.end(), [&](Vertex x) {
      return std::binary_search(r.begin(), r.end(), x);
    });
    if (!any) return false;
  }
  return true;
}

}  // namespace tempspan

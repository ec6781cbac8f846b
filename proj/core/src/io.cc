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

#include "tempspan/io.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>
#include <vector>

namespace tempspan {

namespace {

bool next_data_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

[[noreturn]] void bad_line(std::size_t lineno, const std::string& what) {
  throw GraphFormatError("line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

TemporalGraph read_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_data_line(in, line, lineno)) {
    throw GraphFormatError("missing \"n m\" header");
  }
  long long n = -1, m = -1;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n >> m) || (header >> extra) || n < 0 || m < 0) {
      bad_line(lineno, "expected \"n m\" with non-negative integers");
    }
  }
  struct Raw {
    unsigned long long u, v, t;
  };
  std::vector<Raw> raw;
  raw.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_data_line(in, line, lineno)) {
      throw GraphFormatError("expected " + std::to_string(m) +
                             " edges, found " + std::to_string(i));
    }
    std::istringstream row(line);
    long long u, v, t;
    std::string extra;
    if (!(row >> u >> v >> t) || (row >> extra)) {
      bad_line(lineno, "expected \"u v t\"");
    }
    if (u < 0 || v < 0) bad_line(lineno, "negative vertex id");
    if (t < 1 || t > 0xFFFFFFFELL) bad_line(lineno, "label must be >= 1");
    raw.push_back({static_cast<unsigned long long>(u),
                   static_cast<unsigned long long>(v),
                   static_cast<unsigned long long>(t)});
  }
  if (next_data_line(in, line, lineno)) {
    bad_line(lineno, "unexpected data after the last edge");
  }

  const auto count = static_cast<unsigned long long>(n);
  const bool dense = std::all_of(raw.begin(), raw.end(), [&](const Raw& r) {
    return r.u < count && r.v < count;
  });
  std::vector<unsigned long long> ids;
  if (!dense) {
    for (const Raw& r : raw) {
      ids.push_back(r.u);
      ids.push_back(r.v);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (ids.size() > count) {
      throw GraphFormatError("edges mention " + std::to_string(ids.size()) +
                             " distinct vertices but n = " + std::to_string(n));
    }
  }
  const auto rank = [&](unsigned long long id) {
    if (dense) return static_cast<Vertex>(id);
    return static_cast<Vertex>(std::lower_bound(ids.begin(), ids.end(), id) -
                               ids.begin());
  };
  std::vector<TemporalEdge> edges;
  edges.reserve(raw.size());
  for (const Raw& r : raw) {
    edges.push_back({rank(r.u), rank(r.v), static_cast<Label>(r.t)});
  }
  try {
    return TemporalGraph(static_cast<std::size_t>(n), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw GraphFormatError(e.what());
  }
}

TemporalGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphFormatError("cannot open " + path);
  try {
    return read_graph(in);
  } catch (const GraphFormatError& e) {
    throw GraphFormatError(path + ": " + e.what());
  }
}

void write_graph(std::ostream& out, const TemporalGraph& g) {
  std::vector<TemporalEdge> edges;
  edges.reserve(g.num_edges());
  for (const TemporalEdge& e : g.edges()) {
    edges.push_back(e.u < e.v ? e : e.reversed());
  }
  std::sort(edges.begin(), edges.end(),
            [](const TemporalEdge& a, const TemporalEdge& b) {
              return std::tie(a.label, a.u, a.v) < std::tie(b.label, b.u, b.v);
            });
  out << g.num_vertices() << ' ' << edges.size() << '\n';
  for (const TemporalEdge& e : edges) {
    out << e.u << ' ' << e.v << ' ' << e.label << '\n';
  }
}

void write_graph_file(const std::string& path, const TemporalGraph& g) {
  std::ostringstream buf;
  write_graph(buf, g);
  write_text_file(path, buf.str());
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphFormatError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out.flush()) throw std::runtime_error("cannot write " + path);
}

}  // namespace tempspan

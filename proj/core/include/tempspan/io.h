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

#ifndef TEMPSPAN_IO_H_
#define TEMPSPAN_IO_H_

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "tempspan/graph.h"

namespace tempspan {

// Raised for unreadable files and malformed graph text.
class GraphFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text format: lines starting with '#' are comments, the first data line is
// "n m", then m lines "u v t" with integer label t >= 1. Ids are normally
// 0-based below n; when some id is >= n, the distinct ids are renumbered by
// rank, which requires at most n of them.
TemporalGraph read_graph(std::istream& in);
TemporalGraph read_graph_file(const std::string& path);

// Writes edges sorted by (label, u, v), each with u < v.
void write_graph(std::ostream& out, const TemporalGraph& g);
void write_graph_file(const std::string& path, const TemporalGraph& g);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace tempspan

#endif  // TEMPSPAN_IO_H_

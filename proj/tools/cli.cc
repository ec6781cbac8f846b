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

#include "cli.h"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <limits>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "tempspan/clique_spanner.h"
#include "tempspan/generators.h"
#include "tempspan/io.h"
#include "tempspan/lifetime_spanner.h"
#include "tempspan/single_source.h"
#include "tempspan/ss_lower_bound.h"
#include "tempspan/verify.h"

namespace tempspan::cli {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

// Bad flags or inputs; reported with exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

// Worker threads for verification: TEMPSPAN_WORKERS if set, otherwise the
// hardware concurrency.
unsigned worker_count() {
  const char* env = std::getenv("TEMPSPAN_WORKERS");
  if (env == nullptr || *env == '\0') {
    return std::max(1u, std::thread::hardware_concurrency());
  }
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (*end != '\0' || value < 1 || value > 1024) {
    throw UsageError("TEMPSPAN_WORKERS must be an integer in [1, 1024]");
  }
  return static_cast<unsigned>(value);
}

// ----------------------------------------------------------------- gen

struct GenOptions {
  std::string kind;
  std::size_t n = 0;
  Label lifetime = 1;
  double p = 0.5;
  int h = 1;
  int beta = 0;
  std::uint64_t seed = 1;
  bool locally_distinct = false;
  std::string out;
  std::string sidecar;
  bool json = false;
  CLI::Option* n_opt = nullptr;
};

int run_gen(const GenOptions& o, std::ostream& out) {
  std::optional<LowerBoundInstance> lb;
  TemporalGraph g;
  if (o.kind == "clique") {
    if (!o.n_opt->count()) throw UsageError("gen clique needs --n");
    g = gen_random_clique(o.n, o.lifetime, o.seed, o.locally_distinct);
  } else if (o.kind == "random") {
    if (!o.n_opt->count()) throw UsageError("gen random needs --n");
    g = gen_random_graph(o.n, o.p, o.lifetime, o.seed);
  } else if (o.kind == "lb-clique") {
    if (!o.n_opt->count()) throw UsageError("gen lb-clique needs --n");
    g = gen_lb_clique_2spanner(o.n);
  } else {
    lb = generate_ss_lb(o.h, o.beta);
    g = lb->graph;
  }
  write_graph_file(o.out, g);
  std::string sidecar;
  if (lb) {
    sidecar = o.sidecar.empty() ? o.out + ".json" : o.sidecar;
    write_text_file(sidecar, lb->sidecar_json());
  }
  if (o.json) {
    json j = {{"kind", o.kind},
              {"n", g.num_vertices()},
              {"m", g.num_edges()},
              {"lifetime", g.lifetime()},
              {"out", o.out}};
    if (lb) j["sidecar"] = sidecar;
    out << j.dump() << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- span

struct SpanOptions {
  std::string algorithm;
  std::string in;
  std::string out;
  int k = 0;
  Vertex source = 0;
  double delta = 0;
  double epsilon = 0;
  double beta = 0;
  std::string stats;
  std::string hierarchy;
  bool json = false;
  CLI::Option* k_opt = nullptr;
  CLI::Option* delta_opt = nullptr;
  CLI::Option* epsilon_opt = nullptr;
  CLI::Option* beta_opt = nullptr;
};

SingleSourceParams single_source_params(const SpanOptions& o, std::size_t n,
                                        bool additive) {
  CLI::Option* shortcut = additive ? o.beta_opt : o.epsilon_opt;
  const bool explicit_params = o.k_opt->count() || o.delta_opt->count();
  if (shortcut->count() && explicit_params) {
    throw UsageError(std::string("use either ") +
                     (additive ? "--beta" : "--epsilon") +
                     " or --k with --delta, not both");
  }
  if (shortcut->count()) {
    return additive ? params_from_beta(n, o.beta)
                    : params_from_epsilon(n, o.epsilon);
  }
  if (!o.k_opt->count() || !o.delta_opt->count()) {
    throw UsageError(std::string("needs ") +
                     (additive ? "--beta" : "--epsilon") +
                     " or both --k and --delta");
  }
  return {o.k, o.delta};
}

int run_span(const SpanOptions& o, std::ostream& out) {
  const TemporalGraph g = read_graph_file(o.in);
  const auto start = Clock::now();
  json params = json::object();
  json extra = json::object();
  std::optional<Subgraph> h;

  const auto from_clique = [&](const CliqueSpanner& c) {
    h = c.spanner;
    params["k"] = c.hierarchy.k;
    extra["phase_counts"] = {
        {"initialization", c.hierarchy.phase_counts.initialization},
        {"first_augmentation", c.hierarchy.phase_counts.first_augmentation},
        {"second_augmentation", c.hierarchy.phase_counts.second_augmentation}};
    extra["size_bound"] = c.hierarchy.size_bound();
    extra["degenerate"] = c.hierarchy.degenerate;
    if (!o.hierarchy.empty()) {
      write_text_file(o.hierarchy, c.hierarchy.to_json() + "\n");
    }
  };

  const std::string& a = o.algorithm;
  if (a == "clique3") {
    from_clique(build_spanner_3(g));
  } else if (a == "clique5") {
    from_clique(build_spanner_5(g));
  } else if (a == "clique2k") {
    if (!o.k_opt->count()) throw UsageError("clique2k needs --k");
    from_clique(build_spanner_2k1(g, o.k));
  } else if (a == "ss-mult" || a == "ss-add") {
    const bool additive = a == "ss-add";
    const SingleSourceParams p =
        single_source_params(o, g.num_vertices(), additive);
    if (o.source >= g.num_vertices()) throw UsageError("--source out of range");
    const SingleSourceSpanner s =
        build_ss_spanner(g, o.source, p.k, p.delta,
                         additive ? MenuMode::kAdditive
                                  : MenuMode::kMultiplicative);
    h = s.spanner;
    params = {{"source", o.source}, {"k", p.k}, {"delta", p.delta}};
    if (o.epsilon_opt->count() && !additive) params["epsilon"] = o.epsilon;
    if (o.beta_opt->count() && additive) params["beta"] = o.beta;
    std::size_t largest = 0;
    for (const PathMenu& m : s.menus) {
      largest = std::max(largest, m.entries.size());
    }
    extra["max_menu_size"] = largest;
    extra["hit_set_sizes"] = json::array();
    for (const auto& r : s.hit_sets) extra["hit_set_sizes"].push_back(r.size());
  } else if (a == "preserver") {
    if (o.source >= g.num_vertices()) throw UsageError("--source out of range");
    h = build_ss_preserver(g, o.source);
    params["source"] = o.source;
  } else if (a == "l2") {
    const LifetimeSpanner s = build_2spanner_L2(g);
    h = s.spanner;
    extra["rounds"] = s.rounds;
  } else if (a == "l3-2l") {
    const LifetimeSpanner s = build_3spanner_2L(g);
    h = s.spanner;
    extra["rounds"] = s.rounds;
  } else {
    const int k = o.k_opt->count() ? o.k : 2;
    h = build_layered_spanner(g, k).spanner;
    params["k"] = k;
  }
  const double elapsed = ms_since(start);

  write_graph_file(o.out, h->to_graph());
  json stats = {{"algorithm", a},
                {"n", g.num_vertices()},
                {"m_in", g.num_edges()},
                {"m_out", h->num_edges()},
                {"params", params},
                {"elapsed_ms", elapsed}};
  for (auto& [key, value] : extra.items()) stats[key] = value;
  if (!o.stats.empty()) write_text_file(o.stats, stats.dump(2) + "\n");
  if (o.json) out << stats.dump() << '\n';
  return kExitOk;
}

// -------------------------------------------------------------- verify

struct VerifyOptions {
  std::string mode;
  std::string g;
  std::string h;
  double alpha = 1;
  double beta = 0;
  Vertex source = 0;
  bool json = false;
};

int run_verify(const VerifyOptions& o, std::ostream& out) {
  if (!(o.alpha >= 1)) throw UsageError("--alpha must be >= 1");
  if (!(o.beta >= 0)) throw UsageError("--beta must be >= 0");
  const TemporalGraph g = read_graph_file(o.g);
  const TemporalGraph h = read_graph_file(o.h);
  if (h.num_vertices() != g.num_vertices()) {
    throw UsageError("g and h have different vertex counts");
  }
  StretchReport r;
  if (o.mode == "all-pairs") {
    r = verify_spanner_all_pairs(g, h, o.alpha, o.beta, worker_count());
  } else {
    if (o.source >= g.num_vertices()) throw UsageError("--source out of range");
    r = verify_ss_restricted(g, h, o.source, o.alpha, o.beta);
  }
  if (o.json) {
    out << r.to_json() << '\n';
  } else {
    out << (r.ok ? "ok" : "violated") << ": " << r.pairs_checked
        << " pairs checked, " << r.violations << " violations";
    if (r.worst) {
      out << ", tightest pair (" << r.worst->u << ", " << r.worst->v
          << ") d_G=" << r.worst->in_g << " d_H=" << r.worst->in_h;
      if (r.worst->tau) out << " tau=" << *r.worst->tau;
    }
    out << '\n';
  }
  return r.ok ? kExitOk : kExitViolated;
}

// --------------------------------------------------------------- bench

struct BenchRow {
  std::string algorithm;
  std::size_t n = 0;
  std::size_t lifetime = 0;
  std::string params;
  std::size_t m_in = 0;
  std::size_t m_out = 0;
  double max_stretch = 0;
  double elapsed_ms = 0;
};

std::string format_double(double x) {
  std::ostringstream s;
  s << std::setprecision(6) << x;
  return s.str();
}

std::string format_row(const BenchRow& r) {
  std::ostringstream s;
  s << r.algorithm << ',' << r.n << ',' << r.lifetime << ',' << r.params << ','
    << r.m_in << ',' << r.m_out << ',' << format_double(r.max_stretch) << ','
    << std::fixed << std::setprecision(3) << r.elapsed_ms;
  return s.str();
}

using SuiteRunner =
    std::function<void(std::uint64_t, const std::function<void(BenchRow)>&)>;

// Runs `build` once, timing it, and fills the size columns.
template <typename Build>
std::pair<BenchRow, Subgraph> timed(std::string algorithm,
                                    const TemporalGraph& g,
                                    std::string params, Build build) {
  BenchRow row{std::move(algorithm), g.num_vertices(), g.lifetime(),
               std::move(params), g.num_edges(), 0, 0, 0};
  const auto start = Clock::now();
  Subgraph h = build();
  row.elapsed_ms = ms_since(start);
  row.m_out = h.num_edges();
  return {std::move(row), std::move(h)};
}

double all_pairs_ratio(const Subgraph& h, double alpha) {
  return verify_spanner_all_pairs(h, alpha, 0, worker_count()).max_ratio;
}

void suite_clique(std::uint64_t seed,
                  const std::function<void(BenchRow)>& emit) {
  for (std::size_t n : {64, 128, 256}) {
    const TemporalGraph g = gen_random_clique(n, 4, seed + n, false);
    for (int k : {2, 3, 4}) {
      auto [row, h] = timed("clique2k", g, "k=" + std::to_string(k), [&] {
        return build_spanner_2k1(g, k).spanner;
      });
      row.max_stretch = all_pairs_ratio(h, 2 * k - 1);
      emit(row);
    }
  }
}

void suite_single_source(std::uint64_t seed,
                         const std::function<void(BenchRow)>& emit) {
  for (std::size_t n : {64, 128}) {
    const TemporalGraph g = gen_random_graph(n, 0.1, 8, seed + n);
    const auto run = [&](std::string algorithm, std::string params,
                         auto build) {
      auto [row, h] = timed(std::move(algorithm), g, std::move(params), build);
      // Only the ratio is wanted here, so the bound is left unbounded.
      row.max_stretch =
          verify_ss_restricted(h, 0, std::numeric_limits<double>::max(), 0)
              .max_ratio;
      emit(row);
    };
    for (double eps : {0.5, 1.0}) {
      const SingleSourceParams p = params_from_epsilon(n, eps);
      run("ss-mult", "epsilon=" + format_double(eps), [&] {
        return build_ss_spanner(g, 0, p.k, p.delta, MenuMode::kMultiplicative)
            .spanner;
      });
    }
    for (double beta : {2.0, 4.0}) {
      const SingleSourceParams p = params_from_beta(n, beta);
      run("ss-add", "beta=" + format_double(beta), [&] {
        return build_ss_spanner(g, 0, p.k, p.delta, MenuMode::kAdditive)
            .spanner;
      });
    }
    run("preserver", "source=0", [&] { return build_ss_preserver(g, 0); });
  }
}

void suite_lifetime(std::uint64_t seed,
                    const std::function<void(BenchRow)>& emit) {
  for (std::size_t n : {32, 64, 128}) {
    const TemporalGraph g = gen_random_clique(n, 2, seed + n, false);
    auto [row, h] =
        timed("l2", g, "", [&] { return build_2spanner_L2(g).spanner; });
    row.max_stretch = all_pairs_ratio(h, 2);
    emit(row);
  }
  for (Label L : {1, 2, 3, 4}) {
    const TemporalGraph g = gen_random_clique(64, L, seed + L, false);
    auto [row, h] =
        timed("l3-2l", g, "", [&] { return build_3spanner_2L(g).spanner; });
    row.max_stretch = all_pairs_ratio(h, 3);
    emit(row);
  }
}

void suite_layered(std::uint64_t seed,
                   const std::function<void(BenchRow)>& emit) {
  const TemporalGraph g = gen_random_graph(64, 0.5, 4, seed);
  for (int k : {2, 3}) {
    auto [row, h] = timed("layered", g, "k=" + std::to_string(k), [&] {
      return build_layered_spanner(g, k).spanner;
    });
    row.max_stretch = all_pairs_ratio(h, 2 * k - 1);
    emit(row);
  }
}

const std::map<std::string, SuiteRunner>& suites() {
  static const std::map<std::string, SuiteRunner> kSuites = {
      {"clique", suite_clique},
      {"single-source", suite_single_source},
      {"lifetime", suite_lifetime},
      {"layered", suite_layered}};
  return kSuites;
}

struct BenchOptions {
  std::string suite;
  std::string out;
  std::uint64_t seed = 1;
  bool deterministic = false;
};

int run_bench(const BenchOptions& o, std::ostream& out) {
  std::vector<std::string> names;
  std::stringstream list(o.suite);
  for (std::string name; std::getline(list, name, ',');) {
    if (name.empty()) continue;
    if (!suites().count(name)) throw UsageError("unknown suite: " + name);
    names.push_back(name);
  }
  worker_count();  // validate the environment before doing any work

  std::ostringstream csv;
  csv << "algorithm,n,L,params,m_in,m_out,max_stretch,elapsed_ms\n";
  for (const std::string& name : names) {
    suites().at(name)(o.seed, [&](BenchRow row) {
      if (o.deterministic) row.elapsed_ms = 0;
      csv << format_row(row) << '\n';
    });
  }
  if (o.out.empty() || o.out == "-") {
    out << csv.str();
  } else {
    write_text_file(o.out, csv.str());
  }
  return kExitOk;
}

// ------------------------------------------------------------- certify

struct CertifyOptions {
  std::string kind;
  std::string g;
  std::string sidecar;
  std::size_t enumeration_limit = 40;
  bool json = false;
};

int run_certify(const CertifyOptions& o, std::ostream& out) {
  TemporalGraph g = read_graph_file(o.g);
  json report;
  bool ok = false;
  if (o.kind == "lb-clique") {
    const LbCliqueCertificate cert = certify_lb_clique(g);
    const bool parity_checked = g.num_vertices() <= 10;
    const bool parity = !parity_checked || lb_clique_parity_holds(g);
    ok = cert.ok() && parity;
    report = {{"kind", o.kind},
              {"ok", ok},
              {"cross_edges_checked", cert.cross_edges_checked},
              {"direct_ok", cert.direct_ok},
              {"removal_ok", cert.removal_ok},
              {"parity_checked", parity_checked},
              {"parity_ok", parity},
              {"failures", cert.failures}};
  } else {
    const std::string path = o.sidecar.empty() ? o.g + ".json" : o.sidecar;
    const LowerBoundInstance inst =
        lower_bound_from_sidecar(std::move(g), read_text_file(path));
    const LowerBoundCertificate cert = certify_lb(inst, o.enumeration_limit);
    ok = cert.ok();
    report = {{"kind", o.kind},
              {"ok", ok},
              {"edge_disjoint", cert.edge_disjoint},
              {"length_bound", cert.length_bound},
              {"sigma_types", cert.sigma_types},
              {"total_size", cert.total_size},
              {"uniqueness_checked", cert.uniqueness_checked},
              {"unique_paths", cert.unique_paths},
              {"failures", cert.failures}};
  }
  if (o.json) {
    out << report.dump() << '\n';
  } else {
    out << (ok ? "certified" : "failed") << '\n';
    for (const auto& f : report["failures"]) {
      out << "  " << f.get<std::string>() << '\n';
    }
  }
  return ok ? kExitOk : kExitViolated;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Temporal graph spanners: generate, build, verify, bench"};
  // Long names only, which also frees --h for the spanner file and the path
  // count.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("--kind", gen.kind, "Instance family")
      ->required()
      ->check(CLI::IsMember({"clique", "random", "lb-clique", "lb-ss"}));
  gen.n_opt = gen_cmd->add_option("--n", gen.n, "Vertex count");
  gen_cmd->add_option("--L", gen.lifetime, "Largest label")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--p", gen.p, "Edge probability")
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--h", gen.h, "Path count (lb-ss)")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--beta", gen.beta, "Additive budget (lb-ss)")
      ->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_flag("--locally-distinct", gen.locally_distinct,
                    "No two edges at a vertex share a label");
  gen_cmd->add_option("--out", gen.out, "Graph file to write")->required();
  gen_cmd->add_option("--sidecar", gen.sidecar,
                      "lb-ss JSON sidecar (default: <out>.json)");
  gen_cmd->add_flag("--json", gen.json, "Print a JSON summary");

  SpanOptions span;
  CLI::App* span_cmd = app.add_subcommand("span", "Build a spanner");
  span_cmd->add_option("algorithm", span.algorithm, "Construction")
      ->required()
      ->check(CLI::IsMember({"clique3", "clique5", "clique2k", "ss-mult",
                             "ss-add", "preserver", "l2", "l3-2l",
                             "layered"}));
  span_cmd->add_option("--in", span.in, "Input graph")->required();
  span_cmd->add_option("--out", span.out, "Spanner file to write")->required();
  span.k_opt = span_cmd->add_option("--k", span.k, "Level count or stretch k")
                   ->check(CLI::PositiveNumber);
  span_cmd->add_option("--source", span.source, "Source vertex");
  span.delta_opt = span_cmd->add_option("--delta", span.delta, "Menu slack")
                       ->check(CLI::PositiveNumber);
  span.epsilon_opt =
      span_cmd->add_option("--epsilon", span.epsilon, "Target stretch 1+eps")
          ->check(CLI::PositiveNumber);
  span.beta_opt =
      span_cmd->add_option("--beta", span.beta, "Target additive stretch")
          ->check(CLI::PositiveNumber);
  span_cmd->add_option("--stats", span.stats, "Write statistics JSON here");
  span_cmd->add_option("--hierarchy", span.hierarchy,
                       "Write the cluster hierarchy JSON here (clique*)");
  span_cmd->add_flag("--json", span.json, "Print statistics JSON");

  VerifyOptions verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Check a stretch bound");
  verify_cmd->add_option("mode", verify.mode, "all-pairs or single-source")
      ->required()
      ->check(CLI::IsMember({"all-pairs", "single-source"}));
  verify_cmd->add_option("--g", verify.g, "Original graph")->required();
  verify_cmd->add_option("--h", verify.h, "Candidate spanner")->required();
  verify_cmd->add_option("--alpha", verify.alpha, "Multiplicative stretch");
  verify_cmd->add_option("--beta", verify.beta, "Additive stretch");
  verify_cmd->add_option("--source", verify.source, "Source (single-source)");
  verify_cmd->add_flag("--json", verify.json, "Print the JSON report");

  BenchOptions bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Size/stretch sweeps");
  bench_cmd->add_option("--suite", bench.suite,
                        "Comma list of clique, single-source, lifetime, "
                        "layered");
  bench_cmd->add_option("--out", bench.out, "CSV file (default: stdout)");
  bench_cmd->add_option("--seed", bench.seed, "Base seed");
  bench_cmd->add_flag("--deterministic", bench.deterministic,
                      "Report elapsed_ms as 0 so reruns are identical");

  CertifyOptions certify;
  CLI::App* certify_cmd =
      app.add_subcommand("certify", "Check a lower-bound instance");
  certify_cmd->add_option("kind", certify.kind, "lb-ss or lb-clique")
      ->required()
      ->check(CLI::IsMember({"lb-ss", "lb-clique"}));
  certify_cmd->add_option("--g", certify.g, "Instance graph")->required();
  certify_cmd->add_option("--sidecar", certify.sidecar,
                          "lb-ss sidecar (default: <g>.json)");
  certify_cmd->add_option("--enumeration-limit", certify.enumeration_limit,
                          "Largest n for exhaustive uniqueness checks");
  certify_cmd->add_flag("--json", certify.json, "Print the JSON report");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (gen_cmd->parsed()) return run_gen(gen, out);
    if (span_cmd->parsed()) return run_span(span, out);
    if (verify_cmd->parsed()) return run_verify(verify, out);
    if (bench_cmd->parsed()) return run_bench(bench, out);
    return run_certify(certify, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace tempspan::cli

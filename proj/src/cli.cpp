// Copyright 2026 The entsum Authors
//
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

#include "entsum/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "entsum/access_pair.hpp"
#include "entsum/causal_conditions.hpp"
#include "entsum/enumeration.hpp"
#include "entsum/graph_core.hpp"
#include "entsum/io.hpp"
#include "entsum/protocol_sim.hpp"
#include "entsum/spacetime.hpp"

namespace entsum {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), {}};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

CausalGraph load_graph(const std::string& path) {
  try {
    return parse_graph(read_input(path));
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::pair<std::size_t, std::size_t> parse_index_pair(const std::string& text,
                                                     char sep,
                                                     const std::string& what) {
  const auto at = text.find(sep);
  try {
    if (at == std::string::npos) throw std::invalid_argument(what);
    std::size_t used = 0;
    const auto a = std::stoull(text.substr(0, at), &used);
    if (used != at) throw std::invalid_argument(what);
    const auto rest = text.substr(at + 1);
    const auto b = std::stoull(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(what);
    return {a, b};
  } catch (const std::logic_error&) {
    throw UsageError("malformed " + what + " '" + text + "'");
  }
}

int exit_code(VerdictTag tag) {
  switch (tag) {
    case VerdictTag::kFeasible:
      return kExitFeasible;
    case VerdictTag::kInfeasible:
      return kExitInfeasible;
    case VerdictTag::kUnknown:
      return kExitUnknown;
  }
  return kExitError;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Entanglement summoning feasibility toolkit"};
  app.name("entsum");
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "record"}))
      ->capture_default_str();

  std::string file;
  auto* check = app.add_subcommand("check", "Decide feasibility of a causal graph");
  check->add_option("file", file, "Graph document ('-' for stdin)")->required();

  auto* access = app.add_subcommand("access-graph", "Print the access-pair graph");
  access->add_option("file", file, "Graph document")->required();

  std::string calls;
  auto* sim = app.add_subcommand("simulate", "Simulate one call pattern");
  sim->add_option("file", file, "Graph document")->required();
  sim->add_option("--calls", calls, "Called vertices, e.g. 2,4")->required();

  bool all_partitions = false;
  auto* part = app.add_subcommand("partition", "Print a two-quasi-clique partition");
  part->add_option("file", file, "Graph document")->required();
  part->add_flag("--all", all_partitions, "List every partition");

  std::string cls = "all";
  std::size_t n = 0;
  std::vector<std::string> lemmas;
  std::string shard = "0/1";
  std::uint64_t sample = 0;
  std::uint64_t seed = 1;
  bool census = false;
  std::size_t jobs = 1;
  auto* en = app.add_subcommand("enumerate", "Cross-check lemmas or tabulate verdicts");
  en->add_option("--class", cls, "Graph class")
      ->check(CLI::IsMember({"all", "oriented", "bidirected", "mixed"}))
      ->capture_default_str();
  en->add_option("--n", n, "Vertex count")->required();
  en->add_option("--lemmas", lemmas, "Lemmas to check (default: all)")
      ->delimiter(',');
  en->add_option("--shard", shard, "Index shard k/m, 0 <= k < m")
      ->capture_default_str();
  en->add_option("--sample", sample, "Seeded sample size instead of exhaustive");
  en->add_option("--seed", seed, "Sample seed")->capture_default_str();
  en->add_flag("--census", census, "Tabulate verdicts instead of lemmas");
  en->add_option("--jobs", jobs, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* st = app.add_subcommand("from-spacetime",
                                "Causal graph of a Minkowski scenario");
  st->add_option("file", file, "Scenario document")->required();

  bool dot_access = false;
  auto* dot = app.add_subcommand("export-dot", "Graphviz export");
  dot->add_option("file", file, "Graph document")->required();
  dot->add_flag("--access", dot_access, "Export the access-pair graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  const ReportFormat fmt =
      format == "record" ? ReportFormat::kRecord : ReportFormat::kText;
  try {
    if (*check) {
      const Verdict v = verdict(load_graph(file));
      out << render_verdict(v, fmt);
      return exit_code(v.tag);
    }
    if (*access) {
      out << render_access_graph(build_access_pair_graph(load_graph(file)), fmt);
      return 0;
    }
    if (*sim) {
      const CausalGraph g = load_graph(file);
      const auto [a, b] = parse_index_pair(calls, ',', "--calls");
      if (a < 1 || b < 1 || a > g.vertex_count() || b > g.vertex_count() ||
          a == b) {
        throw UsageError("--calls needs two distinct vertices in 1.." +
                         std::to_string(g.vertex_count()));
      }
      const auto pattern = CallPattern::of_pair(g.vertex_count(), a - 1, b - 1);
      out << render_simulation(pattern, simulate(g, pattern), fmt);
      return 0;
    }
    if (*part) {
      const CausalGraph g = load_graph(file);
      if (all_partitions) {
        const auto ps = two_quasi_clique_partitions(g);
        for (const auto& p : ps) out << format_partition(p) << "\n";
        return ps.empty() ? 1 : 0;
      }
      if (auto p = check_NOC_star(g)) {
        out << format_partition(*p) << "\n";
        return 0;
      }
      out << "no two-quasi-clique partition\n";
      return 1;
    }
    if (*en) {
      const auto [k, m] = parse_index_pair(shard, '/', "--shard");
      if (m == 0 || k >= m) throw UsageError("--shard needs 0 <= k < m");
      Workload w{GraphClass{*parse_class(cls), n}, std::nullopt};
      if (sample > 0) w.sample = SampleSpec{sample, seed};
      const IndexRange range = shard_range(workload_size(w), k, m);
      // Split this shard further across worker threads.
      auto sub = [&](std::size_t t) {
        const IndexRange r = shard_range(range.end - range.begin, t, jobs);
        return IndexRange{range.begin + r.begin, range.begin + r.end};
      };
      if (census) {
        std::vector<VerdictCensus> parts(jobs);
        std::vector<std::thread> threads;
        for (std::size_t t = 0; t < jobs; ++t) {
          threads.emplace_back([&, t] { parts[t] = verdict_census(w, sub(t)); });
        }
        for (auto& th : threads) th.join();
        VerdictCensus c = parts[0];
        for (std::size_t t = 1; t < jobs; ++t) c = merge(c, parts[t]);
        out << render_census(c, fmt);
        return 0;
      }
      cross_check(w, lemmas, {0, 0});  // rejects unknown lemma names
      std::vector<CrossCheckReport> parts(jobs);
      std::vector<std::thread> threads;
      for (std::size_t t = 0; t < jobs; ++t) {
        threads.emplace_back([&, t] { parts[t] = cross_check(w, lemmas, sub(t)); });
      }
      for (auto& th : threads) th.join();
      CrossCheckReport r = parts[0];
      for (std::size_t t = 1; t < jobs; ++t) r = merge(r, parts[t]);
      out << render_cross_check(r, fmt);
      return r.disagreements() == 0 ? 0 : 1;
    }
    if (*st) {
      SpacetimeScenario s;
      try {
        s = parse_scenario(read_input(file));
      } catch (const ParseError& e) {
        throw std::runtime_error(file + ": " + e.what());
      }
      out << serialize_graph(causal_graph_from_spacetime(s));
      return 0;
    }
    if (*dot) {
      const CausalGraph g = load_graph(file);
      out << (dot_access ? export_dot(build_access_pair_graph(g)) : export_dot(g));
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}

}  // namespace entsum

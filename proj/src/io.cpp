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

#include "entsum/io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace entsum {
namespace {

std::vector<std::string> tokens_of(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  for (std::string t; in >> t;) tokens.push_back(t);
  return tokens;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn fn) {
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(number, line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
}

std::size_t parse_count(std::size_t line, const std::string& token) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, "expected a non-negative integer, got '" + token + "'");
  }
  return value;
}

double parse_real(std::size_t line, const std::string& token) {
  double value = 0.0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, "expected a number, got '" + token + "'");
  }
  return value;
}

std::string d(Vertex v) { return "D" + std::to_string(v + 1); }

std::string vertex_list(const std::vector<Vertex>& vs) {
  std::string s = "{";
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (k > 0) s += ",";
    s += d(vs[k]);
  }
  return s + "}";
}

std::string dot_quote(const std::string& name) {
  std::string s = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') s += '\\';
    s += c;
  }
  return s + "\"";
}

struct ConditionRow {
  std::string name;
  bool pass;
  std::string detail;
};

std::vector<ConditionRow> condition_rows(const ConditionTable& t) {
  auto sep = [](const std::optional<SeparationFailure>& f) {
    return f ? "(" + d(f->i) + ", " + d(f->j) + ")" : std::string();
  };
  auto paired = [](const std::optional<PairedOutFailure>& f) {
    return f ? "(" + d(f->i1) + ", " + d(f->i2) + ", " + d(f->j1) + ", " +
                   d(f->j2) + ")"
             : std::string();
  };
  return {
      {"NOC*", t.noc_pass(), t.noc_star ? format_partition(*t.noc_star) : ""},
      {"M1*", t.m1_pass(), sep(t.m1_star)},
      {"M2*", t.m2_pass(),
       t.m2_star ? "(" + d(t.m2_star->i) + ", " + d(t.m2_star->j) + ", " +
                       d(t.m2_star->k) + ")"
                 : ""},
      {"M3*", t.m3_pass(), paired(t.m3_star)},
      {"M1**", t.double_star.m1_pass(), sep(t.double_star.m1)},
      {"M3**", t.double_star.m3_pass(), paired(t.double_star.m3)},
  };
}

std::string witness_kind(const VerdictWitness& w) {
  struct {
    std::string operator()(std::monostate) const { return "none"; }
    std::string operator()(const TwoQuasiCliquePartition&) const {
      return "partition";
    }
    std::string operator()(const OddCycleWitness&) const {
      return "complement-odd-cycle";
    }
    std::string operator()(const TwoOut&) const { return "two-out"; }
    std::string operator()(const TournamentFailure&) const {
      return "tournament-failure";
    }
    std::string operator()(const TournamentCertificate&) const {
      return "tournament-certificate";
    }
  } kind;
  return std::visit(kind, w);
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

CausalGraph parse_graph(std::string_view text) {
  std::optional<CausalGraph> g;
  std::vector<std::size_t> declared_on;
  for_each_line(text, [&](std::size_t line, std::string_view raw) {
    const auto t = tokens_of(raw);
    if (t.empty()) return;
    if (!g) {
      if (t.size() != 2 || t[0] != "vertices") {
        throw ParseError(line, "expected header 'vertices N'");
      }
      g = CausalGraph(parse_count(line, t[1]));
      declared_on.assign(g->vertex_count() * g->vertex_count(), 0);
      return;
    }
    if (t.size() != 3 || (t[1] != "->" && t[1] != "<->")) {
      throw ParseError(line, "expected 'i -> j' or 'i <-> j'");
    }
    const std::size_t a = parse_count(line, t[0]);
    const std::size_t b = parse_count(line, t[2]);
    const std::size_t n = g->vertex_count();
    if (a < 1 || a > n || b < 1 || b > n) {
      throw ParseError(line, "vertex index out of range 1.." + std::to_string(n));
    }
    if (a == b) throw ParseError(line, "self-loop on vertex " + t[0]);
    const Vertex i = a - 1;
    const Vertex j = b - 1;
    const std::size_t slot = std::min(i, j) * n + std::max(i, j);
    if (declared_on[slot] != 0) {
      throw ParseError(line, "pair " + std::to_string(std::min(a, b)) + "," +
                                 std::to_string(std::max(a, b)) +
                                 " already declared on line " +
                                 std::to_string(declared_on[slot]));
    }
    declared_on[slot] = line;
    if (t[1] == "->") {
      g->add_arc(i, j);
    } else {
      g->add_bidirected(i, j);
    }
  });
  if (!g) throw ParseError(1, "missing header 'vertices N'");
  return *g;
}

std::string serialize_graph(const CausalGraph& g) {
  std::ostringstream out;
  out << "vertices " << g.vertex_count() << "\n";
  for (Vertex i = 0; i < g.vertex_count(); ++i) {
    for (Vertex j = i + 1; j < g.vertex_count(); ++j) {
      switch (g.state(i, j)) {
        case PairState::kNone:
          break;
        case PairState::kForward:
          out << i + 1 << " -> " << j + 1 << "\n";
          break;
        case PairState::kBackward:
          out << j + 1 << " -> " << i + 1 << "\n";
          break;
        case PairState::kBidirected:
          out << i + 1 << " <-> " << j + 1 << "\n";
          break;
      }
    }
  }
  return out.str();
}

SpacetimeScenario parse_scenario(std::string_view text) {
  std::optional<SpacetimeScenario> s;
  for_each_line(text, [&](std::size_t line, std::string_view raw) {
    const auto t = tokens_of(raw);
    if (t.empty()) return;
    if (!s) {
      if (t.size() != 2 || t[0] != "minkowski" || t[1].rfind("d=", 0) != 0) {
        throw ParseError(line, "expected header 'minkowski d=D'");
      }
      s = SpacetimeScenario{parse_count(line, t[1].substr(2)), {}};
      return;
    }
    const std::size_t dim = s->dimension;
    if (t.size() != 2 * (dim + 2) || t[0] != "call" || t[dim + 2] != "return") {
      throw ParseError(line, "expected 'call t x1..x" + std::to_string(dim) +
                                 " return t x1..x" + std::to_string(dim) + "'");
    }
    DiamondSpec diamond;
    auto point = [&](std::size_t at) {
      SpacetimePoint p;
      p.t = parse_real(line, t[at]);
      for (std::size_t k = 0; k < dim; ++k) {
        p.x.push_back(parse_real(line, t[at + 1 + k]));
      }
      return p;
    };
    diamond.call = point(1);
    diamond.ret = point(dim + 3);
    if (!causally_precedes(diamond.call, diamond.ret)) {
      throw ParseError(line, "empty diamond: call does not precede return");
    }
    s->diamonds.push_back(std::move(diamond));
  });
  if (!s) throw ParseError(1, "missing header 'minkowski d=D'");
  return *s;
}

std::string export_dot(const CausalGraph& g) {
  std::ostringstream out;
  out << "digraph causal {\n";
  for (Vertex i = 0; i < g.vertex_count(); ++i) out << "  " << d(i) << ";\n";
  for (Vertex i = 0; i < g.vertex_count(); ++i) {
    for (Vertex j = i + 1; j < g.vertex_count(); ++j) {
      switch (g.state(i, j)) {
        case PairState::kNone:
          break;
        case PairState::kForward:
          out << "  " << d(i) << " -> " << d(j) << ";\n";
          break;
        case PairState::kBackward:
          out << "  " << d(j) << " -> " << d(i) << ";\n";
          break;
        case PairState::kBidirected:
          out << "  " << d(i) << " -> " << d(j) << " [dir=both];\n";
          break;
      }
    }
  }
  out << "}\n";
  return out.str();
}

std::string export_dot(const AccessPairGraph& apg) {
  std::ostringstream out;
  out << "graph access {\n";
  for (const auto& v : apg.vertices) {
    out << "  " << dot_quote(access_vertex_name(v.key())) << " [shape="
        << (v.kind == AccessVertexKind::kBody ? "ellipse" : "box")
        << ", label=" << dot_quote(access_vertex_name(v.key()) + " " +
                                   format_set(v.systems))
        << "];\n";
  }
  for (const auto& [u, v] : apg.graph.edges()) {
    out << "  " << dot_quote(access_vertex_name(apg.vertices[u].key()))
        << " -- " << dot_quote(access_vertex_name(apg.vertices[v].key()))
        << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string format_label(const SystemLabel& label) {
  return "Y(" + std::to_string(label.from + 1) + "->" +
         std::to_string(label.to + 1) + ")";
}

std::string format_set(const SubsystemSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& l : s) {
    if (!first) out += ",";
    out += format_label(l);
    first = false;
  }
  return out + "}";
}

std::string format_partition(const TwoQuasiCliquePartition& p) {
  return vertex_list(p.first) + " | " + vertex_list(p.second);
}

std::string format_witness(const VerdictWitness& w) {
  struct {
    std::string operator()(std::monostate) const { return "-"; }
    std::string operator()(const TwoQuasiCliquePartition& p) const {
      return format_partition(p);
    }
    std::string operator()(const OddCycleWitness& c) const {
      std::string s;
      for (std::size_t k = 0; k < c.cycle.size(); ++k) {
        s += (k > 0 ? " " : "") + d(c.cycle[k]);
      }
      return s;
    }
    std::string operator()(const TwoOut& t) const {
      return d(t.i) + " !-> " + d(t.j) + ", " + d(t.i) + " !-> " + d(t.k) +
             ", " + d(t.j) + " ~/~ " + d(t.k);
    }
    std::string operator()(const TournamentFailure& f) const {
      return d(f.a) + ", " + d(f.b) + " unrelated in S_" +
             std::to_string(f.j + 1);
    }
    std::string operator()(const TournamentCertificate& c) const {
      std::string s;
      for (std::size_t j = 0; j < c.sets.size(); ++j) {
        s += (j > 0 ? "; " : "") + std::string("S_") + std::to_string(j + 1) +
             "=" + vertex_list(c.sets[j]);
      }
      return s;
    }
  } fmt;
  return std::visit(fmt, w);
}

std::string render_verdict(const Verdict& v, ReportFormat f) {
  std::ostringstream out;
  const auto rows = condition_rows(v.conditions);
  if (f == ReportFormat::kRecord) {
    out << "verdict\t" << tag_name(v.tag) << "\n";
    out << "reason\t" << reason_name(v.reason) << "\n";
    out << "witness\t" << witness_kind(v.witness) << "\t"
        << format_witness(v.witness) << "\n";
    for (const auto& r : rows) {
      out << "condition\t" << r.name << "\t" << (r.pass ? "pass" : "fail")
          << "\t" << r.detail << "\n";
    }
    return out.str();
  }
  out << "verdict: " << tag_name(v.tag) << "\n";
  out << "reason:  " << reason_name(v.reason) << "\n";
  out << "witness: " << witness_kind(v.witness) << " "
      << format_witness(v.witness) << "\n";
  out << "conditions:\n";
  for (const auto& r : rows) {
    out << "  " << r.name << std::string(6 - r.name.size(), ' ')
        << (r.pass ? "pass" : "fail");
    if (!r.detail.empty()) out << "  " << r.detail;
    out << "\n";
  }
  return out.str();
}

std::string render_access_graph(const AccessPairGraph& apg, ReportFormat f) {
  std::ostringstream out;
  const bool rec = f == ReportFormat::kRecord;
  if (!rec) {
    out << "access-pair graph: " << apg.vertex_count() << " vertices, "
        << apg.graph.edge_count() << " edges\n";
  }
  for (const auto& v : apg.vertices) {
    const std::string name = access_vertex_name(v.key());
    if (rec) {
      out << "vertex\t" << name << "\t"
          << (v.kind == AccessVertexKind::kBody ? "body" : "wing") << "\t"
          << format_set(v.systems) << "\n";
    } else {
      out << "  " << name << " = " << format_set(v.systems) << "\n";
    }
  }
  for (const auto& [u, v] : apg.graph.edges()) {
    const std::string a = access_vertex_name(apg.vertices[u].key());
    const std::string b = access_vertex_name(apg.vertices[v].key());
    if (rec) {
      out << "edge\t" << a << "\t" << b << "\n";
    } else {
      out << "  " << a << " -- " << b << "\n";
    }
  }
  return out.str();
}

std::string render_simulation(const CallPattern& calls,
                              const SimulationOutcome& o, ReportFormat f) {
  std::ostringstream out;
  const bool rec = f == ReportFormat::kRecord;
  const std::string mode = o.mode == SimulationMode::kDedicatedBellPair
                               ? "dedicated-bell-pair"
                               : "shared-state";
  if (rec) {
    out << "calls\t" << d(calls.first()) << "\t" << d(calls.second()) << "\n";
    out << "mode\t" << mode << "\n";
  } else {
    out << "calls: " << d(calls.first()) << ", " << d(calls.second()) << "\n";
    out << "mode:  " << mode << "\n";
  }
  for (const auto& s : o.trace) {
    std::string action;
    switch (s.action) {
      case TraceAction::kKeep:
        action = "keep";
        break;
      case TraceAction::kSend:
        action = "send";
        break;
      case TraceAction::kDiscard:
        action = "discard";
        break;
    }
    if (rec) {
      out << "step\t" << d(s.actor) << "\t" << action << "\t"
          << format_label(s.label) << "\t"
          << (s.action == TraceAction::kSend ? d(s.recipient) : "-") << "\n";
    } else {
      out << "  " << d(s.actor) << " " << action << " "
          << format_label(s.label);
      if (s.action == TraceAction::kSend) out << " to " << d(s.recipient);
      out << "\n";
    }
  }
  for (Vertex v : {calls.first(), calls.second()}) {
    if (rec) {
      out << "delivered\t" << d(v) << "\t" << format_set(o.delivered[v]) << "\n";
    } else {
      out << "delivered " << d(v) << ": " << format_set(o.delivered[v]) << "\n";
    }
  }
  return out.str();
}

std::string render_cross_check(const CrossCheckReport& r, ReportFormat f) {
  std::ostringstream out;
  const std::string cls = class_name(r.workload.cls.tag);
  const std::size_t n = r.workload.cls.n;
  if (f == ReportFormat::kRecord) {
    for (const auto& l : r.lemmas) {
      out << l.name << "\t" << cls << "\t" << n << "\t" << l.checked << "\t"
          << l.disagreements << "\n";
    }
    return out.str();
  }
  out << "cross-check: class " << cls << ", n = " << n;
  if (r.workload.sample) {
    out << ", sample of " << r.workload.sample->count << " (seed "
        << r.workload.sample->seed << ")";
  }
  out << ", indices [" << r.range.begin << ", " << r.range.end << ")\n";
  for (const auto& l : r.lemmas) {
    out << "  " << l.name << std::string(16 - std::min<std::size_t>(15, l.name.size()), ' ')
        << "checked " << l.checked << "  agree " << l.agreements
        << "  disagree " << l.disagreements;
    if (l.noted > 0) out << "  noted " << l.noted;
    out << "\n";
    if (l.first) {
      out << "    first counterexample at index " << l.first->index << ": "
          << l.first->detail << "\n";
      std::istringstream doc(serialize_graph(l.first->graph));
      for (std::string line; std::getline(doc, line);) {
        out << "      " << line << "\n";
      }
    }
  }
  return out.str();
}

std::string render_census(const VerdictCensus& c, ReportFormat f) {
  std::ostringstream out;
  const std::string cls = class_name(c.workload.cls.tag);
  if (f == ReportFormat::kRecord) {
    out << "census\t" << cls << "\t" << c.workload.cls.n << "\t" << c.graphs
        << "\t" << c.feasible << "\t" << c.infeasible << "\t" << c.unknown
        << "\n";
    return out.str();
  }
  out << "census: class " << cls << ", n = " << c.workload.cls.n << "\n"
      << "  graphs     " << c.graphs << "\n"
      << "  feasible   " << c.feasible << "\n"
      << "  infeasible " << c.infeasible << "\n"
      << "  unknown    " << c.unknown << "\n";
  return out.str();
}

}  // namespace entsum

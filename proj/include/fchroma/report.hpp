// Copyright 2026 The fchroma Authors
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

// Machine- and human-readable renderings of verdicts.
//
// Verdict JSON, found:
//   {"exists": true, "components": m,
//    "forest": [[u, v, "color"], ...],          (ascending edge index)
//    "color_counts": {"color": count, ...}}     (every palette color)
// Verdict JSON, impossible:
//   {"exists": false, "components": m,
//    "violating_colors": ["a", ...],            (sorted by token)
//    "omega": w, "bound": b}
// Object keys are emitted in sorted order; nothing depends on time or
// hashing.

#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "fchroma/certificates.hpp"
#include "fchroma/graph.hpp"
#include "fchroma/solve.hpp"

namespace fchroma {

inline nlohmann::json color_list_json(const ColoredGraph& g, const ColorSet& colors) {
  auto out = nlohmann::json::array();
  for (auto c : colors) out.push_back(g.color_name(c));
  return out;
}

inline nlohmann::json forest_json(const Forest& forest) {
  const auto& g = forest.host();
  auto edges = nlohmann::json::array();
  for (auto i : forest.members()) {
    const auto& e = g.edge(i);
    edges.push_back({e.u, e.v, g.color_name(e.color)});
  }
  return edges;
}

inline nlohmann::json verdict_json(const ColoredGraph& g, const SolveVerdict& verdict,
                                   std::size_t m) {
  nlohmann::json out;
  out["components"] = m;
  if (verdict.found()) {
    const auto& forest = verdict.forest();
    out["exists"] = true;
    out["forest"] = forest_json(forest);
    auto counts = nlohmann::json::object();
    const auto per_color = forest.color_counts();
    for (std::size_t c = 0; c < per_color.size(); ++c) counts[g.palette()[c]] = per_color[c];
    out["color_counts"] = counts;
  } else {
    const auto& cert = verdict.certificate();
    out["exists"] = false;
    out["violating_colors"] = color_list_json(g, cert.violating());
    out["omega"] = cert.omega_measured();
    out["bound"] = cert.bound();
  }
  return out;
}

inline std::string color_list_text(const ColoredGraph& g, const ColorSet& colors) {
  std::string out = "{";
  bool first = true;
  for (auto c : colors) {
    if (!first) out += ", ";
    out += g.color_name(c);
    first = false;
  }
  return out + "}";
}

inline void write_verdict_text(std::ostream& out, const ColoredGraph& g,
                               const SolveVerdict& verdict, std::size_t m) {
  if (verdict.found()) {
    const auto& forest = verdict.forest();
    out << "exists: yes\n"
        << "components: " << m << '\n'
        << "forest edges: " << forest.size() << '\n';
    for (auto i : forest.members()) {
      const auto& e = g.edge(i);
      out << "  " << e.u << " - " << e.v << "  " << g.color_name(e.color) << '\n';
    }
    out << "color counts:";
    const auto counts = forest.color_counts();
    for (std::size_t c = 0; c < counts.size(); ++c) {
      out << ' ' << g.palette()[c] << '=' << counts[c];
    }
    out << '\n';
  } else {
    const auto& cert = verdict.certificate();
    out << "exists: no\n"
        << "components: " << m << '\n'
        << "violating colors: " << color_list_text(g, cert.violating()) << '\n'
        << "omega(G - E_R) = " << cert.omega_measured() << " > " << cert.bound()
        << " = m + sum f(R)\n";
  }
}

/// Graphviz rendering: forest edges bold, the rest dashed.
inline void write_dot(std::ostream& out, const ColoredGraph& g, const Forest* forest) {
  out << "graph fchroma {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (EdgeIndex i = 0; i < g.size(); ++i) {
    const auto& e = g.edge(i);
    const bool chosen = forest != nullptr && forest->contains(i);
    std::string label;
    for (char ch : g.color_name(e.color)) {
      if (ch == '"' || ch == '\\') label += '\\';
      label += ch;
    }
    out << "  " << e.u << " -- " << e.v << " [label=\"" << label << "\""
        << (chosen ? ", style=bold" : ", style=dashed") << "];\n";
  }
  out << "}\n";
}

}  // namespace fchroma

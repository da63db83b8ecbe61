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

// Plain-text instance format, one directive per line:
//
//   # comment
//   graph <n>                 exactly once, before the first edge
//   e <u> <v> <color>         0 <= u, v < n; color is any non-blank token
//   f <color> <capacity>      at most once per color
//   fdefault <capacity>       at most once
//
// Blank lines are ignored. A capacity file uses the same syntax but may only
// contain comments, `f` and `fdefault` lines.

#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fchroma/error.hpp"
#include "fchroma/graph.hpp"

namespace fchroma {

class ParseError : public InputError {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : InputError(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct Instance {
  ColoredGraph graph;
  /// Capacities from `f` / `fdefault` lines of the instance itself.
  CapacityMap capacities;
};

namespace detail {

inline std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

/// Line-by-line reader shared by the instance and capacity parsers.
class DirectiveReader {
 public:
  DirectiveReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  /// Next non-blank, non-comment line as tokens; false at end of input.
  bool next(std::vector<std::string_view>& tokens) {
    while (std::getline(in_, line_)) {
      ++line_no_;
      tokens = split_tokens(line_);
      if (tokens.empty() || tokens.front().starts_with('#')) continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(source_, line_no_, what); }

  std::uint64_t number(std::string_view token, std::string_view what) const {
    std::uint64_t value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc() || ptr != end) {
      fail("expected a non-negative integer for " + std::string(what) + ", got '" +
           std::string(token) + "'");
    }
    return value;
  }

  void arity(const std::vector<std::string_view>& tokens, std::size_t expected) const {
    if (tokens.size() != expected) {
      fail("'" + std::string(tokens.front()) + "' takes " + std::to_string(expected - 1) +
           " argument(s), got " + std::to_string(tokens.size() - 1));
    }
  }

  /// Handles `f` and `fdefault`; returns false for any other keyword.
  bool capacity_directive(const std::vector<std::string_view>& tokens, CapacityMap& caps) {
    if (tokens.front() == "f") {
      arity(tokens, 3);
      if (caps.assignments().contains(tokens[1])) {
        fail("duplicate capacity for color '" + std::string(tokens[1]) + "'");
      }
      caps.set(std::string(tokens[1]), static_cast<Capacity>(number(tokens[2], "capacity")));
      return true;
    }
    if (tokens.front() == "fdefault") {
      arity(tokens, 2);
      if (caps.default_capacity()) fail("duplicate fdefault line");
      caps.set_default(static_cast<Capacity>(number(tokens[1], "default capacity")));
      return true;
    }
    return false;
  }

 private:
  std::istream& in_;
  std::string source_;
  std::string line_;
  std::size_t line_no_ = 0;
};

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

}  // namespace detail

inline Instance parse_instance(std::istream& in, const std::string& source = "<input>") {
  detail::DirectiveReader reader(in, source);
  std::optional<std::size_t> n;
  std::vector<EdgeSpec> edges;
  std::set<std::pair<Vertex, Vertex>> pairs;
  CapacityMap caps;
  std::vector<std::string_view> tokens;
  while (reader.next(tokens)) {
    const auto keyword = tokens.front();
    if (keyword == "graph") {
      reader.arity(tokens, 2);
      if (n) reader.fail("second 'graph' header");
      n = reader.number(tokens[1], "vertex count");
    } else if (keyword == "e") {
      reader.arity(tokens, 4);
      if (!n) reader.fail("edge before the 'graph' header");
      const auto u = reader.number(tokens[1], "vertex");
      const auto v = reader.number(tokens[2], "vertex");
      if (u >= *n || v >= *n) reader.fail("vertex outside 0..n-1");
      if (u == v) reader.fail("loop at vertex " + std::to_string(u));
      if (!pairs.emplace(std::min(u, v), std::max(u, v)).second) {
        reader.fail("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
      }
      edges.push_back({u, v, std::string(tokens[3])});
    } else if (!reader.capacity_directive(tokens, caps)) {
      reader.fail("unknown directive '" + std::string(keyword) + "'");
    }
  }
  if (!n) throw ParseError(source, 0, "missing 'graph' header");
  std::vector<std::string> declared;
  for (const auto& [color, cap] : caps.assignments()) declared.push_back(color);
  return Instance{ColoredGraph(*n, edges, declared), std::move(caps)};
}

inline Instance load_instance(const std::string& path) {
  auto in = detail::open_input(path);
  return parse_instance(in, path);
}

inline CapacityMap parse_capacities(std::istream& in, const std::string& source = "<caps>") {
  detail::DirectiveReader reader(in, source);
  CapacityMap caps;
  std::vector<std::string_view> tokens;
  while (reader.next(tokens)) {
    if (!reader.capacity_directive(tokens, caps)) {
      reader.fail("capacity files only allow 'f' and 'fdefault', got '" +
                  std::string(tokens.front()) + "'");
    }
  }
  return caps;
}

inline CapacityMap load_capacities(const std::string& path) {
  auto in = detail::open_input(path);
  return parse_capacities(in, path);
}

/// Effective capacities: sidecar entries over inline entries, and the
/// sidecar default over the inline default.
inline CapacityMap merge_capacities(const CapacityMap& inline_caps,
                                    const std::optional<CapacityMap>& sidecar) {
  if (!sidecar) return inline_caps;
  CapacityMap merged = inline_caps;
  for (const auto& [color, cap] : sidecar->assignments()) merged.set(color, cap);
  if (sidecar->default_capacity()) merged.set_default(sidecar->default_capacity());
  return merged;
}

inline void write_instance(std::ostream& out, const ColoredGraph& g, const CapacityMap& caps = {},
                           std::string_view comment = {}) {
  if (!comment.empty()) out << "# " << comment << '\n';
  out << "graph " << g.order() << '\n';
  for (const auto& e : g.edges()) {
    out << "e " << e.u << ' ' << e.v << ' ' << g.color_name(e.color) << '\n';
  }
  for (const auto& [color, cap] : caps.assignments()) out << "f " << color << ' ' << cap << '\n';
  if (caps.default_capacity()) out << "fdefault " << *caps.default_capacity() << '\n';
}

}  // namespace fchroma

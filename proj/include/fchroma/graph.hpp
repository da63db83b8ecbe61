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

// Edge-colored graph model: ColoredGraph, CapacityMap, Forest, and the
// component-count / color-restriction primitives the solver is built on.

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "fchroma/disjoint_set.hpp"
#include "fchroma/error.hpp"

namespace fchroma {

using Vertex = std::size_t;
using EdgeIndex = std::size_t;
using Capacity = std::int64_t;

/// Dense color handle. Ids are assigned in lexicographic order of the color
/// tokens, so comparing ids compares tokens.
class ColorId {
 public:
  constexpr ColorId() = default;
  constexpr explicit ColorId(std::uint32_t value) : value_(value) {}

  constexpr std::uint32_t value() const { return value_; }
  constexpr std::size_t index() const { return value_; }

  friend constexpr auto operator<=>(ColorId, ColorId) = default;

 private:
  std::uint32_t value_ = 0;
};

using ColorSet = std::set<ColorId>;

struct Edge {
  Vertex u;
  Vertex v;
  ColorId color;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Edge as supplied by a caller, with its color given as a token.
struct EdgeSpec {
  Vertex u;
  Vertex v;
  std::string color;
};

/// Immutable simple graph with a color on every edge. Edge order is kept
/// exactly as constructed; every algorithm breaks ties by edge index.
class ColoredGraph {
 public:
  /// `extra_colors` declares palette entries that need not appear on edges.
  /// Throws InputError on loops, repeated vertex pairs, or out-of-range
  /// endpoints.
  ColoredGraph(std::size_t n, std::span<const EdgeSpec> edges,
               std::span<const std::string> extra_colors = {})
      : n_(n) {
    std::vector<std::string> tokens;
    tokens.reserve(edges.size() + extra_colors.size());
    for (const auto& e : edges) tokens.push_back(e.color);
    tokens.insert(tokens.end(), extra_colors.begin(), extra_colors.end());
    std::sort(tokens.begin(), tokens.end());
    tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
    for (const auto& t : tokens) {
      if (t.empty()) throw InputError("color token must be non-empty");
    }
    palette_ = std::make_shared<const std::vector<std::string>>(std::move(tokens));

    std::unordered_set<std::uint64_t> seen;
    edges_.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto& e = edges[i];
      if (e.u >= n || e.v >= n) {
        throw InputError("edge " + std::to_string(i) + " has an endpoint outside 0.." +
                         std::to_string(n == 0 ? 0 : n - 1));
      }
      if (e.u == e.v) {
        throw InputError("edge " + std::to_string(i) + " is a loop at vertex " +
                         std::to_string(e.u));
      }
      const auto lo = std::min(e.u, e.v);
      const auto hi = std::max(e.u, e.v);
      if (!seen.insert((static_cast<std::uint64_t>(lo) << 32) | hi).second) {
        throw InputError("edge " + std::to_string(i) + " repeats the pair {" +
                         std::to_string(lo) + "," + std::to_string(hi) + "}");
      }
      edges_.push_back(Edge{e.u, e.v, *find_color(e.color)});
    }
  }

  ColoredGraph(std::size_t n, std::initializer_list<EdgeSpec> edges)
      : ColoredGraph(n, std::span<const EdgeSpec>(edges.begin(), edges.size())) {}

  std::size_t order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeIndex i) const { return edges_.at(i); }

  std::size_t palette_size() const { return palette_->size(); }
  /// Color tokens indexed by ColorId.
  std::span<const std::string> palette() const { return *palette_; }
  const std::string& color_name(ColorId c) const { return palette_->at(c.index()); }

  std::optional<ColorId> find_color(std::string_view token) const {
    auto it = std::lower_bound(palette_->begin(), palette_->end(), token);
    if (it == palette_->end() || *it != token) return std::nullopt;
    return ColorId(static_cast<std::uint32_t>(it - palette_->begin()));
  }

  /// Throws InputError for a token outside the palette.
  ColorId color_id(std::string_view token) const {
    if (auto c = find_color(token)) return *c;
    throw InputError("unknown color '" + std::string(token) + "'");
  }

  std::vector<ColorId> colors() const {
    std::vector<ColorId> out;
    out.reserve(palette_size());
    for (std::size_t i = 0; i < palette_size(); ++i) out.emplace_back(static_cast<std::uint32_t>(i));
    return out;
  }

  std::vector<EdgeSpec> edge_specs() const {
    std::vector<EdgeSpec> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.push_back({e.u, e.v, color_name(e.color)});
    return out;
  }

  /// Same vertex set and palette, edges filtered by `keep` (order preserved).
  template <typename Pred>
  ColoredGraph filtered(Pred keep) const {
    ColoredGraph out(n_, palette_);
    for (const auto& e : edges_) {
      if (keep(e)) out.edges_.push_back(e);
    }
    return out;
  }

 private:
  ColoredGraph(std::size_t n, std::shared_ptr<const std::vector<std::string>> palette)
      : n_(n), palette_(std::move(palette)) {}

  std::size_t n_;
  std::vector<Edge> edges_;
  std::shared_ptr<const std::vector<std::string>> palette_;
};

/// Color -> non-negative capacity, keyed by color token, with an optional
/// default for unlisted colors. A lookup the map does not cover is an error:
/// capacity 0 forbids a color, so it is never implied.
class CapacityMap {
 public:
  using Table = std::map<std::string, Capacity, std::less<>>;

  CapacityMap() = default;

  static CapacityMap uniform(Capacity k) {
    CapacityMap f;
    f.set_default(k);
    return f;
  }

  CapacityMap& set(std::string color, Capacity cap) {
    if (cap < 0) throw InputError("capacity for '" + color + "' is negative");
    table_[std::move(color)] = cap;
    return *this;
  }

  CapacityMap& set_default(std::optional<Capacity> cap) {
    if (cap && *cap < 0) throw InputError("default capacity is negative");
    default_ = cap;
    return *this;
  }

  bool covers(std::string_view color) const {
    return default_.has_value() || table_.find(color) != table_.end();
  }

  Capacity at(std::string_view color) const {
    if (auto it = table_.find(color); it != table_.end()) return it->second;
    if (default_) return *default_;
    throw CapacityError("no capacity given for color '" + std::string(color) + "'");
  }

  const Table& assignments() const { return table_; }
  std::optional<Capacity> default_capacity() const { return default_; }

  friend bool operator==(const CapacityMap&, const CapacityMap&) = default;

 private:
  Table table_;
  std::optional<Capacity> default_;
};

/// Capacities of every palette color of `g`, indexed by ColorId.
/// Throws CapacityError if `f` misses any palette color.
inline std::vector<Capacity> resolve_capacities(const ColoredGraph& g, const CapacityMap& f) {
  std::vector<Capacity> caps;
  caps.reserve(g.palette_size());
  for (const auto& token : g.palette()) caps.push_back(f.at(token));
  return caps;
}

inline ColoredGraph restrict_by_colors(const ColoredGraph& g, const ColorSet& removed) {
  if (removed.empty()) return g;
  return g.filtered([&](const Edge& e) { return !removed.contains(e.color); });
}

/// Number of connected components. Throws InputError on the empty graph.
inline std::size_t omega(const ColoredGraph& g) {
  if (g.order() == 0) throw InputError("component count of a graph with no vertices");
  DisjointSet dsu(g.order());
  for (const auto& e : g.edges()) dsu.unite(e.u, e.v);
  return dsu.set_count();
}

/// omega(restrict_by_colors(g, removed)) without materializing the subgraph.
/// `removed` is a per-ColorId mask.
inline std::size_t omega_without(const ColoredGraph& g, std::span<const char> removed) {
  if (g.order() == 0) throw InputError("component count of a graph with no vertices");
  DisjointSet dsu(g.order());
  for (const auto& e : g.edges()) {
    if (!removed[e.color.index()]) dsu.unite(e.u, e.v);
  }
  return dsu.set_count();
}

inline std::size_t omega_without(const ColoredGraph& g, const ColorSet& removed) {
  std::vector<char> mask(g.palette_size(), 0);
  for (auto c : removed) mask.at(c.index()) = 1;
  return omega_without(g, mask);
}

/// Per-color edge counts; only colors that occur on some edge are listed.
inline std::map<ColorId, std::size_t> color_census(const ColoredGraph& g) {
  std::map<ColorId, std::size_t> counts;
  for (const auto& e : g.edges()) ++counts[e.color];
  return counts;
}

inline bool is_f_chromatic(const ColoredGraph& g, const CapacityMap& f) {
  for (const auto& [c, count] : color_census(g)) {
    if (static_cast<Capacity>(count) > f.at(g.color_name(c))) return false;
  }
  return true;
}

/// Acyclic edge subset of a host graph, together with its component
/// structure. The host must outlive the forest.
class Forest {
 public:
  /// Throws PreconditionError if `members` is out of range, repeats an
  /// edge, or contains a cycle.
  Forest(const ColoredGraph& host, std::vector<EdgeIndex> members)
      : host_(&host), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
      throw PreconditionError("forest lists an edge twice");
    }
    if (!members_.empty() && members_.back() >= host.size()) {
      throw PreconditionError("forest edge index outside the host graph");
    }
    DisjointSet dsu(host.order());
    for (auto i : members_) {
      const auto& e = host.edge(i);
      if (!dsu.unite(e.u, e.v)) {
        throw PreconditionError("edge " + std::to_string(i) + " closes a cycle in the forest");
      }
    }
    component_.assign(host.order(), 0);
    std::vector<std::size_t> label_of_root(host.order(), kUnlabeled);
    std::size_t next = 0;
    for (Vertex v = 0; v < host.order(); ++v) {
      auto& label = label_of_root[dsu.find(v)];
      if (label == kUnlabeled) label = next++;
      component_[v] = label;
    }
    omega_ = next;
    if (omega_ + members_.size() != host.order()) {
      throw InternalError("forest component count disagrees with n - |members|");
    }
  }

  static Forest empty(const ColoredGraph& host) { return Forest(host, {}); }

  const ColoredGraph& host() const { return *host_; }
  bool hosted_by(const ColoredGraph& g) const { return host_ == &g; }

  /// Edge indices in ascending order.
  std::span<const EdgeIndex> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  std::size_t omega() const { return omega_; }

  /// Component label of `v`; labels are 0..omega()-1 numbered by smallest vertex.
  std::size_t component_of(Vertex v) const { return component_.at(v); }

  bool contains(EdgeIndex i) const {
    return std::binary_search(members_.begin(), members_.end(), i);
  }

  /// Member counts indexed by ColorId (length = palette size).
  std::vector<std::size_t> color_counts() const {
    std::vector<std::size_t> counts(host_->palette_size(), 0);
    for (auto i : members_) ++counts[host_->edge(i).color.index()];
    return counts;
  }

  ColorSet colors() const {
    ColorSet out;
    for (auto i : members_) out.insert(host_->edge(i).color);
    return out;
  }

  /// The forest minus every member whose color is in `colors`.
  Forest without_colors(const ColorSet& colors) const {
    std::vector<EdgeIndex> kept;
    for (auto i : members_) {
      if (!colors.contains(host_->edge(i).color)) kept.push_back(i);
    }
    return Forest(*host_, std::move(kept));
  }

 private:
  static constexpr std::size_t kUnlabeled = static_cast<std::size_t>(-1);

  const ColoredGraph* host_;
  std::vector<EdgeIndex> members_;
  std::vector<std::size_t> component_;
  std::size_t omega_ = 0;
};

inline bool is_f_chromatic(const Forest& forest, std::span<const Capacity> caps) {
  const auto counts = forest.color_counts();
  for (std::size_t c = 0; c < counts.size(); ++c) {
    if (counts[c] > 0 && static_cast<Capacity>(counts[c]) > caps[c]) return false;
  }
  return true;
}

inline bool is_f_chromatic(const Forest& forest, const CapacityMap& f) {
  const auto counts = forest.color_counts();
  for (std::size_t c = 0; c < counts.size(); ++c) {
    if (counts[c] > 0 &&
        static_cast<Capacity>(counts[c]) > f.at(forest.host().palette()[c])) {
      return false;
    }
  }
  return true;
}

inline Capacity capacity_sum(const ColorSet& colors, std::span<const Capacity> caps) {
  Capacity total = 0;
  for (auto c : colors) total += caps[c.index()];
  return total;
}

}  // namespace fchroma

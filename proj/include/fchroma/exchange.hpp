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

// Maximum f-chromatic forests by augmenting paths in the exchange graph of
// two matroids on E(G): the graphic matroid (acyclic edge sets) and the
// partition matroid that admits at most f(c) edges of each color c.
//
// For a current forest F the exchange graph has a node per edge and
//   y -> x  (y in F, x not in F)  when y lies on the F-path joining x's ends,
//   x -> y  (x not in F, y in F)  when color(x) = color(y) is saturated.
// Sources are non-forest edges joining two components of F; sinks are
// non-forest edges whose color is below capacity. Applying a shortest
// source-to-sink path as a symmetric difference grows F by one edge and
// keeps it an f-chromatic forest. No path means |F| is maximum.

#pragma once

#include <cstddef>
#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "fchroma/error.hpp"
#include "fchroma/graph.hpp"

namespace fchroma {

namespace detail {

/// Rooted view of a forest for path queries between vertices of one tree.
class RootedForest {
 public:
  explicit RootedForest(const Forest& forest)
      : parent_(forest.host().order(), kNone),
        parent_edge_(forest.host().order(), kNone),
        depth_(forest.host().order(), 0) {
    const auto& g = forest.host();
    std::vector<std::vector<std::pair<Vertex, EdgeIndex>>> adj(g.order());
    for (auto i : forest.members()) {
      const auto& e = g.edge(i);
      adj[e.u].emplace_back(e.v, i);
      adj[e.v].emplace_back(e.u, i);
    }
    std::vector<char> seen(g.order(), 0);
    std::vector<Vertex> stack;
    for (Vertex root = 0; root < g.order(); ++root) {
      if (seen[root]) continue;
      seen[root] = 1;
      stack.push_back(root);
      while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (auto [w, i] : adj[v]) {
          if (seen[w]) continue;
          seen[w] = 1;
          parent_[w] = v;
          parent_edge_[w] = i;
          depth_[w] = depth_[v] + 1;
          stack.push_back(w);
        }
      }
    }
  }

  /// Forest edges on the path between u and v, which must share a tree.
  std::vector<EdgeIndex> path(Vertex u, Vertex v) const {
    std::vector<EdgeIndex> out;
    while (depth_[u] > depth_[v]) {
      out.push_back(parent_edge_[u]);
      u = parent_[u];
    }
    while (depth_[v] > depth_[u]) {
      out.push_back(parent_edge_[v]);
      v = parent_[v];
    }
    while (u != v) {
      out.push_back(parent_edge_[u]);
      out.push_back(parent_edge_[v]);
      u = parent_[u];
      v = parent_[v];
    }
    return out;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::vector<Vertex> parent_;
  std::vector<EdgeIndex> parent_edge_;
  std::vector<std::size_t> depth_;
};

inline void require_chromatic_forest(const ColoredGraph& g, std::span<const Capacity> caps,
                                     const Forest& forest) {
  if (!forest.hosted_by(g)) throw PreconditionError("forest is not hosted by this graph");
  if (!is_f_chromatic(forest, caps)) throw PreconditionError("forest is not f-chromatic");
}

/// One augmentation against resolved capacities (indexed by ColorId).
inline std::optional<Forest> augment(const ColoredGraph& g, std::span<const Capacity> caps,
                                     const Forest& forest) {
  const std::size_t m = g.size();
  std::vector<char> in_forest(m, 0);
  for (auto i : forest.members()) in_forest[i] = 1;
  const auto counts = forest.color_counts();
  auto unsaturated = [&](ColorId c) {
    return static_cast<Capacity>(counts[c.index()]) < caps[c.index()];
  };

  std::vector<char> is_source(m, 0);
  std::vector<char> is_sink(m, 0);
  // exchange_in[y] lists the non-forest x whose fundamental cycle passes y.
  std::vector<std::vector<EdgeIndex>> exchange_in(m);
  // forest members grouped by color, ascending index.
  std::vector<std::vector<EdgeIndex>> members_of_color(g.palette_size());
  for (auto i : forest.members()) members_of_color[g.edge(i).color.index()].push_back(i);

  const RootedForest rooted(forest);
  for (EdgeIndex x = 0; x < m; ++x) {
    if (in_forest[x]) continue;
    const auto& e = g.edge(x);
    is_sink[x] = unsaturated(e.color);
    if (forest.component_of(e.u) != forest.component_of(e.v)) {
      is_source[x] = 1;
    } else {
      for (auto y : rooted.path(e.u, e.v)) exchange_in[y].push_back(x);
    }
  }

  constexpr std::size_t kUnreached = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pred(m, kUnreached);
  std::vector<char> reached(m, 0);
  std::deque<EdgeIndex> queue;
  for (EdgeIndex x = 0; x < m; ++x) {
    if (is_source[x]) {
      reached[x] = 1;
      queue.push_back(x);
    }
  }

  std::optional<EdgeIndex> sink;
  while (!queue.empty()) {
    const EdgeIndex node = queue.front();
    queue.pop_front();
    if (!in_forest[node] && is_sink[node]) {
      sink = node;
      break;
    }
    auto visit = [&](EdgeIndex next) {
      if (reached[next]) return;
      reached[next] = 1;
      pred[next] = node;
      queue.push_back(next);
    };
    if (in_forest[node]) {
      for (auto x : exchange_in[node]) visit(x);
    } else {
      // not a sink, so the color of `node` is saturated
      for (auto y : members_of_color[g.edge(node).color.index()]) visit(y);
    }
  }
  if (!sink) return std::nullopt;

  std::vector<char> flip(m, 0);
  for (EdgeIndex at = *sink; at != kUnreached; at = pred[at]) flip[at] = 1;
  std::vector<EdgeIndex> next_members;
  next_members.reserve(forest.size() + 1);
  for (EdgeIndex i = 0; i < m; ++i) {
    if (static_cast<bool>(in_forest[i]) != static_cast<bool>(flip[i])) next_members.push_back(i);
  }
  if (next_members.size() != forest.size() + 1) {
    throw InternalError("augmenting path did not grow the forest by one edge");
  }
  Forest grown = [&] {
    try {
      return Forest(g, std::move(next_members));
    } catch (const PreconditionError&) {
      throw InternalError("augmenting path produced a cycle");
    }
  }();
  if (!is_f_chromatic(grown, caps)) {
    throw InternalError("augmenting path exceeded a color capacity");
  }
  return grown;
}

inline Forest maximize(const ColoredGraph& g, std::span<const Capacity> caps) {
  Forest forest = Forest::empty(g);
  while (auto next = augment(g, caps, forest)) forest = std::move(*next);
  return forest;
}

}  // namespace detail

/// Grows an f-chromatic forest by one edge along a shortest augmenting path
/// (ties broken by smallest edge index), or returns nullopt when the forest
/// already has maximum size among f-chromatic forests of g.
inline std::optional<Forest> augment_step(const ColoredGraph& g, const CapacityMap& f,
                                          const Forest& forest) {
  const auto caps = resolve_capacities(g, f);
  detail::require_chromatic_forest(g, caps, forest);
  return detail::augment(g, caps, forest);
}

/// Maximum-size f-chromatic forest, grown from the empty forest. Equivalently
/// an f-chromatic spanning forest with the fewest components.
inline Forest maximize_forest(const ColoredGraph& g, const CapacityMap& f) {
  return detail::maximize(g, resolve_capacities(g, f));
}

/// Drops the highest-index edges until exactly m components remain.
inline Forest prune_to_m(const Forest& forest, std::size_t m) {
  const auto n = forest.host().order();
  if (m > n) throw PreconditionError("m exceeds the number of vertices");
  if (forest.omega() > m) {
    throw PreconditionError("forest already has " + std::to_string(forest.omega()) +
                            " components; cannot reach " + std::to_string(m) +
                            " by removing edges");
  }
  const auto keep = forest.size() - (m - forest.omega());
  std::vector<EdgeIndex> kept(forest.members().begin(), forest.members().begin() + keep);
  return Forest(forest.host(), std::move(kept));
}

}  // namespace fchroma

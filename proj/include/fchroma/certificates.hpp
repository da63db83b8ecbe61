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

// Non-existence certificates. A color set R with
//
//     omega(G - E_R) > m + sum_{c in R} f(c)
//
// rules out every f-chromatic spanning forest with exactly m components.
// extract_certificate() finds such an R from a maximum f-chromatic forest by
// peeling saturated triples; the two oracles below are exhaustive searches
// used to cross-check the solver.

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fchroma/disjoint_set.hpp"
#include "fchroma/error.hpp"
#include "fchroma/exchange.hpp"
#include "fchroma/graph.hpp"

namespace fchroma {

/// A color set R together with the measured omega(G - E_R) and the bound
/// m + sum f(R) it exceeds.
class Certificate {
 public:
  /// Recomputes both sides of the inequality. Throws InternalError if R does
  /// not actually violate it.
  static Certificate verify(const ColoredGraph& g, std::span<const Capacity> caps,
                            std::size_t m, ColorSet violating) {
    const auto measured = omega_without(g, violating);
    const auto bound = static_cast<Capacity>(m) + capacity_sum(violating, caps);
    if (static_cast<Capacity>(measured) <= bound) {
      throw InternalError("certificate does not violate the condition: omega " +
                          std::to_string(measured) + " <= bound " + std::to_string(bound));
    }
    return Certificate(std::move(violating), measured, bound);
  }

  static Certificate verify(const ColoredGraph& g, const CapacityMap& f, std::size_t m,
                            ColorSet violating) {
    return verify(g, resolve_capacities(g, f), m, std::move(violating));
  }

  const ColorSet& violating() const { return violating_; }
  std::size_t omega_measured() const { return omega_; }
  Capacity bound() const { return bound_; }

 private:
  Certificate(ColorSet violating, std::size_t omega, Capacity bound)
      : violating_(std::move(violating)), omega_(omega), bound_(bound) {}

  ColorSet violating_;
  std::size_t omega_;
  Capacity bound_;
};

/// Forest together with the accumulated color set c0 and the colors c1 of
/// the crossing edges not yet in c0.
struct PeelState {
  Forest forest;
  ColorSet c0;
  ColorSet c1;
};

using PeelObserver = std::function<void(const PeelState&)>;

struct OracleLimits {
  std::size_t max_palette = 16;
  std::size_t max_edges = 20;
};

/// Edges of g whose endpoints lie in different components of the forest.
inline std::vector<EdgeIndex> crossing_edges(const ColoredGraph& g, const Forest& forest) {
  if (!forest.hosted_by(g)) throw PreconditionError("forest is not hosted by this graph");
  std::vector<EdgeIndex> out;
  for (EdgeIndex i = 0; i < g.size(); ++i) {
    const auto& e = g.edge(i);
    if (forest.component_of(e.u) != forest.component_of(e.v)) out.push_back(i);
  }
  return out;
}

namespace detail {

inline ColorSet crossing_colors(const ColoredGraph& g, const Forest& forest) {
  ColorSet out;
  for (auto i : crossing_edges(g, forest)) out.insert(g.edge(i).color);
  return out;
}

inline void require_component_target(const ColoredGraph& g, std::size_t m) {
  if (m < 1 || m > g.order()) {
    throw PreconditionError("component target m=" + std::to_string(m) + " outside 1.." +
                            std::to_string(g.order()));
  }
}

/// Saturation conditions that are cheap to check on a live peel state.
inline void check_peel_state(const ColoredGraph& g, std::span<const Capacity> caps,
                             std::size_t m, const PeelState& s) {
  for (auto c : s.c0) {
    if (s.c1.contains(c)) throw InternalError("peel state: c0 and c1 overlap");
  }
  ColorSet both = s.c0;
  both.insert(s.c1.begin(), s.c1.end());
  if (both != crossing_colors(g, s.forest)) {
    throw InternalError("peel state: c0 and c1 do not cover the crossing colors");
  }
  for (auto c : s.forest.colors()) {
    if (s.c0.contains(c)) throw InternalError("peel state: forest uses a color of c0");
  }
  const auto needed = static_cast<Capacity>(m) + 1 + capacity_sum(s.c0, caps);
  if (static_cast<Capacity>(s.forest.omega()) < needed) {
    throw InternalError("peel state: forest has too few components");
  }
}

inline Certificate peel(const ColoredGraph& g, std::span<const Capacity> caps, std::size_t m,
                        const Forest& fmax, const PeelObserver& observer) {
  // Starting from a forest with the fewest components, every crossing edge
  // of an unused color would extend the forest unless that color has
  // capacity 0, and every used crossing color is at capacity in every forest
  // with the same crossing set. Dropping the forest edges of those colors
  // preserves both facts for the smaller forest, so the state stays
  // saturated each round; the final certificate is re-verified regardless.
  const auto used = fmax.colors();
  PeelState state{fmax, {}, {}};
  for (auto c : crossing_colors(g, fmax)) {
    if (!used.contains(c)) state.c0.insert(c);
  }
  const std::size_t max_rounds = g.palette_size() + 1;
  for (std::size_t round = 0;; ++round) {
    if (round > max_rounds) throw InternalError("peeling did not terminate");
    state.c1.clear();
    for (auto c : crossing_colors(g, state.forest)) {
      if (!state.c0.contains(c)) state.c1.insert(c);
    }
    check_peel_state(g, caps, m, state);
    if (observer) observer(state);
    if (state.c1.empty()) break;
    state.forest = state.forest.without_colors(state.c1);
    state.c0.insert(state.c1.begin(), state.c1.end());
  }
  return Certificate::verify(g, caps, m, std::move(state.c0));
}

}  // namespace detail

/// Violating color set obtained by peeling from `fmax`, which must be a
/// maximum f-chromatic forest with fewer than n - m edges. The observer, if
/// given, sees the state after every round.
inline Certificate extract_certificate(const ColoredGraph& g, const CapacityMap& f,
                                       std::size_t m, const Forest& fmax,
                                       const PeelObserver& observer = {}) {
  detail::require_component_target(g, m);
  const auto caps = resolve_capacities(g, f);
  detail::require_chromatic_forest(g, caps, fmax);
  if (fmax.size() + m >= g.order()) {
    throw PreconditionError("forest already has n - m edges; nothing to certify");
  }
  if (detail::augment(g, caps, fmax)) {
    throw PreconditionError("forest is not maximum: an augmenting path remains");
  }
  return detail::peel(g, caps, m, fmax, observer);
}

/// Checks the condition for every R in the palette, visiting subsets in
/// lexicographic order of their sorted color lists (so {} , {a}, {a,b}, ...,
/// {b}, ...). Returns the first violator, or nullopt if none exists.
inline std::optional<Certificate> oracle_condition(const ColoredGraph& g, const CapacityMap& f,
                                                   std::size_t m,
                                                   const OracleLimits& limits = {}) {
  detail::require_component_target(g, m);
  if (g.palette_size() > limits.max_palette) {
    throw LimitError("palette of " + std::to_string(g.palette_size()) +
                     " colors exceeds the oracle limit of " +
                     std::to_string(limits.max_palette));
  }
  const auto caps = resolve_capacities(g, f);
  const std::size_t k = g.palette_size();
  std::vector<char> mask(k, 0);
  std::optional<ColorSet> found;

  std::function<bool(std::size_t, Capacity)> visit = [&](std::size_t first, Capacity sum) {
    if (static_cast<Capacity>(omega_without(g, mask)) > static_cast<Capacity>(m) + sum) {
      ColorSet r;
      for (std::size_t c = 0; c < k; ++c) {
        if (mask[c]) r.insert(ColorId(static_cast<std::uint32_t>(c)));
      }
      found = std::move(r);
      return true;
    }
    for (std::size_t c = first; c < k; ++c) {
      mask[c] = 1;
      const bool stop = visit(c + 1, sum + caps[c]);
      mask[c] = 0;
      if (stop) return true;
    }
    return false;
  };
  visit(0, 0);
  if (!found) return std::nullopt;
  return Certificate::verify(g, caps, m, std::move(*found));
}

/// Backtracking search over (n - m)-edge subsets, in edge-index order, for an
/// f-chromatic spanning forest with exactly m components.
inline std::optional<Forest> oracle_forest_search(const ColoredGraph& g, const CapacityMap& f,
                                                  std::size_t m,
                                                  const OracleLimits& limits = {}) {
  detail::require_component_target(g, m);
  if (g.size() > limits.max_edges) {
    throw LimitError(std::to_string(g.size()) + " edges exceed the oracle limit of " +
                     std::to_string(limits.max_edges));
  }
  const auto caps = resolve_capacities(g, f);
  const std::size_t target = g.order() - m;
  std::vector<Capacity> left(caps.begin(), caps.end());
  RollbackDisjointSet dsu(g.order());
  std::vector<EdgeIndex> chosen;

  std::function<bool(EdgeIndex)> search = [&](EdgeIndex next) {
    if (chosen.size() == target) return true;
    if (g.size() - next < target - chosen.size()) return false;
    for (EdgeIndex i = next; i < g.size(); ++i) {
      if (g.size() - i < target - chosen.size()) break;
      const auto& e = g.edge(i);
      auto& budget = left[e.color.index()];
      if (budget == 0) continue;
      if (!dsu.unite(e.u, e.v)) continue;
      --budget;
      chosen.push_back(i);
      if (search(i + 1)) return true;
      chosen.pop_back();
      ++budget;
      dsu.rollback();
    }
    return false;
  };
  if (!search(0)) return std::nullopt;
  return Forest(g, chosen);
}

}  // namespace fchroma

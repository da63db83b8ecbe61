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

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <variant>

#include "fchroma/certificates.hpp"
#include "fchroma/error.hpp"
#include "fchroma/exchange.hpp"
#include "fchroma/graph.hpp"

namespace fchroma {

/// Either an f-chromatic spanning forest with exactly m components, or a
/// certificate that none exists.
class SolveVerdict {
 public:
  explicit SolveVerdict(Forest forest) : value_(std::move(forest)) {}
  explicit SolveVerdict(Certificate certificate) : value_(std::move(certificate)) {}

  bool found() const { return std::holds_alternative<Forest>(value_); }
  const Forest& forest() const { return std::get<Forest>(value_); }
  const Certificate& certificate() const { return std::get<Certificate>(value_); }

 private:
  std::variant<Forest, Certificate> value_;
};

namespace detail {

inline void check_found_forest(const ColoredGraph& g, std::span<const Capacity> caps,
                               std::size_t m, const Forest& forest) {
  if (!forest.hosted_by(g) || forest.omega() != m || forest.size() + m != g.order() ||
      !is_f_chromatic(forest, caps)) {
    throw InternalError("solver produced a forest violating its postcondition");
  }
}

inline SolveVerdict solve(const ColoredGraph& g, std::span<const Capacity> caps, std::size_t m) {
  require_component_target(g, m);
  Forest best = maximize(g, caps);
  if (best.size() + m >= g.order()) {
    Forest pruned = prune_to_m(best, m);
    check_found_forest(g, caps, m, pruned);
    return SolveVerdict(std::move(pruned));
  }
  return SolveVerdict(peel(g, caps, m, best, {}));
}

}  // namespace detail

/// Decides whether g has an f-chromatic spanning forest with exactly m
/// components (1 <= m <= n) and returns either such a forest or a verified
/// violating color set.
inline SolveVerdict solve(const ColoredGraph& g, const CapacityMap& f, std::size_t m) {
  detail::require_component_target(g, m);
  return detail::solve(g, resolve_capacities(g, f), m);
}

/// solve() for capacity maps whose palette total is exactly n - m. A found
/// forest then uses every color c exactly f(c) times.
inline SolveVerdict exact_profile_forest(const ColoredGraph& g, const CapacityMap& f,
                                         std::size_t m) {
  detail::require_component_target(g, m);
  const auto caps = resolve_capacities(g, f);
  Capacity total = 0;
  for (auto c : caps) total += c;
  if (total != static_cast<Capacity>(g.order() - m)) {
    throw PreconditionError("capacities sum to " + std::to_string(total) + ", expected n - m = " +
                            std::to_string(g.order() - m));
  }
  auto verdict = detail::solve(g, caps, m);
  if (verdict.found()) {
    const auto counts = verdict.forest().color_counts();
    for (std::size_t c = 0; c < counts.size(); ++c) {
      if (static_cast<Capacity>(counts[c]) != caps[c]) {
        throw InternalError("exact-profile forest misses the profile for color '" +
                            g.palette()[c] + "'");
      }
    }
  }
  return verdict;
}

}  // namespace fchroma

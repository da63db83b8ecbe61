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

// Seeded instance generators.
//
// Randomness contract (golden files depend on it):
//   * engine: std::mt19937_64 seeded with GenSpec::seed (its output sequence
//     is fixed by the C++ standard);
//   * integer in [0, b): rejection sampling, draws x until
//     x >= (2^64 - b) mod b, returns x mod b;
//   * real in [0, 1): (x >> 11) * 2^-53;
//   * shuffle: Fisher-Yates from the back, swapping i with integer in [0, i].
// No std::*_distribution is used, since those differ between standard
// libraries.
//
// Vertex pairs are visited in lexicographic order (0,1), (0,2), ..., and
// colors are named c0, c1, ... .

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fchroma/error.hpp"
#include "fchroma/graph.hpp"

namespace fchroma {

/// Portable wrapper over mt19937_64; see the randomness contract above.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw PreconditionError("random bound must be positive");
    const std::uint64_t floor = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t x = engine_();
      if (x >= floor) return x % bound;
    }
  }

  /// Integer in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

inline std::string color_token(std::size_t i) { return "c" + std::to_string(i); }

struct RandomGnp {
  double p = 0.5;
};
struct Complete {};
/// K_n colored by the round-robin 1-factorization; ignores GenSpec::coloring.
struct CompleteFactorized {};

/// Every edge draws a color uniformly from palette_size colors.
struct UniformColoring {
  std::size_t palette_size = 1;
};
/// Each of palette_size colors is used on at most k edges.
struct KBoundedColoring {
  std::size_t k = 1;
  std::size_t palette_size = 1;
};
/// Each color listed in `g` is used on at most g(c) edges (default ignored).
struct CappedColoring {
  CapacityMap g;
};

struct GenSpec {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::variant<RandomGnp, Complete, CompleteFactorized> model = RandomGnp{};
  std::variant<UniformColoring, KBoundedColoring, CappedColoring> coloring = UniformColoring{};
};

namespace detail {

inline std::vector<std::pair<Vertex, Vertex>> all_pairs(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  return pairs;
}

/// Round-robin (circle) 1-factorization: vertex n-1 is fixed, the others sit
/// on a circle; round r pairs r with n-1 and (r+i) with (r-i) mod (n-1).
inline std::vector<EdgeSpec> round_robin_factorization(std::size_t n) {
  std::vector<std::size_t> round_of(n * n, 0);
  const std::size_t circle = n - 1;
  for (std::size_t r = 0; r < circle; ++r) {
    auto mark = [&](std::size_t a, std::size_t b) {
      round_of[a * n + b] = r;
      round_of[b * n + a] = r;
    };
    mark(r, n - 1);
    for (std::size_t i = 1; i < n / 2; ++i) mark((r + i) % circle, (r + circle - i) % circle);
  }
  std::vector<EdgeSpec> edges;
  for (auto [u, v] : all_pairs(n)) edges.push_back({u, v, color_token(round_of[u * n + v])});
  return edges;
}

/// Draws `count` colors from a pool holding each token `slots[i].second`
/// times: shuffle the pool, take its prefix.
inline std::vector<std::string> draw_from_slots(
    Rng& rng, std::span<const std::pair<std::string, std::size_t>> slots, std::size_t count) {
  std::vector<std::string> pool;
  for (const auto& [token, times] : slots) pool.insert(pool.end(), times, token);
  if (pool.size() < count) {
    throw PreconditionError("coloring admits only " + std::to_string(pool.size()) +
                            " edges but the graph has " + std::to_string(count));
  }
  rng.shuffle(pool);
  pool.resize(count);
  return pool;
}

}  // namespace detail

/// Builds the instance described by `spec`. Identical specs give identical
/// graphs, edge for edge.
inline ColoredGraph generate(const GenSpec& spec) {
  const auto n = spec.n;
  if (n == 0) throw PreconditionError("generator needs at least one vertex");
  Rng rng(spec.seed);

  if (std::holds_alternative<CompleteFactorized>(spec.model)) {
    if (n % 2 != 0) throw PreconditionError("1-factorization needs an even vertex count");
    return ColoredGraph(n, detail::round_robin_factorization(n));
  }

  std::vector<std::pair<Vertex, Vertex>> pairs;
  if (const auto* gnp = std::get_if<RandomGnp>(&spec.model)) {
    if (!(gnp->p >= 0.0 && gnp->p <= 1.0)) throw PreconditionError("edge probability outside [0,1]");
    for (auto pair : detail::all_pairs(n)) {
      if (rng.unit() < gnp->p) pairs.push_back(pair);
    }
  } else {
    pairs = detail::all_pairs(n);
  }

  std::vector<std::string> colors;
  std::vector<std::string> declared;
  if (const auto* uni = std::get_if<UniformColoring>(&spec.coloring)) {
    if (uni->palette_size == 0) throw PreconditionError("palette must have at least one color");
    for (std::size_t i = 0; i < pairs.size(); ++i) colors.push_back(color_token(rng.below(uni->palette_size)));
  } else if (const auto* kb = std::get_if<KBoundedColoring>(&spec.coloring)) {
    if (kb->palette_size == 0) throw PreconditionError("palette must have at least one color");
    std::vector<std::pair<std::string, std::size_t>> slots;
    for (std::size_t i = 0; i < kb->palette_size; ++i) slots.emplace_back(color_token(i), kb->k);
    colors = detail::draw_from_slots(rng, slots, pairs.size());
  } else {
    const auto& capped = std::get<CappedColoring>(spec.coloring);
    std::vector<std::pair<std::string, std::size_t>> slots;
    for (const auto& [token, cap] : capped.g.assignments()) {
      slots.emplace_back(token, static_cast<std::size_t>(cap));
      declared.push_back(token);
    }
    colors = detail::draw_from_slots(rng, slots, pairs.size());
  }

  std::vector<EdgeSpec> edges;
  edges.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    edges.push_back({pairs[i].first, pairs[i].second, std::move(colors[i])});
  }
  return ColoredGraph(n, edges, declared);
}

/// The tightest capacities under which g is f-chromatic: f(c) = |E_c(G)|.
inline CapacityMap census_to_capacities(const ColoredGraph& g) {
  CapacityMap f;
  for (const auto& [c, count] : color_census(g)) {
    f.set(g.color_name(c), static_cast<Capacity>(count));
  }
  return f;
}

}  // namespace fchroma

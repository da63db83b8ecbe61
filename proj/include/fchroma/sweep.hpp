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

// Randomized law checks. Instance i of a sweep is built from seed + i, so a
// failing seed reproduces on its own.
//
//   exactly-one   solve, oracle_condition and oracle_forest_search agree for
//                 every m in 1..n, and every certificate and forest checks out.
//   density       instances meeting the density condition always solve.
//   half-bound    K_n with every color on at most floor(n/2) edges has a
//                 heterochromatic spanning tree.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "fchroma/bounds.hpp"
#include "fchroma/certificates.hpp"
#include "fchroma/generators.hpp"
#include "fchroma/graph.hpp"
#include "fchroma/solve.hpp"

namespace fchroma {

using SolverFn = std::function<SolveVerdict(const ColoredGraph&, const CapacityMap&, std::size_t)>;

inline SolveVerdict default_solver(const ColoredGraph& g, const CapacityMap& f, std::size_t m) {
  return solve(g, f, m);
}

struct InstanceShape {
  std::size_t max_n = 7;
  std::size_t max_edges = 14;
  std::size_t max_palette = 5;
  Capacity max_capacity = 3;
};

struct RandomInstance {
  ColoredGraph graph;
  CapacityMap f;
};

/// Random graph within `shape`: edges are a random subset of vertex pairs in
/// random order, colors uniform over a random palette (some colors may go
/// unused), and capacities uniform in 0..max_capacity.
inline RandomInstance random_instance(std::uint64_t seed, const InstanceShape& shape) {
  Rng rng(seed);
  const auto n = static_cast<std::size_t>(rng.between(1, std::max<std::size_t>(1, shape.max_n)));
  std::vector<std::pair<Vertex, Vertex>> pairs = detail::all_pairs(n);
  rng.shuffle(pairs);
  const auto edge_count = static_cast<std::size_t>(
      rng.between(0, std::min<std::size_t>(shape.max_edges, pairs.size())));
  pairs.resize(edge_count);
  const auto palette = static_cast<std::size_t>(rng.between(1, std::max<std::size_t>(1, shape.max_palette)));

  std::vector<EdgeSpec> edges;
  for (auto [u, v] : pairs) {
    if (rng.below(2) == 1) std::swap(u, v);
    edges.push_back({u, v, color_token(rng.below(palette))});
  }
  std::vector<std::string> declared;
  CapacityMap f;
  for (std::size_t c = 0; c < palette; ++c) {
    declared.push_back(color_token(c));
    f.set(color_token(c), static_cast<Capacity>(rng.between(0, static_cast<std::uint64_t>(shape.max_capacity))));
  }
  return RandomInstance{ColoredGraph(n, edges, declared), std::move(f)};
}

struct DenseInstance {
  ColoredGraph graph;
  CapacityMap f;
  std::size_t m;
};

/// Random instance meeting the density condition: a dense graph, an m with
/// |E| > C(n-m, 2), and for each color the least capacity with
/// g(c) * (n-m) <= |E| * f(c), occasionally plus one.
inline DenseInstance dense_instance(std::uint64_t seed, std::size_t max_n, std::size_t max_palette) {
  Rng rng(seed);
  const auto n = static_cast<std::size_t>(rng.between(2, std::max<std::size_t>(2, max_n)));
  GenSpec spec;
  spec.seed = rng.next();
  spec.n = n;
  spec.model = RandomGnp{0.5 + 0.5 * rng.unit()};
  spec.coloring = UniformColoring{static_cast<std::size_t>(rng.between(1, std::max<std::size_t>(1, max_palette)))};
  ColoredGraph g = generate(spec);
  if (g.size() == 0) {
    spec.model = Complete{};
    g = generate(spec);
  }
  std::vector<std::size_t> candidates;
  for (std::size_t m = 1; m < n; ++m) {
    if (g.size() > binomial2(n - m)) candidates.push_back(m);
  }
  const auto m = candidates[rng.below(candidates.size())];
  CapacityMap f;
  for (const auto& [c, count] : color_census(g)) {
    const auto need = (count * (n - m) + g.size() - 1) / g.size();
    f.set(g.color_name(c), static_cast<Capacity>(need + (rng.below(4) == 0 ? 1 : 0)));
  }
  return DenseInstance{std::move(g), std::move(f), m};
}

/// K_n colored so that no color covers more than floor(n/2) edges; the
/// palette size is random between the minimum feasible and |E|.
inline ColoredGraph half_bounded_complete(std::uint64_t seed, std::size_t n) {
  Rng rng(seed);
  const std::size_t edges = binomial2(n);
  const std::size_t k = n / 2;
  const std::size_t min_palette = (edges + k - 1) / k;
  GenSpec spec;
  spec.n = n;
  spec.model = Complete{};
  spec.coloring = KBoundedColoring{k, static_cast<std::size_t>(rng.between(min_palette, edges))};
  spec.seed = rng.next();
  return generate(spec);
}

struct LawResult {
  explicit LawResult(std::string law) : name(std::move(law)) {}

  std::string name;
  std::size_t passed = 0;
  std::size_t checked = 0;
  std::optional<std::uint64_t> first_failing_seed;
  std::string failure;

  bool ok() const { return passed == checked; }

  void record(std::uint64_t seed, const std::string& problem) {
    ++checked;
    if (problem.empty()) {
      ++passed;
    } else if (!first_failing_seed || seed < *first_failing_seed) {
      first_failing_seed = seed;
      failure = problem;
    }
  }
};

struct SweepConfig {
  std::size_t count = 500;
  std::uint64_t seed = 1;
  InstanceShape shape;
};

struct SweepSummary {
  std::vector<LawResult> laws;

  bool ok() const {
    return std::all_of(laws.begin(), laws.end(), [](const LawResult& r) { return r.ok(); });
  }
  int exit_code() const { return ok() ? 0 : 3; }
};

/// Empty string when the three deciders agree on (g, f, m) and their outputs
/// verify; otherwise a description of the first problem.
inline std::string check_exactly_one(const ColoredGraph& g, const CapacityMap& f, std::size_t m,
                                     const SolverFn& solver, const OracleLimits& limits = {}) {
  try {
    const auto verdict = solver(g, f, m);
    const auto violator = oracle_condition(g, f, m, limits);
    const auto witness = oracle_forest_search(g, f, m, limits);
    const std::string where = " at m=" + std::to_string(m);
    if (verdict.found() != !violator.has_value() || verdict.found() != witness.has_value()) {
      return "deciders disagree" + where + " (solve " + (verdict.found() ? "found" : "impossible") +
             ", condition " + (violator ? "violated" : "holds") + ", search " +
             (witness ? "found" : "none") + ")";
    }
    const auto caps = resolve_capacities(g, f);
    if (verdict.found()) {
      const auto& forest = verdict.forest();
      if (!forest.hosted_by(g) || forest.omega() != m || !is_f_chromatic(forest, caps)) {
        return "invalid forest" + where;
      }
    } else {
      const auto& cert = verdict.certificate();
      const auto measured = omega_without(g, cert.violating());
      if (static_cast<Capacity>(measured) < static_cast<Capacity>(m) + 1 + capacity_sum(cert.violating(), caps)) {
        return "certificate does not violate the condition" + where;
      }
    }
    return {};
  } catch (const std::exception& ex) {
    return std::string("exception: ") + ex.what();
  }
}

inline SweepSummary run_sweep(const SweepConfig& config, const SolverFn& solver = default_solver) {
  LawResult exactly_one{"exactly-one"};
  LawResult density{"density"};
  LawResult half_bound{"half-bound"};
  const std::size_t half_bound_max_n = std::max<std::size_t>(4, std::min<std::size_t>(config.shape.max_n, 9));

  for (std::size_t i = 0; i < config.count; ++i) {
    const std::uint64_t seed = config.seed + i;

    {
      const auto inst = random_instance(seed, config.shape);
      std::string problem;
      for (std::size_t m = 1; m <= inst.graph.order() && problem.empty(); ++m) {
        problem = check_exactly_one(inst.graph, inst.f, m, solver);
      }
      exactly_one.record(seed, problem);
    }

    {
      std::string problem;
      try {
        const auto inst = dense_instance(seed, config.shape.max_n, config.shape.max_palette);
        if (!density_sufficient(inst.graph, inst.f, inst.m).guaranteed) {
          problem = "generated instance misses the density condition";
        } else if (!solver(inst.graph, inst.f, inst.m).found()) {
          problem = "dense instance has no forest at m=" + std::to_string(inst.m);
        }
      } catch (const std::exception& ex) {
        problem = std::string("exception: ") + ex.what();
      }
      density.record(seed, problem);
    }

    {
      std::string problem;
      try {
        const std::size_t n = 4 + static_cast<std::size_t>(Rng(seed).below(half_bound_max_n - 3));
        const auto g = half_bounded_complete(seed, n);
        if (!solver(g, CapacityMap::uniform(1), 1).found()) {
          problem = "K_" + std::to_string(n) + " has no heterochromatic spanning tree";
        }
      } catch (const std::exception& ex) {
        problem = std::string("exception: ") + ex.what();
      }
      half_bound.record(seed, problem);
    }
  }
  return SweepSummary{{exactly_one, density, half_bound}};
}

inline void write_sweep_summary(std::ostream& out, const SweepSummary& summary) {
  for (const auto& law : summary.laws) {
    out << law.name << ": " << law.passed << "/" << law.checked;
    if (law.first_failing_seed) {
      out << "  FAIL seed=" << *law.first_failing_seed << " (" << law.failure << ")";
    }
    out << '\n';
  }
  out << (summary.ok() ? "PASS" : "FAIL") << '\n';
}

}  // namespace fchroma

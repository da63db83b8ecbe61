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

#include "fchroma/solve.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "fchroma/generators.hpp"
#include "fchroma/sweep.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace fchroma {
namespace {

using testing::caps;
using testing::color_set;

TEST(SolveTest, TriangleHasRainbowTree) {
  const auto g = testing::triangle();
  const auto verdict = solve(g, CapacityMap::uniform(1), 1);
  ASSERT_TRUE(verdict.found());
  EXPECT_EQ(verdict.forest().size(), 2u);
  EXPECT_EQ(verdict.forest().colors().size(), 2u);
}

TEST(SolveTest, MonochromePathIsImpossible) {
  const auto g = testing::path3("a", "a");
  const auto verdict = solve(g, caps({{"a", 1}}), 1);
  ASSERT_FALSE(verdict.found());
  EXPECT_EQ(verdict.certificate().violating(), color_set(g, {"a"}));
  EXPECT_EQ(verdict.certificate().omega_measured(), 3u);
  EXPECT_EQ(verdict.certificate().bound(), 2);
}

TEST(SolveTest, FourCycleTwoComponents) {
  const auto g = testing::four_cycle_aabb();
  // Size-2 forests with one edge of each color, by enumeration.
  std::size_t valid = 0;
  for (std::uint64_t s = 0; s < 16; ++s) {
    if (__builtin_popcountll(s) == 2 && testing::is_chromatic_forest(g, CapacityMap::uniform(1), s)) ++valid;
  }
  EXPECT_EQ(valid, 4u);
  const auto verdict = solve(g, CapacityMap::uniform(1), 2);
  ASSERT_TRUE(verdict.found());
  EXPECT_EQ(verdict.forest().omega(), 2u);
  EXPECT_EQ(verdict.forest().color_counts(), (std::vector<std::size_t>{1, 1}));
}

TEST(SolveTest, EveryVertexItsOwnComponent) {
  const auto g = testing::path3("a", "a");
  const auto verdict = solve(g, caps({{"a", 0}}), 3);
  ASSERT_TRUE(verdict.found());
  EXPECT_EQ(verdict.forest().size(), 0u);
}

TEST(SolveTest, RangeAndCapacityErrors) {
  const auto g = testing::triangle();
  EXPECT_THROW(solve(g, CapacityMap::uniform(1), 0), PreconditionError);
  EXPECT_THROW(solve(g, CapacityMap::uniform(1), 4), PreconditionError);
  EXPECT_THROW(solve(g, caps({{"a", 1}}), 1), CapacityError);
}

TEST(ExactProfileTest, TriangleProfile) {
  const auto g = testing::triangle();
  // Of the three spanning trees of K3 exactly one avoids c.
  std::size_t matching = 0;
  for (std::uint64_t s : {0b011u, 0b101u, 0b110u}) {
    if (testing::is_chromatic_forest(g, caps({{"a", 1}, {"b", 1}, {"c", 0}}), s)) ++matching;
  }
  EXPECT_EQ(matching, 1u);
  const auto verdict = exact_profile_forest(g, caps({{"a", 1}, {"b", 1}, {"c", 0}}), 1);
  ASSERT_TRUE(verdict.found());
  EXPECT_EQ(verdict.forest().color_counts(), (std::vector<std::size_t>{1, 1, 0}));
}

TEST(ExactProfileTest, PathAndStar) {
  const auto path = testing::path3("a", "b");
  const auto a = exact_profile_forest(path, caps({{"a", 1}, {"b", 1}}), 1);
  ASSERT_TRUE(a.found());
  EXPECT_EQ(a.forest().size(), 2u);

  const auto star = testing::star3_mono();
  const auto b = exact_profile_forest(star, caps({{"a", 2}}), 2);
  ASSERT_TRUE(b.found());
  EXPECT_EQ(b.forest().color_counts(), (std::vector<std::size_t>{2}));
}

TEST(ExactProfileTest, RejectsWrongTotal) {
  EXPECT_THROW(exact_profile_forest(testing::triangle(), CapacityMap::uniform(1), 1),
               PreconditionError);
}

TEST(ExactProfileTest, RandomProfilesAreMetExactly) {
  std::size_t found = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Rng rng(seed);
    const auto inst = random_instance(seed, {7, 14, 4, 3});
    const auto& g = inst.graph;
    const auto m = static_cast<std::size_t>(rng.between(1, g.order()));
    // spread n - m units over the palette
    std::vector<Capacity> profile(g.palette_size(), 0);
    for (std::size_t unit = 0; unit < g.order() - m; ++unit) ++profile[rng.below(profile.size())];
    CapacityMap f;
    for (std::size_t c = 0; c < profile.size(); ++c) f.set(g.palette()[c], profile[c]);
    const auto verdict = exact_profile_forest(g, f, m);
    EXPECT_EQ(verdict.found(), testing::brute_condition_holds(g, f, m)) << "seed " << seed;
    if (verdict.found()) {
      ++found;
      const auto counts = verdict.forest().color_counts();
      for (std::size_t c = 0; c < counts.size(); ++c) EXPECT_EQ(static_cast<Capacity>(counts[c]), profile[c]);
    }
  }
  EXPECT_GT(found, 20u);
}

TEST(SolvePropertyTest, MonotoneInMAndF) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto inst = random_instance(seed, {7, 14, 5, 3});
    const auto& g = inst.graph;
    bool found_before = false;
    CapacityMap bigger;
    Rng rng(seed * 31 + 5);
    for (const auto& [color, cap] : inst.f.assignments()) bigger.set(color, cap + static_cast<Capacity>(rng.below(3)));
    for (std::size_t m = 1; m <= g.order(); ++m) {
      const bool found = solve(g, inst.f, m).found();
      if (found_before) {
        EXPECT_TRUE(found) << "seed " << seed << " m " << m;
      }
      found_before = found_before || found;
      if (found) {
        EXPECT_TRUE(solve(g, bigger, m).found()) << "seed " << seed << " m " << m;
      }
    }
  }
}

// f = 1, m = 1 on connected graphs: rainbow spanning tree iff
// omega(G - E_R) <= |R| + 1 for every R.
TEST(HeterochromaticTest, RainbowSpanningTreeCriterion) {
  std::size_t connected = 0;
  for (std::uint64_t seed = 0; seed < 600; ++seed) {
    const auto inst = random_instance(seed, {7, 14, 6, 1});
    const auto& g = inst.graph;
    if (omega(g) != 1) continue;
    ++connected;
    bool criterion = true;
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << g.palette_size()); ++r) {
      const auto w = testing::count_components(g, testing::edges_avoiding(g, r));
      if (w > static_cast<std::size_t>(__builtin_popcountll(r)) + 1) criterion = false;
    }
    EXPECT_EQ(solve(g, CapacityMap::uniform(1), 1).found(), criterion) << "seed " << seed;
  }
  EXPECT_GT(connected, 50u);
}

// f = 1, m = n - k on connected graphs: rainbow forest with k edges iff
// omega(G - E_R) <= n - k + |R| for every R.
TEST(HeterochromaticTest, RainbowForestWithKEdges) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto inst = random_instance(seed, {7, 14, 6, 1});
    const auto& g = inst.graph;
    if (g.order() < 2 || omega(g) != 1) continue;
    for (std::size_t k = 1; k < g.order(); ++k) {
      bool criterion = true;
      for (std::uint64_t r = 0; r < (std::uint64_t{1} << g.palette_size()); ++r) {
        const auto w = testing::count_components(g, testing::edges_avoiding(g, r));
        if (w > g.order() - k + static_cast<std::size_t>(__builtin_popcountll(r))) criterion = false;
      }
      EXPECT_EQ(solve(g, CapacityMap::uniform(1), g.order() - k).found(), criterion);
    }
  }
}

TEST(HeterochromaticTest, HalfBoundedCompleteGraphs) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    for (std::size_t n = 2; n <= 9; ++n) {
      GenSpec spec;
      spec.seed = seed;
      spec.n = n;
      spec.model = Complete{};
      const std::size_t k = n / 2;
      spec.coloring = KBoundedColoring{k, (n * (n - 1) / 2 + k - 1) / k};
      const auto g = generate(spec);
      EXPECT_TRUE(solve(g, CapacityMap::uniform(1), 1).found()) << "n " << n << " seed " << seed;
    }
  }
}

TEST(HeterochromaticTest, FactorizedCompleteGraphsHaveRainbowTrees) {
  for (std::size_t n = 2; n <= 12; n += 2) {
    GenSpec spec;
    spec.n = n;
    spec.model = CompleteFactorized{};
    const auto g = generate(spec);
    const auto verdict = solve(g, CapacityMap::uniform(1), 1);
    ASSERT_TRUE(verdict.found()) << "n " << n;
    EXPECT_EQ(verdict.forest().colors().size(), n - 1);
  }
}

// K4 colored with only two colors (a star and a triangle) cannot carry a
// 3-edge rainbow tree; only removing both colors exposes it.
TEST(HeterochromaticTest, TwoColorsCannotSpanK4) {
  ColoredGraph g(4, {{0, 1, "x"}, {0, 2, "x"}, {0, 3, "x"}, {1, 2, "y"}, {1, 3, "y"}, {2, 3, "y"}});
  const auto verdict = solve(g, CapacityMap::uniform(1), 1);
  ASSERT_FALSE(verdict.found());
  EXPECT_EQ(verdict.certificate().violating(), color_set(g, {"x", "y"}));
}

}  // namespace
}  // namespace fchroma

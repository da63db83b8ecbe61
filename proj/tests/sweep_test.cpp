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

#include "fchroma/sweep.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace fchroma {
namespace {

TEST(SweepTest, EmptySweepIsVacuouslyGreen) {
  SweepConfig config;
  config.count = 0;
  const auto summary = run_sweep(config);
  EXPECT_TRUE(summary.ok());
  EXPECT_EQ(summary.exit_code(), 0);
  for (const auto& law : summary.laws) EXPECT_EQ(law.checked, 0u);
}

TEST(SweepTest, SmallSweepPasses) {
  SweepConfig config;
  config.count = 200;
  const auto summary = run_sweep(config);
  std::ostringstream out;
  write_sweep_summary(out, summary);
  EXPECT_TRUE(summary.ok()) << out.str();
  EXPECT_NE(out.str().find("exactly-one: 200/200"), std::string::npos);
}

// Negative control: a solver that always claims a forest exists.
TEST(SweepTest, CorruptedSolverIsCaught) {
  SweepConfig config;
  config.count = 100;
  const SolverFn liar = [](const ColoredGraph& g, const CapacityMap&, std::size_t) {
    return SolveVerdict(Forest::empty(g));
  };
  const auto summary = run_sweep(config, liar);
  EXPECT_FALSE(summary.ok());
  EXPECT_EQ(summary.exit_code(), 3);
  ASSERT_TRUE(summary.laws[0].first_failing_seed.has_value());
  // the reported seed really fails on its own
  const auto seed = *summary.laws[0].first_failing_seed;
  const auto inst = random_instance(seed, config.shape);
  bool fails = false;
  for (std::size_t m = 1; m <= inst.graph.order(); ++m) {
    fails = fails || !check_exactly_one(inst.graph, inst.f, m, liar).empty();
  }
  EXPECT_TRUE(fails);
}

// Right decisions, wrong forests: skipping the prune step.
TEST(SweepTest, UnprunedForestIsCaught) {
  SweepConfig config;
  config.count = 50;
  const SolverFn unpruned = [](const ColoredGraph& g, const CapacityMap& f, std::size_t m) {
    auto verdict = solve(g, f, m);
    if (!verdict.found()) return verdict;
    return SolveVerdict(maximize_forest(g, f));
  };
  const auto summary = run_sweep(config, unpruned);
  EXPECT_FALSE(summary.laws[0].ok());
  EXPECT_NE(summary.laws[0].failure.find("invalid forest"), std::string::npos);
}

}  // namespace
}  // namespace fchroma

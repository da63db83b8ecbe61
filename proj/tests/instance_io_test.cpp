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

#include "fchroma/instance_io.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "fchroma/report.hpp"
#include "fchroma/solve.hpp"
#include "fchroma/sweep.hpp"
#include "support/fixtures.hpp"

namespace fchroma {
namespace {

Instance parse(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in, "test");
}

std::size_t error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(ParseInstanceTest, ReadsAllDirectives) {
  const auto inst = parse(
      "# a path\n"
      "graph 3\n"
      "\n"
      "e 0 1 red\n"
      "  e 1 2 blue   \n"
      "f red 1\n"
      "f green 0\n"
      "fdefault 2\n");
  const auto& g = inst.graph;
  EXPECT_EQ(g.order(), 3u);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g.color_name(g.edge(1).color), "blue");
  EXPECT_EQ(g.palette_size(), 3u);  // green is declared by its capacity line
  EXPECT_EQ(inst.capacities.at("red"), 1);
  EXPECT_EQ(inst.capacities.at("blue"), 2);
  EXPECT_EQ(inst.capacities.at("green"), 0);
}

TEST(ParseInstanceTest, CapacityLinesMayPrecedeHeader) {
  const auto inst = parse("f a 1\ngraph 2\ne 0 1 a\n");
  EXPECT_EQ(inst.capacities.at("a"), 1);
}

TEST(ParseInstanceTest, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("e 0 1 a\ngraph 2\n"), 1u);
  EXPECT_EQ(error_line("graph 2\ngraph 3\n"), 2u);
  EXPECT_EQ(error_line("graph 3\ne 0 1 a\ne 1 0 b\n"), 3u);
  EXPECT_EQ(error_line("graph 3\ne 1 1 a\n"), 2u);
  EXPECT_EQ(error_line("graph 3\ne 0 3 a\n"), 2u);
  EXPECT_EQ(error_line("graph 3\ne 0 x a\n"), 2u);
  EXPECT_EQ(error_line("graph 3\ne 0 1\n"), 2u);
  EXPECT_EQ(error_line("graph 3\nf a 1\nf a 2\n"), 3u);
  EXPECT_EQ(error_line("graph 3\nfdefault 1\n# c\nfdefault 2\n"), 4u);
  EXPECT_EQ(error_line("graph 3\nf a -1\n"), 2u);
  EXPECT_EQ(error_line("graph 3\nvertex 1\n"), 2u);
  EXPECT_THROW(parse("# nothing\n"), ParseError);
}

TEST(ParseCapacitiesTest, OnlyCapacityDirectives) {
  std::istringstream ok("# caps\nf a 2\nfdefault 0\n");
  const auto caps = parse_capacities(ok);
  EXPECT_EQ(caps.at("a"), 2);
  EXPECT_EQ(caps.at("zzz"), 0);
  std::istringstream bad("f a 2\ne 0 1 a\n");
  EXPECT_THROW(parse_capacities(bad), ParseError);
}

TEST(MergeCapacitiesTest, SidecarOverInlineOverDefault) {
  CapacityMap inline_caps = testing::caps({{"a", 1}, {"b", 1}});
  inline_caps.set_default(5);
  CapacityMap sidecar = testing::caps({{"b", 7}});
  const auto merged = merge_capacities(inline_caps, sidecar);
  EXPECT_EQ(merged.at("a"), 1);
  EXPECT_EQ(merged.at("b"), 7);
  EXPECT_EQ(merged.at("c"), 5);
  sidecar.set_default(9);
  EXPECT_EQ(merge_capacities(inline_caps, sidecar).at("c"), 9);
  EXPECT_EQ(merge_capacities(inline_caps, std::nullopt), inline_caps);
}

// emit(parse(x)) reparses to the same graph and capacities.
TEST(InstanceRoundTripTest, RandomInstances) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto inst = random_instance(seed, {9, 20, 6, 4});
    std::ostringstream out;
    write_instance(out, inst.graph, inst.f, "seed " + std::to_string(seed));
    const auto back = parse(out.str());
    ASSERT_EQ(back.graph.order(), inst.graph.order());
    ASSERT_EQ(back.graph.size(), inst.graph.size());
    for (std::size_t i = 0; i < inst.graph.size(); ++i) {
      EXPECT_EQ(back.graph.edge(i), inst.graph.edge(i));
    }
    EXPECT_EQ(std::vector<std::string>(back.graph.palette().begin(), back.graph.palette().end()),
              std::vector<std::string>(inst.graph.palette().begin(), inst.graph.palette().end()));
    EXPECT_EQ(back.capacities, inst.f);
    std::ostringstream again;
    write_instance(again, back.graph, back.capacities, "seed " + std::to_string(seed));
    EXPECT_EQ(again.str(), out.str());
  }
}

TEST(VerdictJsonTest, FoundShape) {
  const auto g = testing::triangle();
  const auto verdict = solve(g, CapacityMap::uniform(1), 1);
  const auto json = verdict_json(g, verdict, 1);
  EXPECT_EQ(json["exists"], true);
  EXPECT_EQ(json["components"], 1);
  EXPECT_EQ(json["forest"].size(), 2u);
  EXPECT_EQ(json["color_counts"].size(), 3u);
  EXPECT_EQ(nlohmann::json::parse(json.dump()), json);
}

TEST(VerdictJsonTest, ImpossibleShape) {
  const auto g = testing::path3("a", "a");
  const auto verdict = solve(g, testing::caps({{"a", 1}}), 1);
  const auto json = verdict_json(g, verdict, 1);
  EXPECT_EQ(json["exists"], false);
  EXPECT_EQ(json["violating_colors"], nlohmann::json::array({"a"}));
  EXPECT_EQ(json["omega"], 3);
  EXPECT_EQ(json["bound"], 2);
}

TEST(DotTest, MarksForestEdges) {
  const auto g = testing::path3("a", "b");
  const Forest forest(g, {0});
  std::ostringstream out;
  write_dot(out, g, &forest);
  EXPECT_NE(out.str().find("0 -- 1 [label=\"a\", style=bold]"), std::string::npos);
  EXPECT_NE(out.str().find("1 -- 2 [label=\"b\", style=dashed]"), std::string::npos);
}

}  // namespace
}  // namespace fchroma

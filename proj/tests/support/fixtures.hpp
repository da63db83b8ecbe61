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

#include <initializer_list>
#include <string>
#include <utility>

#include "fchroma/graph.hpp"

namespace fchroma::testing {

/// K3 with colors a, b, c.
inline ColoredGraph triangle() { return ColoredGraph(3, {{0, 1, "a"}, {1, 2, "b"}, {0, 2, "c"}}); }

/// Path 0-1-2 with both edges colored `first` and `second`.
inline ColoredGraph path3(const std::string& first, const std::string& second) {
  return ColoredGraph(3, {{0, 1, first}, {1, 2, second}});
}

/// 4-cycle e0=(0,1) e1=(1,2) e2=(2,3) e3=(3,0) colored a, a, b, b.
inline ColoredGraph four_cycle_aabb() {
  return ColoredGraph(4, {{0, 1, "a"}, {1, 2, "a"}, {2, 3, "b"}, {3, 0, "b"}});
}

/// 4-cycle with the two a-edges on opposite sides: a, b, a, b.
inline ColoredGraph four_cycle_abab() {
  return ColoredGraph(4, {{0, 1, "a"}, {1, 2, "b"}, {2, 3, "a"}, {3, 0, "b"}});
}

/// Star K_{1,3} centered at 0, every edge colored a.
inline ColoredGraph star3_mono() { return ColoredGraph(4, {{0, 1, "a"}, {0, 2, "a"}, {0, 3, "a"}}); }

inline CapacityMap caps(std::initializer_list<std::pair<std::string, Capacity>> entries) {
  CapacityMap f;
  for (const auto& [color, cap] : entries) f.set(color, cap);
  return f;
}

inline ColorSet color_set(const ColoredGraph& g, std::initializer_list<std::string> tokens) {
  ColorSet out;
  for (const auto& t : tokens) out.insert(g.color_id(t));
  return out;
}

}  // namespace fchroma::testing

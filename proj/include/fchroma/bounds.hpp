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

// Edge-count bound for graphs with a given number of components, and the
// density condition that guarantees an f-chromatic spanning forest with m
// components:
//
//     |E(G)| > C(n-m, 2)   and   g(c) <= |E(G)| / (n-m) * f(c) for all c,
//
// where g(c) is the number of edges of color c. Everything is exact.

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <ostream>
#include <string>

#include "fchroma/error.hpp"
#include "fchroma/graph.hpp"

namespace fchroma {

/// Exact non-negative-denominator fraction in lowest terms.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
    if (den_ == 0) throw PreconditionError("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const auto g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  constexpr std::int64_t numerator() const { return num_; }
  constexpr std::int64_t denominator() const { return den_; }

  friend constexpr bool operator==(const Rational&, const Rational&) = default;
  friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }

  std::string to_string() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline std::uint64_t binomial2(std::uint64_t k) { return k < 2 ? 0 : k * (k - 1) / 2; }

/// Largest edge count of a simple graph of order n with s components:
/// C(n - s + 1, 2), reached by one clique plus s - 1 isolated vertices.
inline std::uint64_t max_edges_for_components(std::size_t n, std::size_t s) {
  if (s < 1 || s > n) {
    throw PreconditionError("component count " + std::to_string(s) + " outside 1.." +
                            std::to_string(n));
  }
  return binomial2(n - s + 1);
}

struct ColorDensity {
  std::size_t count = 0;   // g(c), observed on the graph
  Rational cap_bound;      // |E| / (n - m) * f(c)
  bool ok = false;         // count <= cap_bound
};

struct DensityReport {
  std::size_t edge_count = 0;
  std::uint64_t threshold = 0;  // C(n - m, 2)
  Rational ratio;               // |E| / (n - m)
  std::map<ColorId, ColorDensity> per_color;
  bool guaranteed = false;
};

namespace detail {

inline void require_density_target(std::size_t n, std::size_t m) {
  if (n < 2 || m < 1 || m > n - 1) {
    throw PreconditionError("density bounds need 1 <= m <= n-1 (n=" + std::to_string(n) +
                            ", m=" + std::to_string(m) + ")");
  }
}

}  // namespace detail

/// Evaluates the density condition for g with g(c) taken from its color
/// census. guaranteed=true means an m-component f-chromatic spanning forest
/// exists; false says nothing either way.
inline DensityReport density_sufficient(const ColoredGraph& g, const CapacityMap& f,
                                        std::size_t m) {
  const auto n = g.order();
  detail::require_density_target(n, m);
  DensityReport report;
  report.edge_count = g.size();
  report.threshold = binomial2(n - m);
  report.ratio = Rational(static_cast<std::int64_t>(g.size()), static_cast<std::int64_t>(n - m));
  bool all_ok = true;
  for (const auto& [c, count] : color_census(g)) {
    const auto cap = f.at(g.color_name(c));
    ColorDensity d;
    d.count = count;
    d.cap_bound = report.ratio * Rational(cap);
    // count * (n - m) <= |E| * f(c)
    d.ok = static_cast<__int128>(count) * (n - m) <= static_cast<__int128>(g.size()) * cap;
    all_ok = all_ok && d.ok;
    report.per_color.emplace(c, d);
  }
  report.guaranteed = report.edge_count > report.threshold && all_ok;
  return report;
}

/// n(n-1) / (2(n-m)): the per-unit-capacity color bound for complete graphs.
inline Rational complete_graph_threshold(std::size_t n, std::size_t m) {
  detail::require_density_target(n, m);
  return Rational(static_cast<std::int64_t>(n * (n - 1)), static_cast<std::int64_t>(2 * (n - m)));
}

}  // namespace fchroma

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

// fchroma: decide, construct and certify f-chromatic spanning forests.
//
// Exit codes: 0 found / holds / agree / pass, 1 impossible / violated,
// 2 input error, 3 internal disagreement or failed sweep.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fchroma/bounds.hpp"
#include "fchroma/certificates.hpp"
#include "fchroma/error.hpp"
#include "fchroma/generators.hpp"
#include "fchroma/instance_io.hpp"
#include "fchroma/report.hpp"
#include "fchroma/solve.hpp"
#include "fchroma/sweep.hpp"

namespace {

constexpr int kExitFound = 0;
constexpr int kExitImpossible = 1;
constexpr int kExitInputError = 2;
constexpr int kExitDisagree = 3;

struct InstanceArgs {
  std::string path;
  std::size_t m = 1;
  std::string caps_path;
  bool json = false;

  void add_to(CLI::App& cmd) {
    cmd.add_option("instance", path, "Instance file")->required();
    cmd.add_option("-m,--m", m, "Number of components")->capture_default_str();
    cmd.add_option("--caps", caps_path, "Capacity file (overrides inline capacities)");
    cmd.add_flag("--json", json, "Print JSON instead of text");
  }
};

struct Loaded {
  fchroma::Instance instance;
  fchroma::CapacityMap f;
};

Loaded load(const InstanceArgs& args) {
  auto instance = fchroma::load_instance(args.path);
  std::optional<fchroma::CapacityMap> sidecar;
  if (!args.caps_path.empty()) sidecar = fchroma::load_capacities(args.caps_path);
  auto f = fchroma::merge_capacities(instance.capacities, sidecar);
  return Loaded{std::move(instance), std::move(f)};
}

int cmd_solve(const InstanceArgs& args, bool exact_profile, const std::string& dot_path) {
  const auto loaded = load(args);
  const auto& g = loaded.instance.graph;
  const auto verdict = exact_profile ? fchroma::exact_profile_forest(g, loaded.f, args.m)
                                     : fchroma::solve(g, loaded.f, args.m);
  if (args.json) {
    std::cout << fchroma::verdict_json(g, verdict, args.m).dump(2) << '\n';
  } else {
    fchroma::write_verdict_text(std::cout, g, verdict, args.m);
  }
  if (!dot_path.empty()) {
    std::ofstream dot(dot_path);
    if (!dot) throw fchroma::InputError("cannot write '" + dot_path + "'");
    fchroma::write_dot(dot, g, verdict.found() ? &verdict.forest() : nullptr);
  }
  return verdict.found() ? kExitFound : kExitImpossible;
}

int cmd_certify(const InstanceArgs& args, const std::vector<std::string>& tokens) {
  const auto loaded = load(args);
  const auto& g = loaded.instance.graph;
  if (args.m < 1 || args.m > g.order()) throw fchroma::PreconditionError("m outside 1..n");
  fchroma::ColorSet r;
  for (const auto& t : tokens) r.insert(g.color_id(t));
  const auto caps = fchroma::resolve_capacities(g, loaded.f);
  const auto measured = fchroma::omega_without(g, r);
  const auto bound = static_cast<fchroma::Capacity>(args.m) + fchroma::capacity_sum(r, caps);
  const bool holds = static_cast<fchroma::Capacity>(measured) <= bound;
  if (args.json) {
    nlohmann::json out;
    out["colors"] = fchroma::color_list_json(g, r);
    out["omega"] = measured;
    out["bound"] = bound;
    out["holds"] = holds;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "R = " << fchroma::color_list_text(g, r) << '\n'
              << "omega(G - E_R) = " << measured << '\n'
              << "m + sum f(R) = " << bound << '\n'
              << (holds ? "holds" : "violated") << '\n';
  }
  return holds ? kExitFound : kExitImpossible;
}

int cmd_oracle(const InstanceArgs& args) {
  const auto loaded = load(args);
  const auto& g = loaded.instance.graph;
  const auto& f = loaded.f;
  const auto verdict = fchroma::solve(g, f, args.m);
  const auto violator = fchroma::oracle_condition(g, f, args.m);
  const auto witness = fchroma::oracle_forest_search(g, f, args.m);
  const auto problem = fchroma::check_exactly_one(g, f, args.m, fchroma::default_solver);
  const bool agree = problem.empty();

  if (args.json) {
    nlohmann::json out;
    out["verdict"] = fchroma::verdict_json(g, verdict, args.m);
    out["condition_violator"] =
        violator ? fchroma::color_list_json(g, violator->violating()) : nlohmann::json(nullptr);
    out["search_forest"] = witness ? fchroma::forest_json(*witness) : nlohmann::json(nullptr);
    out["agree"] = agree;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "solve: " << (verdict.found() ? "found" : "impossible") << '\n'
              << "condition: "
              << (violator ? "violated by R = " + fchroma::color_list_text(g, violator->violating())
                           : std::string("holds for every R"))
              << '\n'
              << "search: " << (witness ? "found" : "none") << '\n'
              << (agree ? "AGREE" : "DISAGREE: " + problem) << '\n'
              << "exists: " << (verdict.found() ? "yes" : "no") << '\n';
  }
  return agree ? kExitFound : kExitDisagree;
}

struct GenArgs {
  std::string model = "gnp";
  std::size_t n = 0;
  double p = 0.5;
  std::size_t colors = 1;
  std::optional<std::size_t> k;
  std::uint64_t seed = 0;
  std::optional<fchroma::Capacity> fdefault;
  std::string out;
};

int cmd_gen(const GenArgs& args) {
  fchroma::GenSpec spec;
  spec.seed = args.seed;
  spec.n = args.n;
  std::ostringstream comment;
  comment << "fchroma gen --model " << args.model << " --n " << args.n;
  if (args.model == "gnp") {
    spec.model = fchroma::RandomGnp{args.p};
    comment << " --p " << args.p;
  } else if (args.model == "complete") {
    spec.model = fchroma::Complete{};
  } else {
    spec.model = fchroma::CompleteFactorized{};
  }
  if (args.k) {
    spec.coloring = fchroma::KBoundedColoring{*args.k, args.colors};
  } else {
    spec.coloring = fchroma::UniformColoring{args.colors};
  }
  if (args.model != "complete-factorized") {
    comment << " --colors " << args.colors;
    if (args.k) comment << " --k " << *args.k;
  }
  comment << " --seed " << args.seed;

  const auto g = fchroma::generate(spec);
  fchroma::CapacityMap caps;
  if (args.fdefault) caps.set_default(*args.fdefault);
  if (args.out.empty()) {
    fchroma::write_instance(std::cout, g, caps, comment.str());
  } else {
    std::ofstream file(args.out);
    if (!file) throw fchroma::InputError("cannot write '" + args.out + "'");
    fchroma::write_instance(file, g, caps, comment.str());
  }
  return kExitFound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide, construct and certify f-chromatic spanning forests"};
  app.require_subcommand(1);

  InstanceArgs solve_args;
  bool exact_profile = false;
  std::string dot_path;
  auto* solve = app.add_subcommand("solve", "Find a spanning forest with exactly m components");
  solve_args.add_to(*solve);
  solve->add_flag("--exact-profile", exact_profile,
                  "Require capacities summing to n-m and use each color exactly f(c) times");
  solve->add_option("--dot", dot_path, "Also write the graph and forest in Graphviz format");

  InstanceArgs certify_args;
  std::vector<std::string> certify_colors;
  auto* certify = app.add_subcommand("certify", "Evaluate the condition for one color set R");
  certify_args.add_to(*certify);
  certify->add_option("--colors", certify_colors, "Colors of R (comma separated)")->delimiter(',');

  InstanceArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "Cross-check the solver against exhaustive search");
  oracle_args.add_to(*oracle);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate a seeded instance");
  gen->add_option("--model", gen_args.model, "gnp | complete | complete-factorized")
      ->check(CLI::IsMember({"gnp", "complete", "complete-factorized"}))
      ->capture_default_str();
  gen->add_option("--n", gen_args.n, "Vertex count")->required();
  gen->add_option("--p", gen_args.p, "Edge probability (gnp)")->capture_default_str();
  gen->add_option("--colors", gen_args.colors, "Palette size")->capture_default_str();
  gen->add_option("--k", gen_args.k, "Use each color on at most k edges");
  gen->add_option("--seed", gen_args.seed, "Random seed")->capture_default_str();
  gen->add_option("--fdefault", gen_args.fdefault, "Write an fdefault line");
  gen->add_option("--out", gen_args.out, "Output file (default stdout)");

  fchroma::SweepConfig sweep_config;
  auto* sweep = app.add_subcommand("sweep", "Check the solver laws on seeded random instances");
  sweep->add_option("--count", sweep_config.count, "Instances per law")->capture_default_str();
  sweep->add_option("--seed", sweep_config.seed, "First seed")->capture_default_str();
  sweep->add_option("--max-n", sweep_config.shape.max_n, "Largest vertex count")->capture_default_str();
  sweep->add_option("--max-edges", sweep_config.shape.max_edges, "Largest edge count")
      ->check(CLI::Range(0, 20))
      ->capture_default_str();
  sweep->add_option("--max-colors", sweep_config.shape.max_palette, "Largest palette")
      ->check(CLI::Range(1, 16))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (*solve) return cmd_solve(solve_args, exact_profile, dot_path);
    if (*certify) return cmd_certify(certify_args, certify_colors);
    if (*oracle) return cmd_oracle(oracle_args);
    if (*gen) return cmd_gen(gen_args);
    if (*sweep) {
      const auto summary = fchroma::run_sweep(sweep_config);
      fchroma::write_sweep_summary(std::cout, summary);
      return summary.exit_code();
    }
  } catch (const fchroma::InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitDisagree;
  } catch (const fchroma::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

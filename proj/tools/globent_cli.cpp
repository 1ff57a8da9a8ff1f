// Copyright 2026 The globent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// globent: command-line front end.
//
//   globent measure  STATE.json [--json] [--normalize]
//   globent maximize [--config FILE] [--starts N] ... [--out STATE.json] [--json]
//   globent roof     DENSITY.json [--subset 1,2] [--json]
//   globent sweep    HAMILTONIAN.json [--global-min ...] [--out FILE.csv]
//   globent fixtures NAME [--n N] [--density] [--out FILE]
//
// Exit codes: 0 success, 2 parse/config error, 3 numerical failure.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "globent/globent.hpp"
#include "globent/io.hpp"

namespace {

using namespace globent;
using nlohmann::ordered_json;

constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    io::write_file(out_path, text);
  }
}

std::string fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12f", x);
  return buf;
}

std::vector<int> parse_qubit_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("invalid qubit list '" + text + "'");
    }
  }
  if (out.empty()) throw ConfigError("empty qubit list");
  return out;
}

// ---------------------------------------------------------------------------
// measure

struct MeasureArgs {
  std::string state_path;
  bool json = false;
  bool normalize = false;
};

int cmd_measure(const MeasureArgs& a) {
  PureState state = io::state_from_text(io::read_file(a.state_path));
  const double norm = std::sqrt(state.norm_squared());
  if (!a.normalize && std::abs(norm - 1.0) > 1e-6) {
    throw NormalizationError("state norm is " + io::format_double(norm) + "; pass --normalize to rescale");
  }
  state = normalize(state);
  if (state.num_qubits() < 2) throw ConfigError("measures need at least two qubits");
  const MeasureReport rep = measure_report(state);

  if (a.json) {
    std::cout << io::report_to_json(rep).dump(2) << "\n";
    return 0;
  }
  std::cout << "n = " << state.num_qubits() << "\n";
  std::cout << "eta profile (block | eta):\n";
  for (const auto& e : rep.profile.entries) {
    std::printf("  %-16s %s\n", e.block.label().c_str(), fixed(e.eta).c_str());
  }
  std::cout << "MW  = " << fixed(rep.mw) << "\n";
  for (std::size_t m = 0; m < rep.scott.size(); ++m) {
    std::cout << "Q_" << m + 1 << " = " << fixed(rep.scott[m]) << "\n";
  }
  std::cout << "R   = " << fixed(rep.r) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// maximize

struct MaximizeArgs {
  std::string config_path;
  std::optional<int> starts;
  std::optional<int> max_iters;
  std::optional<double> tol;
  std::string slice;
  bool no_anchors = false;
  std::string out_path;
  bool json = false;
};

int cmd_maximize(const MaximizeArgs& a, std::optional<std::uint64_t> seed, int threads) {
  SearchConfig cfg;
  cfg.threads = threads;
  if (!a.config_path.empty()) cfg = io::search_config_from_text(io::read_file(a.config_path), cfg);
  if (a.starts) cfg.starts = *a.starts;
  if (a.max_iters) cfg.max_iters = *a.max_iters;
  if (a.tol) cfg.tol = *a.tol;
  if (seed) cfg.seed = *seed;
  if (a.no_anchors) cfg.anchor_starts = false;
  if (a.slice == "ghz") {
    cfg.slice = SearchSlice::GhzSlice;
  } else if (a.slice == "full") {
    cfg.slice = SearchSlice::Full;
  }
  cfg.validate();

  const SearchResult res = maximize_r(cfg);
  const MeasureReport rep = measure_report(res.best_state);

  if (!a.out_path.empty()) {
    const ordered_json extra{{"global_r", res.best_r},
                             {"symmetric_form", io::form_to_json(res.best_params)},
                             {"seed", cfg.seed},
                             {"starts", cfg.starts}};
    io::write_file(a.out_path, io::state_to_text(res.best_state, extra));
  }

  int converged = 0;
  for (const auto& s : res.trace) converged += s.converged ? 1 : 0;

  if (a.json) {
    ordered_json doc{{"best_r", res.best_r},
                     {"params", io::form_to_json(res.best_params)},
                     {"starts", res.starts},
                     {"converged_starts", converged},
                     {"seed", cfg.seed},
                     {"report", io::report_to_json(rep)}};
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  const SymmetricForm& p = res.best_params;
  std::cout << "starts = " << res.starts << " (" << converged << " converged), seed = " << cfg.seed << "\n";
  std::cout << "best R = " << fixed(res.best_r) << "\n";
  std::cout << "params: l0 = " << fixed(p.l0) << ", l1 = " << fixed(p.l1) << ", l2 = " << fixed(p.l2)
            << ", l3 = " << fixed(p.l3) << ", phi0 = " << fixed(p.phi0) << ", phi1 = " << fixed(p.phi1) << "\n";
  std::cout << "eta profile:";
  for (double v : rep.profile.values()) std::cout << " " << fixed(v);
  std::cout << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// roof

struct RoofArgs {
  std::string density_path;
  std::string subset;
  std::optional<int> starts;
  std::optional<int> max_iters;
  std::optional<int> extra_members;
  bool json = false;
};

int cmd_roof(const RoofArgs& a, std::optional<std::uint64_t> seed) {
  const DensityMatrix rho = io::density_from_text(io::read_file(a.density_path));
  rho.validate(kTolerances, true);
  if (rho.num_qubits() < 2) throw ConfigError("roof bounds need at least two qubits");
  RoofConfig cfg;
  if (a.starts) cfg.starts = *a.starts;
  if (a.max_iters) cfg.max_iters = *a.max_iters;
  if (a.extra_members) cfg.extra_members = *a.extra_members;
  if (seed) cfg.seed = *seed;
  cfg.validate();

  std::vector<RoofEntry> entries;
  const bool all = a.subset.empty() || a.subset == "all";
  if (all) {
    entries = tilde_profile(rho, cfg);
  } else {
    const QubitSubset s = QubitSubset::of(rho.num_qubits(), parse_qubit_list(a.subset));
    s.require_block();
    entries.push_back({s, s, tilde_eta(rho, s, cfg)});
  }

  double worst_residual = 0.0;
  for (const auto& e : entries) worst_residual = std::max(worst_residual, reconstruction_residual(e.bound.witness, rho));

  if (a.json) {
    ordered_json list = ordered_json::array();
    for (const auto& e : entries) {
      list.push_back({{"subset", e.block.label()},
                      {"bound", e.bound.value},
                      {"witness_members", e.bound.witness.size()},
                      {"iterations", e.bound.iterations}});
    }
    ordered_json doc{{"n", rho.num_qubits()}, {"bounds", list}, {"max_reconstruction_residual", worst_residual}};
    if (all) doc["tilde_r"] = tilde_r(entries, cfg);
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::cout << "convex-roof upper bounds (block | bound | witness members):\n";
  for (const auto& e : entries) {
    std::printf("  %-16s %s  %zu\n", e.block.label().c_str(), fixed(e.bound.value).c_str(), e.bound.witness.size());
  }
  if (all) std::cout << "tilde R = " << fixed(tilde_r(entries, cfg)) << "\n";
  std::cout << "max reconstruction residual = " << worst_residual << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepArgs {
  std::string hamiltonian_path;
  SweepSpec spec{{-0.5, 0.5, 41}, {-0.5, 0.5, 41}, 2, 1};
  std::string out_path;
};

int cmd_sweep(SweepArgs a, int threads) {
  const SpinHamiltonian h = io::hamiltonian_from_text(io::read_file(a.hamiltonian_path));
  a.spec.threads = threads;
  const SweepGrid grid = sweep_r(h, a.spec);
  std::ostringstream os;
  io::write_sweep_csv(os, grid);
  emit(os.str(), a.out_path);
  return 0;
}

// ---------------------------------------------------------------------------
// fixtures

struct FixtureArgs {
  std::string name;
  int n = 4;
  bool density = false;
  bool list = false;
  std::string out_path;
};

int cmd_fixtures(const FixtureArgs& a) {
  if (a.list || a.name.empty()) {
    for (const auto& name : fixture_names()) std::cout << name << "\n";
    return 0;
  }
  const PureState s = fixture(a.name, a.n);
  emit(a.density ? io::density_to_text(to_density(s)) : io::state_to_text(s), a.out_path);
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"Bipartition entanglement monotones and the global entanglement measure R"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::uint64_t> seed;
  const int hw = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  int threads = hw;
  app.add_option("--seed", seed, "RNG seed for maximize and roof");
  app.add_option("--threads", threads, "Worker threads (results do not depend on it)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  MeasureArgs measure;
  auto* m = app.add_subcommand("measure", "Eta profile, Meyer-Wallach, Scott Q_m and R of a pure state");
  m->add_option("state", measure.state_path, "State file")->required();
  m->add_flag("--json", measure.json, "Print a JSON report");
  m->add_flag("--normalize", measure.normalize, "Rescale states whose norm is not 1");

  MaximizeArgs maximize;
  auto* x = app.add_subcommand("maximize", "Maximize R over the exchange-symmetric four-qubit family");
  x->add_option("--config", maximize.config_path, "Search config file (starts, max_iters, tol, seed)");
  x->add_option("--starts", maximize.starts, "Number of multi-start runs");
  x->add_option("--max-iters", maximize.max_iters, "Simplex iteration cap per start");
  x->add_option("--tol", maximize.tol, "Simplex value tolerance");
  x->add_option("--slice", maximize.slice, "Parameter slice")->check(CLI::IsMember({"full", "ghz"}));
  x->add_flag("--no-anchors", maximize.no_anchors, "Use random starts only");
  x->add_option("--out", maximize.out_path, "Write the best state here");
  x->add_flag("--json", maximize.json, "Print a JSON report");

  RoofArgs roof;
  auto* r = app.add_subcommand("roof", "Convex-roof upper bounds of eta_S and R for a density matrix");
  r->add_option("density", roof.density_path, "Density-matrix file")->required();
  r->add_option("--subset", roof.subset, "Comma-separated 1-based qubits, or 'all' (default)");
  r->add_option("--starts", roof.starts, "Minimizations per ensemble size");
  r->add_option("--max-iters", roof.max_iters, "Simplex iteration cap");
  r->add_option("--extra-members", roof.extra_members, "Ensemble sizes tried beyond the rank");
  r->add_flag("--json", roof.json, "Print a JSON report");

  SweepArgs sweep;
  auto* s = app.add_subcommand("sweep", "Ground-state R over a grid of two bias offsets (CSV)");
  s->add_option("hamiltonian", sweep.hamiltonian_path, "Hamiltonian file")->required();
  s->add_option("--global-min", sweep.spec.global.min, "Global bias start")->capture_default_str();
  s->add_option("--global-max", sweep.spec.global.max, "Global bias end")->capture_default_str();
  s->add_option("--global-steps", sweep.spec.global.steps, "Global bias points")->capture_default_str();
  s->add_option("--qubit", sweep.spec.qubit, "Qubit receiving the extra bias (1-based)")->capture_default_str();
  s->add_option("--qubit-min", sweep.spec.local.min, "Extra bias start")->capture_default_str();
  s->add_option("--qubit-max", sweep.spec.local.max, "Extra bias end")->capture_default_str();
  s->add_option("--qubit-steps", sweep.spec.local.steps, "Extra bias points")->capture_default_str();
  s->add_option("--out", sweep.out_path, "CSV output path (default stdout)");

  FixtureArgs fix;
  auto* f = app.add_subcommand("fixtures", "Write a canonical state: ghz, w, wbar, v4, psi_m, bell_pair_product");
  f->add_option("name", fix.name, "Fixture name");
  f->add_option("--n", fix.n, "Qubit count for ghz, w, wbar")->capture_default_str();
  f->add_flag("--density", fix.density, "Write the density matrix instead of the state");
  f->add_flag("--list", fix.list, "List fixture names");
  f->add_option("--out", fix.out_path, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  if (*m) return cmd_measure(measure);
  if (*x) return cmd_maximize(maximize, seed, threads);
  if (*r) return cmd_roof(roof, seed);
  if (*s) return cmd_sweep(sweep, threads);
  return cmd_fixtures(fix);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const globent::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const globent::Error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}

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

// Python module `_globent`. States travel as complex numpy vectors, density
// matrices as complex numpy matrices, subsets as lists of 1-based qubits.

#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "globent/globent.hpp"

namespace py = pybind11;
using namespace globent;

namespace {

int qubits_for_dim(Eigen::Index dim) {
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if ((Eigen::Index{1} << n) != dim || n < 1) throw DimensionError("length must be a power of two >= 2");
  return n;
}

PureState to_state(const Eigen::VectorXcd& amps, bool renormalize) {
  PureState s(qubits_for_dim(amps.size()), amps);
  return renormalize ? normalize(s) : s;
}

DensityMatrix to_rho(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw DimensionError("density matrix must be square");
  DensityMatrix rho(qubits_for_dim(m.rows()), m);
  rho.validate(kTolerances, true);
  return rho;
}

QubitSubset to_subset(int n, const std::vector<int>& qubits) { return QubitSubset::of(n, qubits); }

py::dict profile_dict(const EtaProfile& p) {
  py::list subsets, reps, values;
  for (const auto& e : p.entries) {
    subsets.append(e.block.qubits());
    reps.append(e.representative.qubits());
    values.append(e.eta);
  }
  py::dict d;
  d["subsets"] = subsets;
  d["representatives"] = reps;
  d["values"] = values;
  return d;
}

SpinHamiltonian make_hamiltonian(const std::vector<double>& delta, const std::vector<double>& eps,
                                 const Eigen::MatrixXd& j) {
  const int n = static_cast<int>(delta.size());
  SpinHamiltonian h = SpinHamiltonian::zeros(n);
  h.delta = delta;
  h.eps = eps;
  if (j.rows() != n || j.cols() != n) throw DimensionError("coupling matrix must be n x n");
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) h.j[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = j(a, b);
  }
  h.validate();
  return h;
}

}  // namespace

PYBIND11_MODULE(_globent, m) {
  m.doc() = "Bipartition entanglement monotones and the global entanglement measure R";

  auto base = py::register_exception<Error>(m, "GlobentError", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", base.ptr());
  auto numerical = py::register_exception<NumericalError>(m, "NumericalError", base.ptr());
  py::register_exception<DegenerateGround>(m, "DegenerateGround", numerical.ptr());

  m.def(
      "eta",
      [](const Eigen::VectorXcd& amps, const std::vector<int>& subset) {
        const PureState s = to_state(amps, false);
        return eta(s, to_subset(s.num_qubits(), subset));
      },
      py::arg("state"), py::arg("subset"));
  m.def(
      "eta_profile", [](const Eigen::VectorXcd& amps) { return profile_dict(eta_profile(to_state(amps, false))); },
      py::arg("state"));
  m.def(
      "mw", [](const Eigen::VectorXcd& amps) { return mw_measure(to_state(amps, false)); }, py::arg("state"));
  m.def(
      "scott", [](const Eigen::VectorXcd& amps, int size) { return scott_measure(to_state(amps, false), size); },
      py::arg("state"), py::arg("m"));
  m.def(
      "global_r", [](const Eigen::VectorXcd& amps) { return global_r(to_state(amps, false)); }, py::arg("state"));
  m.def(
      "measure",
      [](const Eigen::VectorXcd& amps, bool renormalize) {
        const MeasureReport r = measure_report(to_state(amps, renormalize));
        py::dict d;
        d["mw"] = r.mw;
        d["scott"] = r.scott;
        d["r"] = r.r;
        d["profile"] = profile_dict(r.profile);
        return d;
      },
      py::arg("state"), py::arg("normalize") = false);
  m.def(
      "reduced_density",
      [](const Eigen::VectorXcd& amps, const std::vector<int>& keep) {
        const PureState s = to_state(amps, false);
        return Eigen::MatrixXcd(reduced_density(s, to_subset(s.num_qubits(), keep)).entries());
      },
      py::arg("state"), py::arg("keep"));
  m.def(
      "pauli_expand",
      [](const Eigen::MatrixXcd& rho) {
        const PauliExpansion ex = pauli_expand(to_rho(rho));
        return std::vector<double>(ex.coefficients().begin(), ex.coefficients().end());
      },
      py::arg("rho"), "Coefficients alpha_L indexed by base-4 word (qubit k at digit k-1; 0=I 1=X 2=Y 3=Z).");

  m.def("fixture", [](const std::string& name, int n) { return Eigen::VectorXcd(fixture(name, n).amplitudes()); },
        py::arg("name"), py::arg("n") = 4);
  m.def("fixture_names", &fixture_names);

  m.def(
      "maximize_r",
      [](int starts, int max_iters, double tol, std::uint64_t seed, bool anchor_starts, bool ghz_slice,
         int threads) {
        SearchConfig cfg;
        cfg.starts = starts;
        cfg.max_iters = max_iters;
        cfg.tol = tol;
        cfg.seed = seed;
        cfg.anchor_starts = anchor_starts;
        cfg.slice = ghz_slice ? SearchSlice::GhzSlice : SearchSlice::Full;
        cfg.threads = threads;
        const SearchResult res = [&] {
          py::gil_scoped_release release;
          return maximize_r(cfg);
        }();
        const auto p = res.best_params.to_array();
        py::dict d;
        d["best_r"] = res.best_r;
        d["params"] = std::vector<double>(p.begin(), p.end());
        d["state"] = Eigen::VectorXcd(res.best_state.amplitudes());
        d["starts"] = res.starts;
        return d;
      },
      py::arg("starts") = 64, py::arg("max_iters") = 4000, py::arg("tol") = 1e-12, py::arg("seed") = 20060322,
      py::arg("anchor_starts") = true, py::arg("ghz_slice") = false, py::arg("threads") = 1);

  m.def(
      "tilde_eta",
      [](const Eigen::MatrixXcd& rho, const std::vector<int>& subset, int starts, std::uint64_t seed) {
        const DensityMatrix d = to_rho(rho);
        RoofConfig cfg;
        cfg.starts = starts;
        cfg.seed = seed;
        const RoofResult r = tilde_eta(d, to_subset(d.num_qubits(), subset), cfg);
        py::list weights;
        for (const auto& mem : r.witness.members) weights.append(mem.p);
        py::dict out;
        out["value"] = r.value;
        out["witness_weights"] = weights;
        out["residual"] = reconstruction_residual(r.witness, d);
        return out;
      },
      py::arg("rho"), py::arg("subset"), py::arg("starts") = 4, py::arg("seed") = 20060322);
  m.def(
      "tilde_r",
      [](const Eigen::MatrixXcd& rho, int starts, std::uint64_t seed) {
        RoofConfig cfg;
        cfg.starts = starts;
        cfg.seed = seed;
        return tilde_r(to_rho(rho), cfg);
      },
      py::arg("rho"), py::arg("starts") = 4, py::arg("seed") = 20060322);

  m.def(
      "hamiltonian",
      [](const std::vector<double>& delta, const std::vector<double>& eps, const Eigen::MatrixXd& j) {
        return build_hamiltonian(make_hamiltonian(delta, eps, j));
      },
      py::arg("delta"), py::arg("eps"), py::arg("j"));
  m.def(
      "ground_state",
      [](const Eigen::MatrixXcd& h) {
        const GroundState gs = ground_state(h);
        return py::make_tuple(gs.energy, Eigen::VectorXcd(gs.state.amplitudes()), gs.gap);
      },
      py::arg("h"), "Returns (energy, state, gap).");
  m.def(
      "sweep_r",
      [](const std::vector<double>& delta, const std::vector<double>& eps, const Eigen::MatrixXd& j,
         std::array<double, 3> global, std::array<double, 3> local, int qubit, int threads) {
        const SpinHamiltonian h = make_hamiltonian(delta, eps, j);
        const SweepSpec spec{{global[0], global[1], static_cast<int>(global[2])},
                             {local[0], local[1], static_cast<int>(local[2])},
                             qubit,
                             threads};
        const SweepGrid grid = [&] {
          py::gil_scoped_release release;
          return sweep_r(h, spec);
        }();
        py::array_t<double> r({grid.rows, grid.cols});
        py::array_t<double> gap({grid.rows, grid.cols});
        py::array_t<bool> degenerate({grid.rows, grid.cols});
        auto rv = r.mutable_unchecked<2>();
        auto gv = gap.mutable_unchecked<2>();
        auto dv = degenerate.mutable_unchecked<2>();
        for (int i = 0; i < grid.rows; ++i) {
          for (int k = 0; k < grid.cols; ++k) {
            const SweepCell& c = grid.at(i, k);
            rv(i, k) = c.r;
            gv(i, k) = c.gap;
            dv(i, k) = c.degenerate;
          }
        }
        return py::make_tuple(r, gap, degenerate);
      },
      py::arg("delta"), py::arg("eps"), py::arg("j"), py::arg("global_axis"), py::arg("local_axis"),
      py::arg("qubit") = 2, py::arg("threads") = 1,
      "Axes are (min, max, steps). Returns (r, gap, degenerate) arrays, global axis first.");
}

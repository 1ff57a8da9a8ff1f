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

/**
 * @file io.hpp
 * Text file formats. All documents are JSON written one value per line.
 *
 * State:        {"n": 2, "amps": [[re, im], ...]}            2^n pairs, index ascending
 * Density:      {"n": 1, "entries": [[re, im], ...]}         4^n pairs, row-major
 * Hamiltonian:  {"n": 4, "delta": [...], "eps": [...], "j": [[i, k, value], ...]}  1-based i < k
 * Search:       {"starts": 64, "max_iters": 4000, "tol": 1e-12, "seed": 7}  (all optional)
 *
 * Doubles are written in shortest round-trip form, so a state read back is
 * bit-identical to the one written. Unknown keys are ignored on read.
 */
#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "globent/ground_state.hpp"
#include "globent/measures.hpp"
#include "globent/qstate.hpp"
#include "globent/symmetric.hpp"

namespace globent::io {

/// Shortest representation that parses back to the same double.
std::string format_double(double x);

std::string state_to_text(const PureState& state, const nlohmann::ordered_json& extra = {});
PureState state_from_text(const std::string& text);

std::string density_to_text(const DensityMatrix& rho);
DensityMatrix density_from_text(const std::string& text);

SpinHamiltonian hamiltonian_from_text(const std::string& text);
std::string hamiltonian_to_text(const SpinHamiltonian& h);

/// Overlays the keys present in `text` onto `base`.
SearchConfig search_config_from_text(const std::string& text, SearchConfig base = {});

nlohmann::ordered_json form_to_json(const SymmetricForm& p);
nlohmann::ordered_json report_to_json(const MeasureReport& report);

/// Header `bias_global,bias_q,r,gap,degenerate_flag`; 12 significant digits.
void write_sweep_csv(std::ostream& os, const SweepGrid& grid);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace globent::io

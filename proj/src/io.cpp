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

#include "globent/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "globent/errors.hpp"

namespace globent::io {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json parse(const std::string& text, const char* what) {
  try {
    json doc = json::parse(text);
    if (!doc.is_object()) throw ParseError(std::string(what) + " file must be a JSON object");
    return doc;
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(what) + " file is not valid JSON: " + e.what());
  }
}

template <typename T>
T field(const json& doc, const char* key, const char* what) {
  if (!doc.contains(key)) throw ParseError(std::string(what) + " file lacks field '" + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + " field '" + key + "' has the wrong type: " + e.what());
  }
}

int qubit_count(const json& doc, const char* what) {
  const int n = field<int>(doc, "n", what);
  if (n < 1 || n > kMaxQubits) throw ParseError(std::string(what) + " field 'n' outside [1, 12]");
  return n;
}

Complex complex_pair(const json& v, const char* what) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw ParseError(std::string(what) + " entries must be [re, im] number pairs");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

std::string pair_text(Complex z) { return "[" + format_double(z.real()) + ", " + format_double(z.imag()) + "]"; }

}  // namespace

std::string format_double(double x) {
  if (!std::isfinite(x)) throw NumericalError("cannot serialize a non-finite value");
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string state_to_text(const PureState& state, const ordered_json& extra) {
  std::ostringstream os;
  os << "{\n  \"n\": " << state.num_qubits() << ",\n  \"amps\": [\n";
  for (std::size_t b = 0; b < state.dim(); ++b) {
    os << "    " << pair_text(state[b]) << (b + 1 < state.dim() ? ",\n" : "\n");
  }
  os << "  ]";
  if (extra.is_object()) {
    for (const auto& [key, value] : extra.items()) os << ",\n  " << json(key).dump() << ": " << value.dump();
  }
  os << "\n}\n";
  return os.str();
}

PureState state_from_text(const std::string& text) {
  const json doc = parse(text, "state");
  const int n = qubit_count(doc, "state");
  const json& amps = doc.contains("amps") ? doc.at("amps") : json();
  if (!amps.is_array()) throw ParseError("state file lacks an 'amps' array");
  const std::size_t d = std::size_t{1} << n;
  if (amps.size() != d) {
    throw ParseError("state file has " + std::to_string(amps.size()) + " amplitudes, expected " + std::to_string(d));
  }
  Eigen::VectorXcd v(static_cast<Eigen::Index>(d));
  for (std::size_t b = 0; b < d; ++b) v(static_cast<Eigen::Index>(b)) = complex_pair(amps[b], "state");
  return PureState(n, std::move(v));
}

std::string density_to_text(const DensityMatrix& rho) {
  std::ostringstream os;
  os << "{\n  \"n\": " << rho.num_qubits() << ",\n  \"entries\": [\n";
  const auto d = static_cast<Eigen::Index>(rho.dim());
  for (Eigen::Index i = 0; i < d; ++i) {
    os << "    ";
    for (Eigen::Index k = 0; k < d; ++k) {
      os << pair_text(rho.entries()(i, k));
      if (k + 1 < d || i + 1 < d) os << ", ";
    }
    os << "\n";
  }
  os << "  ]\n}\n";
  return os.str();
}

DensityMatrix density_from_text(const std::string& text) {
  const json doc = parse(text, "density");
  const int n = qubit_count(doc, "density");
  const json& entries = doc.contains("entries") ? doc.at("entries") : json();
  if (!entries.is_array()) throw ParseError("density file lacks an 'entries' array");
  const std::size_t d = std::size_t{1} << n;
  if (entries.size() != d * d) {
    throw ParseError("density file has " + std::to_string(entries.size()) + " entries, expected " +
                     std::to_string(d * d));
  }
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = complex_pair(entries[i * d + k], "density");
    }
  }
  return DensityMatrix(n, std::move(m));
}

SpinHamiltonian hamiltonian_from_text(const std::string& text) {
  const json doc = parse(text, "Hamiltonian");
  const int n = qubit_count(doc, "Hamiltonian");
  SpinHamiltonian h = SpinHamiltonian::zeros(n);
  h.delta = field<std::vector<double>>(doc, "delta", "Hamiltonian");
  h.eps = field<std::vector<double>>(doc, "eps", "Hamiltonian");
  if (h.delta.size() != static_cast<std::size_t>(n) || h.eps.size() != static_cast<std::size_t>(n)) {
    throw ParseError("Hamiltonian 'delta' and 'eps' need n entries each");
  }
  const json couplings = doc.contains("j") ? doc.at("j") : json::array();
  if (!couplings.is_array()) throw ParseError("Hamiltonian 'j' must be a list of [i, k, value]");
  for (const json& c : couplings) {
    if (!c.is_array() || c.size() != 3 || !c[0].is_number_integer() || !c[1].is_number_integer() ||
        !c[2].is_number()) {
      throw ParseError("Hamiltonian couplings must be [i, k, value] with integer i, k");
    }
    const int a = c[0].get<int>();
    const int b = c[1].get<int>();
    if (a < 1 || b > n || a >= b) throw ParseError("Hamiltonian coupling indices need 1 <= i < k <= n");
    h.set_coupling(a, b, c[2].get<double>());
  }
  return h;
}

std::string hamiltonian_to_text(const SpinHamiltonian& h) {
  auto list = [](const std::vector<double>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + format_double(v[i]);
    return s + "]";
  };
  std::ostringstream os;
  os << "{\n  \"n\": " << h.n << ",\n  \"delta\": " << list(h.delta) << ",\n  \"eps\": " << list(h.eps)
     << ",\n  \"j\": [";
  bool first = true;
  for (int a = 0; a < h.n; ++a) {
    for (int b = a + 1; b < h.n; ++b) {
      const double v = h.j[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      if (v == 0.0) continue;
      os << (first ? "\n" : ",\n") << "    [" << a + 1 << ", " << b + 1 << ", " << format_double(v) << "]";
      first = false;
    }
  }
  os << (first ? "]" : "\n  ]") << "\n}\n";
  return os.str();
}

SearchConfig search_config_from_text(const std::string& text, SearchConfig base) {
  const json doc = parse(text, "search config");
  try {
    if (doc.contains("starts")) base.starts = doc.at("starts").get<int>();
    if (doc.contains("max_iters")) base.max_iters = doc.at("max_iters").get<int>();
    if (doc.contains("tol")) base.tol = doc.at("tol").get<double>();
    if (doc.contains("seed")) base.seed = doc.at("seed").get<std::uint64_t>();
    if (doc.contains("threads")) base.threads = doc.at("threads").get<int>();
    if (doc.contains("anchor_starts")) base.anchor_starts = doc.at("anchor_starts").get<bool>();
    if (doc.contains("slice")) {
      const auto s = doc.at("slice").get<std::string>();
      if (s == "full") {
        base.slice = SearchSlice::Full;
      } else if (s == "ghz") {
        base.slice = SearchSlice::GhzSlice;
      } else {
        throw ConfigError("unknown search slice '" + s + "'");
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("search config has a field of the wrong type: ") + e.what());
  }
  return base;
}

ordered_json form_to_json(const SymmetricForm& p) {
  return {{"l0", p.l0}, {"l1", p.l1}, {"l2", p.l2}, {"l3", p.l3}, {"phi0", p.phi0}, {"phi1", p.phi1}};
}

ordered_json report_to_json(const MeasureReport& report) {
  ordered_json profile = ordered_json::array();
  for (const auto& e : report.profile.entries) {
    profile.push_back({{"subset", e.block.label()}, {"representative", e.representative.label()}, {"eta", e.eta}});
  }
  return {{"n", report.profile.num_qubits}, {"mw", report.mw}, {"scott", report.scott}, {"r", report.r},
          {"profile", profile}};
}

void write_sweep_csv(std::ostream& os, const SweepGrid& grid) {
  os << "bias_global,bias_q,r,gap,degenerate_flag\n";
  char line[160];
  for (const SweepCell& c : grid.cells) {
    std::snprintf(line, sizeof(line), "%.12g,%.12g,%.12g,%.12g,%d\n", c.bias_global, c.bias_qubit, c.r, c.gap,
                  c.degenerate ? 1 : 0);
    os << line;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << contents;
  if (!out) throw ConfigError("failed writing '" + path + "'");
}

}  // namespace globent::io

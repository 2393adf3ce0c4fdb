// Copyright 2026 The anyonlab Authors
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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "anyonlab/anyon.hpp"
#include "anyonlab/spectrum.hpp"
#include "json.hpp"

namespace anyonlab {

inline constexpr const char *kVersion = "0.1.0";

/// A command's products: the JSON report plus optional side files keyed by
/// the suffix appended to the report path (".csv", ".lineshape.csv").
struct CommandOutput {
    nlohmann::json report;
    std::map<std::string, std::string> attachments;
};

/// Rounds every floating-point number to 12 significant digits (and -0 to 0)
/// so that dumps are stable across platforms.
nlohmann::json round12(const nlohmann::json &j);
/// round12 followed by a 2-space indented dump and a trailing newline.
std::string format_report(const nlohmann::json &j);

struct GroundOptions {
    std::string model = "planar6";
    std::string backend = "dense";  // "dense" or "tableau"
    std::size_t dense_limit = kDefaultDenseLimit;
};
CommandOutput run_ground(const GroundOptions &opt);

struct BraidDemoOptions {
    ExperimentConfig config;
    SpinSystem spin_system = label_spin_system();
    SignMode sign_mode = SignMode::amplitude;
};
CommandOutput run_braid_demo(const BraidDemoOptions &opt);

struct ToricOptions {
    std::size_t k = 4;
    /// "" (none), a Pauli string such as "X1 Z7", or "random:N" for N
    /// uniformly drawn single-qubit X/Y/Z errors.
    std::string errors;
    bool sweep = false;
    bool bench = false;
    std::uint64_t seed = 0;
    std::array<bool, 2> logical{false, false};
};
/// Random single-qubit errors on n qubits, composed into one string.
PauliString random_error_string(std::size_t num_qubits, std::size_t count, std::uint64_t seed);
PauliString parse_error_spec(const std::string &spec, std::size_t num_qubits, std::uint64_t seed);
CommandOutput run_toric(const ToricOptions &opt);

struct SpectrumOptions {
    /// "ground", "excited", "psi_g", "psi_e", "thermal" or "basis:<label>".
    std::string state = "psi_g";
    SpinSystem spin_system = label_spin_system();
    double damping = 1.0;
    std::size_t lineshape_points = 0;  // 0 disables the sampled lineshape
    double margin_hz = 20.0;           // lineshape range beyond the outer peaks
};
CommandOutput run_spectrum(const SpectrumOptions &opt);

struct SweepOptions {
    std::vector<double> etas;
    std::vector<double> admixes{0.0};
    double gamma_leak = 0.0;
    double damping = 1.0;
    std::uint64_t seed = 0;
    std::size_t threads = 0;  // 0 = hardware concurrency
    SpinSystem spin_system = label_spin_system();
    SignMode sign_mode = SignMode::amplitude;
};

struct SweepRow {
    double eta_injected;
    double admix;
    double eta_recovered;
    double delta;
};

/// Uniform grid start, start+step, ... up to stop (inclusive within step/1e6).
std::vector<double> make_grid(double start, double stop, double step);
std::vector<SweepRow> sweep(const SweepOptions &opt);
std::string sweep_csv(const std::vector<SweepRow> &rows);
CommandOutput run_sweep(const SweepOptions &opt);

/// Effective-config and environment record written next to each report.
nlohmann::json make_manifest(const std::string &command, const nlohmann::json &config,
                             std::optional<std::uint64_t> seed, const std::vector<std::string> &outputs);

}  // namespace anyonlab

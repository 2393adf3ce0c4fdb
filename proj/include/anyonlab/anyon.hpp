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
#include <optional>

#include "anyonlab/circuit.hpp"
#include "anyonlab/spectrum.hpp"
#include "anyonlab/state_vector.hpp"

namespace anyonlab {

/// Qubit indices (0-based) of the six-spin planar model, in the order
/// C1, M, C2, C4, H2, C3.
namespace planar6 {
inline constexpr std::size_t kC1 = 0;
inline constexpr std::size_t kM = 1;
inline constexpr std::size_t kC2 = 2;
inline constexpr std::size_t kC4 = 3;
inline constexpr std::size_t kH2 = 4;
inline constexpr std::size_t kC3 = 5;
inline constexpr std::size_t kNumQubits = 6;
}  // namespace planar6

struct ExperimentConfig {
    bool with_braiding = true;
    double eta_inject = 0.0;  // radians
    double admix_beta = 0.0;  // |beta/alpha|
    double gamma_leak = 0.0;  // weight of the orthogonal error component
    double damping = 1.0;
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
    /// Real positive alpha, beta with alpha^2 + beta^2 + gamma^2 = 1.
    double alpha() const;
    double beta() const;
};

/// 1/2 (|000000> + |111000> + |110111> + |001111>), built by the graph-state
/// circuit.
StateVector ground_state();
/// Z on C2 applied to the ground state.
StateVector excited_state();

/// Unit vector orthogonal to both ground and excited state, drawn from a
/// seeded Gaussian.
StateVector error_state(std::uint64_t seed);

/// alpha |ground> + beta |excited> + gamma |error>.
StateVector prepare_initial_state(const ExperimentConfig &config);

/// X on C4, then S on C2.
StateVector create_anyons(StateVector s);
/// X on C3, H2, C2, C4 (the loop equals A2). A nonzero eta additionally
/// applies e^{i eta} exp(-i eta A2), which leaves the A2 = +1 part alone and
/// multiplies the A2 = -1 part by e^{2 i eta}.
StateVector braid(StateVector s, double eta_inject = 0.0);
/// S^dagger on C2, then X on C4.
StateVector fuse(StateVector s);

/// The braiding loop as a Pauli string (+X3 X4 X5 X6).
PauliString braid_loop();

/// Frozen readout block: CX(C2->C4), CX(C2->H2), CX(C2->C3), H(C2).
/// Maps ground to (|000000> + |110111>)/sqrt2 and excited to
/// (|001000> + |111111>)/sqrt2, both with phase +1.
Circuit measurement_circuit();
StateVector measurement_reduction(StateVector s);

struct PipelineRun {
    PipelineRole role;
    StateVector initial;
    StateVector created;
    std::optional<StateVector> braided;
    StateVector fused;
    StateVector measured;
};

/// Creation, optional braiding (per config.with_braiding), fusion and the
/// readout block, keeping every intermediate state.
PipelineRun run_pipeline(const ExperimentConfig &config);

enum class SignMode {
    /// Signs of the ratios taken from the simulator amplitudes carried on the
    /// peaks; recovers eta over the full range.
    amplitude,
    /// Intensities only: both ratios taken positive.
    magnitude,
};

struct PhaseResult {
    double eta = 0.0;
    double delta = 0.0;           // (pi/2 + eta) * 2
    double ratio_ground = 0.0;    // |beta/alpha|
    double ratio_braided = 0.0;   // |alpha'/beta'|
    double signed_ratio_ground = 0.0;
    double signed_ratio_braided = 0.0;
    SignMode sign_mode = SignMode::amplitude;
};

/// |beta/alpha| = sqrt((Gp + Gq) / (Gi + Gj)),
/// |alpha'/beta'| = sqrt((Gu + Gv) / (Gs + Gt)),
/// tan eta = (R' - r) / (1 + r R').
///
/// In amplitude mode r carries the sign of Re((a_p + a_q) conj(a_i + a_j)) and
/// R' the sign of -Re((a_u + a_v) conj(a_s + a_t)), so that R' = tan(eta + atan r)
/// holds with signs.
PhaseResult extract_phase(const LabeledSpectrum &with_braid, const LabeledSpectrum &without_braid,
                          SignMode mode = SignMode::amplitude);
/// Labels both reports first; throws naming any missing dominant peak.
PhaseResult extract_phase(const SpectrumReport &with_braid, const SpectrumReport &without_braid,
                          const SpinSystem &sys, SignMode mode = SignMode::amplitude);

/// First-order spread of eta from the spreads of the two ratios.
double eta_uncertainty(double ratio_ground, double sigma_ground, double ratio_braided, double sigma_braided);

struct ExperimentResult {
    ExperimentConfig config;
    PipelineRun unbraided;
    std::optional<PipelineRun> braided;
    SpectrumReport unbraided_spectrum;
    std::optional<SpectrumReport> braided_spectrum;
    LabeledSpectrum unbraided_labels;
    std::optional<LabeledSpectrum> braided_labels;
    std::optional<PhaseResult> phase;  // only when both pipelines ran
};

/// Runs the unbraided pipeline and, if config.with_braiding, the braided one,
/// synthesizes both spectra and extracts the phase.
ExperimentResult run_experiment(const ExperimentConfig &config, const SpinSystem &sys,
                                SignMode mode = SignMode::amplitude);

}  // namespace anyonlab

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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anyonlab/state_vector.hpp"
#include "json.hpp"

namespace anyonlab {

/// Observed (label) spin and its weakly coupled partners.
///
/// Partner j corresponds to qubit j of the states handed to synthesize(), so
/// the partner list doubles as the qubit ordering of the spectrum labels.
struct SpinSystem {
    std::string observed = "C2";
    std::vector<std::string> partners;
    std::vector<double> j_hz;           // coupling of the observed spin to partners[j]
    std::vector<bool> placeholder;      // true where j_hz[j] is not a measured value
    double offset_hz = 0.0;
    std::optional<double> t2_s;

    void validate() const;
    std::size_t index_of(std::string_view partner) const;
    double coupling(std::string_view partner) const { return j_hz[index_of(partner)]; }
    /// Lorentzian FWHM 1/(pi T2); 0 without T2.
    double linewidth_hz() const;

    static SpinSystem from_json(const nlohmann::json &j);
    nlohmann::json to_json() const;
};

/// C2 observed with partners in the slot order C1, M, H1, C4, H2, C3. Only the
/// H1 (155.42 Hz) and H2 (0.66 Hz) couplings are measured values; the other
/// four are distinct placeholders so that all 64 lines resolve.
SpinSystem label_spin_system();
SpinSystem load_spin_system(const std::string &path);

/// First-order multiplet position: offset + sum_j (J_j / 2) s_j with
/// s_j = +1 for partner state '1' and -1 for '0'.
double peak_frequency(const SpinSystem &sys, std::string_view partner_state);

struct Peak {
    double frequency_hz = 0.0;
    double intensity = 0.0;  // relative to a single pure basis-state line
    std::string state;
    double linewidth_hz = 0.0;
    /// Simulator-side complex amplitude of `state`. A population spectrum
    /// cannot observe it; it is carried for sign bookkeeping only.
    Complex amplitude{0.0, 0.0};
};

struct SpectrumReport {
    std::vector<Peak> peaks;  // ascending frequency, ties by state label
    nlohmann::json metadata;

    const Peak *find(std::string_view state) const;
    double total_intensity() const;
};

/// One line per partner configuration with weight above `threshold`.
/// intensity = damping * |amplitude|^2, so a single basis state at damping 1
/// gives a line of height 1 (the reference).
SpectrumReport synthesize(const SpinSystem &sys, const StateVector &s, double damping = 1.0,
                          double threshold = 1e-9);

/// Thermal spectrum: every partner configuration equally weighted.
SpectrumReport synthesize_thermal(const SpinSystem &sys);

/// Height-normalized absorption Lorentzian: height at f0, FWHM `width`.
double lorentzian(double f, double f0, double height, double width);

struct LineshapePoint {
    double frequency_hz;
    double absorption;
};

/// Sum of all peaks' Lorentzians on a uniform grid. Peaks need a linewidth.
std::vector<LineshapePoint> sample_lineshape(const SpectrumReport &r, double f_min, double f_max,
                                             std::size_t points);

enum class PipelineRole { unbraided, braided };

std::string_view role_name(PipelineRole role);

struct LabeledPeak {
    std::string label;  // "i", "j", "p", "q" or "s", "t", "u", "v"
    Peak peak;
};

struct LabeledSpectrum {
    PipelineRole role;
    std::vector<LabeledPeak> peaks;

    const Peak &at(std::string_view label) const;
};

/// Dominant states: unbraided i = |110111>, j = |000000>; braided s = |111111>,
/// t = |001000>. The contamination lines sit at the other pipeline's dominant
/// states: p, q at s, t and u, v at i, j. A missing dominant line is an error;
/// a missing contamination line is reported with intensity 0.
LabeledSpectrum assign_peak_labels(const SpectrumReport &r, PipelineRole role, const SpinSystem &sys);

std::string spectrum_csv(const SpectrumReport &r);
std::string lineshape_csv(const std::vector<LineshapePoint> &points);

}  // namespace anyonlab

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

#include "anyonlab/anyon.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "anyonlab/lattice.hpp"

namespace anyonlab {

namespace {

using namespace planar6;

void require_six(const StateVector &s, const char *what) {
    if (s.num_qubits() != kNumQubits) {
        throw std::invalid_argument(std::string(what) + ": expected a 6-qubit state, got " +
                                    std::to_string(s.num_qubits()));
    }
}

void require_finite(double v, const char *field) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string("config: ") + field + " is not finite");
    }
}

double sign_of(double v) { return v < 0.0 ? -1.0 : 1.0; }

}  // namespace

void ExperimentConfig::validate() const {
    require_finite(eta_inject, "eta_inject");
    require_finite(admix_beta, "admix_beta");
    require_finite(gamma_leak, "gamma_leak");
    require_finite(damping, "damping");
    if (admix_beta < 0.0) {
        throw std::invalid_argument("config: admix_beta must be >= 0");
    }
    if (gamma_leak < 0.0 || gamma_leak >= 1.0) {
        throw std::invalid_argument("config: gamma_leak must lie in [0, 1)");
    }
    if (damping < 0.0 || damping > 1.0) {
        throw std::invalid_argument("config: damping must lie in [0, 1]");
    }
}

double ExperimentConfig::alpha() const {
    return std::sqrt((1.0 - gamma_leak * gamma_leak) / (1.0 + admix_beta * admix_beta));
}

double ExperimentConfig::beta() const { return admix_beta * alpha(); }

StateVector ground_state() {
    StateVector s = run(ground_state_circuit(planar6_graph()), StateVector(kNumQubits));
    // Fix the global phase so that <000000|ground> is real positive.
    const Complex a0 = s.amplitude(0);
    s.scale(std::conj(a0) / std::abs(a0));
    return s;
}

StateVector excited_state() { return apply_pauli(ground_state(), PauliString::single(kNumQubits, kC2, 'Z')); }

StateVector error_state(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    const StateVector g = ground_state();
    const StateVector e = excited_state();
    std::vector<Complex> v(std::size_t{1} << kNumQubits);
    for (auto &c : v) {
        c = Complex(gauss(rng), gauss(rng));
    }
    for (const StateVector *basis : {&g, &e}) {
        Complex proj(0, 0);
        for (std::size_t k = 0; k < v.size(); ++k) {
            proj += std::conj(basis->amplitude(k)) * v[k];
        }
        for (std::size_t k = 0; k < v.size(); ++k) {
            v[k] -= proj * basis->amplitude(k);
        }
    }
    double norm = 0.0;
    for (const auto &c : v) {
        norm += std::norm(c);
    }
    norm = std::sqrt(norm);
    for (auto &c : v) {
        c /= norm;
    }
    return StateVector::from_amplitudes(std::move(v));
}

StateVector prepare_initial_state(const ExperimentConfig &config) {
    config.validate();
    const StateVector g = ground_state();
    const StateVector e = excited_state();
    const double a = config.alpha();
    const double b = config.beta();
    std::vector<Complex> v(g.dim());
    for (std::size_t k = 0; k < v.size(); ++k) {
        v[k] = a * g.amplitude(k) + b * e.amplitude(k);
    }
    if (config.gamma_leak > 0.0) {
        const StateVector err = error_state(config.seed);
        for (std::size_t k = 0; k < v.size(); ++k) {
            v[k] += config.gamma_leak * err.amplitude(k);
        }
    }
    return StateVector::from_amplitudes(std::move(v));
}

StateVector create_anyons(StateVector s) {
    require_six(s, "create_anyons");
    s.apply(Gate{GateKind::X, {kC4, 0}});
    s.apply(Gate{GateKind::S, {kC2, 0}});
    return s;
}

PauliString braid_loop() {
    const std::size_t loop[] = {kC2, kC4, kH2, kC3};
    return PauliString::uniform(kNumQubits, loop, 'X');
}

StateVector braid(StateVector s, double eta_inject) {
    require_six(s, "braid");
    for (std::size_t q : {kC3, kH2, kC2, kC4}) {
        s.apply(Gate{GateKind::X, {q, 0}});
    }
    if (eta_inject != 0.0) {
        s.apply_pauli_rotation(braid_loop(), eta_inject);
        s.scale(std::polar(1.0, eta_inject));
    }
    return s;
}

StateVector fuse(StateVector s) {
    require_six(s, "fuse");
    s.apply(Gate{GateKind::Sdg, {kC2, 0}});
    s.apply(Gate{GateKind::X, {kC4, 0}});
    return s;
}

Circuit measurement_circuit() {
    Circuit c(kNumQubits);
    c.add(GateKind::CX, kC2, kC4);
    c.add(GateKind::CX, kC2, kH2);
    c.add(GateKind::CX, kC2, kC3);
    c.add(GateKind::H, kC2);
    return c;
}

StateVector measurement_reduction(StateVector s) {
    require_six(s, "measurement_reduction");
    s.apply(measurement_circuit());
    return s;
}

PipelineRun run_pipeline(const ExperimentConfig &config) {
    StateVector initial = prepare_initial_state(config);
    StateVector created = create_anyons(initial);
    std::optional<StateVector> braided;
    if (config.with_braiding) {
        braided = braid(created, config.eta_inject);
    }
    StateVector fused = fuse(braided ? *braided : created);
    StateVector measured = measurement_reduction(fused);
    return PipelineRun{config.with_braiding ? PipelineRole::braided : PipelineRole::unbraided,
                       std::move(initial),
                       std::move(created),
                       std::move(braided),
                       std::move(fused),
                       std::move(measured)};
}

PhaseResult extract_phase(const LabeledSpectrum &with_braid, const LabeledSpectrum &without_braid,
                          SignMode mode) {
    if (with_braid.role != PipelineRole::braided || without_braid.role != PipelineRole::unbraided) {
        throw std::invalid_argument("extract_phase: expected (braided, unbraided) labeled spectra");
    }
    const Peak &pi = without_braid.at("i");
    const Peak &pj = without_braid.at("j");
    const Peak &pp = without_braid.at("p");
    const Peak &pq = without_braid.at("q");
    const Peak &ps = with_braid.at("s");
    const Peak &pt = with_braid.at("t");
    const Peak &pu = with_braid.at("u");
    const Peak &pv = with_braid.at("v");

    const double dominant_ground = pi.intensity + pj.intensity;
    const double dominant_braided = ps.intensity + pt.intensity;
    if (!(dominant_ground > 0.0)) {
        throw std::domain_error("extract_phase: peaks i and j have zero intensity");
    }
    if (!(dominant_braided > 0.0)) {
        throw std::domain_error("extract_phase: peaks s and t have zero intensity");
    }

    PhaseResult r;
    r.sign_mode = mode;
    r.ratio_ground = std::sqrt((pp.intensity + pq.intensity) / dominant_ground);
    r.ratio_braided = std::sqrt((pu.intensity + pv.intensity) / dominant_braided);
    r.signed_ratio_ground = r.ratio_ground;
    r.signed_ratio_braided = r.ratio_braided;
    if (mode == SignMode::amplitude) {
        const Complex ground_dom = pi.amplitude + pj.amplitude;
        const Complex braided_dom = ps.amplitude + pt.amplitude;
        r.signed_ratio_ground *= sign_of(std::real((pp.amplitude + pq.amplitude) * std::conj(ground_dom)));
        r.signed_ratio_braided *= sign_of(-std::real((pu.amplitude + pv.amplitude) * std::conj(braided_dom)));
    }
    const double a = r.signed_ratio_ground;
    const double b = r.signed_ratio_braided;
    r.eta = std::atan((b - a) / (1.0 + a * b));
    r.delta = (std::numbers::pi / 2 + r.eta) * 2;
    return r;
}

PhaseResult extract_phase(const SpectrumReport &with_braid, const SpectrumReport &without_braid,
                          const SpinSystem &sys, SignMode mode) {
    return extract_phase(assign_peak_labels(with_braid, PipelineRole::braided, sys),
                         assign_peak_labels(without_braid, PipelineRole::unbraided, sys), mode);
}

double eta_uncertainty(double ratio_ground, double sigma_ground, double ratio_braided, double sigma_braided) {
    const double dg = sigma_ground / (1.0 + ratio_ground * ratio_ground);
    const double db = sigma_braided / (1.0 + ratio_braided * ratio_braided);
    return std::sqrt(dg * dg + db * db);
}

ExperimentResult run_experiment(const ExperimentConfig &config, const SpinSystem &sys, SignMode mode) {
    config.validate();
    ExperimentConfig plain = config;
    plain.with_braiding = false;
    PipelineRun unbraided = run_pipeline(plain);
    SpectrumReport unbraided_spectrum = synthesize(sys, unbraided.measured, config.damping);
    LabeledSpectrum unbraided_labels = assign_peak_labels(unbraided_spectrum, PipelineRole::unbraided, sys);

    ExperimentResult out{config,
                         std::move(unbraided),
                         std::nullopt,
                         std::move(unbraided_spectrum),
                         std::nullopt,
                         std::move(unbraided_labels),
                         std::nullopt,
                         std::nullopt};
    if (config.with_braiding) {
        ExperimentConfig looped = config;
        looped.with_braiding = true;
        out.braided = run_pipeline(looped);
        out.braided_spectrum = synthesize(sys, out.braided->measured, config.damping);
        out.braided_labels = assign_peak_labels(*out.braided_spectrum, PipelineRole::braided, sys);
        out.phase = extract_phase(*out.braided_labels, out.unbraided_labels, mode);
    }
    return out;
}

}  // namespace anyonlab

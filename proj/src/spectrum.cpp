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

#include "anyonlab/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>

namespace anyonlab {

namespace {

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

Peak make_peak(const SpinSystem &sys, std::string state, double intensity, Complex amplitude) {
    Peak p;
    p.frequency_hz = peak_frequency(sys, state);
    p.intensity = intensity;
    p.state = std::move(state);
    p.linewidth_hz = sys.linewidth_hz();
    p.amplitude = amplitude;
    return p;
}

void sort_peaks(std::vector<Peak> &peaks) {
    std::sort(peaks.begin(), peaks.end(), [](const Peak &a, const Peak &b) {
        if (a.frequency_hz != b.frequency_hz) return a.frequency_hz < b.frequency_hz;
        return a.state < b.state;
    });
}

}  // namespace

void SpinSystem::validate() const {
    if (partners.empty()) {
        throw std::invalid_argument("spin system: no partner spins");
    }
    if (j_hz.size() != partners.size()) {
        throw std::invalid_argument("spin system: " + std::to_string(j_hz.size()) + " couplings for " +
                                    std::to_string(partners.size()) + " partners");
    }
    if (!placeholder.empty() && placeholder.size() != partners.size()) {
        throw std::invalid_argument("spin system: placeholder flags do not match partner count");
    }
    for (std::size_t j = 0; j < j_hz.size(); ++j) {
        if (!std::isfinite(j_hz[j])) {
            throw std::invalid_argument("spin system: coupling to " + partners[j] + " is not finite");
        }
    }
    if (!std::isfinite(offset_hz)) {
        throw std::invalid_argument("spin system: offset is not finite");
    }
    if (t2_s && !(*t2_s > 0.0)) {
        throw std::invalid_argument("spin system: t2 must be positive");
    }
}

std::size_t SpinSystem::index_of(std::string_view partner) const {
    for (std::size_t j = 0; j < partners.size(); ++j) {
        if (partners[j] == partner) {
            return j;
        }
    }
    throw std::out_of_range("spin system: no partner named " + std::string(partner));
}

double SpinSystem::linewidth_hz() const { return t2_s ? 1.0 / (std::numbers::pi * *t2_s) : 0.0; }

SpinSystem SpinSystem::from_json(const nlohmann::json &j) {
    SpinSystem sys;
    sys.observed = j.value("observed", std::string("C2"));
    sys.offset_hz = j.value("offset_hz", 0.0);
    if (j.contains("t2_s") && !j.at("t2_s").is_null()) {
        sys.t2_s = j.at("t2_s").get<double>();
    }
    const auto &partners = j.at("partners");
    const auto &couplings = j.at("j_hz");
    std::vector<std::string> flagged;
    if (j.contains("placeholder")) {
        flagged = j.at("placeholder").get<std::vector<std::string>>();
    }
    for (const auto &name : partners) {
        const auto partner = name.get<std::string>();
        if (!couplings.contains(partner)) {
            throw std::invalid_argument("spin system: missing coupling for partner " + partner);
        }
        sys.partners.push_back(partner);
        sys.j_hz.push_back(couplings.at(partner).get<double>());
        sys.placeholder.push_back(std::find(flagged.begin(), flagged.end(), partner) != flagged.end());
    }
    sys.validate();
    return sys;
}

nlohmann::json SpinSystem::to_json() const {
    nlohmann::json j;
    j["observed"] = observed;
    j["partners"] = partners;
    nlohmann::json couplings = nlohmann::json::object();
    std::vector<std::string> flagged;
    for (std::size_t k = 0; k < partners.size(); ++k) {
        couplings[partners[k]] = j_hz[k];
        if (k < placeholder.size() && placeholder[k]) {
            flagged.push_back(partners[k]);
        }
    }
    j["j_hz"] = couplings;
    j["placeholder"] = flagged;
    j["offset_hz"] = offset_hz;
    j["t2_s"] = t2_s ? nlohmann::json(*t2_s) : nlohmann::json(nullptr);
    return j;
}

SpinSystem label_spin_system() {
    SpinSystem sys;
    sys.observed = "C2";
    sys.partners = {"C1", "M", "H1", "C4", "H2", "C3"};
    // H1 and H2 are measured; C1, M, C4, C3 are placeholders with distinct
    // subset sums.
    sys.j_hz = {40.0, 20.0, 155.42, 10.0, 0.66, 5.0};
    sys.placeholder = {true, true, false, true, false, true};
    return sys;
}

SpinSystem load_spin_system(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open spin system file " + path);
    }
    return SpinSystem::from_json(nlohmann::json::parse(in));
}

double peak_frequency(const SpinSystem &sys, std::string_view partner_state) {
    if (partner_state.size() != sys.partners.size()) {
        throw std::invalid_argument("peak_frequency: state \"" + std::string(partner_state) + "\" has " +
                                    std::to_string(partner_state.size()) + " spins, system has " +
                                    std::to_string(sys.partners.size()) + " partners");
    }
    double f = sys.offset_hz;
    for (std::size_t j = 0; j < partner_state.size(); ++j) {
        switch (partner_state[j]) {
            case '0': f -= 0.5 * sys.j_hz[j]; break;
            case '1': f += 0.5 * sys.j_hz[j]; break;
            default: throw std::invalid_argument("peak_frequency: bad spin state '" + std::string(1, partner_state[j]) + "'");
        }
    }
    return f;
}

const Peak *SpectrumReport::find(std::string_view state) const {
    for (const auto &p : peaks) {
        if (p.state == state) {
            return &p;
        }
    }
    return nullptr;
}

double SpectrumReport::total_intensity() const {
    double total = 0.0;
    for (const auto &p : peaks) {
        total += p.intensity;
    }
    return total;
}

SpectrumReport synthesize(const SpinSystem &sys, const StateVector &s, double damping, double threshold) {
    sys.validate();
    if (s.num_qubits() != sys.partners.size()) {
        throw std::invalid_argument("synthesize: state has " + std::to_string(s.num_qubits()) + " qubits, system has " +
                                    std::to_string(sys.partners.size()) + " partners");
    }
    if (!(damping >= 0.0 && damping <= 1.0)) {
        throw std::invalid_argument("synthesize: damping must lie in [0, 1]");
    }
    SpectrumReport r;
    const auto amps = s.amplitudes();
    for (std::uint64_t k = 0; k < amps.size(); ++k) {
        const double weight = std::norm(amps[k]);
        if (weight <= threshold) {
            continue;
        }
        r.peaks.push_back(make_peak(sys, basis_label(k, s.num_qubits()), damping * weight, amps[k]));
    }
    sort_peaks(r.peaks);
    r.metadata = {{"spin_system", sys.to_json()},
                  {"damping", damping},
                  {"threshold", threshold},
                  {"normalization", "height relative to a single basis-state line"}};
    return r;
}

SpectrumReport synthesize_thermal(const SpinSystem &sys) {
    sys.validate();
    const std::size_t m = sys.partners.size();
    if (m > 20) {
        throw std::length_error("synthesize_thermal: too many partners");
    }
    const std::uint64_t count = std::uint64_t{1} << m;
    SpectrumReport r;
    for (std::uint64_t k = 0; k < count; ++k) {
        r.peaks.push_back(make_peak(sys, basis_label(k, m), 1.0 / static_cast<double>(count), Complex(0, 0)));
    }
    sort_peaks(r.peaks);
    r.metadata = {{"spin_system", sys.to_json()}, {"source", "thermal"}};
    return r;
}

double lorentzian(double f, double f0, double height, double width) {
    const double half = 0.5 * width;
    const double d = f - f0;
    return height * half * half / (d * d + half * half);
}

std::vector<LineshapePoint> sample_lineshape(const SpectrumReport &r, double f_min, double f_max,
                                             std::size_t points) {
    if (points < 2 || !(f_max > f_min)) {
        throw std::invalid_argument("sample_lineshape: need at least two points on a non-empty range");
    }
    for (const auto &p : r.peaks) {
        if (!(p.linewidth_hz > 0.0)) {
            throw std::invalid_argument("sample_lineshape: peak " + p.state + " has no linewidth (set t2)");
        }
    }
    std::vector<LineshapePoint> out(points);
    const double step = (f_max - f_min) / static_cast<double>(points - 1);
    for (std::size_t k = 0; k < points; ++k) {
        const double f = f_min + step * static_cast<double>(k);
        double y = 0.0;
        for (const auto &p : r.peaks) {
            y += lorentzian(f, p.frequency_hz, p.intensity, p.linewidth_hz);
        }
        out[k] = {f, y};
    }
    return out;
}

std::string_view role_name(PipelineRole role) { return role == PipelineRole::braided ? "braided" : "unbraided"; }

const Peak &LabeledSpectrum::at(std::string_view label) const {
    for (const auto &lp : peaks) {
        if (lp.label == label) {
            return lp.peak;
        }
    }
    throw std::out_of_range("labeled spectrum (" + std::string(role_name(role)) + ") has no peak " +
                            std::string(label));
}

LabeledSpectrum assign_peak_labels(const SpectrumReport &r, PipelineRole role, const SpinSystem &sys) {
    struct Slot {
        const char *label;
        const char *state;
        bool dominant;
    };
    static constexpr Slot kUnbraided[] = {
        {"i", "110111", true}, {"j", "000000", true}, {"p", "111111", false}, {"q", "001000", false}};
    static constexpr Slot kBraided[] = {
        {"s", "111111", true}, {"t", "001000", true}, {"u", "110111", false}, {"v", "000000", false}};
    const auto &slots = role == PipelineRole::braided ? kBraided : kUnbraided;

    LabeledSpectrum out{role, {}};
    for (const auto &slot : slots) {
        if (const Peak *p = r.find(slot.state)) {
            out.peaks.push_back({slot.label, *p});
        } else if (slot.dominant) {
            throw std::runtime_error("missing expected peak " + std::string(slot.label) + " (|" + slot.state +
                                     ">) in " + std::string(role_name(role)) + " spectrum");
        } else {
            out.peaks.push_back({slot.label, make_peak(sys, slot.state, 0.0, Complex(0, 0))});
        }
    }
    return out;
}

std::string spectrum_csv(const SpectrumReport &r) {
    std::string out = "freq_hz,intensity,state,linewidth_hz\n";
    for (const auto &p : r.peaks) {
        out += fmt12(p.frequency_hz) + "," + fmt12(p.intensity) + "," + p.state + "," + fmt12(p.linewidth_hz) + "\n";
    }
    return out;
}

std::string lineshape_csv(const std::vector<LineshapePoint> &points) {
    std::string out = "freq_hz,absorption\n";
    for (const auto &pt : points) {
        out += fmt12(pt.frequency_hz) + "," + fmt12(pt.absorption) + "\n";
    }
    return out;
}

}  // namespace anyonlab

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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "anyonlab/anyon.hpp"
#include "anyonlab/spectrum.hpp"

using namespace anyonlab;

namespace {

// Independent frequency model: each partner contributes J (b - 1/2).
double oracle_frequency(const SpinSystem &sys, std::uint64_t bits) {
    double f = sys.offset_hz;
    const std::size_t m = sys.partners.size();
    for (std::size_t j = 0; j < m; ++j) {
        const double b = static_cast<double>((bits >> (m - 1 - j)) & 1u);
        f += sys.j_hz[j] * (b - 0.5);
    }
    return f;
}

StateVector psi_g() { return measurement_reduction(ground_state()); }

StateVector psi_e() {
    StateVector s = excited_state();
    s.scale(Complex(0, 1));
    return measurement_reduction(s);
}

}  // namespace

TEST(PeakFrequency, ClosedForms) {
    const SpinSystem sys = label_spin_system();
    double total = 0.0;
    for (double j : sys.j_hz) total += j;
    EXPECT_NEAR(peak_frequency(sys, "000000"), -total / 2, 1e-12);
    EXPECT_NEAR(peak_frequency(sys, "001000") - peak_frequency(sys, "000000"), 155.42, 1e-9);
    EXPECT_NEAR(peak_frequency(sys, "110111") - peak_frequency(sys, "111111"), -155.42, 1e-9);
    EXPECT_NEAR(peak_frequency(sys, "000010") - peak_frequency(sys, "000000"), 0.66, 1e-12);
    for (std::uint64_t b = 0; b < 64; ++b)
        EXPECT_NEAR(peak_frequency(sys, basis_label(b, 6)), oracle_frequency(sys, b), 1e-12);
    EXPECT_THROW(peak_frequency(sys, "00000"), std::invalid_argument);
    EXPECT_THROW(peak_frequency(sys, "00000x"), std::invalid_argument);
}

TEST(PeakFrequency, OffsetShiftsEverything) {
    SpinSystem sys = label_spin_system();
    sys.offset_hz = 12.5;
    EXPECT_NEAR(peak_frequency(sys, "101010"), oracle_frequency(sys, 0b101010), 1e-12);
}

TEST(Synthesize, ThermalHas64DistinctLines) {
    const SpinSystem sys = label_spin_system();
    const auto r = synthesize_thermal(sys);
    ASSERT_EQ(r.peaks.size(), 64u);
    std::set<double> freqs;
    for (const auto &p : r.peaks) freqs.insert(p.frequency_hz);
    EXPECT_EQ(freqs.size(), 64u);
    for (std::size_t i = 1; i < r.peaks.size(); ++i) EXPECT_LT(r.peaks[i - 1].frequency_hz, r.peaks[i].frequency_hz);
    EXPECT_NEAR(r.total_intensity(), 1.0, 1e-12);
}

TEST(Synthesize, PsiGGivesTwoEqualPeaks) {
    const SpinSystem sys = label_spin_system();
    const auto r = synthesize(sys, psi_g());
    ASSERT_EQ(r.peaks.size(), 2u);
    EXPECT_EQ(r.peaks[0].state, "000000");
    EXPECT_EQ(r.peaks[1].state, "110111");
    EXPECT_NEAR(r.peaks[0].intensity, 0.5, 1e-12);
    EXPECT_NEAR(r.peaks[1].intensity, 0.5, 1e-12);
}

TEST(Synthesize, PsiEIsShiftedByH1Coupling) {
    const SpinSystem sys = label_spin_system();
    const auto g = synthesize(sys, psi_g());
    const auto e = synthesize(sys, psi_e());
    ASSERT_EQ(e.peaks.size(), 2u);
    ASSERT_NE(e.find("001000"), nullptr);
    ASSERT_NE(e.find("111111"), nullptr);
    EXPECT_NEAR(e.find("001000")->frequency_hz - g.find("000000")->frequency_hz, 155.42, 1e-9);
    EXPECT_NEAR(g.find("110111")->frequency_hz - e.find("111111")->frequency_hz, -155.42, 1e-9);
}

TEST(Synthesize, DampingScalesIntensities) {
    const SpinSystem sys = label_spin_system();
    const auto r = synthesize(sys, psi_g(), 0.7);
    EXPECT_NEAR(r.total_intensity(), 0.7, 1e-12);
    EXPECT_THROW(synthesize(sys, psi_g(), 1.2), std::invalid_argument);
    EXPECT_THROW(synthesize(sys, StateVector(5)), std::invalid_argument);
}

TEST(Synthesize, PeakCountEqualsSupportSize) {
    const SpinSystem sys = label_spin_system();
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Complex> amps(64);
        std::size_t support = 0;
        for (auto &a : amps) {
            if (rng() % 4 == 0) {
                a = Complex(1.0 + rng() % 3, 0.0);
                ++support;
            }
        }
        if (support == 0) {
            amps[0] = 1.0;
            support = 1;
        }
        double norm = 0.0;
        for (auto a : amps) norm += std::norm(a);
        for (auto &a : amps) a /= std::sqrt(norm);
        EXPECT_EQ(synthesize(sys, StateVector::from_amplitudes(amps)).peaks.size(), support);
    }
}

TEST(Lineshape, LorentzianShape) {
    EXPECT_NEAR(lorentzian(3.0, 3.0, 2.0, 1.0), 2.0, 1e-15);
    EXPECT_NEAR(lorentzian(3.5, 3.0, 2.0, 1.0), 1.0, 1e-15);
    EXPECT_NEAR(lorentzian(2.5, 3.0, 2.0, 1.0), 1.0, 1e-15);
}

TEST(Lineshape, SampledFwhmMatchesT2) {
    SpinSystem sys = label_spin_system();
    sys.t2_s = 0.05;
    const double expected = 1.0 / (std::numbers::pi * 0.05);
    const auto r = synthesize(sys, StateVector::basis("010101"));
    ASSERT_EQ(r.peaks.size(), 1u);
    EXPECT_NEAR(r.peaks[0].linewidth_hz, expected, 1e-12);
    const double f0 = r.peaks[0].frequency_hz;
    const auto pts = sample_lineshape(r, f0 - 30, f0 + 30, 6001);
    double peak = 0.0;
    for (const auto &p : pts) peak = std::max(peak, p.absorption);
    // Linear interpolation of the two half-maximum crossings.
    double left = 0.0, right = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const double a = pts[i - 1].absorption - peak / 2, b = pts[i].absorption - peak / 2;
        if (a < 0 && b >= 0) left = pts[i - 1].frequency_hz + (pts[i].frequency_hz - pts[i - 1].frequency_hz) * (-a) / (b - a);
        if (a >= 0 && b < 0) right = pts[i - 1].frequency_hz + (pts[i].frequency_hz - pts[i - 1].frequency_hz) * a / (a - b);
    }
    EXPECT_NEAR((right - left) / expected, 1.0, 0.01);
}

TEST(Lineshape, RequiresLinewidth) {
    const auto r = synthesize(label_spin_system(), psi_g());
    EXPECT_THROW(sample_lineshape(r, -10, 10, 100), std::invalid_argument);
    EXPECT_THROW(sample_lineshape(r, 10, -10, 100), std::invalid_argument);
}

TEST(Labels, UnbraidedIdealHasZeroContamination) {
    const SpinSystem sys = label_spin_system();
    const auto l = assign_peak_labels(synthesize(sys, psi_g()), PipelineRole::unbraided, sys);
    EXPECT_EQ(l.at("i").state, "110111");
    EXPECT_EQ(l.at("j").state, "000000");
    EXPECT_EQ(l.at("p").intensity, 0.0);
    EXPECT_EQ(l.at("q").intensity, 0.0);
    EXPECT_NEAR(l.at("p").frequency_hz, peak_frequency(sys, "111111"), 1e-12);
    EXPECT_THROW((void)l.at("s"), std::out_of_range);
}

TEST(Labels, MissingDominantPeakIsNamed) {
    const SpinSystem sys = label_spin_system();
    try {
        (void)assign_peak_labels(synthesize(sys, psi_g()), PipelineRole::braided, sys);
        FAIL();
    } catch (const std::runtime_error &e) {
        EXPECT_NE(std::string(e.what()).find("peak s"), std::string::npos) << e.what();
    }
}

TEST(Labels, BraidedShiftMatchesH1) {
    const SpinSystem sys = label_spin_system();
    const auto u = assign_peak_labels(synthesize(sys, psi_g()), PipelineRole::unbraided, sys);
    const auto b = assign_peak_labels(synthesize(sys, psi_e()), PipelineRole::braided, sys);
    EXPECT_NEAR(std::abs(b.at("s").frequency_hz - u.at("i").frequency_hz), 155.42, 1e-9);
    EXPECT_NEAR(std::abs(b.at("t").frequency_hz - u.at("j").frequency_hz), 155.42, 1e-9);
}

TEST(SpinSystem, JsonRoundTripAndValidation) {
    SpinSystem sys = label_spin_system();
    sys.t2_s = 0.25;
    const SpinSystem back = SpinSystem::from_json(sys.to_json());
    EXPECT_EQ(back.partners, sys.partners);
    EXPECT_EQ(back.j_hz, sys.j_hz);
    EXPECT_EQ(back.placeholder, sys.placeholder);
    EXPECT_EQ(back.t2_s, sys.t2_s);
    EXPECT_DOUBLE_EQ(back.coupling("H1"), 155.42);

    nlohmann::json bad = sys.to_json();
    bad["t2_s"] = -1.0;
    EXPECT_THROW(SpinSystem::from_json(bad), std::invalid_argument);
    bad = sys.to_json();
    bad["j_hz"].erase("M");
    EXPECT_THROW(SpinSystem::from_json(bad), std::invalid_argument);
    EXPECT_THROW((void)sys.index_of("H7"), std::out_of_range);
    EXPECT_THROW(load_spin_system("/nonexistent/spin.json"), std::runtime_error);
}

TEST(SpinSystem, ShippedDefaultFile) {
    const SpinSystem sys = load_spin_system(std::string(ANYONLAB_SOURCE_DIR) + "/data/spin_system.json");
    EXPECT_EQ(sys.partners, label_spin_system().partners);
    EXPECT_EQ(sys.j_hz, label_spin_system().j_hz);
    ASSERT_TRUE(sys.t2_s.has_value());
}

TEST(Csv, Format) {
    const auto r = synthesize(label_spin_system(), psi_g());
    const std::string csv = spectrum_csv(r);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "freq_hz,intensity,state,linewidth_hz");
    EXPECT_NE(csv.find(",0.5,000000,0\n"), std::string::npos) << csv;
}

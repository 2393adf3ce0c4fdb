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

#include "anyonlab/commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <future>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

#include "anyonlab/lattice.hpp"
#include "anyonlab/tableau.hpp"

namespace anyonlab {

using nlohmann::json;

namespace {

json dump_json(const StateVector &s) {
    json out = json::array();
    for (const auto &e : dump(s)) {
        out.push_back({{"state", e.label}, {"re", e.re}, {"im", e.im}});
    }
    return out;
}

json syndrome_json(const std::vector<SyndromeEntry> &entries) {
    json out = json::array();
    for (const auto &e : entries) {
        out.push_back({{"id", e.id}, {"value", e.value}, {"eigenstate", e.eigenstate}});
    }
    return out;
}

json defects_json(const std::vector<SyndromeEntry> &entries) {
    const DefectCount d = count_defects(entries);
    return {{"vertex", d.vertex}, {"face", d.face}, {"both_even", d.vertex % 2 == 0 && d.face % 2 == 0}};
}

json rows_json(const std::vector<PauliString> &rows) {
    json out = json::array();
    for (const auto &r : rows) {
        out.push_back(r.str());
    }
    return out;
}

json peak_json(const Peak &p) {
    return {{"freq_hz", p.frequency_hz},
            {"intensity", p.intensity},
            {"state", p.state},
            {"linewidth_hz", p.linewidth_hz},
            {"amplitude", {p.amplitude.real(), p.amplitude.imag()}}};
}

json spectrum_json(const SpectrumReport &r) {
    json peaks = json::array();
    for (const auto &p : r.peaks) {
        peaks.push_back(peak_json(p));
    }
    return {{"peaks", peaks}, {"total_intensity", r.total_intensity()}, {"metadata", r.metadata}};
}

json labels_json(const LabeledSpectrum &l) {
    json out = json::object();
    for (const auto &lp : l.peaks) {
        out[lp.label] = peak_json(lp.peak);
    }
    return out;
}

std::string_view sign_mode_name(SignMode m) { return m == SignMode::amplitude ? "amplitude" : "magnitude"; }

json phase_json(const PhaseResult &p) {
    return {{"eta", p.eta},
            {"delta", p.delta},
            {"delta_over_pi", p.delta / std::numbers::pi},
            {"ratio_ground", p.ratio_ground},
            {"ratio_braided", p.ratio_braided},
            {"signed_ratio_ground", p.signed_ratio_ground},
            {"signed_ratio_braided", p.signed_ratio_braided},
            {"sign_mode", sign_mode_name(p.sign_mode)}};
}

json config_json(const ExperimentConfig &c) {
    return {{"with_braiding", c.with_braiding},
            {"eta_inject", c.eta_inject},
            {"admix_beta", c.admix_beta},
            {"gamma_leak", c.gamma_leak},
            {"damping", c.damping},
            {"seed", c.seed},
            {"alpha", c.alpha()},
            {"beta", c.beta()}};
}

json pipeline_json(const PipelineRun &run, const SpectrumReport &spectrum, const LabeledSpectrum &labels) {
    const LatticeModel m = build_planar6();
    const StateVector g = ground_state();
    const StateVector e = excited_state();
    json states = {{"initial", dump_json(run.initial)},
                   {"created", dump_json(run.created)},
                   {"fused", dump_json(run.fused)},
                   {"measured", dump_json(run.measured)}};
    json syndromes = {{"initial", syndrome_json(syndrome(m, run.initial))},
                      {"created", syndrome_json(syndrome(m, run.created))},
                      {"fused", syndrome_json(syndrome(m, run.fused))}};
    if (run.braided) {
        states["braided"] = dump_json(*run.braided);
        syndromes["braided"] = syndrome_json(syndrome(m, *run.braided));
    }
    const Complex og = overlap(g, run.fused);
    const Complex oe = overlap(e, run.fused);
    json fidelity = {{"ground", std::norm(og)}, {"excited", std::norm(oe)}};
    if (std::abs(oe) > 1e-9) {
        fidelity["excited_phase"] = std::arg(oe);
    }
    return {{"role", role_name(run.role)},
            {"states", states},
            {"syndromes", syndromes},
            {"fidelity", fidelity},
            {"spectrum", spectrum_json(spectrum)},
            {"labels", labels_json(labels)}};
}

std::string utc_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

template <typename F>
double seconds(F &&f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

json round12(const json &j) {
    switch (j.type()) {
        case json::value_t::number_float: {
            const double v = j.get<double>();
            if (!std::isfinite(v)) {
                return j;
            }
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.12g", v);
            const double r = std::strtod(buf, nullptr);
            return r == 0.0 ? 0.0 : r;
        }
        case json::value_t::object: {
            json out = json::object();
            for (const auto &[key, value] : j.items()) {
                out[key] = round12(value);
            }
            return out;
        }
        case json::value_t::array: {
            json out = json::array();
            for (const auto &value : j) {
                out.push_back(round12(value));
            }
            return out;
        }
        default:
            return j;
    }
}

std::string format_report(const json &j) { return round12(j).dump(2) + "\n"; }

CommandOutput run_ground(const GroundOptions &opt) {
    const LatticeModel m = parse_model(opt.model);
    json report = {{"command", "ground"},
                   {"model", m.name()},
                   {"backend", opt.backend},
                   {"num_qubits", m.num_qubits},
                   {"qubit_layout", m.qubit_layout}};
    if (opt.backend == "dense") {
        if (m.num_qubits > opt.dense_limit) {
            throw std::length_error(m.name() + " has " + std::to_string(m.num_qubits) +
                                    " qubits, above the dense limit of " + std::to_string(opt.dense_limit) +
                                    "; use --backend tableau");
        }
        StateVector s = m.geometry == Geometry::planar6
                            ? ground_state()
                            : to_state_vector(init_toric_ground(m), opt.dense_limit);
        report["amplitudes"] = dump_json(s);
        const auto syn = syndrome(m, s);
        report["syndromes"] = syndrome_json(syn);
        report["defects"] = defects_json(syn);
        report["energy"] = hamiltonian_energy(m, s);
    } else if (opt.backend == "tableau") {
        Tableau t(m.num_qubits);
        if (m.geometry == Geometry::planar6) {
            t.apply(ground_state_circuit(planar6_graph()));
        } else {
            t = init_toric_ground(m);
        }
        report["stabilizers"] = rows_json(t.stabilizers());
        const auto syn = syndrome_sweep(t, m);
        report["syndromes"] = syndrome_json(syn);
        report["defects"] = defects_json(syn);
    } else {
        throw std::invalid_argument("unknown backend \"" + opt.backend + "\" (expected dense or tableau)");
    }
    return {report, {}};
}

CommandOutput run_braid_demo(const BraidDemoOptions &opt) {
    const ExperimentResult res = run_experiment(opt.config, opt.spin_system, opt.sign_mode);
    json pipelines = {{"unbraided", pipeline_json(res.unbraided, res.unbraided_spectrum, res.unbraided_labels)}};
    if (res.braided) {
        pipelines["braided"] = pipeline_json(*res.braided, *res.braided_spectrum, *res.braided_labels);
    }
    json report = {{"command", "braid-demo"},
                   {"config", config_json(opt.config)},
                   {"spin_system", opt.spin_system.to_json()},
                   {"measurement_circuit", measurement_circuit().str()},
                   {"pipelines", pipelines},
                   {"phase", res.phase ? phase_json(*res.phase) : json(nullptr)}};
    CommandOutput out{report, {}};
    out.attachments[".unbraided.csv"] = spectrum_csv(res.unbraided_spectrum);
    if (res.braided_spectrum) {
        out.attachments[".braided.csv"] = spectrum_csv(*res.braided_spectrum);
    }
    return out;
}

PauliString random_error_string(std::size_t num_qubits, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> qubit(0, num_qubits - 1);
    std::uniform_int_distribution<int> kind(0, 2);
    PauliString e(num_qubits);
    for (std::size_t n = 0; n < count; ++n) {
        const std::size_t q = qubit(rng);
        e *= PauliString::single(num_qubits, q, "XYZ"[kind(rng)]);
    }
    // Products of Hermitian single-qubit terms may pick up a factor i; only
    // the operator content matters for syndromes.
    e.multiply_phase(4 - e.phase_exponent());
    return e;
}

PauliString parse_error_spec(const std::string &spec, std::size_t num_qubits, std::uint64_t seed) {
    if (spec.empty()) {
        return PauliString(num_qubits);
    }
    if (spec.rfind("random:", 0) == 0) {
        const std::string count = spec.substr(7);
        std::size_t used = 0;
        unsigned long long n = 0;
        try {
            n = std::stoull(count, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != count.size()) {
            throw std::invalid_argument("bad error spec \"" + spec + "\" (expected random:<count>)");
        }
        return random_error_string(num_qubits, n, seed);
    }
    return PauliString::parse(spec, num_qubits);
}

CommandOutput run_toric(const ToricOptions &opt) {
    const LatticeModel m = build_toric(opt.k);
    const PauliString error = parse_error_spec(opt.errors, m.num_qubits, opt.seed);
    Tableau t(m.num_qubits);
    const double init_s = seconds([&] { t = init_toric_ground(m, opt.logical); });
    t.apply_pauli(error);
    std::vector<SyndromeEntry> syn;
    const double sweep_s = seconds([&] { syn = syndrome_sweep(t, m); });

    json report = {{"command", "toric"},
                   {"model", m.name()},
                   {"k", opt.k},
                   {"num_qubits", m.num_qubits},
                   {"seed", opt.seed},
                   {"logical", {opt.logical[0], opt.logical[1]}},
                   {"errors", opt.errors},
                   {"error_string", error.str()},
                   {"error_weight", error.weight()},
                   {"defects", defects_json(syn)}};
    if (opt.sweep) {
        report["syndromes"] = syndrome_json(syn);
    }
    if (opt.bench) {
        json table = json::array();
        std::vector<std::size_t> sizes{2, 4, 8, 16};
        if (std::find(sizes.begin(), sizes.end(), opt.k) == sizes.end()) {
            sizes.push_back(opt.k);
        }
        for (std::size_t k : sizes) {
            const LatticeModel bm = build_toric(k);
            Tableau bt(bm.num_qubits);
            const double ti = seconds([&] { bt = init_toric_ground(bm); });
            const double ts = seconds([&] { (void)syndrome_sweep(bt, bm); });
            table.push_back({{"k", k}, {"num_qubits", bm.num_qubits}, {"init_s", ti}, {"sweep_s", ts}});
        }
        report["timing"] = {{"init_s", init_s}, {"sweep_s", sweep_s}};
        report["bench"] = table;
    }
    return {report, {}};
}

CommandOutput run_spectrum(const SpectrumOptions &opt) {
    SpectrumReport r;
    if (opt.state == "thermal") {
        r = synthesize_thermal(opt.spin_system);
    } else {
        StateVector s(planar6::kNumQubits);
        if (opt.state == "ground") {
            s = ground_state();
        } else if (opt.state == "excited") {
            s = excited_state();
        } else if (opt.state == "psi_g") {
            s = measurement_reduction(ground_state());
        } else if (opt.state == "psi_e") {
            StateVector ie = excited_state();
            ie.scale(Complex(0, 1));
            s = measurement_reduction(ie);
        } else if (opt.state.rfind("basis:", 0) == 0) {
            s = StateVector::basis(opt.state.substr(6));
        } else {
            throw std::invalid_argument("unknown spectrum state \"" + opt.state +
                                        "\" (expected ground, excited, psi_g, psi_e, thermal or basis:<label>)");
        }
        r = synthesize(opt.spin_system, s, opt.damping);
    }
    json report = {{"command", "spectrum"},
                   {"state", opt.state},
                   {"num_peaks", r.peaks.size()},
                   {"spectrum", spectrum_json(r)}};
    CommandOutput out{report, {{".csv", spectrum_csv(r)}}};
    if (opt.lineshape_points > 0 && !r.peaks.empty()) {
        const double lo = r.peaks.front().frequency_hz - opt.margin_hz;
        const double hi = r.peaks.back().frequency_hz + opt.margin_hz;
        out.attachments[".lineshape.csv"] = lineshape_csv(sample_lineshape(r, lo, hi, opt.lineshape_points));
    }
    return out;
}

std::vector<double> make_grid(double start, double stop, double step) {
    if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step)) {
        throw std::invalid_argument("grid bounds must be finite");
    }
    if (stop < start) {
        throw std::invalid_argument("empty grid: stop < start");
    }
    if (stop == start) {
        return {start};
    }
    if (!(step > 0.0)) {
        throw std::invalid_argument("grid step must be positive");
    }
    const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-6));
    std::vector<double> grid;
    for (std::size_t i = 0; i <= n; ++i) {
        grid.push_back(start + step * static_cast<double>(i));
    }
    return grid;
}

std::vector<SweepRow> sweep(const SweepOptions &opt) {
    if (opt.etas.empty() || opt.admixes.empty()) {
        throw std::invalid_argument("empty sweep grid");
    }
    for (double v : opt.etas) {
        if (!std::isfinite(v)) throw std::invalid_argument("sweep: eta values must be finite");
    }
    for (double v : opt.admixes) {
        if (!std::isfinite(v)) throw std::invalid_argument("sweep: admix values must be finite");
    }
    const std::size_t total = opt.etas.size() * opt.admixes.size();
    std::vector<SweepRow> rows(total);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t idx = next++; idx < total; idx = next++) {
            ExperimentConfig c;
            c.eta_inject = opt.etas[idx / opt.admixes.size()];
            c.admix_beta = opt.admixes[idx % opt.admixes.size()];
            c.gamma_leak = opt.gamma_leak;
            c.damping = opt.damping;
            c.seed = opt.seed + idx;
            const PhaseResult p = *run_experiment(c, opt.spin_system, opt.sign_mode).phase;
            rows[idx] = {c.eta_inject, c.admix_beta, p.eta, p.delta};
        }
    };
    std::size_t threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, total);
    std::vector<std::future<void>> jobs;
    for (std::size_t i = 1; i < threads; ++i) {
        jobs.push_back(std::async(std::launch::async, worker));
    }
    worker();
    for (auto &j : jobs) {
        j.get();
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow> &rows) {
    std::string out = "eta_injected,admix,eta_recovered,delta\n";
    char buf[160];
    for (const auto &r : rows) {
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g,%.12g\n", r.eta_injected, r.admix, r.eta_recovered,
                      r.delta);
        out += buf;
    }
    return out;
}

CommandOutput run_sweep(const SweepOptions &opt) {
    const auto rows = sweep(opt);
    double worst = 0.0;
    json table = json::array();
    for (const auto &r : rows) {
        worst = std::max(worst, std::abs(r.eta_recovered - r.eta_injected));
        table.push_back({{"eta_injected", r.eta_injected},
                         {"admix", r.admix},
                         {"eta_recovered", r.eta_recovered},
                         {"delta", r.delta}});
    }
    json report = {{"command", "sweep"},
                   {"etas", opt.etas},
                   {"admixes", opt.admixes},
                   {"gamma_leak", opt.gamma_leak},
                   {"damping", opt.damping},
                   {"seed", opt.seed},
                   {"sign_mode", sign_mode_name(opt.sign_mode)},
                   {"rows", table},
                   {"max_abs_error", worst}};
    return {report, {{".csv", sweep_csv(rows)}}};
}

json make_manifest(const std::string &command, const json &config, std::optional<std::uint64_t> seed,
                   const std::vector<std::string> &outputs) {
    return {{"command", command},
            {"config", config},
            {"seed", seed ? json(*seed) : json(nullptr)},
            {"versions", {{"anyonlab", kVersion}, {"compiler", __VERSION__}, {"cxx", __cplusplus}}},
            {"timestamp_utc", utc_now()},
            {"outputs", outputs}};
}

}  // namespace anyonlab

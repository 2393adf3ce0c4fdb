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

// anyonlab command-line front end.
//
// Exit codes: 0 success, 2 invalid input, 1 any other failure, CLI11's own
// codes for argument parsing errors.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "anyonlab/commands.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using namespace anyonlab;

namespace {

fs::path report_path(const std::string &out, const std::string &command) {
    if (!out.empty()) {
        return out;
    }
    const char *dir = std::getenv("ANYONLAB_OUT_DIR");
    return fs::path(dir && *dir ? dir : ".") / (command + ".json");
}

fs::path sibling(const fs::path &report, const std::string &suffix) {
    fs::path base = report;
    if (base.extension() == ".json") {
        base.replace_extension();
    }
    return base.string() + suffix;
}

void write_file(const fs::path &path, const std::string &content) {
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path());
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot write " + path.string());
    }
    f << content;
}

void emit(const std::string &command, const std::string &out, const CommandOutput &result,
          const std::string &effective_config, std::optional<std::uint64_t> seed) {
    const fs::path path = report_path(out, command);
    std::vector<std::string> written{path.string()};
    write_file(path, format_report(result.report));
    for (const auto &[suffix, content] : result.attachments) {
        const fs::path p = sibling(path, suffix);
        write_file(p, content);
        written.push_back(p.string());
    }
    const fs::path manifest = sibling(path, ".manifest.json");
    written.push_back(manifest.string());
    nlohmann::json config = {{"effective", effective_config}};
    write_file(manifest, make_manifest(command, config, seed, written).dump(2) + "\n");
    for (const auto &w : written) {
        std::cout << "wrote " << w << "\n";
    }
}

void error_exit_message(const std::string &kind, const std::string &message) {
    nlohmann::json err = {{"error", {{"kind", kind}, {"message", message}}}};
    std::cerr << err.dump() << "\n";
}

SignMode parse_sign_mode(const std::string &s) {
    if (s == "amplitude") return SignMode::amplitude;
    if (s == "magnitude") return SignMode::magnitude;
    throw std::invalid_argument("unknown sign mode \"" + s + "\"");
}

SpinSystem spin_system_from(const std::string &path, std::optional<double> t2) {
    SpinSystem sys = path.empty() ? label_spin_system() : load_spin_system(path);
    if (t2) {
        sys.t2_s = *t2;
    }
    sys.validate();
    return sys;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"anyonlab: anyon braiding on small stabilizer models"};
    app.set_config("--config", "", "TOML/INI file with option values; command-line flags take precedence");
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string out;

    // ground
    GroundOptions ground;
    auto *ground_cmd = app.add_subcommand("ground", "Prepare a model's ground state and report its syndrome");
    ground_cmd->add_option("--model", ground.model, "planar6 or torus:<k>")->capture_default_str();
    ground_cmd->add_option("--backend", ground.backend, "dense or tableau")
        ->check(CLI::IsMember({"dense", "tableau"}))
        ->capture_default_str();
    ground_cmd->add_option("--dense-limit", ground.dense_limit, "Largest qubit count for the dense backend")
        ->capture_default_str();
    ground_cmd->add_option("--out", out, "Report path (default $ANYONLAB_OUT_DIR/ground.json)");

    // braid-demo
    BraidDemoOptions braid;
    bool no_braid = false;
    std::string braid_spin_file;
    std::string braid_sign = "amplitude";
    auto *braid_cmd = app.add_subcommand("braid-demo", "Run the creation/braiding/fusion pipelines and extract the phase");
    braid_cmd->add_flag("--no-braid", no_braid, "Run only the unbraided pipeline");
    braid_cmd->add_option("--eta", braid.config.eta_inject, "Injected braiding phase error (rad)")->capture_default_str();
    braid_cmd->add_option("--admix", braid.config.admix_beta, "|beta/alpha| excited-state admixture")->capture_default_str();
    braid_cmd->add_option("--gamma", braid.config.gamma_leak, "Weight of the orthogonal error component")
        ->capture_default_str();
    braid_cmd->add_option("--damping", braid.config.damping, "Overall intensity scale in [0,1]")->capture_default_str();
    braid_cmd->add_option("--seed", braid.config.seed, "Seed for the error component")->capture_default_str();
    braid_cmd->add_option("--spin-system", braid_spin_file, "Spin-system JSON file")->check(CLI::ExistingFile);
    braid_cmd->add_option("--sign-mode", braid_sign, "amplitude or magnitude")
        ->check(CLI::IsMember({"amplitude", "magnitude"}))
        ->capture_default_str();
    braid_cmd->add_option("--out", out, "Report path (default $ANYONLAB_OUT_DIR/braid-demo.json)");

    // toric
    ToricOptions toric;
    auto *toric_cmd = app.add_subcommand("toric", "Toric-code syndromes on the tableau backend");
    toric_cmd->add_option("--k", toric.k, "Lattice side")->capture_default_str();
    toric_cmd->add_option("--errors", toric.errors, "Pauli string such as \"X1 Z7\" or random:<count>");
    toric_cmd->add_flag("--sweep", toric.sweep, "Include the full per-generator syndrome list");
    toric_cmd->add_flag("--bench", toric.bench, "Append a timing table");
    toric_cmd->add_flag("--logical-row", toric.logical[0], "Flip the row-0 logical Z loop");
    toric_cmd->add_flag("--logical-col", toric.logical[1], "Flip the column-0 logical Z loop");
    toric_cmd->add_option("--seed", toric.seed, "Seed for random errors")->capture_default_str();
    toric_cmd->add_option("--out", out, "Report path (default $ANYONLAB_OUT_DIR/toric.json)");

    // spectrum
    SpectrumOptions spectrum;
    std::string spectrum_spin_file;
    std::optional<double> t2;
    auto *spectrum_cmd = app.add_subcommand("spectrum", "Synthesize a label-spin spectrum");
    spectrum_cmd->add_option("--state", spectrum.state, "ground, excited, psi_g, psi_e, thermal or basis:<label>")
        ->capture_default_str();
    spectrum_cmd->add_option("--spin-system", spectrum_spin_file, "Spin-system JSON file")->check(CLI::ExistingFile);
    spectrum_cmd->add_option("--t2", t2, "T2 in seconds (overrides the file)");
    spectrum_cmd->add_option("--damping", spectrum.damping, "Intensity scale in [0,1]")->capture_default_str();
    spectrum_cmd->add_option("--lineshape-points", spectrum.lineshape_points, "Sampled lineshape points (0 = none)")
        ->capture_default_str();
    spectrum_cmd->add_option("--out", out, "Report path (default $ANYONLAB_OUT_DIR/spectrum.json)");

    // sweep
    SweepOptions sw;
    double eta_start = -0.3, eta_stop = 0.3, eta_step = 0.02;
    std::vector<double> etas;
    std::string sweep_spin_file;
    std::string sweep_sign = "amplitude";
    auto *sweep_cmd = app.add_subcommand("sweep", "Recover eta over a grid of injected eta and admixture");
    sweep_cmd->add_option("--eta-start", eta_start)->capture_default_str();
    sweep_cmd->add_option("--eta-stop", eta_stop)->capture_default_str();
    sweep_cmd->add_option("--eta-step", eta_step)->capture_default_str();
    sweep_cmd->add_option("--etas", etas, "Explicit eta list (overrides the range)")->delimiter(',');
    sweep_cmd->add_option("--admix", sw.admixes, "Admixture list")->delimiter(',')->capture_default_str();
    sweep_cmd->add_option("--gamma", sw.gamma_leak)->capture_default_str();
    sweep_cmd->add_option("--damping", sw.damping)->capture_default_str();
    sweep_cmd->add_option("--seed", sw.seed)->capture_default_str();
    sweep_cmd->add_option("--threads", sw.threads, "Worker threads (0 = all cores)")->capture_default_str();
    sweep_cmd->add_option("--spin-system", sweep_spin_file, "Spin-system JSON file")->check(CLI::ExistingFile);
    sweep_cmd->add_option("--sign-mode", sweep_sign)
        ->check(CLI::IsMember({"amplitude", "magnitude"}))
        ->capture_default_str();
    sweep_cmd->add_option("--out", out, "Report path (default $ANYONLAB_OUT_DIR/sweep.json)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    }

    try {
        if (*ground_cmd) {
            emit("ground", out, run_ground(ground), ground_cmd->config_to_str(true, false), std::nullopt);
        } else if (*braid_cmd) {
            braid.config.with_braiding = !no_braid;
            braid.spin_system = spin_system_from(braid_spin_file, std::nullopt);
            braid.sign_mode = parse_sign_mode(braid_sign);
            emit("braid-demo", out, run_braid_demo(braid), braid_cmd->config_to_str(true, false), braid.config.seed);
        } else if (*toric_cmd) {
            emit("toric", out, run_toric(toric), toric_cmd->config_to_str(true, false), toric.seed);
        } else if (*spectrum_cmd) {
            spectrum.spin_system = spin_system_from(spectrum_spin_file, t2);
            emit("spectrum", out, run_spectrum(spectrum), spectrum_cmd->config_to_str(true, false), std::nullopt);
        } else if (*sweep_cmd) {
            sw.etas = etas.empty() ? make_grid(eta_start, eta_stop, eta_step) : etas;
            sw.spin_system = spin_system_from(sweep_spin_file, std::nullopt);
            sw.sign_mode = parse_sign_mode(sweep_sign);
            emit("sweep", out, run_sweep(sw), sweep_cmd->config_to_str(true, false), sw.seed);
        }
    } catch (const std::invalid_argument &e) {
        error_exit_message("invalid_argument", e.what());
        return 2;
    } catch (const std::out_of_range &e) {
        error_exit_message("out_of_range", e.what());
        return 2;
    } catch (const std::length_error &e) {
        error_exit_message("limit_exceeded", e.what());
        return 2;
    } catch (const std::domain_error &e) {
        error_exit_message("domain_error", e.what());
        return 2;
    } catch (const nlohmann::json::exception &e) {
        error_exit_message("bad_json", e.what());
        return 2;
    } catch (const std::exception &e) {
        error_exit_message("runtime_error", e.what());
        return 1;
    }
    return 0;
}

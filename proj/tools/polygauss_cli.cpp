/*
   Copyright 2026 The polygauss authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Command-line front end: exhaustive exact verification of the polynomial
// Davenport-Hasse identities and their supporting lemmas over configurable
// parameter boxes. Exit status: 0 all pass, 1 any fail, 2 usage/config error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "polygauss/verify.hpp"

namespace {

struct CommonOpts {
    std::string format = "text";
    std::string out_path;
    long budget = 1'000'000;
    int jobs = 1;
    bool selftest_negate_lhs = false;
};

void add_common(CLI::App* cmd, CommonOpts& common) {
    cmd->add_option("--format", common.format, "Output format: json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", common.out_path, "Write the report to this path instead of stdout");
    cmd->add_option("--budget", common.budget, "Maximum residue-system terms per Gauss sum");
    cmd->add_option("--jobs", common.jobs, "Worker threads for the parameter sweep");
    cmd->add_flag("--selftest-negate-lhs", common.selftest_negate_lhs,
                  "Corrupt one side of every comparison (harness self-test; must force exit 1)")
        ->group("");  // hidden
}

std::pair<long, int> parse_field_spec(const std::string& spec) {
    auto caret = spec.find('^');
    try {
        if (caret == std::string::npos) return {std::stol(spec), 1};
        return {std::stol(spec.substr(0, caret)), std::stoi(spec.substr(caret + 1))};
    } catch (const std::exception&) {
        throw polygauss::ConfigError("bad field spec '" + spec + "' (expected p^l, e.g. 3^2)");
    }
}

int run_and_emit(polygauss::SweepConfig cfg, const CommonOpts& common) {
    cfg.format = common.format;
    cfg.jobs = common.jobs;
    cfg.budget = common.budget;
    cfg.selftest_negate_lhs = common.selftest_negate_lhs;
    auto report = polygauss::run_sweep(cfg);
    std::string payload = polygauss::emit(report, cfg.format);
    if (common.out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(common.out_path);
        if (!out) {
            std::cerr << "error: cannot open '" << common.out_path << "' for writing\n";
            return 2;
        }
        out << payload;
    }
    return polygauss::exit_code(report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of polynomial Davenport-Hasse identities over finite fields"};
    app.require_subcommand(1);

    CommonOpts common;

    // verify <identity> ...
    auto* verify = app.add_subcommand("verify", "Verify one identity family over explicit parameters");
    verify->require_subcommand(1);

    long p = 2;
    int l = 1, n = 2;
    std::string field_spec = "2^1";
    std::string modulus_literal;
    std::string chi_sel = "all";
    std::string psi_g_sel = "all";

    auto* classical = verify->add_subcommand("classical", "Field-level identity for tau(chi, psi)");
    classical->add_option("--p", p, "Characteristic (prime)")->required();
    classical->add_option("--l", l, "Base degree: q = p^l");
    classical->add_option("--n", n, "Extension degree")->required();
    add_common(classical, common);

    auto add_modular = [&](const char* name, const char* desc, bool with_chi, bool with_psi) {
        auto* cmd = verify->add_subcommand(name, desc);
        cmd->add_option("--field", field_spec, "Base field as p^l (e.g. 3^1)")->required();
        cmd->add_option("--modulus", modulus_literal, "Modulus H as a coefficient literal, ascending (e.g. 1,1,1)")->required();
        cmd->add_option("--n,--ext-degree", n, "Extension degree")->required();
        if (with_chi) cmd->add_option("--chi", chi_sel, "Character selection: all, or one index");
        if (with_psi) cmd->add_option("--psi-g", psi_g_sel, "Additive character: all, or one associated-polynomial literal");
        add_common(cmd, common);
        return cmd;
    };
    auto* hayes = add_modular("hayes", "Sign-corrected identity for psi = E(1, H)", true, false);
    auto* main_cmd = add_modular("main", "Cross-multiplied identity for arbitrary psi_G", true, true);
    auto* lemmas = add_modular("lemmas", "Supporting-lemma suite for one modulus", false, false);

    auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep from a JSON config");
    std::string config_path;
    sweep->add_option("--config", config_path, "Path to the sweep configuration")->required();
    add_common(sweep, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help exits 0; any parse failure is a usage error
    }

    try {
        polygauss::SweepConfig cfg;
        cfg.format = common.format;

        if (classical->parsed()) {
            cfg.characteristics = {p};
            cfg.base_degrees = {l};
            cfg.ext_degrees = {n};
            cfg.identities = {"classical"};
            return run_and_emit(cfg, common);
        }

        if (hayes->parsed() || main_cmd->parsed() || lemmas->parsed()) {
            auto [pp, ll] = parse_field_spec(field_spec);
            cfg.characteristics = {pp};
            cfg.base_degrees = {ll};
            cfg.ext_degrees = {n};
            cfg.moduli = {modulus_literal};
            if (hayes->parsed()) cfg.identities = {"hayes"};
            if (main_cmd->parsed()) cfg.identities = {"main"};
            if (lemmas->parsed()) cfg.identities = {"lemmas"};
            if (chi_sel != "all") cfg.chi_indices = {std::stol(chi_sel)};
            if (main_cmd->parsed() && psi_g_sel != "all") cfg.psi_g = {psi_g_sel};
            return run_and_emit(cfg, common);
        }

        if (sweep->parsed()) {
            std::ifstream in(config_path);
            if (!in) {
                std::cerr << "error: cannot read config '" << config_path << "'\n";
                return 2;
            }
            polygauss::Json j = polygauss::Json::parse(in);
            cfg = polygauss::SweepConfig::from_json(j);
            return run_and_emit(cfg, common);
        }

        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const polygauss::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const polygauss::Json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

/*   Copyright 2026 The fuzzyck Authors

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

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fuzzyck/cli/cli.hpp"
#include "fuzzyck/error.hpp"

namespace {

struct Overrides {
    std::string grid;
    std::optional<int> levels;
    std::optional<double> tol;
    std::optional<int> max_iter;
    std::optional<std::string> branch;
    std::optional<std::string> out;
    std::optional<std::uint64_t> seed;
    std::optional<int> threads;
};

void add_flags(CLI::App* cmd, Overrides& o) {
    cmd->add_option("--grid", o.grid, "Grid size N,M");
    cmd->add_option("--levels", o.levels, "Number of r-subdivisions K")->check(CLI::PositiveNumber);
    cmd->add_option("--tol", o.tol, "Stopping tolerance on H*")->check(CLI::PositiveNumber);
    cmd->add_option("--max-iter", o.max_iter, "Picard iteration cap")->check(CLI::PositiveNumber);
    cmd->add_option("--branch", o.branch, "Integral form: s1 or s2")
        ->check(CLI::IsMember({"s1", "s2", "c2", "c3"}));
    cmd->add_option("--out", o.out, "Output directory");
    cmd->add_option("--seed", o.seed, "Seed for sampled constants");
    cmd->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
}

void apply(const Overrides& o, fuzzyck::cli::RunConfig& cfg) {
    using fuzzyck::Error;
    using fuzzyck::ErrorKind;
    if (!o.grid.empty()) {
        const auto comma = o.grid.find(',');
        try {
            if (comma == std::string::npos) throw std::invalid_argument("");
            std::size_t used = 0;
            const std::string n = o.grid.substr(0, comma);
            const std::string m = o.grid.substr(comma + 1);
            cfg.solver.N = std::stoi(n, &used);
            if (used != n.size()) throw std::invalid_argument("");
            cfg.solver.M = std::stoi(m, &used);
            if (used != m.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw Error(ErrorKind::Config, "--grid: expected N,M");
        }
        if (cfg.solver.N < 3 || cfg.solver.M < 3) {
            throw Error(ErrorKind::Config, "--grid: N and M must be >= 3");
        }
    }
    if (o.levels) cfg.solver.K = *o.levels;
    if (o.tol) cfg.solver.tol = *o.tol;
    if (o.max_iter) cfg.solver.max_iter = *o.max_iter;
    if (o.branch) cfg.hukuhara_branch = *o.branch == "s2" || *o.branch == "c3";
    if (o.out) cfg.out_dir = *o.out;
    if (o.seed) cfg.solver.seed = *o.seed;
    if (o.threads) cfg.solver.threads = *o.threads;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fuzzy fractional Darboux problems: Picard solver and certificates"};
    app.require_subcommand(1);

    Overrides run_o, cert_o;
    std::string run_cfg, cert_cfg;
    auto* run = app.add_subcommand("run", "Solve a problem and write solution CSV + report.json");
    run->add_option("config", run_cfg, "Bundled name (example_3_9, example_4_4) or JSON file")
        ->required();
    add_flags(run, run_o);
    auto* cert = app.add_subcommand("certify", "Print contraction constants and a verdict");
    cert->add_option("config", cert_cfg, "Bundled name or JSON file")->required();
    add_flags(cert, cert_o);
    auto* orc = app.add_subcommand("oracles", "Run the oracle suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            auto cfg = fuzzyck::cli::load_config(run_cfg);
            apply(run_o, cfg);
            return fuzzyck::cli::run(cfg, std::cout);
        }
        if (cert->parsed()) {
            auto cfg = fuzzyck::cli::load_config(cert_cfg);
            apply(cert_o, cfg);
            return fuzzyck::cli::certify(cfg, std::cout);
        }
        if (orc->parsed()) return fuzzyck::cli::oracles(std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

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

#include <doctest.h>

#include <clocale>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "fuzzyck/cli/cli.hpp"
#include "fuzzyck/error.hpp"

using namespace fuzzyck;
using namespace fuzzyck::cli;
namespace fs = std::filesystem;

namespace {

std::string config_error(const std::string& text) {
    try {
        parse_config(text);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Config);
        return e.what();
    }
    FAIL("expected a config error");
    return {};
}

const char* const kZero = R"({
  "kind": "single", "phi": 0.5, "rho": 1.5,
  "domain": {"a": 0.5, "b": 1.0},
  "initial": {
    "xi1": {"monomials": [{"coef": 1, "power": 0}, {"coef": 2, "power": 1}]},
    "xi2": {"monomials": [{"coef": 1, "power": 0}, {"coef": 3, "power": 2}]}
  },
  "rhs": {"f": {"kind": "zero"}},
  "grid": {"N": 9, "M": 7, "K": 4}
})";

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("fuzzyck_cli_test_" + name);
    fs::remove_all(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("bundled configs parse") {
    for (const auto& name : bundled_names()) {
        INFO(name);
        const RunConfig cfg = load_config(name);
        CHECK(cfg.name == name);
        CHECK(cfg.solver.N == 33);
        CHECK(cfg.solver.K == 20);
    }
    const RunConfig c = load_config("example_4_4");
    CHECK(c.kind == ProblemKind::Coupled);
    CHECK(c.g.kind == RhsKind::ExpCoupled);
    CHECK(c.g.input == RhsInput::Sum);
    CHECK(*c.g.lipschitz == doctest::Approx(0.22058272478483605));
}

TEST_CASE("config errors carry field paths") {
    nlohmann::json base = nlohmann::json::parse(kZero);
    auto with = [&](auto&& edit) {
        nlohmann::json j = base;
        edit(j);
        return j.dump();
    };
    CHECK(config_error(with([](auto& j) { j["grid"]["Nx"] = 3; })).find("grid.Nx: unknown key") !=
          std::string::npos);
    CHECK(config_error(with([](auto& j) { j["grid"]["N"] = "many"; })).find("grid.N") !=
          std::string::npos);
    CHECK(config_error(with([](auto& j) { j.erase("domain"); })).find("domain: missing") !=
          std::string::npos);
    CHECK(config_error(with([](auto& j) { j["rhs"]["f"]["kind"] = "cubic"; }))
              .find("rhs.f.kind") != std::string::npos);
    CHECK(config_error(with([](auto& j) { j["rhs"]["f"]["input"] = "w"; }))
              .find("rhs.f.input") != std::string::npos);
    CHECK(config_error(with([](auto& j) { j["phi"] = 0.0; })).find("phi") != std::string::npos);
    CHECK(config_error(with([](auto& j) {
              j["initial"]["xi1"]["monomials"][1]["coef"] = {3, 2, 1};
          })).find("initial.xi1.monomials[1].coef") != std::string::npos);
    CHECK(config_error(with([](auto& j) { j["psi"] = 0.5; })).find("psi") != std::string::npos);
    CHECK(config_error("{not json").find("<root>") != std::string::npos);
    CHECK_THROWS_AS(load_config("/nonexistent/file.json"), Error);
}

TEST_CASE("curves and catalog entries") {
    const auto c = make_curve({{{{1, 2, 3}, 1.0}, {{0.5, 0.5, 0.5}, 0.0}}}, 4);
    CHECK(c(2.0) == fuzzy::make_triangular(2.5, 4.5, 6.5, 4));
    CHECK(make_curve({}, 3)(1.0) == fuzzy::crisp(0, 3));

    RhsSpec sat;
    sat.kind = RhsKind::Saturating;
    sat.c = {{0.5, 1, 1}};
    const auto f = make_rhs(sat);
    const fuzzy::LevelDeck one = fuzzy::crisp(1.0, 2);
    CHECK(f.evaluate(1.0, 1.0, std::span(&one, 1)) == fuzzy::crisp(0.25, 2));
    const fuzzy::LevelDeck low = fuzzy::crisp(-1.0, 2);
    try {
        f.evaluate(1.0, 1.0, std::span(&low, 1));
        FAIL("expected a range error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::RhsRange);
    }

    RhsSpec lin;
    lin.kind = RhsKind::Linear;
    lin.c = {{2, 1, 0}};
    lin.d = {{1, 0, 1}};
    CHECK(make_rhs(lin).evaluate(3.0, 5.0, std::span(&one, 1)) == fuzzy::crisp(11.0, 2));

    RhsSpec ex;
    ex.kind = RhsKind::ExpCoupled;
    ex.input = RhsInput::Sum;
    ex.scale = 2.0;
    ex.shift = 0.0;
    const fuzzy::LevelDeck pair[] = {one, one};
    CHECK(make_rhs(ex).evaluate(0.0, 0.0, pair) == fuzzy::crisp(4.0, 2));
}

TEST_CASE("number formatting is locale independent") {
    CHECK(format_double(1.0) == "1.0000000000000000e+00");
    CHECK(format_double(-0.125) == "-1.2500000000000000e-01");
    CHECK(format_double(0.1) == "1.0000000000000001e-01");
    std::setlocale(LC_ALL, "de_DE.UTF-8");
    CHECK(format_double(0.5) == "5.0000000000000000e-01");
    std::setlocale(LC_ALL, "C");
}

TEST_CASE("zero forcing writes the initial surface and round-trips") {
    RunConfig cfg = parse_config(kZero);
    cfg.out_dir = scratch("zero").string();
    std::ostringstream log;
    CHECK(run(cfg, log) == 0);

    const fs::path csv = fs::path(cfg.out_dir) / "solution.csv";
    std::ifstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "x,y,r,lower,upper");

    const kernel::Grid2 grid(0.5, 1.0, 9, 7, 1.5, 1.5);
    const auto back = read_solution_csv(csv, grid, 4);
    const auto problem = make_single(cfg);
    const auto h = darboux::build_h(problem, grid, 4);
    CHECK(back == h);
    for (int i = 0; i < grid.N(); ++i) {
        for (int j = 0; j < grid.M(); ++j) CHECK(back.lower(i, j, 2) == back.upper(i, j, 2));
    }

    const auto report = nlohmann::json::parse(slurp(fs::path(cfg.out_dir) / "report.json"));
    CHECK(report["converged"] == true);
    CHECK(report["iterations"] == 1);
    CHECK(report["xi"][0] == 0.0);
    CHECK(report["lipschitz"][0]["source"] == "hint");
    fs::remove_all(cfg.out_dir);
}

TEST_CASE("solution CSV round-trips bit for bit") {
    RunConfig cfg = load_config("example_3_9");
    cfg.solver.N = cfg.solver.M = 9;
    cfg.solver.K = 5;
    cfg.out_dir = scratch("rt").string();
    std::ostringstream log;
    CHECK(run(cfg, log) == 0);
    const auto report = darboux::picard_solve_single(make_single(cfg), cfg.solver);
    const auto back = read_solution_csv(fs::path(cfg.out_dir) / "solution.csv",
                                        report.solution[0].grid(), 5);
    CHECK(back == report.solution[0]);
    CHECK_THROWS_AS(read_solution_csv(fs::path(cfg.out_dir) / "solution.csv",
                                      kernel::Grid2(0.5, 1.0, 9, 9, 1.5, 1.5), 4),
                    Error);
    fs::remove_all(cfg.out_dir);
}

TEST_CASE("non-convergence still exits cleanly") {
    RunConfig cfg = load_config("example_3_9");
    cfg.solver.N = cfg.solver.M = 9;
    cfg.solver.max_iter = 1;
    cfg.out_dir = scratch("nc").string();
    std::ostringstream log;
    CHECK(run(cfg, log) == 0);
    const auto report = nlohmann::json::parse(slurp(fs::path(cfg.out_dir) / "report.json"));
    CHECK(report["converged"] == false);
    fs::remove_all(cfg.out_dir);
}

TEST_CASE("coupled run writes both components") {
    RunConfig cfg = load_config("example_4_4");
    cfg.solver.N = cfg.solver.M = 9;
    cfg.solver.K = 4;
    cfg.out_dir = scratch("coupled").string();
    std::ostringstream log;
    CHECK(run(cfg, log) == 0);
    CHECK(fs::exists(fs::path(cfg.out_dir) / "solution_upsilon.csv"));
    CHECK(fs::exists(fs::path(cfg.out_dir) / "solution_omega.csv"));
    const auto report = nlohmann::json::parse(slurp(fs::path(cfg.out_dir) / "report.json"));
    CHECK(std::abs(report["xi"][1].get<double>() - 0.07882) <= 1e-4);
    CHECK(report["domain_shrink"]["S"].get<double>() > 0.0);
    fs::remove_all(cfg.out_dir);
}

TEST_CASE("outputs do not depend on the thread count") {
    RunConfig cfg = load_config("example_3_9");
    cfg.solver.seed = 7;
    cfg.out_dir = scratch("t1").string();
    std::ostringstream log;
    run(cfg, log);
    RunConfig cfg4 = cfg;
    cfg4.solver.threads = 4;
    cfg4.out_dir = scratch("t4").string();
    run(cfg4, log);
    for (const char* f : {"solution.csv", "report.json"}) {
        CHECK(slurp(fs::path(cfg.out_dir) / f) == slurp(fs::path(cfg4.out_dir) / f));
    }
    fs::remove_all(cfg.out_dir);
    fs::remove_all(cfg4.out_dir);
}

TEST_CASE("certify") {
    std::ostringstream out;
    CHECK(certify(load_config("example_4_4"), out) == 0);
    CHECK(out.str().find("contraction: yes") != std::string::npos);
    CHECK(out.str().find("Xi2 = 7.88") != std::string::npos);

    nlohmann::json j = nlohmann::json::parse(kZero);
    j["phi"] = 1.0;
    j["rho"] = 1.0;
    j["domain"] = {{"a", 1.0}, {"b", 1.0}};
    j["rhs"]["f"] = {{"kind", "constant"}, {"value", 0.0}, {"lipschitz", 10.0}};
    std::ostringstream no;
    CHECK(certify(parse_config(j.dump()), no) == 2);
    CHECK(no.str().find("Xi = 1.0000000000000000e+01") != std::string::npos);
    CHECK(no.str().find("contraction: no") != std::string::npos);

    j["rhs"]["f"]["lipschitz"] = 0.0;
    std::ostringstream yes;
    CHECK(certify(parse_config(j.dump()), yes) == 0);
    CHECK(yes.str().find("Xi = 0.0000000000000000e+00") != std::string::npos);

    j["rhs"]["f"] = {{"kind", "linear"}, {"c", {{{"coef", 0.5}}}}};
    std::ostringstream est;
    CHECK(certify(parse_config(j.dump()), est) == 0);
    CHECK(est.str().find("estimate") != std::string::npos);
}

TEST_CASE("oracles verb") {
    std::ostringstream out;
    CHECK(oracles(out) == 0);
    CHECK(out.str().find("all oracles passed") != std::string::npos);
}

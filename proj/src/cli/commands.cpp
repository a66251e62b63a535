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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "fuzzyck/cli/cli.hpp"
#include "fuzzyck/error.hpp"
#include "fuzzyck/oracle/oracle.hpp"

namespace fuzzyck::cli {

using darboux::LevelDeck;
using nlohmann::json;

namespace {

double poly(const std::vector<PolyTerm>& p, double x, double y) {
    double s = 0.0;
    for (const PolyTerm& t : p) s += t.coef * std::pow(x, t.px) * std::pow(y, t.py);
    return s;
}

LevelDeck pick_input(RhsInput input, std::span<const LevelDeck> state) {
    switch (input) {
    case RhsInput::U:
        return state[0];
    case RhsInput::W:
        if (state.size() < 2) throw Error(ErrorKind::RhsRange, "input w needs a coupled state");
        return state[1];
    case RhsInput::Sum:
        if (state.size() < 2) throw Error(ErrorKind::RhsRange, "input sum needs a coupled state");
        return fuzzy::add(state[0], state[1]);
    }
    return state[0];
}

// t -> t / (1 + t), endpoint-wise; increasing on t > -1.
LevelDeck saturate(const LevelDeck& d) {
    std::vector<fuzzy::Interval> levels(d.size());
    for (std::size_t k = 0; k < d.size(); ++k) {
        if (!(d[k].lo > -1.0)) {
            throw Error(ErrorKind::RhsRange, "saturating RHS needs lower endpoints > -1");
        }
        levels[k] = {d[k].lo / (1.0 + d[k].lo), d[k].hi / (1.0 + d[k].hi)};
    }
    return LevelDeck(std::move(levels));
}

std::string json_path(const std::filesystem::path& p) { return p.generic_string(); }

double sup_abs(const kernel::FuzzyGridFn& f) {
    double m = 0.0;
    for (double v : f.lower_data()) m = std::max(m, std::abs(v));
    for (double v : f.upper_data()) m = std::max(m, std::abs(v));
    return m;
}

json lipschitz_json(const darboux::LipschitzValue& v) {
    return {{"value", v.value}, {"source", v.estimated ? "estimate" : "hint"}};
}

struct Existence {
    double k = 0.0;
    double M = 0.0;
    bool M_estimated = false;
    double S = 0.0;
    double T = 0.0;
};

// (S, T) of the existence bound; for a coupled run the smaller of the
// two component boxes.
std::optional<Existence> existence(const RunConfig& cfg,
                                   const std::vector<const kernel::FuzzyGridFn*>& initial) {
    Existence e;
    if (cfg.exist_k) {
        e.k = *cfg.exist_k;
    } else {
        for (const auto* h : initial) e.k = std::max(e.k, 2.0 * sup_abs(*h));
        if (!(e.k > 0.0)) e.k = 1.0;
    }
    const bool coupled = cfg.kind == ProblemKind::Coupled;
    std::vector<std::pair<const RhsSpec*, kernel::FracOrder>> parts = {{&cfg.f, cfg.phi}};
    if (coupled) parts.push_back({&cfg.g, cfg.psi});
    e.S = cfg.domain.a;
    e.T = cfg.domain.b;
    for (std::size_t n = 0; n < parts.size(); ++n) {
        double M = 0.0;
        if (cfg.exist_M) {
            M = *cfg.exist_M;
        } else {
            try {
                M = darboux::estimate_rhs_bound(make_rhs(*parts[n].first), cfg.domain, e.k,
                                                cfg.solver.lipschitz_samples,
                                                cfg.solver.seed + 17 + n, coupled ? 2 : 1, 10);
            } catch (const Error& err) {
                if (err.kind() != ErrorKind::EstimationFailed) throw;
                return std::nullopt;
            }
            e.M_estimated = true;
        }
        e.M = std::max(e.M, M);
        if (M > 0.0) {
            const auto [S, T] =
                darboux::domain_shrink(e.k, M, parts[n].second, cfg.domain.a, cfg.domain.b);
            e.S = std::min(e.S, S);
            e.T = std::min(e.T, T);
        }
    }
    return e;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Config, path.string() + ": cannot open for writing");
    out << text;
    if (!out) throw Error(ErrorKind::Config, path.string() + ": write failed");
}

std::string verdict(bool ok) { return ok ? "yes" : "no"; }

}  // namespace

darboux::CurveFn make_curve(const CurveSpec& spec, int K) {
    std::vector<LevelDeck> coefs;
    std::vector<double> powers;
    for (const Monomial& m : spec.monomials) {
        coefs.push_back(m.coef[0] == m.coef[2]
                            ? fuzzy::crisp(m.coef[1], K)
                            : fuzzy::make_triangular(m.coef[0], m.coef[1], m.coef[2], K));
        powers.push_back(m.power);
    }
    return [coefs, powers, K](double t) {
        LevelDeck sum = fuzzy::crisp(0.0, K);
        for (std::size_t n = 0; n < coefs.size(); ++n) {
            sum = fuzzy::add(sum, fuzzy::scalar_mul(std::pow(t, powers[n]), coefs[n]));
        }
        return sum;
    };
}

darboux::RhsFn make_rhs(const RhsSpec& spec) {
    darboux::RhsFn rhs;
    rhs.lipschitz_hint = spec.lipschitz;
    switch (spec.kind) {
    case RhsKind::Zero:
        rhs.evaluate = [](double, double, std::span<const LevelDeck> st) {
            return fuzzy::crisp(0.0, st[0].resolution());
        };
        if (!rhs.lipschitz_hint) rhs.lipschitz_hint = 0.0;
        break;
    case RhsKind::Constant:
        rhs.evaluate = [v = spec.value](double, double, std::span<const LevelDeck> st) {
            return fuzzy::crisp(v, st[0].resolution());
        };
        if (!rhs.lipschitz_hint) rhs.lipschitz_hint = 0.0;
        break;
    case RhsKind::Linear:
        rhs.evaluate = [spec](double x, double y, std::span<const LevelDeck> st) {
            const LevelDeck s = pick_input(spec.input, st);
            return fuzzy::add(fuzzy::scalar_mul(poly(spec.c, x, y), s),
                              fuzzy::crisp(poly(spec.d, x, y), s.resolution()));
        };
        break;
    case RhsKind::Saturating:
        rhs.evaluate = [spec](double x, double y, std::span<const LevelDeck> st) {
            return fuzzy::scalar_mul(poly(spec.c, x, y), saturate(pick_input(spec.input, st)));
        };
        break;
    case RhsKind::ExpCoupled:
        rhs.evaluate = [spec](double x, double y, std::span<const LevelDeck> st) {
            return fuzzy::scalar_mul(spec.scale * std::exp(-(x + y + spec.shift)),
                                     pick_input(spec.input, st));
        };
        break;
    }
    return rhs;
}

darboux::DarbouxProblem make_single(const RunConfig& cfg) {
    darboux::DarbouxProblem p;
    p.order = cfg.phi;
    p.domain = cfg.domain;
    p.xi1 = make_curve(cfg.xi1, cfg.solver.K);
    p.xi2 = make_curve(cfg.xi2, cfg.solver.K);
    p.rhs = make_rhs(cfg.f);
    p.branch = cfg.hukuhara_branch ? darboux::Branch::S2 : darboux::Branch::S1;
    return p;
}

darboux::CoupledProblem make_coupled(const RunConfig& cfg) {
    darboux::CoupledProblem p;
    p.order_phi = cfg.phi;
    p.order_psi = cfg.psi;
    p.domain = cfg.domain;
    p.xi1 = make_curve(cfg.xi1, cfg.solver.K);
    p.xi2 = make_curve(cfg.xi2, cfg.solver.K);
    p.eta1 = make_curve(cfg.eta1, cfg.solver.K);
    p.eta2 = make_curve(cfg.eta2, cfg.solver.K);
    p.rhs_f = make_rhs(cfg.f);
    p.rhs_g = make_rhs(cfg.g);
    p.branch = cfg.hukuhara_branch ? darboux::CoupledBranch::C3 : darboux::CoupledBranch::C2;
    return p;
}

int run(const RunConfig& cfg, std::ostream& out) {
    const bool coupled = cfg.kind == ProblemKind::Coupled;
    const kernel::Grid2 grid(cfg.domain.a, cfg.domain.b, cfg.solver.N, cfg.solver.M,
                             cfg.phi.rho1, cfg.phi.rho2);
    darboux::SolverReport report;
    std::vector<kernel::FuzzyGridFn> initial;
    if (coupled) {
        const auto p = make_coupled(cfg);
        report = darboux::picard_solve_coupled(p, cfg.solver);
        initial.push_back(darboux::build_h(p.xi1, p.xi2, grid, cfg.solver.K));
        initial.push_back(darboux::build_h(p.eta1, p.eta2, grid, cfg.solver.K));
    } else {
        const auto p = make_single(cfg);
        report = darboux::picard_solve_single(p, cfg.solver);
        initial.push_back(darboux::build_h(p, grid, cfg.solver.K));
    }

    const std::filesystem::path dir(cfg.out_dir);
    std::filesystem::create_directories(dir);
    std::vector<std::filesystem::path> files;
    if (coupled) {
        files = {dir / "solution_upsilon.csv", dir / "solution_omega.csv"};
    } else {
        files = {dir / "solution.csv"};
    }
    for (std::size_t n = 0; n < files.size(); ++n) write_solution_csv(files[n], report.solution[n]);

    json doc;
    doc["name"] = cfg.name;
    doc["kind"] = coupled ? "coupled" : "single";
    doc["branch"] = coupled ? (cfg.hukuhara_branch ? "c3" : "c2")
                            : (cfg.hukuhara_branch ? "s2" : "s1");
    doc["grid"] = {{"N", cfg.solver.N}, {"M", cfg.solver.M}, {"K", cfg.solver.K}};
    doc["tol"] = cfg.solver.tol;
    doc["max_iter"] = cfg.solver.max_iter;
    doc["seed"] = cfg.solver.seed;
    doc["converged"] = report.converged;
    doc["iterations"] = report.iterations;
    doc["residuals"] = report.residuals;
    doc["fixed_point_residual"] = report.fixed_point_residual;
    doc["lipschitz"] = json::array();
    for (const auto& l : report.lipschitz) doc["lipschitz"].push_back(lipschitz_json(l));
    doc["xi"] = report.xi;
    doc["xi_star"] = report.xi_star ? json(*report.xi_star) : json(nullptr);

    std::vector<const kernel::FuzzyGridFn*> init_ptrs;
    for (const auto& h : initial) init_ptrs.push_back(&h);
    if (const auto e = existence(cfg, init_ptrs)) {
        doc["domain_shrink"] = {{"k", e->k},
                                {"M", e->M},
                                {"M_source", cfg.exist_M ? "config" : "estimate"},
                                {"S", e->S},
                                {"T", e->T}};
    } else {
        doc["domain_shrink"] = nullptr;
    }
    doc["outputs"] = json::array();
    for (const auto& f : files) doc["outputs"].push_back(f.filename().generic_string());
    write_text(dir / "report.json", doc.dump(2) + "\n");

    out << cfg.name << ": " << (report.converged ? "converged" : "NOT converged") << " after "
        << report.iterations << " iterations, residual "
        << format_double(report.residuals.empty() ? 0.0 : report.residuals.back()) << "\n";
    for (std::size_t n = 0; n < report.xi.size(); ++n) {
        out << "  Xi" << (report.xi.size() > 1 ? std::to_string(n + 1) : "") << " = "
            << format_double(report.xi[n]) << "\n";
    }
    for (const auto& f : files) out << "  wrote " << json_path(f) << "\n";
    out << "  wrote " << json_path(dir / "report.json") << "\n";
    return 0;
}

int certify(const RunConfig& cfg, std::ostream& out) {
    const bool coupled = cfg.kind == ProblemKind::Coupled;
    auto constant_for = [&](const RhsSpec& spec, std::uint64_t seed) {
        const darboux::RhsFn rhs = make_rhs(spec);
        if (rhs.lipschitz_hint) return darboux::LipschitzValue{*rhs.lipschitz_hint, false};
        darboux::LipschitzSampling s;
        s.arity = coupled ? 2 : 1;
        s.box = cfg.solver.lipschitz_box;
        return darboux::LipschitzValue{
            darboux::estimate_lipschitz(rhs, cfg.domain, cfg.solver.lipschitz_samples, seed, s)
                .value,
            true};
    };
    auto source = [](const darboux::LipschitzValue& v) {
        return v.estimated ? " (estimate, a lower bound)" : " (hint)";
    };
    bool ok = false;
    if (coupled) {
        const auto R1 = constant_for(cfg.f, cfg.solver.seed);
        const auto R2 = constant_for(cfg.g, cfg.solver.seed + 1);
        const auto c = darboux::contraction_constants_coupled(R1.value, R2.value, cfg.domain.a,
                                                              cfg.domain.b, cfg.phi, cfg.psi);
        out << "R1 = " << format_double(R1.value) << source(R1) << "\n";
        out << "R2 = " << format_double(R2.value) << source(R2) << "\n";
        out << "Xi1 = " << format_double(c.xi1) << "\n";
        out << "Xi2 = " << format_double(c.xi2) << "\n";
        out << "Xi* = " << format_double(c.xi_star) << "\n";
        ok = c.xi1 < 1.0 && c.xi2 < 1.0;
    } else {
        const auto R = constant_for(cfg.f, cfg.solver.seed);
        const double xi =
            darboux::contraction_constant(R.value, cfg.domain.a, cfg.domain.b, cfg.phi);
        out << "R = " << format_double(R.value) << source(R) << "\n";
        out << "Xi = " << format_double(xi) << "\n";
        ok = xi < 1.0;
    }
    out << "contraction: " << verdict(ok) << "\n";
    return ok ? 0 : 2;
}

int oracles(std::ostream& out) {
    const auto reports = oracle::run_oracle_suite();
    bool all = true;
    out << std::left << std::setw(30) << "oracle" << std::setw(26) << "computed"
        << std::setw(26) << "reference" << std::setw(12) << "error" << std::setw(12)
        << "tolerance" << "result\n";
    for (const auto& r : reports) {
        const double err = r.relative ? r.rel_err : r.abs_err;
        std::ostringstream e, t;
        e << std::setprecision(3) << err;
        t << std::setprecision(3) << r.tolerance;
        out << std::setw(30) << r.name << std::setw(26) << format_double(r.computed)
            << std::setw(26) << format_double(r.reference) << std::setw(12) << e.str()
            << std::setw(12) << t.str() << (r.passed ? "PASS" : "FAIL") << "\n";
        all = all && r.passed;
    }
    out << (all ? "all oracles passed" : "some oracles FAILED") << "\n";
    return all ? 0 : 1;
}

}  // namespace fuzzyck::cli

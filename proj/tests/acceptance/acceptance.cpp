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

// Acceptance checks. One line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "../support/random_decks.hpp"
#include "fuzzyck/cli/cli.hpp"
#include "fuzzyck/darboux/solver.hpp"
#include "fuzzyck/error.hpp"
#include "fuzzyck/kernel/operators.hpp"
#include "fuzzyck/oracle/oracle.hpp"

using namespace fuzzyck;
using darboux::FracOrder;
using fuzzy::LevelDeck;
using kernel::FuzzyGridFn;
using kernel::Grid2;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void require(Outcome& o, bool ok, const std::string& what) {
    if (!ok) {
        o.pass = false;
        o.detail += " FAILED(" + what + ")";
    }
}

double r2_value() {
    const double g = std::tgamma(2.0 / 3.0);
    return 8.0 * g * g / (9.0 * std::numbers::e * std::numbers::e);
}

FuzzyGridFn crisp_fn(const Grid2& g, int K, const std::function<double(double, double)>& f) {
    return FuzzyGridFn::sample(g, K, [&](double x, double y) { return fuzzy::crisp(f(x, y), K); });
}

// Median of a few repetitions keeps sub-millisecond timings honest.
template <class F>
double time_ms(F&& f, int reps = 1) {
    std::vector<double> t;
    for (int n = 0; n < reps; ++n) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        t.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                        .count());
    }
    std::sort(t.begin(), t.end());
    return t[t.size() / 2];
}

Outcome xi2_certificate() {
    Outcome o;
    darboux::CoupledConstants c;
    const double ms = time_ms(
        [&] {
            c = darboux::contraction_constants_coupled(0.25, r2_value(), 0.5, 1.0,
                                                       {0.5, 0.5, 1.5, 1.5},
                                                       {2.0 / 3.0, 2.0 / 3.0, 1.5, 1.5});
        },
        11);
    o.detail = "Xi2=" + fmt(c.xi2) + " (target 0.07882 +-1e-4), " + fmt(ms) + " ms";
    require(o, std::abs(c.xi2 - 0.07882) <= 1e-4, "value");
    require(o, c.xi2 < 1.0, "contraction");
    require(o, ms < 1.0, "runtime");
    return o;
}

Outcome xi1_certificate() {
    Outcome o;
    double xi = 0.0;
    const double ms =
        time_ms([&] { xi = darboux::contraction_constant(0.25, 0.5, 1.0, {0.5, 0.5, 1.5, 1.5}); },
                11);
    o.detail = "Xi1=" + fmt(xi) + " (target 0.126179 +-1e-5), " + fmt(ms) +
               " ms; note: the alternative figure 0.35689 is not reproduced by the formula, both "
               "are < 1";
    require(o, xi < 1.0, "contraction");
    require(o, std::abs(xi - 0.126179) <= 1e-5, "value");
    require(o, ms < 1.0, "runtime");
    return o;
}

Outcome constant_integral() {
    Outcome o;
    const FracOrder orders[] = {{0.5, 0.5, 1.5, 1.5}, {1.0, 1.0, 1.0, 1.0},
                                {1.0, 0.3, 2.0, 1.0}, {0.25, 1.0, 1.0, 0.5},
                                {2.0 / 3.0, 2.0 / 3.0, 1.5, 1.5}, {0.1, 0.9, 0.7, 3.0}};
    double worst = 0.0;
    const double ms = time_ms([&] {
        for (const FracOrder& ord : orders) {
            const Grid2 g(0.5, 1.0, 65, 65, ord.rho1, ord.rho2);
            const auto I = kernel::katugampola_integral(crisp_fn(g, 1, [](double, double) { return 1.0; }), ord);
            for (int i = 0; i < 65; ++i) {
                for (int j = 0; j < 65; ++j) {
                    const double ref = oracle::closed_form_const_integral(1.0, g.x(i), g.y(j), ord);
                    for (double v : {I.lower(i, j, 0), I.upper(i, j, 1)}) {
                        const double err =
                            ref != 0.0 ? std::abs(v - ref) / std::abs(ref) : std::abs(v);
                        worst = std::max(worst, err);
                    }
                }
            }
        }
    });
    o.detail = "max rel err " + fmt(worst) + " over 6 orders at N=M=65, " + fmt(ms) + " ms";
    require(o, worst <= 1e-10, "accuracy");
    require(o, ms < 1000.0, "runtime");
    return o;
}

Outcome semigroup() {
    Outcome o;
    const FracOrder q{0.25, 0.25, 1.5, 1.5};
    const FracOrder d{0.5, 0.5, 1.5, 1.5};
    double e33 = 0.0;
    double e65 = 0.0;
    const double ms = time_ms([&] {
        for (int n : {33, 65}) {
            const Grid2 g(1.0, 1.0, n, n, 1.5, 1.5);
            const auto f = crisp_fn(g, 1, [](double x, double y) {
                return std::pow(x, 1.5) * std::pow(y, 1.5);
            });
            const double e = kernel::sup_metric(
                kernel::katugampola_integral(kernel::katugampola_integral(f, q), q),
                kernel::katugampola_integral(f, d));
            (n == 33 ? e33 : e65) = e;
        }
    });
    const double order = std::log2(e33 / e65);
    o.detail = "err33=" + fmt(e33) + " err65=" + fmt(e65) + " order=" + fmt(order) + ", " +
               fmt(ms) + " ms";
    require(o, order >= 1.0, "order");
    require(o, e65 <= 5e-3, "accuracy");
    require(o, ms < 10000.0, "runtime");
    return o;
}

Outcome inversion() {
    Outcome o;
    const FracOrder ord{0.5, 0.5, 1.5, 1.5};
    // vanishes on both axes; smooth in (x, y)
    const auto g_fn = [](double x, double y) {
        return std::pow(x, 1.5) * std::pow(y, 1.5) * (1.0 + 0.5 * x * y);
    };
    double e33 = 0.0;
    double e65 = 0.0;
    const double ms = time_ms([&] {
        for (int n : {33, 65}) {
            const Grid2 g(1.0, 1.0, n, n, 1.5, 1.5);
            const auto D =
                kernel::ck_derivative(kernel::katugampola_integral(crisp_fn(g, 10, g_fn), ord), ord);
            double e = 0.0;
            for (int i = 1; i < n; ++i) {
                for (int j = 1; j < n; ++j) {
                    for (int k = 0; k <= 10; ++k) {
                        const double ref = g_fn(g.x(i), g.y(j));
                        e = std::max({e, std::abs(D.lower(i, j, k) - ref),
                                      std::abs(D.upper(i, j, k) - ref)});
                    }
                }
            }
            (n == 33 ? e33 : e65) = e;
        }
    });
    o.detail = "err33=" + fmt(e33) + " err65=" + fmt(e65) + " at K=10, " + fmt(ms) + " ms";
    require(o, e65 <= 1e-2, "accuracy");
    require(o, e65 < e33, "refinement");
    require(o, ms < 10000.0, "runtime");
    return o;
}

Outcome single_picard() {
    Outcome o;
    cli::RunConfig cfg = cli::load_config("example_3_9");
    cfg.solver.N = cfg.solver.M = 33;
    cfg.solver.K = 20;
    cfg.solver.tol = 1e-8;
    const auto problem = cli::make_single(cfg);
    darboux::SolverReport r;
    const double ms = time_ms([&] { r = darboux::picard_solve_single(problem, cfg.solver); });
    require(o, r.converged, "converged");
    require(o, r.iterations <= 50, "iterations");
    const double xi = darboux::contraction_constant(0.25, 0.5, 1.0, cfg.phi);
    double worst_ratio = 0.0;
    int ratios = 0;
    for (std::size_t n = 2; n < r.residuals.size(); ++n) {
        if (r.residuals[n - 1] <= 1e-12) continue;
        worst_ratio = std::max(worst_ratio, r.residuals[n] / r.residuals[n - 1]);
        ++ratios;
    }
    require(o, ratios > 0 && worst_ratio <= xi + 0.05, "residual ratio");
    const auto& u = r.solution.at(0);
    const auto h = darboux::build_h(problem, u.grid(), cfg.solver.K);
    bool nested = true;
    bool grows = true;
    for (int i = 0; i < u.grid().N(); ++i) {
        for (int j = 0; j < u.grid().M(); ++j) {
            nested = nested && testing::nested(u.at(i, j));
            for (int k = 0; k <= cfg.solver.K; ++k) {
                grows = grows && u.upper(i, j, k) - u.lower(i, j, k) >=
                                     h.upper(i, j, k) - h.lower(i, j, k);
            }
        }
    }
    require(o, nested, "nested");
    require(o, grows, "diameter growth");
    o.detail = std::to_string(r.iterations) + " iterations, final residual " +
               fmt(r.residuals.back()) + ", worst ratio " + fmt(worst_ratio) + " vs Xi+0.05=" +
               fmt(xi + 0.05) + ", " + fmt(ms) + " ms" + o.detail;
    require(o, ms < 60000.0, "runtime");
    return o;
}

Outcome coupled_picard() {
    Outcome o;
    cli::RunConfig cfg = cli::load_config("example_4_4");
    cfg.solver.N = cfg.solver.M = 33;
    cfg.solver.K = 20;
    cfg.solver.tol = 1e-8;
    const auto problem = cli::make_coupled(cfg);
    darboux::SolverReport r;
    double decoupled_err = 0.0;
    const double ms = time_ms([&] {
        r = darboux::picard_solve_coupled(problem, cfg.solver);

        // same system with each equation depending on its own unknown only
        darboux::CoupledProblem split = problem;
        cli::RhsSpec f = cfg.f;
        f.input = cli::RhsInput::U;
        cli::RhsSpec g = cfg.g;
        g.input = cli::RhsInput::W;
        split.rhs_f = cli::make_rhs(f);
        split.rhs_g = cli::make_rhs(g);
        const auto both = darboux::picard_solve_coupled(split, cfg.solver);

        darboux::DarbouxProblem a{problem.order_phi, problem.domain, problem.xi1, problem.xi2,
                                  cli::make_rhs(f), darboux::Branch::S1};
        g.input = cli::RhsInput::U;
        darboux::DarbouxProblem b{problem.order_psi, problem.domain, problem.eta1, problem.eta2,
                                  cli::make_rhs(g), darboux::Branch::S1};
        decoupled_err = std::max(
            kernel::sup_metric(both.solution[0], darboux::picard_solve_single(a, cfg.solver).solution[0]),
            kernel::sup_metric(both.solution[1], darboux::picard_solve_single(b, cfg.solver).solution[0]));
    });
    require(o, r.converged, "converged");
    require(o, r.iterations <= 50, "iterations");
    bool nested = true;
    for (const auto& s : r.solution) {
        for (int i = 0; i < s.grid().N(); ++i) {
            for (int j = 0; j < s.grid().M(); ++j) nested = nested && testing::nested(s.at(i, j));
        }
    }
    require(o, nested, "nested");
    require(o, decoupled_err <= 1e-6, "decoupled equivalence");
    o.detail = std::to_string(r.iterations) + " iterations, final residual " +
               fmt(r.residuals.back()) + ", decoupled H*=" + fmt(decoupled_err) + ", " + fmt(ms) +
               " ms" + o.detail;
    require(o, ms < 120000.0, "runtime");
    return o;
}

Outcome crisp_reductions() {
    Outcome o;
    const FracOrder ord{0.5, 0.5, 1.5, 1.5};
    darboux::DarbouxProblem p;
    p.order = ord;
    p.domain = {0.5, 1.0};
    p.xi1 = [](double x) { return fuzzy::crisp(1.0 + std::sin(x), 3); };
    p.xi2 = [](double y) { return fuzzy::crisp(1.0 + y * y, 3); };

    p.rhs.evaluate = [](double, double, std::span<const LevelDeck> s) {
        return fuzzy::crisp(0.0, s[0].resolution());
    };
    darboux::SolverOptions opts;
    opts.N = opts.M = 65;
    opts.K = 3;
    const auto zero = darboux::picard_solve_single(p, opts);
    const auto h = darboux::build_h(p, zero.solution[0].grid(), 3);
    const double zero_err = kernel::sup_metric(zero.solution[0], h);
    require(o, zero_err <= 1e-12, "zero forcing");

    constexpr double lambda = 1.75;
    p.rhs.evaluate = [](double, double, std::span<const LevelDeck> s) {
        return fuzzy::crisp(lambda, s[0].resolution());
    };
    std::vector<double> errs;
    for (int n : {17, 33, 65}) {
        opts.N = opts.M = n;
        const auto r = darboux::picard_solve_single(p, opts);
        const Grid2& g = r.solution[0].grid();
        const auto hn = darboux::build_h(p, g, 3);
        std::vector<double> hs(g.node_count()), us(g.node_count());
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                hs[i * n + j] = hn.lower(i, j, 0);
                us[i * n + j] = r.solution[0].upper(i, j, 3);
            }
        }
        const auto ref = oracle::crisp_darboux_reference(hs, lambda, ord, g);
        errs.push_back(oracle::compare_grids("lambda", us, ref, 1e-3, true).rel_err);
    }
    const bool exact = errs[1] <= 1e-12 && errs[2] <= 1e-12;
    const double order = exact ? 2.0 : std::log2(errs[1] / errs[2]);
    require(o, errs[2] <= 1e-3, "constant forcing");
    require(o, exact || order >= 1.8, "order");
    o.detail = "F=0: H*=" + fmt(zero_err) + "; F=lambda: rel err " + fmt(errs[0]) + ", " +
               fmt(errs[1]) + ", " + fmt(errs[2]) + " at N=17,33,65" +
               (exact ? " (exact to rounding)" : ", order " + fmt(order)) + o.detail;
    return o;
}

Outcome algebra_properties() {
    Outcome o;
    using fuzzy::add;
    using fuzzy::hausdorff_dist;
    using fuzzy::scalar_mul;
    testing::Rng rng(2026);
    int failures = 0;
    int gh_checked = 0;
    const double ms = time_ms([&] {
        for (int n = 0; n < 1000; ++n) {
            const int K = rng.integer(1, 40);
            // general decks: metric axioms and nestedness
            const LevelDeck p = testing::random_deck(rng, K);
            const LevelDeck q = testing::random_deck(rng, K);
            const LevelDeck w = testing::random_deck(rng, K);
            failures += hausdorff_dist(p, q) != hausdorff_dist(q, p);
            failures += hausdorff_dist(p, p) != 0.0;
            failures += (hausdorff_dist(p, q) == 0.0) != (p == q);
            failures += hausdorff_dist(p, q) > hausdorff_dist(p, w) + hausdorff_dist(w, q) + 1e-12;
            failures += !testing::nested(add(p, q));
            failures += !testing::nested(scalar_mul(rng.uniform(-3, 3), p));
            failures += !testing::nested(fuzzy::hukuhara_diff(add(p, q), q));

            // dyadic decks: exact identities
            const LevelDeck a = testing::random_dyadic_deck(rng, K);
            const LevelDeck b = testing::random_dyadic_deck(rng, K);
            const LevelDeck c = testing::random_dyadic_deck(rng, K);
            const LevelDeck d = testing::random_dyadic_deck(rng, K);
            failures += hausdorff_dist(add(a, c), add(b, c)) != hausdorff_dist(a, b);
            failures += hausdorff_dist(add(a, b), add(c, d)) >
                        hausdorff_dist(a, c) + hausdorff_dist(b, d);
            const LevelDeck ab = add(a, b);
            const LevelDeck cd = add(c, d);
            failures += hausdorff_dist(fuzzy::hukuhara_diff(ab, b), fuzzy::hukuhara_diff(cd, d)) >
                        hausdorff_dist(ab, cd) + hausdorff_dist(b, d);
            // one third unrelated pairs, the rest built so a gH difference exists
            const LevelDeck gp = n % 3 == 1 ? add(b, c) : a;
            const LevelDeck gq = n % 3 == 2 ? add(a, scalar_mul(-1, c)) : b;
            try {
                const auto [diff, tag] = fuzzy::gh_diff(gp, gq);
                ++gh_checked;
                failures += !testing::nested(diff);
                if (tag == fuzzy::GHCase::CaseI) {
                    failures += add(gq, diff) != gp;
                } else {
                    failures += add(gp, scalar_mul(-1, diff)) != gq;
                }
            } catch (const Error& e) {
                failures += e.kind() != ErrorKind::GhDifferenceUndefined;
            }
        }
    });
    o.detail = "1000 cases, " + std::to_string(gh_checked) + " gH round trips, " +
               std::to_string(failures) + " violations, " + fmt(ms) + " ms";
    require(o, failures == 0, "properties");
    require(o, gh_checked >= 500, "coverage");
    require(o, ms < 10000.0, "runtime");
    return o;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome determinism(const std::string& binary) {
    Outcome o;
    if (binary.empty()) {
        o.pass = false;
        o.detail = "no CLI path given";
        return o;
    }
    const fs::path base = fs::temp_directory_path() / "fuzzyck_acceptance_determinism";
    fs::remove_all(base);
    bool ran = true;
    for (const char* threads : {"1", "4"}) {
        const std::string cmd = "\"" + binary + "\" run example_3_9 --seed 7 --threads " +
                                threads + " --out \"" + (base / threads).string() +
                                "\" > /dev/null";
        ran = ran && std::system(cmd.c_str()) == 0;
    }
    require(o, ran, "cli exit status");
    std::size_t bytes = 0;
    for (const char* f : {"solution.csv", "report.json"}) {
        const std::string one = slurp(base / "1" / f);
        const std::string four = slurp(base / "4" / f);
        require(o, !one.empty() && one == four, f);
        bytes += one.size();
    }
    o.detail = "threads 1 vs 4, " + std::to_string(bytes) + " bytes compared" + o.detail;
    fs::remove_all(base);
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string binary = argc > 1 ? argv[1] : "";
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"contraction certificate Xi2", xi2_certificate},
        {"contraction certificate Xi1", xi1_certificate},
        {"closed-form constant integral", constant_integral},
        {"semigroup under refinement", semigroup},
        {"derivative inverts integral", inversion},
        {"single Picard solve", single_picard},
        {"coupled Picard solve", coupled_picard},
        {"crisp reductions", crisp_reductions},
        {"fuzzy algebra properties", algebra_properties},
        {"determinism across thread counts", [&] { return determinism(binary); }},
    };
    int failed = 0;
    int index = 0;
    for (const auto& [name, check] : criteria) {
        ++index;
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] %2d %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
        failed += !o.pass;
    }
    std::printf("%d/%d criteria passed\n", index - failed, index);
    return failed == 0 ? 0 : 1;
}

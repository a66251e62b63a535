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

#include "fuzzyck/darboux/solver.hpp"

#include <algorithm>
#include <string>

#include "fuzzyck/error.hpp"
#include "fuzzyck/kernel/operators.hpp"

namespace fuzzyck::darboux {

using kernel::KatugampolaIntegral;

void SolverOptions::validate() const {
    if (N < 3 || M < 3) throw Error(ErrorKind::InvalidParameters, "grid needs N, M >= 3");
    if (K < 1) throw Error(ErrorKind::InvalidParameters, "K must be positive");
    if (!(tol > 0.0)) throw Error(ErrorKind::InvalidParameters, "tol must be positive");
    if (max_iter < 1) throw Error(ErrorKind::InvalidParameters, "max_iter must be positive");
    if (lipschitz_samples < 2) {
        throw Error(ErrorKind::InvalidParameters, "lipschitz_samples must be at least 2");
    }
}

namespace {

constexpr double kCornerTolerance = 1e-12;

LevelDeck checked_curve(const CurveFn& curve, double t, int K, const char* name) {
    LevelDeck deck = curve(t);
    if (deck.resolution() != K) {
        throw Error(ErrorKind::ResolutionMismatch,
                    std::string(name) + " returned a deck with K=" + std::to_string(deck.resolution()));
    }
    return deck;
}

// F evaluated node-wise on the current state.
FuzzyGridFn evaluate_rhs(const RhsFn& rhs, std::span<const FuzzyGridFn* const> state, int threads) {
    const Grid2& grid = state.front()->grid();
    const int K = state.front()->resolution();
    FuzzyGridFn out(grid, K);
    kernel::parallel_for(static_cast<std::size_t>(grid.N()), threads, [&](std::size_t row) {
        const int i = static_cast<int>(row);
        std::vector<LevelDeck> decks;
        for (int j = 0; j < grid.M(); ++j) {
            decks.clear();
            for (const FuzzyGridFn* s : state) decks.push_back(s->at(i, j));
            const LevelDeck value = rhs.evaluate(grid.x(i), grid.y(j), decks);
            if (value.resolution() != K) {
                throw Error(ErrorKind::RhsRange, "right-hand side changed the deck resolution");
            }
            out.set(i, j, value);
        }
    });
    return out;
}

// h + I (S1) or h (-)H (-1) I (S2).
FuzzyGridFn combine(const FuzzyGridFn& h, const FuzzyGridFn& integral, bool hukuhara_form) {
    FuzzyGridFn out(h.grid(), h.resolution());
    const auto hl = h.lower_data();
    const auto hu = h.upper_data();
    const auto il = integral.lower_data();
    const auto iu = integral.upper_data();
    auto ol = out.lower_data();
    auto ou = out.upper_data();
    for (std::size_t n = 0; n < hl.size(); ++n) {
        if (hukuhara_form) {
            ol[n] = hl[n] + iu[n];
            ou[n] = hu[n] + il[n];
        } else {
            ol[n] = hl[n] + il[n];
            ou[n] = hu[n] + iu[n];
        }
    }
    try {
        out.validate();
    } catch (const Error&) {
        if (!hukuhara_form) throw;
        throw Error(ErrorKind::BranchInfeasible,
                    "Hukuhara difference h (-) (-1) I F does not exist at some node");
    }
    return out;
}

LipschitzValue lipschitz_for(const RhsFn& rhs, Domain domain, const SolverOptions& opts, int arity,
                             std::uint64_t seed) {
    if (rhs.lipschitz_hint) return {*rhs.lipschitz_hint, false};
    LipschitzSampling sampling;
    sampling.arity = arity;
    sampling.box = opts.lipschitz_box;
    return {estimate_lipschitz(rhs, domain, opts.lipschitz_samples, seed, sampling).value, true};
}

}  // namespace

FuzzyGridFn build_h(const CurveFn& xi1, const CurveFn& xi2, const Grid2& grid, int K) {
    const LevelDeck corner = checked_curve(xi1, 0.0, K, "xi1");
    const LevelDeck corner2 = checked_curve(xi2, 0.0, K, "xi2");
    if (fuzzy::hausdorff_dist(corner, corner2) > kCornerTolerance) {
        throw Error(ErrorKind::CornerMismatch, "xi1(0) and xi2(0) differ");
    }
    std::vector<LevelDeck> along_x;
    std::vector<LevelDeck> along_y;
    std::vector<LevelDeck> offsets;
    for (int i = 0; i < grid.N(); ++i) along_x.push_back(checked_curve(xi1, grid.x(i), K, "xi1"));
    for (int j = 0; j < grid.M(); ++j) {
        along_y.push_back(checked_curve(xi2, grid.y(j), K, "xi2"));
        try {
            offsets.push_back(fuzzy::hukuhara_diff(along_y.back(), corner));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::DifferenceDoesNotExist) throw;
            throw Error(ErrorKind::IncompatibleInitialData,
                        "xi2(y) (-) xi1(0) does not exist at y = " + std::to_string(grid.y(j)));
        }
    }
    FuzzyGridFn h(grid, K);
    for (int i = 0; i < grid.N(); ++i) {
        for (int j = 0; j < grid.M(); ++j) {
            if (j == 0) {
                h.set(i, j, along_x[i]);
            } else if (i == 0) {
                h.set(i, j, along_y[j]);
            } else {
                h.set(i, j, fuzzy::add(along_x[i], offsets[j]));
            }
        }
    }
    return h;
}

SolverReport picard_solve_single(const DarbouxProblem& problem, const SolverOptions& opts) {
    opts.validate();
    problem.order.validate();
    const Grid2 grid(problem.domain.a, problem.domain.b, opts.N, opts.M, problem.order.rho1,
                     problem.order.rho2);
    const FuzzyGridFn h = build_h(problem, grid, opts.K);
    const KatugampolaIntegral integral(grid, problem.order);
    const bool hukuhara_form = problem.branch == Branch::S2;

    auto image = [&](const FuzzyGridFn& current) {
        const FuzzyGridFn* state[] = {&current};
        const FuzzyGridFn rhs = evaluate_rhs(problem.rhs, state, opts.threads);
        return combine(h, integral.apply(rhs, opts.threads), hukuhara_form);
    };

    SolverReport report;
    FuzzyGridFn current = h;
    double step = 0.0;
    for (int n = 0; n < opts.max_iter; ++n) {
        FuzzyGridFn next = image(current);
        step = kernel::sup_metric(next, current);
        report.residuals.push_back(step);
        current = std::move(next);
        ++report.iterations;
        if (step <= opts.tol) break;
    }
    report.fixed_point_residual = kernel::sup_metric(image(current), current);
    report.converged = step <= opts.tol && report.fixed_point_residual <= opts.tol;
    report.solution.push_back(std::move(current));

    try {
        const LipschitzValue R = lipschitz_for(problem.rhs, problem.domain, opts, 1, opts.seed);
        report.lipschitz.push_back(R);
        report.xi.push_back(
            contraction_constant(R.value, problem.domain.a, problem.domain.b, problem.order));
        report.xi_star = report.xi.front();
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::EstimationFailed) throw;
    }
    return report;
}

SolverReport picard_solve_coupled(const CoupledProblem& problem, const SolverOptions& opts) {
    opts.validate();
    problem.order_phi.validate();
    problem.order_psi.validate();
    if (problem.order_phi.rho1 != problem.order_psi.rho1 ||
        problem.order_phi.rho2 != problem.order_psi.rho2) {
        throw Error(ErrorKind::InvalidParameters, "both equations must share rho");
    }
    const Grid2 grid(problem.domain.a, problem.domain.b, opts.N, opts.M, problem.order_phi.rho1,
                     problem.order_phi.rho2);
    const FuzzyGridFn h = build_h(problem.xi1, problem.xi2, grid, opts.K);
    const FuzzyGridFn g = build_h(problem.eta1, problem.eta2, grid, opts.K);
    const KatugampolaIntegral integral_phi(grid, problem.order_phi);
    const KatugampolaIntegral integral_psi(grid, problem.order_psi);
    const bool hukuhara_form = problem.branch == CoupledBranch::C3;

    auto image = [&](const FuzzyGridFn& u, const FuzzyGridFn& w) {
        const FuzzyGridFn* state[] = {&u, &w};
        const FuzzyGridFn fu = evaluate_rhs(problem.rhs_f, state, opts.threads);
        const FuzzyGridFn gw = evaluate_rhs(problem.rhs_g, state, opts.threads);
        return std::pair{combine(h, integral_phi.apply(fu, opts.threads), hukuhara_form),
                         combine(g, integral_psi.apply(gw, opts.threads), hukuhara_form)};
    };

    SolverReport report;
    FuzzyGridFn u = h;
    FuzzyGridFn w = g;
    double step = 0.0;
    for (int n = 0; n < opts.max_iter; ++n) {
        auto [next_u, next_w] = image(u, w);
        step = std::max(kernel::sup_metric(next_u, u), kernel::sup_metric(next_w, w));
        report.residuals.push_back(step);
        u = std::move(next_u);
        w = std::move(next_w);
        ++report.iterations;
        if (step <= opts.tol) break;
    }
    {
        const auto [img_u, img_w] = image(u, w);
        report.fixed_point_residual =
            std::max(kernel::sup_metric(img_u, u), kernel::sup_metric(img_w, w));
    }
    report.converged = step <= opts.tol && report.fixed_point_residual <= opts.tol;
    report.solution.push_back(std::move(u));
    report.solution.push_back(std::move(w));

    try {
        const LipschitzValue R1 = lipschitz_for(problem.rhs_f, problem.domain, opts, 2, opts.seed);
        const LipschitzValue R2 =
            lipschitz_for(problem.rhs_g, problem.domain, opts, 2, opts.seed + 1);
        const CoupledConstants c = contraction_constants_coupled(
            R1.value, R2.value, problem.domain.a, problem.domain.b, problem.order_phi,
            problem.order_psi);
        report.lipschitz = {R1, R2};
        report.xi = {c.xi1, c.xi2};
        report.xi_star = c.xi_star;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::EstimationFailed) throw;
    }
    return report;
}

}  // namespace fuzzyck::darboux

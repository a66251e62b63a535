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

#include "fuzzyck/oracle/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "fuzzyck/darboux/constants.hpp"
#include "fuzzyck/darboux/solver.hpp"
#include "fuzzyck/error.hpp"
#include "fuzzyck/fuzzy/level_deck.hpp"
#include "fuzzyck/kernel/operators.hpp"

namespace fuzzyck::oracle {

namespace {

// Abscissae u = X - w^(1/phi) on a uniform w grid, and trapezoid weights
// that already include 1/phi.
void substituted_axis(double X, double phi, int panels, std::vector<double>& u,
                      std::vector<double>& w) {
    const double top = std::pow(X, phi);
    const double step = top / panels;
    u.resize(panels + 1);
    w.assign(panels + 1, step / phi);
    for (int k = 0; k <= panels; ++k) {
        const double s = k == panels ? top : k * step;
        u[k] = std::max(0.0, X - std::pow(s, 1.0 / phi));
    }
    u[panels] = 0.0;
    w.front() *= 0.5;
    w.back() *= 0.5;
}

}  // namespace

double brute_force_integral(const ScalarFn& f, const FracOrder& order, double x, double y,
                            int panels) {
    order.validate();
    if (panels < 1024) throw Error(ErrorKind::InvalidParameters, "panels must be at least 1024");
    if (x < 0.0 || y < 0.0) throw Error(ErrorKind::InvalidParameters, "x and y must be >= 0");
    if (x == 0.0 || y == 0.0) return 0.0;
    const double U = std::pow(x, order.rho1);
    const double V = std::pow(y, order.rho2);
    std::vector<double> u, wu, v, wv;
    substituted_axis(U, order.phi1, panels, u, wu);
    substituted_axis(V, order.phi2, panels, v, wv);
    std::vector<double> s(u.size()), t(v.size());
    for (std::size_t k = 0; k < u.size(); ++k) s[k] = std::pow(u[k], 1.0 / order.rho1);
    for (std::size_t k = 0; k < v.size(); ++k) t[k] = std::pow(v[k], 1.0 / order.rho2);

    double total = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < t.size(); ++j) row += wv[j] * f(s[i], t[j]);
        total += wu[i] * row;
    }
    const double pre = std::pow(order.rho1, -order.phi1) * std::pow(order.rho2, -order.phi2) /
                       (std::tgamma(order.phi1) * std::tgamma(order.phi2));
    return pre * total;
}

double closed_form_const_integral(double c, double x, double y, const FracOrder& order) {
    return c * std::pow(x, order.rho1 * order.phi1) * std::pow(y, order.rho2 * order.phi2) /
           (std::pow(order.rho1, order.phi1) * std::pow(order.rho2, order.phi2) *
            std::tgamma(order.phi1 + 1.0) * std::tgamma(order.phi2 + 1.0));
}

double closed_form_monomial_integral(double x, double y, const FracOrder& order) {
    // integral_0^U (U-u)^(phi-1) u du = U^(phi+1) B(phi, 2)
    auto axis = [](double X, double phi, double rho) {
        const double U = std::pow(X, rho);
        return std::pow(rho, -phi) * std::pow(U, phi + 1.0) / std::tgamma(phi + 2.0);
    };
    return axis(x, order.phi1, order.rho1) * axis(y, order.phi2, order.rho2);
}

std::vector<double> crisp_darboux_reference(std::span<const double> h, double lambda,
                                            const FracOrder& order, const Grid2& grid) {
    if (h.size() != grid.node_count()) {
        throw Error(ErrorKind::InvalidGrid, "h does not match the grid");
    }
    std::vector<double> out(h.size());
    for (int i = 0; i < grid.N(); ++i) {
        for (int j = 0; j < grid.M(); ++j) {
            const std::size_t n = static_cast<std::size_t>(i) * grid.M() + j;
            out[n] = h[n] + closed_form_const_integral(lambda, grid.x(i), grid.y(j), order);
        }
    }
    return out;
}

OracleReport make_report(std::string name, double computed, double reference, double tolerance,
                         bool relative) {
    OracleReport r;
    r.name = std::move(name);
    r.computed = computed;
    r.reference = reference;
    r.abs_err = std::abs(computed - reference);
    r.rel_err = reference != 0.0 ? r.abs_err / std::abs(reference) : r.abs_err;
    r.tolerance = tolerance;
    r.relative = relative;
    r.passed = (relative ? r.rel_err : r.abs_err) <= tolerance;
    return r;
}

OracleReport compare_grids(std::string name, std::span<const double> computed,
                           std::span<const double> reference, double tolerance, bool relative) {
    if (computed.size() != reference.size() || computed.empty()) {
        throw Error(ErrorKind::InvalidGrid, "grid sizes differ");
    }
    OracleReport worst = make_report(name, computed[0], reference[0], tolerance, relative);
    for (std::size_t n = 1; n < computed.size(); ++n) {
        OracleReport r = make_report(name, computed[n], reference[n], tolerance, relative);
        if ((relative ? r.rel_err > worst.rel_err : r.abs_err > worst.abs_err)) worst = r;
    }
    return worst;
}

std::vector<OracleReport> run_oracle_suite() {
    std::vector<OracleReport> out;
    const FracOrder half{0.5, 0.5, 1.5, 1.5};

    const auto one = [](double, double) { return 1.0; };
    out.push_back(make_report("brute_force_const", brute_force_integral(one, half, 0.5, 1.0, 4096),
                              closed_form_const_integral(1.0, 0.5, 1.0, half), 1e-6, true));

    const auto mono = [&](double s, double t) {
        return std::pow(s, half.rho1) * std::pow(t, half.rho2);
    };
    out.push_back(make_report("brute_force_monomial",
                              brute_force_integral(mono, half, 0.5, 1.0, 4096),
                              closed_form_monomial_integral(0.5, 1.0, half), 1e-6, true));

    out.push_back(make_report("closed_form_riemann_liouville",
                              closed_form_const_integral(1.0, 1.0, 1.0, {0.5, 0.5, 1.0, 1.0}),
                              4.0 / std::numbers::pi, 1e-14, true));

    const Grid2 grid(0.5, 1.0, 33, 33, half.rho1, half.rho2);
    {
        const auto crisp_one = kernel::FuzzyGridFn::sample(
            grid, 4, [](double, double) { return fuzzy::crisp(1.0, 4); });
        const auto I = kernel::katugampola_integral(crisp_one, half);
        std::vector<double> computed, reference;
        for (int i = 1; i < grid.N(); ++i) {
            for (int j = 1; j < grid.M(); ++j) {
                computed.push_back(I.lower(i, j, 0));
                reference.push_back(closed_form_const_integral(1.0, grid.x(i), grid.y(j), half));
            }
        }
        out.push_back(compare_grids("kernel_const_integral", computed, reference, 1e-10, true));
    }
    {
        const auto g = kernel::FuzzyGridFn::sample(grid, 4, [&](double x, double y) {
            return fuzzy::crisp(mono(x, y), 4);
        });
        const auto I = kernel::katugampola_integral(g, half);
        std::vector<double> computed, reference;
        for (int i = 1; i < grid.N(); ++i) {
            for (int j = 1; j < grid.M(); ++j) {
                computed.push_back(I.upper(i, j, 4));
                reference.push_back(closed_form_monomial_integral(grid.x(i), grid.y(j), half));
            }
        }
        out.push_back(compare_grids("kernel_monomial_integral", computed, reference, 1e-10, true));
    }

    const double e = std::numbers::e;
    const double g23 = std::tgamma(2.0 / 3.0);
    const auto coupled = darboux::contraction_constants_coupled(
        0.25, 8.0 * g23 * g23 / (9.0 * e * e), 0.5, 1.0, half, {2.0 / 3.0, 2.0 / 3.0, 1.5, 1.5});
    out.push_back(make_report("contraction_xi2", coupled.xi2, 0.07882, 1e-4, false));
    out.push_back(make_report("contraction_xi1", coupled.xi1, 0.126179, 1e-5, false));

    const auto [S, T] = darboux::domain_shrink(2.0, 1.0, {0.5, 0.5, 1.0, 1.0}, 1.0, 1.0);
    out.push_back(make_report("domain_shrink_S", S, 0.61685027506808491, 1e-12, true));
    out.push_back(make_report("domain_shrink_T", T, 0.61685027506808491, 1e-12, true));

    {
        constexpr double lambda = 2.0;
        darboux::DarbouxProblem p;
        p.order = half;
        p.domain = {0.5, 1.0};
        p.xi1 = [](double x) { return fuzzy::crisp(1.0 + x, 2); };
        p.xi2 = [](double y) { return fuzzy::crisp(1.0 + y * y, 2); };
        p.rhs.evaluate = [](double, double, std::span<const fuzzy::LevelDeck>) {
            return fuzzy::crisp(lambda, 2);
        };
        p.rhs.lipschitz_hint = 0.0;
        darboux::SolverOptions opts;
        opts.N = opts.M = 33;
        opts.K = 2;
        const auto report = darboux::picard_solve_single(p, opts);
        const auto h = darboux::build_h(p, report.solution[0].grid(), opts.K);
        std::vector<double> h_surface(h.grid().node_count());
        std::vector<double> computed(h_surface.size());
        for (int i = 0; i < h.grid().N(); ++i) {
            for (int j = 0; j < h.grid().M(); ++j) {
                h_surface[static_cast<std::size_t>(i) * h.grid().M() + j] = h.lower(i, j, 0);
                computed[static_cast<std::size_t>(i) * h.grid().M() + j] =
                    report.solution[0].lower(i, j, 0);
            }
        }
        const auto reference = crisp_darboux_reference(h_surface, lambda, half, h.grid());
        out.push_back(compare_grids("crisp_darboux_constant_rhs", computed, reference, 1e-3, true));
    }
    return out;
}

}  // namespace fuzzyck::oracle

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

#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fuzzyck/kernel/grid.hpp"

namespace fuzzyck::oracle {

using kernel::FracOrder;
using kernel::Grid2;

using ScalarFn = std::function<double(double s, double t)>;

/// Mixed Katugampola integral of a crisp f at (x, y) by composite trapezoid
/// on the substituted variable w = (X - u)^phi, which removes the kernel
/// singularity. `panels` per axis, at least 1024.
double brute_force_integral(const ScalarFn& f, const FracOrder& order, double x, double y,
                            int panels);

/// c x^(rho1 phi1) y^(rho2 phi2) / (rho1^phi1 rho2^phi2 Gamma(phi1+1) Gamma(phi2+1)).
double closed_form_const_integral(double c, double x, double y, const FracOrder& order);

/// Integral of f(s, t) = s^rho1 t^rho2 via the Beta identity.
double closed_form_monomial_integral(double x, double y, const FracOrder& order);

/// h + lambda * closed_form_const_integral(1, .) at every node. `h` is
/// row-major, index i * M + j.
std::vector<double> crisp_darboux_reference(std::span<const double> h, double lambda,
                                            const FracOrder& order, const Grid2& grid);

struct OracleReport {
    std::string name;
    double computed = 0.0;
    double reference = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    bool passed = false;
    double tolerance = 0.0;
    /// Which error the tolerance applies to.
    bool relative = true;
};

OracleReport make_report(std::string name, double computed, double reference, double tolerance,
                         bool relative);

/// Worst node of a grid comparison, reported as a single OracleReport.
OracleReport compare_grids(std::string name, std::span<const double> computed,
                           std::span<const double> reference, double tolerance, bool relative);

std::vector<OracleReport> run_oracle_suite();

}  // namespace fuzzyck::oracle

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

#include "fuzzyck/darboux/constants.hpp"
#include "fuzzyck/darboux/problem.hpp"

namespace fuzzyck::darboux {

using kernel::classify_d_monotone;

/// h(x, y) = xi1(x) + (xi2(y) (-)H xi1(0)), sampled on the grid. The axis rows
/// are copied from the curves, so h(x, 0) = xi1(x) and h(0, y) = xi2(y).
/// Throws CornerMismatch when D(xi1(0), xi2(0)) > 1e-12 and
/// IncompatibleInitialData when a Hukuhara difference does not exist.
FuzzyGridFn build_h(const CurveFn& xi1, const CurveFn& xi2, const Grid2& grid, int K);

inline FuzzyGridFn build_h(const DarbouxProblem& problem, const Grid2& grid, int K) {
    return build_h(problem.xi1, problem.xi2, grid, K);
}

/// Picard iteration u_{n+1} = h + I^{phi,rho} F(., ., u_n) from u_0 = h
/// (branch S2 uses the Hukuhara form instead). Stops when
/// H*(u_{n+1}, u_n) <= tol or after max_iter steps; non-convergence is
/// reported, not thrown.
SolverReport picard_solve_single(const DarbouxProblem& problem, const SolverOptions& opts);

/// Joint iteration of (upsilon, omega) with the max of the two H* residuals
/// as stopping measure.
SolverReport picard_solve_coupled(const CoupledProblem& problem, const SolverOptions& opts);

}  // namespace fuzzyck::darboux

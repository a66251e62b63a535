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

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "fuzzyck/fuzzy/level_deck.hpp"
#include "fuzzyck/kernel/grid.hpp"
#include "fuzzyck/kernel/grid_fn.hpp"

namespace fuzzyck::darboux {

using fuzzy::LevelDeck;
using kernel::FracOrder;
using kernel::FuzzyGridFn;
using kernel::Grid2;

/// Initial curve: x -> xi(x) (or y -> xi(y)).
using CurveFn = std::function<LevelDeck(double)>;

/// Right-hand side F(x, y, state). `state` holds one deck for a single
/// problem and (upsilon, omega) for a coupled one. Evaluators signal inputs
/// outside their domain by throwing Error(RhsRange).
struct RhsFn {
    std::function<LevelDeck(double x, double y, std::span<const LevelDeck> state)> evaluate;
    /// Lipschitz constant R with respect to D, when known.
    std::optional<double> lipschitz_hint;
};

struct Domain {
    double a = 1.0;
    double b = 1.0;
};

/// S1: u = h + I F.  S2: u = h (-)H (-1) I F.
enum class Branch { S1, S2 };
/// C2 and C3 are the coupled counterparts of S1 and S2.
enum class CoupledBranch { C2, C3 };

struct DarbouxProblem {
    FracOrder order;
    Domain domain;
    CurveFn xi1;
    CurveFn xi2;
    RhsFn rhs;
    Branch branch = Branch::S1;
};

struct CoupledProblem {
    FracOrder order_phi;
    FracOrder order_psi;
    Domain domain;
    CurveFn xi1;
    CurveFn xi2;
    CurveFn eta1;
    CurveFn eta2;
    RhsFn rhs_f;
    RhsFn rhs_g;
    CoupledBranch branch = CoupledBranch::C2;
};

/// Box from which random decks are drawn when estimating constants.
struct SampleBox {
    double lo = 0.0;
    double hi = 1.0;
};

struct SolverOptions {
    int N = 33;
    int M = 33;
    int K = fuzzy::kDefaultLevels;
    double tol = 1e-8;
    int max_iter = 200;
    int threads = 1;
    /// Drives the Lipschitz estimate used when a RHS has no hint.
    std::uint64_t seed = 0;
    int lipschitz_samples = 512;
    SampleBox lipschitz_box;

    void validate() const;
};

struct LipschitzValue {
    double value = 0.0;
    /// True when sampled (a lower bound on the true constant), false for a hint.
    bool estimated = false;
};

struct SolverReport {
    /// One grid function for a single problem, (upsilon, omega) when coupled.
    std::vector<FuzzyGridFn> solution;
    /// H* between successive iterates.
    std::vector<double> residuals;
    /// H* between the final iterate and its image.
    double fixed_point_residual = 0.0;
    /// Xi for a single problem, (Xi1, Xi2) when coupled; empty if no
    /// Lipschitz constant was available.
    std::vector<double> xi;
    std::optional<double> xi_star;
    std::vector<LipschitzValue> lipschitz;
    int iterations = 0;
    bool converged = false;
};

}  // namespace fuzzyck::darboux

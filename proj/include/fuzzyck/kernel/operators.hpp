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

#include <optional>
#include <span>

#include "fuzzyck/kernel/grid.hpp"
#include "fuzzyck/kernel/grid_fn.hpp"
#include "fuzzyck/kernel/quadrature.hpp"

namespace fuzzyck::kernel {

/// Mixed Katugampola fractional integral on a fixed grid.
///
/// In u = x^rho1, v = y^rho2 the operator is a tensor product of two Abel
/// integrals scaled by rho1^-phi1 rho2^-phi2. Weight tables are built once at
/// construction; apply() may be called repeatedly. Every weight is
/// nonnegative, so endpoints are integrated independently and decks stay
/// nested. Values on the axes x = 0 or y = 0 are exactly zero.
class KatugampolaIntegral {
public:
    /// Throws OrderOutOfRange for an invalid order and InvalidGrid when the
    /// order's rho differs from the grid's.
    KatugampolaIntegral(const Grid2& grid, const FracOrder& order);

    /// Same operator with raw Abel orders in [0, 1]; an order of 0 leaves
    /// that axis untouched. Used for the 1 - phi integral of the derivative.
    static KatugampolaIntegral with_abel_orders(const Grid2& grid, double alpha1, double alpha2);

    const Grid2& grid() const noexcept { return grid_; }

    /// Integral of one crisp surface stored row-major (N x M).
    void apply_surface(std::span<const double> in, std::span<double> out) const;

    FuzzyGridFn apply(const FuzzyGridFn& f, int threads = 1) const;

private:
    KatugampolaIntegral(const Grid2& grid, double alpha1, double alpha2);

    Grid2 grid_;
    double alpha1_;
    double alpha2_;
    std::optional<WeightTable> wx_;
    std::optional<WeightTable> wy_;
    double prefactor_;
};

FuzzyGridFn katugampola_integral(const FuzzyGridFn& f, const FracOrder& order, int threads = 1);

/// Axes on which mixed_partial_gh differentiates.
enum class DerivativeAxes { Physical, Transformed };

/// Differentiability type of the mixed gH partial.
enum class GhDiffType { TypeI, TypeII };

struct MixedPartial {
    FuzzyGridFn value;
    /// TypeI when the lower surface derivative never exceeds the upper one and
    /// the raw [L, U] decks are nested at every node; TypeII otherwise.
    GhDiffType type;
    /// Largest endpoint shift applied by the monotone-envelope repair.
    double repair;
};

/// Largest repair mixed_partial_gh accepts before failing.
inline constexpr double kDerivativeRepairLimit = 1e-6;

/// Mixed second gH partial by second-order finite differences of the
/// endpoint surfaces (three-point, one-sided at the boundary; exact for
/// quadratics). Throws GridTooSmall below 2 x 2 and GhDifferenceUndefined
/// when the envelope repair exceeds kDerivativeRepairLimit.
MixedPartial mixed_partial_gh(const FuzzyGridFn& f, DerivativeAxes axes = DerivativeAxes::Physical);

/// Caputo-Katugampola gH fractional derivative of a d-monotone function,
/// evaluated as I^{1-phi,rho}(x^{1-rho1} y^{1-rho2} d2f/dxdy). The weight
/// times the physical mixed partial equals rho1 rho2 d2f/dudv, which is what
/// is computed, so the weight itself is never evaluated on the axes.
/// Throws MixedMonotonicity when f is not d-monotone on the grid.
FuzzyGridFn ck_derivative(const FuzzyGridFn& f, const FracOrder& order, int threads = 1);

}  // namespace fuzzyck::kernel

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
#include <utility>

#include "fuzzyck/darboux/problem.hpp"

namespace fuzzyck::darboux {

/// Xi = R / (Gamma(phi1+1) Gamma(phi2+1)) (a^rho1/rho1)^phi1 (b^rho2/rho2)^phi2.
/// Xi < 1 certifies that the Picard operator is a contraction under H*.
double contraction_constant(double R, double a, double b, const FracOrder& order);

struct CoupledConstants {
    double xi1 = 0.0;
    double xi2 = 0.0;
    /// max(xi1, xi2): below 1 exactly when both components are.
    double xi_star = 0.0;
};

CoupledConstants contraction_constants_coupled(double R1, double R2, double a, double b,
                                               const FracOrder& order_phi,
                                               const FracOrder& order_psi);

/// Existence-domain shrink. The bound
///   x1^rho1 y1^rho2 <= [k Gamma(1+phi1) Gamma(1+phi2) rho1^phi1 rho2^phi2 / (2M)]^(1/(phi1 phi2))
/// is split evenly, x1^rho1 = y1^rho2, and the result clipped to (a, b).
std::pair<double, double> domain_shrink(double k, double M, const FracOrder& order, double a,
                                        double b);

struct LipschitzSampling {
    /// Number of deck arguments the RHS takes (1 single, 2 coupled).
    int arity = 1;
    int K = 10;
    SampleBox box;
};

struct LipschitzEstimate {
    double value = 0.0;
    int samples_used = 0;
};

/// Seeded sampling estimate of the Lipschitz constant of `rhs` on
/// [0,a] x [0,b]: max of D(F(u), F(u')) / sum_i D(u_i, u'_i). This is a lower
/// bound on the true constant. Samples the RHS rejects (RhsRange) are
/// skipped. Throws EstimationFailed when no usable pair was drawn.
LipschitzEstimate estimate_lipschitz(const RhsFn& rhs, Domain domain, int sample_count,
                                     std::uint64_t seed, const LipschitzSampling& sampling = {});

/// Sampled sup of D(F(x, y, u), 0) over decks with D(u, 0) <= k, the M of
/// the existence bound. Like estimate_lipschitz, a lower bound.
double estimate_rhs_bound(const RhsFn& rhs, Domain domain, double k, int sample_count,
                          std::uint64_t seed, int arity = 1, int K = 10);

}  // namespace fuzzyck::darboux

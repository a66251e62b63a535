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

#include "fuzzyck/darboux/constants.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "fuzzyck/error.hpp"

namespace fuzzyck::darboux {

namespace {

// Bit-level uniform draws; std::uniform_real_distribution is not specified
// tightly enough to reproduce across standard libraries.
class Uniform {
public:
    explicit Uniform(std::uint64_t seed) : rng_(seed) {}

    double next() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
    double in(double lo, double hi) { return lo + (hi - lo) * next(); }

private:
    std::mt19937_64 rng_;
};

std::array<double, 4> sorted_params(Uniform& u, double lo, double hi) {
    std::array<double, 4> p{u.in(lo, hi), u.in(lo, hi), u.in(lo, hi), u.in(lo, hi)};
    std::sort(p.begin(), p.end());
    return p;
}

LevelDeck deck_from(const std::array<double, 4>& p, int K) {
    return fuzzy::make_trapezoidal(p[0], p[1], p[2], p[3], K);
}

void require_domain(Domain domain) {
    if (!(domain.a > 0.0) || !(domain.b > 0.0)) {
        throw Error(ErrorKind::InvalidParameters, "domain extents must be positive");
    }
}

}  // namespace

double contraction_constant(double R, double a, double b, const FracOrder& order) {
    if (!(R >= 0.0) || !std::isfinite(R)) {
        throw Error(ErrorKind::InvalidParameters, "Lipschitz constant must be nonnegative");
    }
    require_domain({a, b});
    order.validate();
    const double gammas = kernel::gamma_fn(order.phi1 + 1.0) * kernel::gamma_fn(order.phi2 + 1.0);
    return R / gammas * std::pow(std::pow(a, order.rho1) / order.rho1, order.phi1) *
           std::pow(std::pow(b, order.rho2) / order.rho2, order.phi2);
}

CoupledConstants contraction_constants_coupled(double R1, double R2, double a, double b,
                                               const FracOrder& order_phi,
                                               const FracOrder& order_psi) {
    CoupledConstants out;
    out.xi1 = contraction_constant(R1, a, b, order_phi);
    out.xi2 = contraction_constant(R2, a, b, order_psi);
    out.xi_star = std::max(out.xi1, out.xi2);
    return out;
}

std::pair<double, double> domain_shrink(double k, double M, const FracOrder& order, double a,
                                        double b) {
    if (!(k > 0.0) || !(M > 0.0)) {
        throw Error(ErrorKind::InvalidParameters, "k and M must be positive");
    }
    require_domain({a, b});
    order.validate();
    const double base = k * kernel::gamma_fn(1.0 + order.phi1) * kernel::gamma_fn(1.0 + order.phi2) *
                        std::pow(order.rho1, order.phi1) * std::pow(order.rho2, order.phi2) /
                        (2.0 * M);
    const double bound = std::pow(base, 1.0 / (order.phi1 * order.phi2));
    const double half = std::sqrt(bound);
    const double x1 = std::pow(half, 1.0 / order.rho1);
    const double y1 = std::pow(half, 1.0 / order.rho2);
    return {std::min(x1, a), std::min(y1, b)};
}

LipschitzEstimate estimate_lipschitz(const RhsFn& rhs, Domain domain, int sample_count,
                                     std::uint64_t seed, const LipschitzSampling& sampling) {
    if (sample_count < 2) {
        throw Error(ErrorKind::InvalidParameters, "Lipschitz estimation needs at least 2 samples");
    }
    if (sampling.arity < 1 || !(sampling.box.hi > sampling.box.lo)) {
        throw Error(ErrorKind::InvalidParameters, "invalid Lipschitz sampling setup");
    }
    require_domain(domain);
    Uniform u(seed);
    const double span = sampling.box.hi - sampling.box.lo;
    LipschitzEstimate est;
    std::vector<LevelDeck> first;
    std::vector<LevelDeck> second;
    for (int s = 0; s < sample_count; ++s) {
        const double x = u.in(0.0, domain.a);
        const double y = u.in(0.0, domain.b);
        // Alternate far pairs with near pairs; the latter probe local slopes.
        const bool near = (s % 2) == 1;
        first.clear();
        second.clear();
        double denom = 0.0;
        for (int c = 0; c < sampling.arity; ++c) {
            const auto p = sorted_params(u, sampling.box.lo, sampling.box.hi);
            std::array<double, 4> q;
            if (near) {
                const double delta = 1e-3 * span;
                for (std::size_t m = 0; m < 4; ++m) q[m] = p[m] + delta * u.in(-1.0, 1.0);
                std::sort(q.begin(), q.end());
            } else {
                q = sorted_params(u, sampling.box.lo, sampling.box.hi);
            }
            first.push_back(deck_from(p, sampling.K));
            second.push_back(deck_from(q, sampling.K));
            denom += fuzzy::hausdorff_dist(first.back(), second.back());
        }
        if (!(denom > 0.0)) continue;
        try {
            const LevelDeck f1 = rhs.evaluate(x, y, first);
            const LevelDeck f2 = rhs.evaluate(x, y, second);
            est.value = std::max(est.value, fuzzy::hausdorff_dist(f1, f2) / denom);
            ++est.samples_used;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::RhsRange) throw;
        }
    }
    if (est.samples_used == 0) {
        throw Error(ErrorKind::EstimationFailed, "no usable sample pair for the Lipschitz estimate");
    }
    return est;
}

double estimate_rhs_bound(const RhsFn& rhs, Domain domain, double k, int sample_count,
                          std::uint64_t seed, int arity, int K) {
    if (!(k > 0.0) || sample_count < 1 || arity < 1) {
        throw Error(ErrorKind::InvalidParameters, "invalid RHS bound sampling setup");
    }
    require_domain(domain);
    Uniform u(seed);
    double bound = 0.0;
    int used = 0;
    std::vector<LevelDeck> state;
    for (int s = 0; s < sample_count; ++s) {
        const double x = u.in(0.0, domain.a);
        const double y = u.in(0.0, domain.b);
        state.clear();
        for (int c = 0; c < arity; ++c) state.push_back(deck_from(sorted_params(u, -k, k), K));
        try {
            const LevelDeck f = rhs.evaluate(x, y, state);
            bound = std::max(bound, fuzzy::hausdorff_dist(f, fuzzy::crisp(0.0, f.resolution())));
            ++used;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::RhsRange) throw;
        }
    }
    if (used == 0) throw Error(ErrorKind::EstimationFailed, "RHS rejected every sample");
    return bound;
}

}  // namespace fuzzyck::darboux

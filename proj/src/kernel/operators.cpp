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

#include "fuzzyck/kernel/operators.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "fuzzyck/error.hpp"

namespace fuzzyck::kernel {

using fuzzy::Interval;
using fuzzy::LevelDeck;

namespace {

void check_abel_order(double alpha) {
    if (alpha == 0.0) return;
    if (!(alpha >= kMinOrder && alpha <= 1.0)) {
        throw Error(ErrorKind::OrderOutOfRange,
                    "Abel order " + std::to_string(alpha) + " not in {0} or [1e-3, 1]");
    }
}

void check_rho(const Grid2& grid, const FracOrder& order) {
    if (grid.rho1() != order.rho1 || grid.rho2() != order.rho2) {
        throw Error(ErrorKind::InvalidGrid, "grid was built for a different rho");
    }
}

const FracOrder& checked(const Grid2& grid, const FracOrder& order) {
    order.validate();
    check_rho(grid, order);
    return order;
}

// Three-point derivative stencil of one node.
struct Stencil {
    int start = 0;
    int count = 0;
    double c[3] = {0.0, 0.0, 0.0};
};

std::vector<Stencil> derivative_stencils(std::span<const double> nodes) {
    const int n = static_cast<int>(nodes.size());
    std::vector<Stencil> out(static_cast<std::size_t>(n));
    if (n == 2) {
        const double h = nodes[1] - nodes[0];
        for (auto& s : out) s = Stencil{0, 2, {-1.0 / h, 1.0 / h, 0.0}};
        return out;
    }
    for (int i = 0; i < n; ++i) {
        Stencil s;
        s.start = std::clamp(i - 1, 0, n - 3);
        s.count = 3;
        const double t = nodes[i];
        const double p0 = nodes[s.start];
        const double p1 = nodes[s.start + 1];
        const double p2 = nodes[s.start + 2];
        s.c[0] = ((t - p1) + (t - p2)) / ((p0 - p1) * (p0 - p2));
        s.c[1] = ((t - p0) + (t - p2)) / ((p1 - p0) * (p1 - p2));
        s.c[2] = ((t - p0) + (t - p1)) / ((p2 - p0) * (p2 - p1));
        out[i] = s;
    }
    return out;
}

// d2/dadb of a row-major N x M surface.
void mixed_difference(const std::vector<Stencil>& sx, const std::vector<Stencil>& sy,
                      std::span<const double> in, std::span<double> out) {
    const std::size_t N = sx.size();
    const std::size_t M = sy.size();
    std::vector<double> dy(N * M);
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < M; ++j) {
            const Stencil& s = sy[j];
            double acc = 0.0;
            for (int m = 0; m < s.count; ++m) acc += s.c[m] * in[i * M + s.start + m];
            dy[i * M + j] = acc;
        }
    }
    for (std::size_t i = 0; i < N; ++i) {
        const Stencil& s = sx[i];
        for (std::size_t j = 0; j < M; ++j) {
            double acc = 0.0;
            for (int m = 0; m < s.count; ++m) acc += s.c[m] * dy[(s.start + m) * M + j];
            out[i * M + j] = acc;
        }
    }
}

}  // namespace

KatugampolaIntegral::KatugampolaIntegral(const Grid2& grid, const FracOrder& order)
    : KatugampolaIntegral(grid, checked(grid, order).phi1, order.phi2) {}

KatugampolaIntegral KatugampolaIntegral::with_abel_orders(const Grid2& grid, double alpha1,
                                                          double alpha2) {
    check_abel_order(alpha1);
    check_abel_order(alpha2);
    return KatugampolaIntegral(grid, alpha1, alpha2);
}

KatugampolaIntegral::KatugampolaIntegral(const Grid2& grid, double alpha1, double alpha2)
    : grid_(grid),
      alpha1_(alpha1),
      alpha2_(alpha2),
      prefactor_(std::pow(grid.rho1(), -alpha1) * std::pow(grid.rho2(), -alpha2)) {
    if (alpha1 > 0.0) wx_ = quad_weights_1d(grid_.u_nodes(), alpha1);
    if (alpha2 > 0.0) wy_ = quad_weights_1d(grid_.v_nodes(), alpha2);
}

void KatugampolaIntegral::apply_surface(std::span<const double> in, std::span<double> out) const {
    const std::size_t N = static_cast<std::size_t>(grid_.N());
    const std::size_t M = static_cast<std::size_t>(grid_.M());
    std::vector<double> along_y(N * M);
    for (std::size_t i = 0; i < N; ++i) {
        const auto src = in.subspan(i * M, M);
        const auto dst = std::span<double>(along_y).subspan(i * M, M);
        if (wy_) {
            wy_->apply(src, dst);
        } else {
            std::copy(src.begin(), src.end(), dst.begin());
        }
    }
    std::vector<double> column(N);
    std::vector<double> result(N);
    for (std::size_t j = 0; j < M; ++j) {
        for (std::size_t i = 0; i < N; ++i) column[i] = along_y[i * M + j];
        if (wx_) {
            wx_->apply(column, result);
        } else {
            result = column;
        }
        for (std::size_t i = 0; i < N; ++i) out[i * M + j] = prefactor_ * result[i];
    }
    if (wx_) std::fill(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(M), 0.0);
    if (wy_) {
        for (std::size_t i = 0; i < N; ++i) out[i * M] = 0.0;
    }
}

FuzzyGridFn KatugampolaIntegral::apply(const FuzzyGridFn& f, int threads) const {
    if (!(f.grid() == grid_)) {
        throw Error(ErrorKind::InvalidGrid, "function sampled on a different grid");
    }
    FuzzyGridFn out(grid_, f.resolution());
    const std::size_t surfaces = 2 * f.levels();
    parallel_for(surfaces, threads, [&](std::size_t s) {
        const int k = static_cast<int>(s / 2);
        const bool upper = (s % 2) == 1;
        std::vector<double> in(grid_.node_count());
        std::vector<double> res(grid_.node_count());
        f.gather(k, upper, in);
        apply_surface(in, res);
        out.scatter(k, upper, res);
    });
    out.validate();
    return out;
}

FuzzyGridFn katugampola_integral(const FuzzyGridFn& f, const FracOrder& order, int threads) {
    return KatugampolaIntegral(f.grid(), order).apply(f, threads);
}

MixedPartial mixed_partial_gh(const FuzzyGridFn& f, DerivativeAxes axes) {
    const Grid2& grid = f.grid();
    if (grid.N() < 2 || grid.M() < 2) {
        throw Error(ErrorKind::GridTooSmall, "mixed partial needs at least a 2 x 2 grid");
    }
    const bool physical = axes == DerivativeAxes::Physical;
    const auto sx = derivative_stencils(physical ? grid.x_nodes() : grid.u_nodes());
    const auto sy = derivative_stencils(physical ? grid.y_nodes() : grid.v_nodes());

    const std::size_t nodes = grid.node_count();
    const std::size_t levels = f.levels();
    // Raw derivative endpoints, laid out [level][node].
    std::vector<double> lo(levels * nodes);
    std::vector<double> hi(levels * nodes);
    std::vector<double> surface(nodes);
    for (std::size_t k = 0; k < levels; ++k) {
        f.gather(static_cast<int>(k), false, surface);
        mixed_difference(sx, sy, surface, std::span<double>(lo).subspan(k * nodes, nodes));
        f.gather(static_cast<int>(k), true, surface);
        mixed_difference(sx, sy, surface, std::span<double>(hi).subspan(k * nodes, nodes));
    }

    FuzzyGridFn out(grid, f.resolution());
    bool type_one = true;
    double repair = 0.0;
    std::vector<Interval> deck(levels);
    const int M = grid.M();
    for (std::size_t node = 0; node < nodes; ++node) {
        for (std::size_t k = 0; k < levels; ++k) {
            const double L = lo[k * nodes + node];
            const double U = hi[k * nodes + node];
            if (L > U) type_one = false;
            if (k > 0) {
                const double Lp = lo[(k - 1) * nodes + node];
                const double Up = hi[(k - 1) * nodes + node];
                if (L < Lp - kDerivativeRepairLimit || U > Up + kDerivativeRepairLimit) type_one = false;
            }
            deck[k] = {std::min(L, U), std::max(L, U)};
        }
        try {
            repair = std::max(repair, LevelDeck::repair(deck, kDerivativeRepairLimit));
        } catch (const Error&) {
            throw Error(ErrorKind::GhDifferenceUndefined,
                        "mixed gH partial is not a fuzzy number at node " + std::to_string(node));
        }
        const int i = static_cast<int>(node) / M;
        const int j = static_cast<int>(node) % M;
        const std::size_t base = out.index(i, j, 0);
        for (std::size_t k = 0; k < levels; ++k) {
            out.lower_data()[base + k] = deck[k].lo;
            out.upper_data()[base + k] = deck[k].hi;
        }
    }
    return {std::move(out), type_one ? GhDiffType::TypeI : GhDiffType::TypeII, repair};
}

FuzzyGridFn ck_derivative(const FuzzyGridFn& f, const FracOrder& order, int threads) {
    order.validate();
    check_rho(f.grid(), order);
    if (classify_d_monotone(f) == fuzzy::Monotonicity::Mixed) {
        throw Error(ErrorKind::MixedMonotonicity,
                    "Caputo-Katugampola derivative needs a d-monotone function");
    }
    MixedPartial partial = mixed_partial_gh(f, DerivativeAxes::Transformed);
    const double weight = order.rho1 * order.rho2;
    for (double& v : partial.value.lower_data()) v *= weight;
    for (double& v : partial.value.upper_data()) v *= weight;
    const auto op = KatugampolaIntegral::with_abel_orders(f.grid(), 1.0 - order.phi1, 1.0 - order.phi2);
    return op.apply(partial.value, threads);
}

}  // namespace fuzzyck::kernel

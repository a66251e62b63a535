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

#include "fuzzyck/kernel/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fuzzyck/error.hpp"
#include "fuzzyck/kernel/grid.hpp"

namespace fuzzyck::kernel {

namespace {

// (k+1)^beta - 2 k^beta + (k-1)^beta for k >= 1, written to avoid the
// cancellation of the naive form at large k.
double second_difference(double k, double beta) {
    if (k == 1.0) return std::pow(2.0, beta) - 2.0;
    const double up = std::expm1(beta * std::log1p(1.0 / k));
    const double down = std::expm1(beta * std::log1p(-1.0 / k));
    return std::pow(k, beta) * (up + down);
}

// (n-1)^(alpha+1) - (n-1-alpha) n^alpha for n >= 1.
double first_column(double n, double alpha) {
    if (n == 1.0) return alpha;
    return std::pow(n, alpha) * ((n - 1.0) * std::expm1(alpha * std::log1p(-1.0 / n)) + alpha);
}

}  // namespace

WeightTable::WeightTable(std::size_t nodes, double step, double alpha)
    : n_(nodes), alpha_(alpha), w_(nodes * (nodes + 1) / 2, 0.0) {
    const double scale = std::pow(step, alpha) / gamma_fn(alpha + 2.0);
    const double beta = alpha + 1.0;
    for (std::size_t i = 1; i < n_; ++i) {
        double* row = w_.data() + i * (i + 1) / 2;
        const double n = static_cast<double>(i);
        row[0] = scale * first_column(n, alpha);
        for (std::size_t j = 1; j < i; ++j) {
            row[j] = scale * second_difference(static_cast<double>(i - j), beta);
        }
        row[i] = scale;
        for (std::size_t j = 0; j <= i; ++j) {
            // Rounding can push a vanishing weight a hair below zero.
            if (row[j] < 0.0) {
                if (row[j] < -1e-14 * scale) {
                    throw Error(ErrorKind::InvalidParameters, "negative quadrature weight");
                }
                row[j] = 0.0;
            }
        }
    }
}

void WeightTable::apply(std::span<const double> in, std::span<double> out) const {
    for (std::size_t i = 0; i < n_; ++i) {
        const auto w = row(i);
        double acc = 0.0;
        for (std::size_t j = 0; j <= i; ++j) acc += w[j] * in[j];
        out[i] = acc;
    }
}

WeightTable quad_weights_1d(std::span<const double> axis_nodes, double order) {
    if (!(order >= kMinOrder && order <= 1.0)) {
        throw Error(ErrorKind::OrderOutOfRange,
                    "quadrature order " + std::to_string(order) + " not in [1e-3, 1]");
    }
    if (axis_nodes.size() < 2 || axis_nodes.front() != 0.0) {
        throw Error(ErrorKind::InvalidGrid, "axis nodes must start at 0 with at least two nodes");
    }
    const double top = axis_nodes.back();
    const double step = top / static_cast<double>(axis_nodes.size() - 1);
    if (!(step > 0.0)) throw Error(ErrorKind::InvalidGrid, "axis nodes must increase");
    for (std::size_t j = 0; j < axis_nodes.size(); ++j) {
        if (std::abs(axis_nodes[j] - static_cast<double>(j) * step) > 1e-9 * top) {
            throw Error(ErrorKind::InvalidGrid, "axis nodes are not uniform");
        }
    }
    return WeightTable(axis_nodes.size(), step, order);
}

}  // namespace fuzzyck::kernel

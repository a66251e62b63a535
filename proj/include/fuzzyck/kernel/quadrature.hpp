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

#include <span>
#include <vector>

namespace fuzzyck::kernel {

/// Lower-triangular product-trapezoid weights for the Abel integral
///
///   (1 / Gamma(alpha)) * int_0^{u_i} (u_i - s)^(alpha - 1) g(s) ds
///
/// on uniform nodes u_j = j h, exact when g is piecewise linear. Row i holds
/// the i + 1 weights for targets u_0..u_i; every weight is nonnegative.
class WeightTable {
public:
    WeightTable(std::size_t nodes, double step, double alpha);

    std::size_t size() const noexcept { return n_; }
    double order() const noexcept { return alpha_; }
    std::span<const double> row(std::size_t i) const noexcept {
        return {w_.data() + i * (i + 1) / 2, i + 1};
    }

    /// out_i = sum_{j <= i} w_ij in_j, summed in ascending j.
    void apply(std::span<const double> in, std::span<double> out) const;

private:
    std::size_t n_;
    double alpha_;
    std::vector<double> w_;
};

/// Builds the weight table for nodes that must be uniform and start at 0.
/// Throws OrderOutOfRange unless kMinOrder <= order <= 1, InvalidGrid for
/// non-uniform nodes.
WeightTable quad_weights_1d(std::span<const double> axis_nodes, double order);

}  // namespace fuzzyck::kernel

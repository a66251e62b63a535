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

#include "fuzzyck/kernel/grid.hpp"

#include <cmath>
#include <string>

#include "fuzzyck/error.hpp"

namespace fuzzyck::kernel {

void FracOrder::validate() const {
    auto check_phi = [](double phi, const char* name) {
        if (!(phi >= kMinOrder && phi <= 1.0)) {
            throw Error(ErrorKind::OrderOutOfRange,
                        std::string(name) + " = " + std::to_string(phi) + " not in [1e-3, 1]");
        }
    };
    check_phi(phi1, "phi1");
    check_phi(phi2, "phi2");
    if (!(rho1 > 0.0 && std::isfinite(rho1)) || !(rho2 > 0.0 && std::isfinite(rho2))) {
        throw Error(ErrorKind::OrderOutOfRange, "scale parameters rho must be positive");
    }
}

double gamma_fn(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw Error(ErrorKind::InvalidParameters, "gamma_fn needs a positive argument");
    }
    return std::tgamma(x);
}

namespace {

void fill_axis(double extent, int count, double rho, std::vector<double>& phys,
               std::vector<double>& trans) {
    phys.resize(static_cast<std::size_t>(count));
    trans.resize(static_cast<std::size_t>(count));
    const double top = std::pow(extent, rho);
    const double step = top / (count - 1);
    for (int i = 0; i < count; ++i) {
        trans[i] = i * step;
        phys[i] = std::pow(trans[i], 1.0 / rho);
    }
    trans.back() = top;
    phys.front() = 0.0;
    phys.back() = extent;
}

}  // namespace

Grid2::Grid2(double a, double b, int N, int M, double rho1, double rho2)
    : a_(a), b_(b), rho1_(rho1), rho2_(rho2) {
    if (!(a > 0.0 && std::isfinite(a)) || !(b > 0.0 && std::isfinite(b))) {
        throw Error(ErrorKind::InvalidGrid, "domain extents must be positive");
    }
    if (N < 2 || M < 2) {
        throw Error(ErrorKind::InvalidGrid, "need at least two nodes per axis");
    }
    if (!(rho1 > 0.0 && std::isfinite(rho1)) || !(rho2 > 0.0 && std::isfinite(rho2))) {
        throw Error(ErrorKind::InvalidGrid, "scale parameters rho must be positive");
    }
    fill_axis(a, N, rho1, x_, u_);
    fill_axis(b, M, rho2, y_, v_);
    for (std::size_t i = 1; i < x_.size(); ++i) {
        if (!(x_[i] > x_[i - 1])) throw Error(ErrorKind::InvalidGrid, "x nodes collapse");
    }
    for (std::size_t j = 1; j < y_.size(); ++j) {
        if (!(y_[j] > y_[j - 1])) throw Error(ErrorKind::InvalidGrid, "y nodes collapse");
    }
}

}  // namespace fuzzyck::kernel

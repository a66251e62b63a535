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

/// Orders below this are rejected: the Gamma factors become near-singular.
inline constexpr double kMinOrder = 1e-3;

/// Fractional order pair (phi1, phi2) in (0, 1]^2 with scale pair (rho1, rho2) > 0.
struct FracOrder {
    double phi1 = 1.0;
    double phi2 = 1.0;
    double rho1 = 1.0;
    double rho2 = 1.0;

    /// Throws OrderOutOfRange unless kMinOrder <= phi_i <= 1 and rho_i > 0.
    void validate() const;

    friend bool operator==(const FracOrder&, const FracOrder&) = default;
};

/// Euler Gamma function for x > 0; throws InvalidParameters otherwise.
double gamma_fn(double x);

/// Rectangular grid over [0, a] x [0, b] whose nodes are uniform in the
/// transformed coordinates u = x^rho1, v = y^rho2.
class Grid2 {
public:
    /// Throws InvalidGrid for non-positive extents, fewer than two nodes per
    /// axis or a non-positive scale.
    Grid2(double a, double b, int N, int M, double rho1, double rho2);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    int N() const noexcept { return static_cast<int>(x_.size()); }
    int M() const noexcept { return static_cast<int>(y_.size()); }
    double rho1() const noexcept { return rho1_; }
    double rho2() const noexcept { return rho2_; }

    double x(int i) const noexcept { return x_[i]; }
    double y(int j) const noexcept { return y_[j]; }
    double u(int i) const noexcept { return u_[i]; }
    double v(int j) const noexcept { return v_[j]; }

    std::span<const double> x_nodes() const noexcept { return x_; }
    std::span<const double> y_nodes() const noexcept { return y_; }
    std::span<const double> u_nodes() const noexcept { return u_; }
    std::span<const double> v_nodes() const noexcept { return v_; }

    std::size_t node_count() const noexcept { return x_.size() * y_.size(); }

    friend bool operator==(const Grid2&, const Grid2&) = default;

private:
    double a_;
    double b_;
    double rho1_;
    double rho2_;
    std::vector<double> x_;
    std::vector<double> y_;
    std::vector<double> u_;
    std::vector<double> v_;
};

}  // namespace fuzzyck::kernel

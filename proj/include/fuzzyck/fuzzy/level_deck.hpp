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

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace fuzzyck::fuzzy {

/// Default number of r-grid subdivisions (K + 1 levels).
inline constexpr int kDefaultLevels = 40;

/// Rounding slack tolerated (and repaired) by nestedness validation.
inline constexpr double kNestTolerance = 1e-12;

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double width() const noexcept { return hi - lo; }
    bool contains(const Interval& other) const noexcept {
        return lo <= other.lo && other.hi <= hi;
    }
    friend bool operator==(const Interval&, const Interval&) = default;
};

enum class GHCase { CaseI, CaseII };

enum class Monotonicity { DIncreasing, DDecreasing, Mixed };

/// A fuzzy number stored as its r-level cuts on the uniform grid r_k = k/K.
///
/// Level 0 is the support, level K the core. Levels are nested: lower
/// endpoints never decrease and upper endpoints never increase with r.
/// Instances are immutable; every constructor validates the deck.
class LevelDeck {
public:
    /// Validates `levels` (size K + 1, K >= 1). Violations no larger than
    /// kNestTolerance are repaired by widening the enclosing level; larger
    /// ones throw InvalidParameters.
    explicit LevelDeck(std::vector<Interval> levels);

    /// Validates and repairs in place, returning the largest endpoint shift
    /// applied. Throws InvalidParameters when a violation exceeds `tolerance`.
    static double repair(std::vector<Interval>& levels, double tolerance);

    int resolution() const noexcept { return static_cast<int>(levels_.size()) - 1; }
    std::size_t size() const noexcept { return levels_.size(); }
    const Interval& operator[](std::size_t k) const noexcept { return levels_[k]; }
    const Interval& level(int k) const;
    std::span<const Interval> levels() const noexcept { return levels_; }

    double r(int k) const noexcept { return static_cast<double>(k) / resolution(); }

    bool is_crisp() const noexcept;

    friend bool operator==(const LevelDeck&, const LevelDeck&) = default;

private:
    std::vector<Interval> levels_;
};

LevelDeck crisp(double value, int K = kDefaultLevels);
LevelDeck make_triangular(double a, double b, double c, int K = kDefaultLevels);
/// Trapezoid with support [a, d] and core [b, c].
LevelDeck make_trapezoidal(double a, double b, double c, double d, int K = kDefaultLevels);

LevelDeck add(const LevelDeck& p, const LevelDeck& q);
LevelDeck scalar_mul(double lambda, const LevelDeck& p);

/// w with q + w = p; throws DifferenceDoesNotExist when w is not a deck.
LevelDeck hukuhara_diff(const LevelDeck& p, const LevelDeck& q);

/// Generalized Hukuhara difference. CaseI means p = q + w, CaseII means
/// q = p + (-1)w. When both hold the result is tagged CaseI.
std::pair<LevelDeck, GHCase> gh_diff(const LevelDeck& p, const LevelDeck& q);

/// Hausdorff distance, sup taken over the r-grid.
double hausdorff_dist(const LevelDeck& p, const LevelDeck& q);

double diam(const LevelDeck& p, int r_index);

bool approx_equal(const LevelDeck& p, const LevelDeck& q, double tol);

inline LevelDeck operator+(const LevelDeck& p, const LevelDeck& q) { return add(p, q); }
inline LevelDeck operator*(double lambda, const LevelDeck& p) { return scalar_mul(lambda, p); }

}  // namespace fuzzyck::fuzzy

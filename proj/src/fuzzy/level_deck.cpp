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

#include "fuzzyck/fuzzy/level_deck.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "fuzzyck/error.hpp"

namespace fuzzyck::fuzzy {

namespace {

// Returns the largest repair shift, or nullopt when some violation exceeds
// `tolerance` (or an endpoint is not finite).
std::optional<double> try_repair(std::vector<Interval>& levels, double tolerance) {
    double shift = 0.0;
    for (auto& iv : levels) {
        if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi)) return std::nullopt;
        if (iv.lo > iv.hi) {
            const double gap = iv.lo - iv.hi;
            if (gap > tolerance) return std::nullopt;
            std::swap(iv.lo, iv.hi);
            shift = std::max(shift, gap);
        }
    }
    // Widen outer levels so that they enclose the next inner one.
    for (std::size_t k = levels.size() - 1; k-- > 0;) {
        const Interval& inner = levels[k + 1];
        Interval& outer = levels[k];
        if (outer.lo > inner.lo) {
            const double gap = outer.lo - inner.lo;
            if (gap > tolerance) return std::nullopt;
            outer.lo = inner.lo;
            shift = std::max(shift, gap);
        }
        if (outer.hi < inner.hi) {
            const double gap = inner.hi - outer.hi;
            if (gap > tolerance) return std::nullopt;
            outer.hi = inner.hi;
            shift = std::max(shift, gap);
        }
    }
    return shift;
}

void require_same_resolution(const LevelDeck& p, const LevelDeck& q) {
    if (p.resolution() != q.resolution()) {
        throw Error(ErrorKind::ResolutionMismatch,
                    "decks have K=" + std::to_string(p.resolution()) + " and K=" +
                        std::to_string(q.resolution()));
    }
}

}  // namespace

LevelDeck::LevelDeck(std::vector<Interval> levels) : levels_(std::move(levels)) {
    if (levels_.size() < 2) {
        throw Error(ErrorKind::InvalidParameters, "a level deck needs K >= 1");
    }
    repair(levels_, kNestTolerance);
}

double LevelDeck::repair(std::vector<Interval>& levels, double tolerance) {
    auto shift = try_repair(levels, tolerance);
    if (!shift) {
        throw Error(ErrorKind::InvalidParameters, "levels are not nested closed intervals");
    }
    return *shift;
}

const Interval& LevelDeck::level(int k) const {
    if (k < 0 || k > resolution()) {
        throw Error(ErrorKind::IndexOutOfRange, "r-index " + std::to_string(k) +
                                                    " outside [0, " +
                                                    std::to_string(resolution()) + "]");
    }
    return levels_[static_cast<std::size_t>(k)];
}

bool LevelDeck::is_crisp() const noexcept {
    // Nested, so the support being a point forces every level to that point.
    return levels_.front().lo == levels_.front().hi;
}

LevelDeck crisp(double value, int K) {
    if (K < 1) throw Error(ErrorKind::InvalidParameters, "K must be positive");
    return LevelDeck(std::vector<Interval>(static_cast<std::size_t>(K) + 1, {value, value}));
}

LevelDeck make_triangular(double a, double b, double c, int K) {
    if (!(a <= b && b <= c)) {
        throw Error(ErrorKind::InvalidParameters, "triangular number needs a <= b <= c");
    }
    return make_trapezoidal(a, b, b, c, K);
}

LevelDeck make_trapezoidal(double a, double b, double c, double d, int K) {
    if (!(a <= b && b <= c && c <= d)) {
        throw Error(ErrorKind::InvalidParameters, "trapezoidal number needs a <= b <= c <= d");
    }
    if (K < 1) throw Error(ErrorKind::InvalidParameters, "K must be positive");
    std::vector<Interval> levels(static_cast<std::size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) {
        const double r = static_cast<double>(k) / K;
        levels[k] = {a + (b - a) * r, d - (d - c) * r};
    }
    // Endpoints of the core exactly, independent of rounding in the ramp.
    levels[K] = {b, c};
    return LevelDeck(std::move(levels));
}

LevelDeck add(const LevelDeck& p, const LevelDeck& q) {
    require_same_resolution(p, q);
    std::vector<Interval> out(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        out[k] = {p[k].lo + q[k].lo, p[k].hi + q[k].hi};
    }
    return LevelDeck(std::move(out));
}

LevelDeck scalar_mul(double lambda, const LevelDeck& p) {
    std::vector<Interval> out(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        out[k] = lambda >= 0.0 ? Interval{lambda * p[k].lo, lambda * p[k].hi}
                               : Interval{lambda * p[k].hi, lambda * p[k].lo};
    }
    return LevelDeck(std::move(out));
}

LevelDeck hukuhara_diff(const LevelDeck& p, const LevelDeck& q) {
    require_same_resolution(p, q);
    std::vector<Interval> out(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        out[k] = {p[k].lo - q[k].lo, p[k].hi - q[k].hi};
    }
    if (!try_repair(out, kNestTolerance)) {
        throw Error(ErrorKind::DifferenceDoesNotExist,
                    "level-wise endpoint differences do not form a fuzzy number");
    }
    return LevelDeck(std::move(out));
}

std::pair<LevelDeck, GHCase> gh_diff(const LevelDeck& p, const LevelDeck& q) {
    require_same_resolution(p, q);
    std::vector<Interval> out(p.size());
    bool case_one = true;
    bool case_two = true;
    for (std::size_t k = 0; k < p.size(); ++k) {
        const double dl = p[k].lo - q[k].lo;
        const double du = p[k].hi - q[k].hi;
        case_one = case_one && dl <= du;
        case_two = case_two && dl >= du;
        out[k] = {std::min(dl, du), std::max(dl, du)};
    }
    if (!try_repair(out, kNestTolerance)) {
        throw Error(ErrorKind::GhDifferenceUndefined, "candidate levels are not nested");
    }
    if (!case_one && !case_two) {
        throw Error(ErrorKind::GhDifferenceUndefined,
                    "neither p = q + w nor q = p + (-1)w holds on every level");
    }
    return {LevelDeck(std::move(out)), case_one ? GHCase::CaseI : GHCase::CaseII};
}

double hausdorff_dist(const LevelDeck& p, const LevelDeck& q) {
    require_same_resolution(p, q);
    double d = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        d = std::max({d, std::abs(p[k].lo - q[k].lo), std::abs(p[k].hi - q[k].hi)});
    }
    return d;
}

double diam(const LevelDeck& p, int r_index) { return p.level(r_index).width(); }

bool approx_equal(const LevelDeck& p, const LevelDeck& q, double tol) {
    return p.resolution() == q.resolution() && hausdorff_dist(p, q) <= tol;
}

}  // namespace fuzzyck::fuzzy

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

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "fuzzyck/fuzzy/level_deck.hpp"

namespace fuzzyck::testing {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(gen_() >> 11) * 0x1.0p-53);
    }
    int integer(int lo, int hi) { return lo + static_cast<int>(gen_() % (hi - lo + 1)); }
    // multiple of 1/64 in [lo, hi]; sums and differences of these are exact
    double dyadic(int lo, int hi) { return integer(lo * 64, hi * 64) / 64.0; }

private:
    std::mt19937_64 gen_;
};

inline bool nested(const fuzzy::LevelDeck& d) {
    for (std::size_t k = 0; k < d.size(); ++k) {
        if (!(d[k].lo <= d[k].hi)) return false;
        if (k > 0 && (d[k].lo < d[k - 1].lo || d[k].hi > d[k - 1].hi)) return false;
    }
    return true;
}

// Core interval plus nonnegative outward steps per level.
inline fuzzy::LevelDeck random_deck(Rng& rng, int K, double span = 4.0) {
    std::vector<fuzzy::Interval> levels(K + 1);
    double lo = rng.uniform(-span, span);
    double hi = lo + rng.uniform(0.0, 0.5);
    levels[K] = {lo, hi};
    for (int k = K - 1; k >= 0; --k) {
        lo -= rng.uniform(0.0, 0.3);
        hi += rng.uniform(0.0, 0.3);
        levels[k] = {lo, hi};
    }
    return fuzzy::LevelDeck(std::move(levels));
}

inline fuzzy::LevelDeck random_dyadic_deck(Rng& rng, int K) {
    std::vector<fuzzy::Interval> levels(K + 1);
    double lo = rng.dyadic(-4, 4);
    double hi = lo + rng.dyadic(0, 1);
    levels[K] = {lo, hi};
    for (int k = K - 1; k >= 0; --k) {
        lo -= rng.integer(0, 16) / 64.0;
        hi += rng.integer(0, 16) / 64.0;
        levels[k] = {lo, hi};
    }
    return fuzzy::LevelDeck(std::move(levels));
}

inline fuzzy::LevelDeck random_nonnegative_deck(Rng& rng, int K) {
    std::vector<fuzzy::Interval> levels(K + 1);
    double lo = rng.uniform(2.0, 4.0);
    double hi = lo + rng.uniform(0.0, 0.5);
    levels[K] = {lo, hi};
    for (int k = K - 1; k >= 0; --k) {
        lo = std::max(0.0, lo - rng.uniform(0.0, 0.1));
        hi += rng.uniform(0.0, 0.3);
        levels[k] = {lo, hi};
    }
    return fuzzy::LevelDeck(std::move(levels));
}

}  // namespace fuzzyck::testing

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
#include <functional>
#include <span>
#include <vector>

#include "fuzzyck/fuzzy/level_deck.hpp"
#include "fuzzyck/kernel/grid.hpp"

namespace fuzzyck::kernel {

/// A fuzzy-valued function sampled at every node of a Grid2.
///
/// Endpoints are stored flat, one contiguous deck per node:
/// index ((i * M) + j) * (K + 1) + k.
class FuzzyGridFn {
public:
    /// All nodes crisp(0).
    FuzzyGridFn(Grid2 grid, int K);

    static FuzzyGridFn sample(const Grid2& grid, int K,
                              const std::function<fuzzy::LevelDeck(double, double)>& fn);

    const Grid2& grid() const noexcept { return grid_; }
    int resolution() const noexcept { return K_; }
    std::size_t levels() const noexcept { return static_cast<std::size_t>(K_) + 1; }

    fuzzy::LevelDeck at(int i, int j) const;
    void set(int i, int j, const fuzzy::LevelDeck& deck);

    double lower(int i, int j, int k) const noexcept { return lower_[index(i, j, k)]; }
    double upper(int i, int j, int k) const noexcept { return upper_[index(i, j, k)]; }

    std::span<double> lower_data() noexcept { return lower_; }
    std::span<double> upper_data() noexcept { return upper_; }
    std::span<const double> lower_data() const noexcept { return lower_; }
    std::span<const double> upper_data() const noexcept { return upper_; }

    std::size_t index(int i, int j, int k) const noexcept {
        return (static_cast<std::size_t>(i) * grid_.M() + static_cast<std::size_t>(j)) * levels() +
               static_cast<std::size_t>(k);
    }

    /// Copies one endpoint surface (level k) into a row-major N x M buffer.
    void gather(int k, bool upper, std::span<double> surface) const;
    void scatter(int k, bool upper, std::span<const double> surface);

    /// Re-validates every deck after raw writes. Violations up to `tolerance`
    /// are repaired; the largest repair is returned. Larger violations throw
    /// InvalidParameters.
    double validate(double tolerance = fuzzy::kNestTolerance);

    friend bool operator==(const FuzzyGridFn&, const FuzzyGridFn&) = default;

private:
    Grid2 grid_;
    int K_;
    std::vector<double> lower_;
    std::vector<double> upper_;
};

/// Supremum metric H*: max over nodes of the Hausdorff distance.
double sup_metric(const FuzzyGridFn& f, const FuzzyGridFn& g);

/// Checks whether every r-level diameter is monotone along both axes.
/// Constant diameters count as d-increasing.
fuzzy::Monotonicity classify_d_monotone(const FuzzyGridFn& f);

/// Runs fn(0), ..., fn(count - 1) on up to `threads` workers. Each index is
/// processed by exactly one worker, so per-index results do not depend on
/// the thread count.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace fuzzyck::kernel

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

#include "fuzzyck/kernel/grid_fn.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "fuzzyck/error.hpp"

namespace fuzzyck::kernel {

using fuzzy::Interval;
using fuzzy::LevelDeck;

FuzzyGridFn::FuzzyGridFn(Grid2 grid, int K)
    : grid_(std::move(grid)),
      K_(K),
      lower_(grid_.node_count() * (static_cast<std::size_t>(K) + 1), 0.0),
      upper_(lower_.size(), 0.0) {
    if (K < 1) throw Error(ErrorKind::InvalidParameters, "K must be positive");
}

FuzzyGridFn FuzzyGridFn::sample(const Grid2& grid, int K,
                                const std::function<LevelDeck(double, double)>& fn) {
    FuzzyGridFn out(grid, K);
    for (int i = 0; i < grid.N(); ++i) {
        for (int j = 0; j < grid.M(); ++j) out.set(i, j, fn(grid.x(i), grid.y(j)));
    }
    return out;
}

LevelDeck FuzzyGridFn::at(int i, int j) const {
    if (i < 0 || i >= grid_.N() || j < 0 || j >= grid_.M()) {
        throw Error(ErrorKind::IndexOutOfRange, "grid node out of range");
    }
    std::vector<Interval> levels(this->levels());
    const std::size_t base = index(i, j, 0);
    for (std::size_t k = 0; k < levels.size(); ++k) levels[k] = {lower_[base + k], upper_[base + k]};
    return LevelDeck(std::move(levels));
}

void FuzzyGridFn::set(int i, int j, const LevelDeck& deck) {
    if (i < 0 || i >= grid_.N() || j < 0 || j >= grid_.M()) {
        throw Error(ErrorKind::IndexOutOfRange, "grid node out of range");
    }
    if (deck.resolution() != K_) {
        throw Error(ErrorKind::ResolutionMismatch, "deck resolution differs from grid function");
    }
    const std::size_t base = index(i, j, 0);
    for (std::size_t k = 0; k < deck.size(); ++k) {
        lower_[base + k] = deck[k].lo;
        upper_[base + k] = deck[k].hi;
    }
}

void FuzzyGridFn::gather(int k, bool upper, std::span<double> surface) const {
    const auto& src = upper ? upper_ : lower_;
    const int N = grid_.N();
    const int M = grid_.M();
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < M; ++j) surface[static_cast<std::size_t>(i) * M + j] = src[index(i, j, k)];
    }
}

void FuzzyGridFn::scatter(int k, bool upper, std::span<const double> surface) {
    auto& dst = upper ? upper_ : lower_;
    const int N = grid_.N();
    const int M = grid_.M();
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < M; ++j) dst[index(i, j, k)] = surface[static_cast<std::size_t>(i) * M + j];
    }
}

double FuzzyGridFn::validate(double tolerance) {
    double worst = 0.0;
    std::vector<Interval> levels(this->levels());
    for (std::size_t node = 0; node < grid_.node_count(); ++node) {
        const std::size_t base = node * levels.size();
        for (std::size_t k = 0; k < levels.size(); ++k) levels[k] = {lower_[base + k], upper_[base + k]};
        worst = std::max(worst, LevelDeck::repair(levels, tolerance));
        for (std::size_t k = 0; k < levels.size(); ++k) {
            lower_[base + k] = levels[k].lo;
            upper_[base + k] = levels[k].hi;
        }
    }
    return worst;
}

double sup_metric(const FuzzyGridFn& f, const FuzzyGridFn& g) {
    if (!(f.grid() == g.grid())) {
        throw Error(ErrorKind::InvalidGrid, "grid functions live on different grids");
    }
    if (f.resolution() != g.resolution()) {
        throw Error(ErrorKind::ResolutionMismatch, "grid functions have different K");
    }
    double d = 0.0;
    const auto fl = f.lower_data();
    const auto fu = f.upper_data();
    const auto gl = g.lower_data();
    const auto gu = g.upper_data();
    for (std::size_t n = 0; n < fl.size(); ++n) {
        d = std::max({d, std::abs(fl[n] - gl[n]), std::abs(fu[n] - gu[n])});
    }
    return d;
}

fuzzy::Monotonicity classify_d_monotone(const FuzzyGridFn& f) {
    const Grid2& grid = f.grid();
    const int N = grid.N();
    const int M = grid.M();
    bool increasing = true;
    bool decreasing = true;
    auto width = [&](int i, int j, int k) { return f.upper(i, j, k) - f.lower(i, j, k); };
    auto compare = [&](double from, double to) {
        const double slack = 1e-12 * std::max({1.0, std::abs(from), std::abs(to)});
        if (to < from - slack) increasing = false;
        if (to > from + slack) decreasing = false;
    };
    for (int k = 0; k <= f.resolution(); ++k) {
        for (int i = 0; i < N; ++i) {
            for (int j = 0; j < M; ++j) {
                if (i + 1 < N) compare(width(i, j, k), width(i + 1, j, k));
                if (j + 1 < M) compare(width(i, j, k), width(i, j + 1, k));
            }
        }
        if (!increasing && !decreasing) return fuzzy::Monotonicity::Mixed;
    }
    if (increasing) return fuzzy::Monotonicity::DIncreasing;
    return fuzzy::Monotonicity::DDecreasing;
}

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
    const std::size_t workers =
        std::min<std::size_t>(count, static_cast<std::size_t>(std::max(threads, 1)));
    if (workers <= 1) {
        for (std::size_t n = 0; n < count; ++n) fn(n);
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t n = w; n < count; n += workers) fn(n);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace fuzzyck::kernel

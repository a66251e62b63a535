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

#include <array>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fuzzyck/darboux/solver.hpp"

namespace fuzzyck::cli {

/// coef * t^power. `coef` holds a triangular (a, b, c); a crisp value has
/// a = b = c.
struct Monomial {
    std::array<double, 3> coef{};
    double power = 0.0;
};

struct CurveSpec {
    std::vector<Monomial> monomials;
};

/// coef * x^px * y^py
struct PolyTerm {
    double coef = 0.0;
    double px = 0.0;
    double py = 0.0;
};

enum class RhsKind { Zero, Constant, Linear, Saturating, ExpCoupled };
/// Which state the RHS acts on: upsilon, omega or their sum.
enum class RhsInput { U, W, Sum };

struct RhsSpec {
    RhsKind kind = RhsKind::Zero;
    RhsInput input = RhsInput::U;
    double value = 0.0;               // constant
    std::vector<PolyTerm> c;          // linear, saturating
    std::vector<PolyTerm> d;          // linear
    double scale = 0.0;               // exp_coupled
    double shift = 2.0;               // exp_coupled
    std::optional<double> lipschitz;
};

enum class ProblemKind { Single, Coupled };

struct RunConfig {
    std::string name = "run";
    ProblemKind kind = ProblemKind::Single;
    kernel::FracOrder phi;
    kernel::FracOrder psi;
    darboux::Domain domain;
    CurveSpec xi1, xi2, eta1, eta2;
    RhsSpec f, g;
    darboux::SolverOptions solver;
    bool hukuhara_branch = false;
    std::optional<double> exist_k;
    std::optional<double> exist_M;
    std::string out_dir = "out";
};

/// Parses a JSON document. Unknown keys and bad values raise
/// Error(Config) with the offending field path, e.g. "grid.N".
RunConfig parse_config(const std::string& text);

/// Text of a bundled configuration, if `name` is one.
std::optional<std::string> bundled_config(const std::string& name);
std::vector<std::string> bundled_names();

/// Bundled name or path to a JSON file.
RunConfig load_config(const std::string& name_or_path);

darboux::CurveFn make_curve(const CurveSpec& spec, int K);
darboux::RhsFn make_rhs(const RhsSpec& spec);

darboux::DarbouxProblem make_single(const RunConfig& cfg);
darboux::CoupledProblem make_coupled(const RunConfig& cfg);

/// 17 significant digits, '.' separator, no locale.
std::string format_double(double v);

void write_solution_csv(const std::filesystem::path& path, const kernel::FuzzyGridFn& f);
/// Rebuilds a grid function from a solution CSV. The grid parameters are
/// not stored in the file, so they are supplied by the caller.
kernel::FuzzyGridFn read_solution_csv(const std::filesystem::path& path,
                                      const kernel::Grid2& grid, int K);

/// Writes solution CSV(s) and report.json to cfg.out_dir. Returns the exit
/// status (0 also when the iteration did not converge).
int run(const RunConfig& cfg, std::ostream& out);
/// Prints the contraction constants and a verdict. 0 when every constant
/// is below 1, 2 otherwise.
int certify(const RunConfig& cfg, std::ostream& out);
/// Runs the oracle suite as a table. 0 when every oracle passes, 1 otherwise.
int oracles(std::ostream& out);

}  // namespace fuzzyck::cli

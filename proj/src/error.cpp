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

#include "fuzzyck/error.hpp"

namespace fuzzyck {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidParameters: return "invalid-parameters";
        case ErrorKind::ResolutionMismatch: return "resolution-mismatch";
        case ErrorKind::DifferenceDoesNotExist: return "difference-does-not-exist";
        case ErrorKind::GhDifferenceUndefined: return "gh-difference-undefined";
        case ErrorKind::IndexOutOfRange: return "index-out-of-range";
        case ErrorKind::OrderOutOfRange: return "order-out-of-range";
        case ErrorKind::InvalidGrid: return "invalid-grid";
        case ErrorKind::GridTooSmall: return "grid-too-small";
        case ErrorKind::MixedMonotonicity: return "mixed-monotonicity";
        case ErrorKind::IncompatibleInitialData: return "incompatible-initial-data";
        case ErrorKind::CornerMismatch: return "corner-mismatch";
        case ErrorKind::RhsRange: return "rhs-range";
        case ErrorKind::BranchInfeasible: return "branch-infeasible";
        case ErrorKind::EstimationFailed: return "estimation-failed";
        case ErrorKind::Config: return "config";
    }
    return "unknown";
}

}  // namespace fuzzyck

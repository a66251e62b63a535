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

#include <charconv>
#include <cmath>
#include <fstream>
#include <string>
#include <string_view>

#include "fuzzyck/cli/cli.hpp"
#include "fuzzyck/error.hpp"

namespace fuzzyck::cli {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 16);
    return std::string(buf, res.ptr);
}

void write_solution_csv(const std::filesystem::path& path, const kernel::FuzzyGridFn& f) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Config, path.string() + ": cannot open for writing");
    const kernel::Grid2& g = f.grid();
    const int K = f.resolution();
    std::string line;
    out << "x,y,r,lower,upper\n";
    for (int i = 0; i < g.N(); ++i) {
        const std::string x = format_double(g.x(i));
        for (int j = 0; j < g.M(); ++j) {
            const std::string y = format_double(g.y(j));
            for (int k = 0; k <= K; ++k) {
                line = x;
                line += ',';
                line += y;
                line += ',';
                line += format_double(static_cast<double>(k) / K);
                line += ',';
                line += format_double(f.lower(i, j, k));
                line += ',';
                line += format_double(f.upper(i, j, k));
                line += '\n';
                out << line;
            }
        }
    }
    if (!out) throw Error(ErrorKind::Config, path.string() + ": write failed");
}

namespace {

double parse_field(std::string_view s, const std::string& where) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw Error(ErrorKind::Config, where + ": bad number '" + std::string(s) + "'");
    }
    return v;
}

bool close(double a, double b) { return std::abs(a - b) <= 1e-15 * std::max(1.0, std::abs(b)); }

}  // namespace

kernel::FuzzyGridFn read_solution_csv(const std::filesystem::path& path,
                                      const kernel::Grid2& grid, int K) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Config, path.string() + ": cannot open");
    std::string line;
    if (!std::getline(in, line) || line != "x,y,r,lower,upper") {
        throw Error(ErrorKind::Config, path.string() + ": missing header");
    }
    kernel::FuzzyGridFn f(grid, K);
    auto lower = f.lower_data();
    auto upper = f.upper_data();
    std::size_t row = 0;
    const std::size_t rows = lower.size();
    while (std::getline(in, line)) {
        const std::string where = path.string() + ":" + std::to_string(row + 2);
        if (row >= rows) throw Error(ErrorKind::Config, where + ": too many rows");
        double v[5];
        std::string_view rest(line);
        for (int c = 0; c < 5; ++c) {
            const auto comma = rest.find(',');
            if ((comma == std::string_view::npos) != (c == 4)) {
                throw Error(ErrorKind::Config, where + ": expected 5 fields");
            }
            v[c] = parse_field(rest.substr(0, comma), where);
            if (c < 4) rest.remove_prefix(comma + 1);
        }
        const int k = static_cast<int>(row % (K + 1));
        const std::size_t node = row / (K + 1);
        const int i = static_cast<int>(node / grid.M());
        const int j = static_cast<int>(node % grid.M());
        if (!close(v[0], grid.x(i)) || !close(v[1], grid.y(j)) ||
            !close(v[2], static_cast<double>(k) / K)) {
            throw Error(ErrorKind::Config, where + ": row does not match the grid");
        }
        lower[row] = v[3];
        upper[row] = v[4];
        ++row;
    }
    if (row != rows) throw Error(ErrorKind::Config, path.string() + ": too few rows");
    f.validate();
    return f;
}

}  // namespace fuzzyck::cli

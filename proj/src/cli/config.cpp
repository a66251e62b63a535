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

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fuzzyck/cli/cli.hpp"
#include "fuzzyck/error.hpp"

namespace fuzzyck::cli {

using nlohmann::json;

namespace {

const char* const kExample39 = R"({
  "name": "example_3_9",
  "kind": "single",
  "phi": [0.5, 0.5],
  "rho": [1.5, 1.5],
  "domain": {"a": 0.5, "b": 1.0},
  "initial": {
    "xi1": {"monomials": [{"coef": [1, 2, 3], "power": 1}]},
    "xi2": {"monomials": [{"coef": [1, 2, 3], "power": 2}]}
  },
  "rhs": {
    "f": {"kind": "saturating", "input": "u",
          "c": [{"coef": 0.5, "px": 1, "py": 1}], "lipschitz": 0.25}
  },
  "grid": {"N": 33, "M": 33, "K": 20},
  "solver": {"tol": 1e-8, "max_iter": 200, "branch": "s1"},
  "lipschitz": {"samples": 512, "range": [0, 1]},
  "existence": {"k": 9, "M": 0.25},
  "seed": 0,
  "output": {"dir": "out/example_3_9"}
}
)";

const char* const kExample44 = R"({
  "name": "example_4_4",
  "kind": "coupled",
  "phi": [0.5, 0.5],
  "psi": [0.6666666666666666, 0.6666666666666666],
  "rho": [1.5, 1.5],
  "domain": {"a": 0.5, "b": 1.0},
  "initial": {
    "xi1": {"monomials": [{"coef": [1, 2, 3], "power": 1}]},
    "xi2": {"monomials": [{"coef": [1, 2, 3], "power": 2}]},
    "eta1": {"monomials": [{"coef": [2, 4, 6], "power": 1}]},
    "eta2": {"monomials": [{"coef": [1, 2, 3], "power": 1}]}
  },
  "rhs": {
    "f": {"kind": "saturating", "input": "sum",
          "c": [{"coef": 0.5, "px": 1, "py": 1}], "lipschitz": 0.25},
    "g": {"kind": "exp_coupled", "input": "sum", "scale": 1.6298981278901339,
          "shift": 2, "lipschitz": 0.22058272478483605}
  },
  "grid": {"N": 33, "M": 33, "K": 20},
  "solver": {"tol": 1e-8, "max_iter": 200, "branch": "c2"},
  "lipschitz": {"samples": 512, "range": [0, 1]},
  "existence": {"k": 12, "M": 2.647},
  "seed": 0,
  "output": {"dir": "out/example_4_4"}
}
)";

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw Error(ErrorKind::Config, path + ": " + what);
}

// Object view that remembers the path and rejects keys nobody asked for.
class Obj {
public:
    Obj(const json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) fail(where(), "expected an object");
    }

    bool has(const std::string& key) const { return j_.contains(key); }

    const json& get(const std::string& key) {
        seen_.insert(key);
        if (!j_.contains(key)) fail(child(key), "missing");
        return j_.at(key);
    }

    const json* find(const std::string& key) {
        seen_.insert(key);
        auto it = j_.find(key);
        return it == j_.end() ? nullptr : &*it;
    }

    std::string child(const std::string& key) const {
        return path_.empty() ? key : path_ + "." + key;
    }

    void finish() const {
        for (auto it = j_.begin(); it != j_.end(); ++it) {
            if (!seen_.count(it.key())) fail(child(it.key()), "unknown key");
        }
    }

private:
    std::string where() const { return path_.empty() ? "<root>" : path_; }

    const json& j_;
    std::string path_;
    std::set<std::string> seen_;
};

double number(const json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) fail(path, "must be finite");
    return v;
}

int integer(const json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<int>();
}

std::string text(const json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
}

// number or [n1, n2]
std::pair<double, double> pair_of(const json& j, const std::string& path) {
    if (j.is_number()) {
        const double v = number(j, path);
        return {v, v};
    }
    if (!j.is_array() || j.size() != 2) fail(path, "expected a number or a pair");
    return {number(j[0], path + "[0]"), number(j[1], path + "[1]")};
}

CurveSpec parse_curve(const json& j, const std::string& path) {
    Obj o(j, path);
    CurveSpec spec;
    const json& terms = o.get("monomials");
    const std::string tpath = o.child("monomials");
    if (!terms.is_array()) fail(tpath, "expected an array");
    for (std::size_t n = 0; n < terms.size(); ++n) {
        const std::string mpath = tpath + "[" + std::to_string(n) + "]";
        Obj m(terms[n], mpath);
        Monomial mono;
        const json& coef = m.get("coef");
        if (coef.is_number()) {
            const double v = number(coef, m.child("coef"));
            mono.coef = {v, v, v};
        } else if (coef.is_array() && coef.size() == 3) {
            for (int k = 0; k < 3; ++k) {
                mono.coef[k] = number(coef[k], m.child("coef") + "[" + std::to_string(k) + "]");
            }
            if (!(mono.coef[0] <= mono.coef[1] && mono.coef[1] <= mono.coef[2])) {
                fail(m.child("coef"), "triangular coefficient needs a <= b <= c");
            }
        } else {
            fail(m.child("coef"), "expected a number or [a, b, c]");
        }
        mono.power = number(m.get("power"), m.child("power"));
        if (mono.power < 0.0) fail(m.child("power"), "must be >= 0");
        m.finish();
        spec.monomials.push_back(mono);
    }
    o.finish();
    return spec;
}

std::vector<PolyTerm> parse_poly(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of terms");
    std::vector<PolyTerm> out;
    for (std::size_t n = 0; n < j.size(); ++n) {
        const std::string tpath = path + "[" + std::to_string(n) + "]";
        Obj o(j[n], tpath);
        PolyTerm t;
        t.coef = number(o.get("coef"), o.child("coef"));
        if (const json* px = o.find("px")) t.px = number(*px, o.child("px"));
        if (const json* py = o.find("py")) t.py = number(*py, o.child("py"));
        if (t.px < 0.0) fail(o.child("px"), "must be >= 0");
        if (t.py < 0.0) fail(o.child("py"), "must be >= 0");
        o.finish();
        out.push_back(t);
    }
    return out;
}

RhsSpec parse_rhs(const json& j, const std::string& path, bool coupled) {
    static const std::map<std::string, RhsKind> kinds = {
        {"zero", RhsKind::Zero},
        {"constant", RhsKind::Constant},
        {"linear", RhsKind::Linear},
        {"saturating", RhsKind::Saturating},
        {"exp_coupled", RhsKind::ExpCoupled}};
    Obj o(j, path);
    RhsSpec spec;
    const std::string kind = text(o.get("kind"), o.child("kind"));
    auto it = kinds.find(kind);
    if (it == kinds.end()) fail(o.child("kind"), "unknown catalog entry '" + kind + "'");
    spec.kind = it->second;

    if (const json* in = o.find("input")) {
        const std::string s = text(*in, o.child("input"));
        if (s == "u") {
            spec.input = RhsInput::U;
        } else if (s == "w") {
            spec.input = RhsInput::W;
        } else if (s == "sum") {
            spec.input = RhsInput::Sum;
        } else {
            fail(o.child("input"), "expected u, w or sum");
        }
        if (!coupled && spec.input != RhsInput::U) {
            fail(o.child("input"), "single problems only have input u");
        }
    }
    if (const json* h = o.find("lipschitz")) {
        spec.lipschitz = number(*h, o.child("lipschitz"));
        if (*spec.lipschitz < 0.0) fail(o.child("lipschitz"), "must be >= 0");
    }
    switch (spec.kind) {
    case RhsKind::Zero:
        break;
    case RhsKind::Constant:
        spec.value = number(o.get("value"), o.child("value"));
        break;
    case RhsKind::Linear:
        spec.c = parse_poly(o.get("c"), o.child("c"));
        if (const json* d = o.find("d")) spec.d = parse_poly(*d, o.child("d"));
        break;
    case RhsKind::Saturating:
        spec.c = parse_poly(o.get("c"), o.child("c"));
        break;
    case RhsKind::ExpCoupled:
        spec.scale = number(o.get("scale"), o.child("scale"));
        if (const json* s = o.find("shift")) spec.shift = number(*s, o.child("shift"));
        break;
    }
    o.finish();
    return spec;
}

kernel::FracOrder parse_order(const std::pair<double, double>& phi,
                              const std::pair<double, double>& rho, const std::string& path) {
    kernel::FracOrder order{phi.first, phi.second, rho.first, rho.second};
    try {
        order.validate();
    } catch (const Error& e) {
        fail(path, e.what());
    }
    return order;
}

}  // namespace

RunConfig parse_config(const std::string& source) {
    json doc;
    try {
        doc = json::parse(source);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Config, std::string("<root>: ") + e.what());
    }
    Obj root(doc, "");
    RunConfig cfg;
    if (const json* n = root.find("name")) cfg.name = text(*n, "name");

    const std::string kind = text(root.get("kind"), "kind");
    if (kind == "single") {
        cfg.kind = ProblemKind::Single;
    } else if (kind == "coupled") {
        cfg.kind = ProblemKind::Coupled;
    } else {
        fail("kind", "expected single or coupled");
    }
    const bool coupled = cfg.kind == ProblemKind::Coupled;

    const auto rho = pair_of(root.get("rho"), "rho");
    cfg.phi = parse_order(pair_of(root.get("phi"), "phi"), rho, "phi");
    if (coupled) {
        cfg.psi = parse_order(pair_of(root.get("psi"), "psi"), rho, "psi");
    } else if (root.has("psi")) {
        fail("psi", "only valid for coupled problems");
    }

    {
        Obj d(root.get("domain"), "domain");
        cfg.domain.a = number(d.get("a"), "domain.a");
        cfg.domain.b = number(d.get("b"), "domain.b");
        if (!(cfg.domain.a > 0.0)) fail("domain.a", "must be > 0");
        if (!(cfg.domain.b > 0.0)) fail("domain.b", "must be > 0");
        d.finish();
    }
    {
        Obj ini(root.get("initial"), "initial");
        cfg.xi1 = parse_curve(ini.get("xi1"), "initial.xi1");
        cfg.xi2 = parse_curve(ini.get("xi2"), "initial.xi2");
        if (coupled) {
            cfg.eta1 = parse_curve(ini.get("eta1"), "initial.eta1");
            cfg.eta2 = parse_curve(ini.get("eta2"), "initial.eta2");
        }
        ini.finish();
    }
    {
        Obj rhs(root.get("rhs"), "rhs");
        cfg.f = parse_rhs(rhs.get("f"), "rhs.f", coupled);
        if (coupled) cfg.g = parse_rhs(rhs.get("g"), "rhs.g", coupled);
        rhs.finish();
    }
    if (const json* g = root.find("grid")) {
        Obj o(*g, "grid");
        if (const json* v = o.find("N")) cfg.solver.N = integer(*v, "grid.N");
        if (const json* v = o.find("M")) cfg.solver.M = integer(*v, "grid.M");
        if (const json* v = o.find("K")) cfg.solver.K = integer(*v, "grid.K");
        if (cfg.solver.N < 3) fail("grid.N", "must be >= 3");
        if (cfg.solver.M < 3) fail("grid.M", "must be >= 3");
        if (cfg.solver.K < 1) fail("grid.K", "must be >= 1");
        o.finish();
    }
    if (const json* s = root.find("solver")) {
        Obj o(*s, "solver");
        if (const json* v = o.find("tol")) cfg.solver.tol = number(*v, "solver.tol");
        if (const json* v = o.find("max_iter")) cfg.solver.max_iter = integer(*v, "solver.max_iter");
        if (const json* v = o.find("threads")) cfg.solver.threads = integer(*v, "solver.threads");
        if (const json* v = o.find("branch")) {
            const std::string b = text(*v, "solver.branch");
            if (b == "s1" || b == "c2") {
                cfg.hukuhara_branch = false;
            } else if (b == "s2" || b == "c3") {
                cfg.hukuhara_branch = true;
            } else {
                fail("solver.branch", "expected s1, s2, c2 or c3");
            }
        }
        if (!(cfg.solver.tol > 0.0)) fail("solver.tol", "must be > 0");
        if (cfg.solver.max_iter < 1) fail("solver.max_iter", "must be >= 1");
        if (cfg.solver.threads < 1) fail("solver.threads", "must be >= 1");
        o.finish();
    }
    if (const json* l = root.find("lipschitz")) {
        Obj o(*l, "lipschitz");
        if (const json* v = o.find("samples")) {
            cfg.solver.lipschitz_samples = integer(*v, "lipschitz.samples");
            if (cfg.solver.lipschitz_samples < 2) fail("lipschitz.samples", "must be >= 2");
        }
        if (const json* v = o.find("range")) {
            const auto [lo, hi] = pair_of(*v, "lipschitz.range");
            if (!(lo < hi)) fail("lipschitz.range", "needs lo < hi");
            cfg.solver.lipschitz_box = {lo, hi};
        }
        o.finish();
    }
    if (const json* e = root.find("existence")) {
        Obj o(*e, "existence");
        if (const json* v = o.find("k")) {
            cfg.exist_k = number(*v, "existence.k");
            if (!(*cfg.exist_k > 0.0)) fail("existence.k", "must be > 0");
        }
        if (const json* v = o.find("M")) {
            cfg.exist_M = number(*v, "existence.M");
            if (!(*cfg.exist_M > 0.0)) fail("existence.M", "must be > 0");
        }
        o.finish();
    }
    if (const json* s = root.find("seed")) {
        if (!s->is_number_unsigned()) fail("seed", "expected a nonnegative integer");
        cfg.solver.seed = s->get<std::uint64_t>();
    }
    if (const json* out = root.find("output")) {
        Obj o(*out, "output");
        if (const json* v = o.find("dir")) cfg.out_dir = text(*v, "output.dir");
        o.finish();
    }
    root.finish();
    return cfg;
}

std::optional<std::string> bundled_config(const std::string& name) {
    if (name == "example_3_9") return std::string(kExample39);
    if (name == "example_4_4") return std::string(kExample44);
    return std::nullopt;
}

std::vector<std::string> bundled_names() { return {"example_3_9", "example_4_4"}; }

RunConfig load_config(const std::string& name_or_path) {
    if (auto text = bundled_config(name_or_path)) return parse_config(*text);
    std::ifstream in(name_or_path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::Config,
                    name_or_path + ": neither a bundled config nor a readable file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace fuzzyck::cli

#pragma once

// JSON adapters for the report/config surface.  StepFns serialize as a list
// of [breakpoint, value] pairs, the value being taken on the piece that ends
// at the breakpoint; the final pair carries null in place of the (infinite)
// breakpoint.  Weights serialize their power-log pieces with null for the
// unbounded endpoint.  Non-finite numbers are emitted as JSON strings
// ("inf", "-inf", "nan") so reports stay parseable.

#include <json.hpp>

#include <cmath>
#include <limits>

#include "rinorms/conditions.hpp"
#include "rinorms/fourier_verify.hpp"
#include "rinorms/radial.hpp"
#include "rinorms/step_fn.hpp"
#include "rinorms/weight.hpp"

namespace rinorms {

using json = nlohmann::json;

inline json num_to_json(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return x;
}

inline double num_from_json(const json& j) {
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        if (s == "inf") return std::numeric_limits<double>::infinity();
        if (s == "-inf") return -std::numeric_limits<double>::infinity();
        if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
        throw std::invalid_argument("expected a number, got string '" + s + "'");
    }
    return j.get<double>();
}

inline json to_json(const StepFn& f) {
    json out = json::array();
    const auto& b = f.breakpoints();
    const auto& v = f.values();
    for (std::size_t i = 0; i < b.size(); ++i) out.push_back({b[i], v[i]});
    out.push_back({nullptr, v.back()});
    return out;
}

inline StepFn step_fn_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("step function: expected a nonempty array of pairs");
    std::vector<double> bps, vals;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& pair = j[i];
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("step function: each entry must be [breakpoint, value]");
        vals.push_back(num_from_json(pair[1]));
        if (i + 1 == j.size()) {
            if (!pair[0].is_null())
                throw std::invalid_argument("step function: last entry must have null breakpoint");
        } else {
            bps.push_back(num_from_json(pair[0]));
        }
    }
    return StepFn(std::move(bps), std::move(vals));
}

inline json to_json(const Weight& w) {
    json pieces = json::array();
    for (const auto& p : w.pieces()) {
        json e;
        e["lo"] = p.lo;
        e["hi"] = std::isinf(p.hi) ? json(nullptr) : json(p.hi);
        e["c"] = p.c;
        e["a"] = p.a;
        e["b"] = p.b;
        pieces.push_back(e);
    }
    return json{{"pieces", pieces}};
}

inline json to_json(const IndexEstimate& e) {
    return json{{"lower", num_to_json(e.lower)},
                {"upper", num_to_json(e.upper)},
                {"fit_quality", num_to_json(e.fit_quality)}};
}

inline json to_json(const CheckReport& r, bool with_grid = true) {
    json out{{"criterion", r.criterion},
             {"verdict", to_string(r.verdict)},
             {"sup_ratio", num_to_json(r.sup_ratio)},
             {"witness", num_to_json(r.witness)},
             {"grid", r.grid_desc},
             {"error_bound", num_to_json(r.error_bound)}};
    if (std::isfinite(r.growth_slope)) out["growth_slope"] = r.growth_slope;
    if (!r.note.empty()) out["note"] = r.note;
    if (with_grid) {
        json g = json::array();
        for (std::size_t i = 0; i < r.grid_t.size(); ++i)
            g.push_back({num_to_json(r.grid_t[i]), num_to_json(r.grid_ratio[i])});
        out["points"] = g;
    }
    return out;
}

inline json to_json(const WeightedPairReport& r) {
    json out;
    json conds = json::array();
    for (const auto& c : r.conditions) conds.push_back(to_json(c));
    out["conditions"] = conds;
    out["combined"] = to_json(r.combined);
    if (!r.note.empty()) out["note"] = r.note;
    return out;
}

inline json to_json(const DilationIntegralReport& r) {
    json out{{"criterion", "dilation-norm-integral"},
             {"verdict", to_string(r.verdict)},
             {"integral", num_to_json(r.integral)},
             {"fitted_exponent", num_to_json(r.fitted_exponent)}};
    json masses = json::array();
    for (double m : r.decade_mass) masses.push_back(num_to_json(m));
    out["decade_mass"] = masses;
    if (!r.note.empty()) out["note"] = r.note;
    return out;
}

inline json to_json(const VerifyReport& r, bool with_grid = true) {
    json out{{"criterion", r.criterion},
             {"empirical_constant", num_to_json(r.empirical_constant)},
             {"upper_constant", num_to_json(r.upper_constant)},
             {"notes", r.notes}};
    if (with_grid) {
        json rows = json::array();
        for (std::size_t i = 0; i < r.grid.size(); ++i)
            rows.push_back({num_to_json(r.grid[i]), num_to_json(r.lhs[i]),
                            num_to_json(r.rhs[i]), num_to_json(r.ratio[i])});
        out["rows"] = rows;
    }
    return out;
}

inline json to_json(const NormPairReport& r) {
    json out{{"criterion", r.criterion},
             {"empirical_constant", num_to_json(r.empirical_constant)},
             {"upper_constant", num_to_json(r.upper_constant)}};
    json rows = json::array();
    for (const auto& s : r.samples) {
        json e{{"lhs", num_to_json(s.lhs)},
               {"rhs", num_to_json(s.rhs)},
               {"ratio", num_to_json(s.ratio)},
               {"lhs_upper", num_to_json(s.lhs_upper)}};
        if (s.skipped) {
            e["skipped"] = true;
            e["note"] = s.note;
        }
        rows.push_back(e);
    }
    out["samples"] = rows;
    return out;
}

}  // namespace rinorms

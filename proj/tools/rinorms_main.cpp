// Batch front end: loads a JSON config, dispatches one of the subcommands
// (norm, transform-weight, check, verify-fourier) and writes a structured
// JSON report plus CSV tables for grid data.
//
// Determinism contract: identical config bytes and effective overrides give
// byte-identical reports.  Timing is printed to stderr only, never into the
// report; --jobs changes wall-clock, not output (samples merge by index).
//
// Exit codes: 0 all verdicts hold / all items complete, 1 some criterion
// fails, 2 config error, 3 quadrature non-convergence.

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "rinorms/conditions.hpp"
#include "rinorms/fourier_verify.hpp"
#include "rinorms/random_inputs.hpp"
#include "rinorms/serialize.hpp"

namespace {

using rinorms::json;

constexpr const char* kToolVersion = "rinorms 1.0.0";

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect_keys(const json& j, std::initializer_list<const char*> allowed,
                 const std::string& where) {
    if (!j.is_object()) throw ConfigError(where + ": expected an object");
    for (const auto& [key, _] : j.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) ok = true;
        if (!ok) throw ConfigError(where + ": unknown key '" + key + "'");
    }
}

double get_num(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key)) throw ConfigError(where + ": missing '" + key + "'");
    return rinorms::num_from_json(j.at(key));
}

std::string get_str(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key) || !j.at(key).is_string())
        throw ConfigError(where + ": missing string '" + key + "'");
    return j.at(key).get<std::string>();
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// All named objects resolved from the config.
struct Workspace {
    rinorms::QuadSpec quad;
    std::uint64_t seed = 0;
    bool seed_present = false;
    std::map<std::string, rinorms::Weight> plain_weights;
    std::map<std::string, rinorms::WeightFn> weights;
    std::map<std::string, rinorms::NFunction> nfunctions;
    std::map<std::string, rinorms::NormSpec> norms;
    std::map<std::string, rinorms::StepFn> step_fns;
    std::map<std::string, rinorms::RadialStep> radial_fns;
};

rinorms::Weight weight_from_json(const json& j, const std::string& where) {
    if (j.contains("power")) {
        expect_keys(j, {"power"}, where);
        const json& p = j.at("power");
        expect_keys(p, {"c", "a"}, where + ".power");
        return rinorms::Weight::power(get_num(p, "c", where), get_num(p, "a", where));
    }
    if (j.contains("step")) {
        expect_keys(j, {"step"}, where);
        return rinorms::Weight::from_step(rinorms::step_fn_from_json(j.at("step")));
    }
    if (j.contains("pieces")) {
        expect_keys(j, {"pieces"}, where);
        std::vector<rinorms::WeightPiece> ps;
        for (const auto& e : j.at("pieces")) {
            expect_keys(e, {"lo", "hi", "c", "a", "b"}, where + ".pieces[]");
            double hi = e.at("hi").is_null() ? std::numeric_limits<double>::infinity()
                                             : rinorms::num_from_json(e.at("hi"));
            double b = e.contains("b") ? get_num(e, "b", where) : 0.0;
            ps.push_back({get_num(e, "lo", where), hi, get_num(e, "c", where),
                          get_num(e, "a", where), b});
        }
        return rinorms::Weight::from_pieces(std::move(ps));
    }
    throw ConfigError(where + ": expected one of 'power', 'pieces', 'step', 'derive'");
}

void build_weights(Workspace& ws, const json& defs) {
    // Plain weights first, then derived ones (single pass over derivations
    // with name resolution; derivations may only reference plain weights).
    for (const auto& [name, def] : defs.items()) {
        if (def.contains("derive")) continue;
        rinorms::Weight w = weight_from_json(def, "weights." + name);
        ws.plain_weights.emplace(name, w);
        ws.weights.emplace(name, rinorms::to_weight_fn(w));
    }
    for (const auto& [name, def] : defs.items()) {
        if (!def.contains("derive")) continue;
        expect_keys(def, {"derive"}, "weights." + name);
        const json& d = def.at("derive");
        expect_keys(d, {"op", "weight", "p"}, "weights." + name + ".derive");
        std::string op = get_str(d, "op", name);
        std::string src = get_str(d, "weight", name);
        double p = get_num(d, "p", name);
        auto it = ws.plain_weights.find(src);
        if (it == ws.plain_weights.end())
            throw ConfigError("weights." + name + ": derive source '" + src +
                              "' is not a closed-form weight");
        if (op == "reflect_p") {
            rinorms::Weight w = rinorms::reflect_p(it->second, p);
            ws.plain_weights.emplace(name, w);
            ws.weights.emplace(name, rinorms::to_weight_fn(w));
        } else if (op == "down_dual") {
            ws.weights.emplace(name, rinorms::down_dual(it->second, p, ws.quad));
        } else if (op == "level_smallest") {
            ws.weights.emplace(name, rinorms::level_smallest(it->second, p, ws.quad));
        } else if (op == "fourier_target") {
            ws.weights.emplace(name, rinorms::fourier_target(it->second, p, ws.quad));
        } else {
            throw ConfigError("weights." + name + ": unknown derive op '" + op + "'");
        }
    }
}

rinorms::NFunction nfunction_from_json(const json& j, const std::string& where) {
    expect_keys(j, {"power", "power_scaled", "samples"}, where);
    if (j.contains("power")) return rinorms::NFunction::power(rinorms::num_from_json(j.at("power")));
    if (j.contains("power_scaled"))
        return rinorms::NFunction::power_scaled(rinorms::num_from_json(j.at("power_scaled")));
    if (j.contains("samples")) {
        std::vector<double> xs, ys;
        for (const auto& e : j.at("samples")) {
            xs.push_back(rinorms::num_from_json(e[0]));
            ys.push_back(rinorms::num_from_json(e[1]));
        }
        return rinorms::NFunction::sampled(std::move(xs), std::move(ys));
    }
    throw ConfigError(where + ": expected 'power', 'power_scaled' or 'samples'");
}

rinorms::NormSpec build_norm(Workspace& ws, const json& defs, const std::string& name,
                             std::vector<std::string>& stack);

rinorms::NormSpec resolve_norm(Workspace& ws, const json& defs, const std::string& name,
                               std::vector<std::string>& stack) {
    auto it = ws.norms.find(name);
    if (it != ws.norms.end()) return it->second;
    for (const auto& s : stack)
        if (s == name) throw ConfigError("norms: cyclic reference through '" + name + "'");
    if (!defs.contains(name)) throw ConfigError("norms: unknown norm '" + name + "'");
    stack.push_back(name);
    rinorms::NormSpec spec = build_norm(ws, defs, name, stack);
    stack.pop_back();
    ws.norms.emplace(name, spec);
    return spec;
}

rinorms::NormSpec build_norm(Workspace& ws, const json& defs, const std::string& name,
                             std::vector<std::string>& stack) {
    const json& j = defs.at(name);
    const std::string where = "norms." + name;
    expect_keys(j, {"kind", "p", "weight", "nfunction", "base"}, where);
    std::string kind = get_str(j, "kind", where);
    if (kind == "lebesgue") return rinorms::NormSpec::lebesgue(get_num(j, "p", where));
    if (kind == "lambda" || kind == "gamma") {
        double p = get_num(j, "p", where);
        std::string wname = get_str(j, "weight", where);
        auto pit = ws.plain_weights.find(wname);
        if (pit != ws.plain_weights.end())
            return kind == "lambda" ? rinorms::NormSpec::lambda(p, pit->second)
                                    : rinorms::NormSpec::gamma(p, pit->second);
        auto wit = ws.weights.find(wname);
        if (wit == ws.weights.end()) throw ConfigError(where + ": unknown weight '" + wname + "'");
        return kind == "lambda" ? rinorms::NormSpec::lambda(p, wit->second)
                                : rinorms::NormSpec::gamma(p, wit->second);
    }
    if (kind == "orlicz") {
        std::string fname = get_str(j, "nfunction", where);
        auto fit = ws.nfunctions.find(fname);
        if (fit == ws.nfunctions.end())
            throw ConfigError(where + ": unknown nfunction '" + fname + "'");
        return rinorms::NormSpec::orlicz(fit->second);
    }
    if (kind == "boyd_power")
        return rinorms::NormSpec::boyd_power(
            resolve_norm(ws, defs, get_str(j, "base", where), stack), get_num(j, "p", where));
    if (kind == "mu_interp")
        return rinorms::NormSpec::mu_interp(
            resolve_norm(ws, defs, get_str(j, "base", where), stack), get_num(j, "p", where));
    if (kind == "largest_domain")
        return rinorms::NormSpec::largest_domain(
            resolve_norm(ws, defs, get_str(j, "base", where), stack));
    throw ConfigError(where + ": unknown kind '" + kind + "'");
}

Workspace build_workspace(const json& cfg) {
    expect_keys(cfg,
                {"seed", "quadrature", "weights", "nfunctions", "norms", "step_fns",
                 "radial_fns", "norm_evals", "weight_tables", "checks", "verify"},
                "config");
    Workspace ws;
    if (cfg.contains("seed")) {
        ws.seed = cfg.at("seed").get<std::uint64_t>();
        ws.seed_present = true;
    }
    if (cfg.contains("quadrature")) {
        const json& q = cfg.at("quadrature");
        expect_keys(q, {"rel_tol", "abs_tol", "max_panels"}, "quadrature");
        if (q.contains("rel_tol")) ws.quad.rel_tol = rinorms::num_from_json(q.at("rel_tol"));
        if (q.contains("abs_tol")) ws.quad.abs_tol = rinorms::num_from_json(q.at("abs_tol"));
        if (q.contains("max_panels")) ws.quad.max_panels = q.at("max_panels").get<int>();
        if (!(ws.quad.rel_tol > 0.0) || !(ws.quad.abs_tol > 0.0))
            throw ConfigError("quadrature: tolerances must be positive");
    }
    if (cfg.contains("weights")) build_weights(ws, cfg.at("weights"));
    if (cfg.contains("nfunctions"))
        for (const auto& [name, def] : cfg.at("nfunctions").items())
            ws.nfunctions.emplace(name, nfunction_from_json(def, "nfunctions." + name));
    if (cfg.contains("norms")) {
        std::vector<std::string> stack;
        for (const auto& [name, def] : cfg.at("norms").items())
            resolve_norm(ws, cfg.at("norms"), name, stack);
    }
    if (cfg.contains("step_fns"))
        for (const auto& [name, def] : cfg.at("step_fns").items())
            ws.step_fns.emplace(name, rinorms::step_fn_from_json(def));
    if (cfg.contains("radial_fns"))
        for (const auto& [name, def] : cfg.at("radial_fns").items()) {
            expect_keys(def, {"dim", "radii", "coeffs"}, "radial_fns." + name);
            std::vector<double> radii, coeffs;
            for (const auto& r : def.at("radii")) radii.push_back(rinorms::num_from_json(r));
            for (const auto& c : def.at("coeffs")) coeffs.push_back(rinorms::num_from_json(c));
            ws.radial_fns.emplace(name,
                                  rinorms::RadialStep(def.at("dim").get<int>(), radii, coeffs));
        }
    return ws;
}

// ---------------------------------------------------------------------------
// Subcommand implementations.  Each returns (items, any_failure).

struct CommandResult {
    json items = json::array();
    bool any_fail = false;
};

CommandResult run_norm(Workspace& ws, const json& cfg) {
    CommandResult res;
    if (!cfg.contains("norm_evals")) throw ConfigError("norm: config lacks 'norm_evals'");
    for (const auto& e : cfg.at("norm_evals")) {
        expect_keys(e, {"norm", "input", "radial"}, "norm_evals[]");
        std::string nname = get_str(e, "norm", "norm_evals[]");
        auto nit = ws.norms.find(nname);
        if (nit == ws.norms.end()) throw ConfigError("norm_evals: unknown norm '" + nname + "'");
        json item{{"type", "norm"}, {"norm", nname}};
        double value;
        if (e.contains("input")) {
            std::string fname = get_str(e, "input", "norm_evals[]");
            auto fit = ws.step_fns.find(fname);
            if (fit == ws.step_fns.end())
                throw ConfigError("norm_evals: unknown step_fn '" + fname + "'");
            item["input"] = fname;
            value = rinorms::norm_value(nit->second, fit->second, ws.quad);
        } else if (e.contains("radial")) {
            std::string fname = get_str(e, "radial", "norm_evals[]");
            auto fit = ws.radial_fns.find(fname);
            if (fit == ws.radial_fns.end())
                throw ConfigError("norm_evals: unknown radial_fn '" + fname + "'");
            item["input"] = fname;
            value = rinorms::norm_value(nit->second, rinorms::radial_rearrange(fit->second),
                                        ws.quad);
        } else {
            throw ConfigError("norm_evals: need 'input' or 'radial'");
        }
        item["value"] = rinorms::num_to_json(value);
        res.items.push_back(item);
    }
    return res;
}

CommandResult run_transform_weight(Workspace& ws, const json& cfg) {
    CommandResult res;
    if (!cfg.contains("weight_tables"))
        throw ConfigError("transform-weight: config lacks 'weight_tables'");
    for (const auto& e : cfg.at("weight_tables")) {
        expect_keys(e, {"weight", "grid"}, "weight_tables[]");
        std::string wname = get_str(e, "weight", "weight_tables[]");
        auto wit = ws.weights.find(wname);
        if (wit == ws.weights.end())
            throw ConfigError("weight_tables: unknown weight '" + wname + "'");
        double lo = 1e-4, hi = 1e4;
        int points = 33;
        if (e.contains("grid")) {
            const json& g = e.at("grid");
            expect_keys(g, {"lo", "hi", "points"}, "weight_tables[].grid");
            if (g.contains("lo")) lo = rinorms::num_from_json(g.at("lo"));
            if (g.contains("hi")) hi = rinorms::num_from_json(g.at("hi"));
            if (g.contains("points")) points = g.at("points").get<int>();
        }
        json rows = json::array();
        for (int i = 0; i < points; ++i) {
            double t = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i /
                                                   std::max(points - 1, 1));
            rows.push_back({rinorms::num_to_json(t), rinorms::num_to_json(wit->second(t))});
        }
        res.items.push_back(json{{"type", "weight_table"}, {"weight", wname}, {"rows", rows}});
    }
    return res;
}

CommandResult run_check(Workspace& ws, const json& cfg) {
    CommandResult res;
    if (!cfg.contains("checks")) throw ConfigError("check: config lacks 'checks'");
    auto plain_weight = [&](const json& e, const char* key) -> const rinorms::Weight& {
        std::string wname = get_str(e, key, "checks[]");
        auto it = ws.plain_weights.find(wname);
        if (it == ws.plain_weights.end())
            throw ConfigError("checks: '" + wname + "' is not a closed-form weight");
        return it->second;
    };
    for (const auto& e : cfg.at("checks")) {
        std::string crit = get_str(e, "criterion", "checks[]");
        json item{{"type", "check"}};
        if (crit == "gamma-lambda-equivalence" || crit == "l2-interpolation") {
            expect_keys(e, {"criterion", "p", "weight"}, "checks[]");
            double p = get_num(e, "p", "checks[]");
            rinorms::CheckReport rep =
                crit == "gamma-lambda-equivalence"
                    ? rinorms::check_gamma_lambda_equivalence(p, plain_weight(e, "weight"), ws.quad)
                    : rinorms::check_l2_interpolation(p, plain_weight(e, "weight"), ws.quad);
            res.any_fail |= rep.verdict == rinorms::Verdict::fails;
            item["report"] = rinorms::to_json(rep);
        } else if (crit == "fundamental-suffix-sup") {
            expect_keys(e, {"criterion", "p", "weight"}, "checks[]");
            auto rep = rinorms::check_fundamental_suffix_sup(get_num(e, "p", "checks[]"),
                                                             plain_weight(e, "weight"), ws.quad);
            res.any_fail |= rep.main.verdict == rinorms::Verdict::fails;
            item["report"] = rinorms::to_json(rep.main);
            item["growth_cap"] = rinorms::to_json(rep.growth_cap);
            item["indices"] = rinorms::to_json(rep.indices);
        } else if (crit == "weighted-pair") {
            expect_keys(e, {"criterion", "p", "q", "weight_u", "weight_v"}, "checks[]");
            auto rep = rinorms::check_weighted_pair_conditions(
                get_num(e, "p", "checks[]"), get_num(e, "q", "checks[]"),
                plain_weight(e, "weight_u"), plain_weight(e, "weight_v"), ws.quad);
            for (const auto& c : rep.conditions)
                res.any_fail |= c.verdict == rinorms::Verdict::fails;
            item["report"] = rinorms::to_json(rep);
        } else if (crit == "dilation-integral") {
            expect_keys(e, {"criterion", "p", "q", "weight_u", "weight_v"}, "checks[]");
            auto rep = rinorms::check_dilation_integral(
                get_num(e, "q", "checks[]"), plain_weight(e, "weight_v"),
                get_num(e, "p", "checks[]"), plain_weight(e, "weight_u"), ws.quad);
            res.any_fail |= rep.verdict == rinorms::Verdict::fails;
            item["report"] = rinorms::to_json(rep);
        } else if (crit == "indices") {
            expect_keys(e, {"criterion", "norm"}, "checks[]");
            std::string nname = get_str(e, "norm", "checks[]");
            auto nit = ws.norms.find(nname);
            if (nit == ws.norms.end()) throw ConfigError("checks: unknown norm '" + nname + "'");
            item["report"] = json{{"criterion", "fundamental-indices"},
                                  {"norm", nname},
                                  {"indices", rinorms::to_json(
                                                  rinorms::estimate_indices(nit->second, ws.quad))}};
        } else {
            throw ConfigError("checks: unknown criterion '" + crit + "'");
        }
        res.items.push_back(item);
    }
    return res;
}

template <class Fn>
void parallel_for(int n, int jobs, Fn&& fn) {
    if (jobs <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    for (auto& t : pool) t.join();
}

CommandResult run_verify(Workspace& ws, const json& cfg, int jobs) {
    CommandResult res;
    if (!cfg.contains("verify")) throw ConfigError("verify-fourier: config lacks 'verify'");
    const json& v = cfg.at("verify");
    expect_keys(v, {"family", "window", "samples", "jt", "reverse", "norm_pairs"}, "verify");

    std::vector<rinorms::RadialStep> family;
    const json& fam = v.at("family");
    expect_keys(fam, {"random", "named"}, "verify.family");
    if (fam.contains("random")) {
        const json& r = fam.at("random");
        expect_keys(r, {"dim", "count", "max_balls"}, "verify.family.random");
        if (!ws.seed_present)
            throw ConfigError("verify.family.random: a top-level seed is required");
        int dim = r.at("dim").get<int>();
        int count = r.at("count").get<int>();
        int mb = r.contains("max_balls") ? r.at("max_balls").get<int>() : 4;
        rinorms::Rng rng(ws.seed);
        for (int i = 0; i < count; ++i) family.push_back(rinorms::random_radial(rng, dim, mb));
    } else if (fam.contains("named")) {
        for (const auto& nm : fam.at("named")) {
            auto it = ws.radial_fns.find(nm.get<std::string>());
            if (it == ws.radial_fns.end())
                throw ConfigError("verify.family.named: unknown radial_fn");
            family.push_back(it->second);
        }
    } else {
        throw ConfigError("verify.family: expected 'random' or 'named'");
    }

    double window = v.contains("window") ? rinorms::num_from_json(v.at("window")) : 0.0;
    int samples = v.contains("samples") ? v.at("samples").get<int>() : (1 << 16);

    if (v.contains("jt") && v.at("jt").get<bool>()) {
        std::vector<double> cs(family.size());
        parallel_for(static_cast<int>(family.size()), jobs, [&](int i) {
            cs[i] = rinorms::verify_jt(family[i], rinorms::default_t_grid(), window, samples)
                        .empirical_constant;
        });
        json arr = json::array();
        double mx = 0.0;
        for (double c : cs) {
            arr.push_back(rinorms::num_to_json(c));
            mx = std::max(mx, c);
        }
        res.items.push_back(json{{"type", "verify"},
                                 {"criterion", "transform-window-domination"},
                                 {"max_constant", rinorms::num_to_json(mx)},
                                 {"per_sample", arr}});
    }
    if (v.contains("reverse") && v.at("reverse").get<bool>()) {
        std::vector<double> cs(family.size());
        parallel_for(static_cast<int>(family.size()), jobs, [&](int i) {
            cs[i] = rinorms::verify_reverse(family[i], rinorms::default_t_grid(), window, samples)
                        .empirical_constant;
        });
        json arr = json::array();
        double mx = 0.0;
        for (double c : cs) {
            arr.push_back(rinorms::num_to_json(c));
            mx = std::max(mx, c);
        }
        double bound = rinorms::reverse_constant(family.empty() ? 1 : family.front().dim());
        res.any_fail |= mx > bound;
        res.items.push_back(json{{"type", "verify"},
                                 {"criterion", "transform-window-reverse"},
                                 {"max_constant", rinorms::num_to_json(mx)},
                                 {"formula_constant", rinorms::num_to_json(bound)},
                                 {"per_sample", arr}});
    }
    if (v.contains("norm_pairs")) {
        for (const auto& pr : v.at("norm_pairs")) {
            expect_keys(pr, {"rho", "sigma"}, "verify.norm_pairs[]");
            auto rit = ws.norms.find(get_str(pr, "rho", "norm_pairs[]"));
            auto sit = ws.norms.find(get_str(pr, "sigma", "norm_pairs[]"));
            if (rit == ws.norms.end() || sit == ws.norms.end())
                throw ConfigError("verify.norm_pairs: unknown norm");
            rinorms::NormPairReport rep;
            std::vector<rinorms::NormPairSample> samples_out(family.size());
            parallel_for(static_cast<int>(family.size()), jobs, [&](int i) {
                auto one = rinorms::verify_norm_pair(rit->second, sit->second, {family[i]},
                                                     ws.quad, window, samples);
                samples_out[i] = one.samples.front();
            });
            for (const auto& s : samples_out) {
                rep.samples.push_back(s);
                if (!s.skipped) {
                    rep.empirical_constant = std::max(rep.empirical_constant, s.ratio);
                    rep.upper_constant = std::max(rep.upper_constant, s.lhs_upper / s.rhs);
                }
            }
            json item{{"type", "verify"}, {"rho", get_str(pr, "rho", "")},
                      {"sigma", get_str(pr, "sigma", "")}, {"report", rinorms::to_json(rep)}};
            res.items.push_back(item);
        }
    }
    return res;
}

// CSV emission for grid-bearing items.
void write_csvs(const json& items, const std::string& out_stem) {
    int k = 0;
    for (const auto& item : items) {
        ++k;
        auto write_rows = [&](const json& rows, const std::string& header) {
            std::ofstream csv(out_stem + "_item" + std::to_string(k) + ".csv");
            csv << header << "\n";
            for (const auto& r : rows) {
                for (std::size_t c = 0; c < r.size(); ++c)
                    csv << (c ? "," : "") << (r[c].is_string() ? r[c].get<std::string>()
                                                               : r[c].dump());
                csv << "\n";
            }
        };
        if (item.contains("rows") && item["type"] == "weight_table")
            write_rows(item["rows"], "t,weight");
        else if (item.contains("report") && item["report"].contains("points"))
            write_rows(item["report"]["points"], "t,ratio");
        else if (item.contains("report") && item["report"].contains("rows"))
            write_rows(item["report"]["rows"], "t,lhs,rhs,ratio");
    }
}

int run(int argc, char** argv) {
    CLI::App app{kToolVersion};
    app.require_subcommand(1);
    std::string config_path, out_path = "report.json";
    long long seed_override = -1;
    double tol_override = -1.0;
    int jobs = 1;
    if (const char* env = std::getenv("RINORMS_JOBS")) jobs = std::max(1, std::atoi(env));
    app.add_option("--config", config_path, "configuration file (JSON)")->required();
    app.add_option("--out", out_path, "report output path");
    app.add_option("--seed", seed_override, "override the config seed");
    app.add_option("--tol", tol_override, "override quadrature rel_tol");
    app.add_option("--jobs", jobs, "worker threads for sample sweeps");
    auto* c_norm = app.add_subcommand("norm", "evaluate norms on configured inputs");
    auto* c_tw = app.add_subcommand("transform-weight", "tabulate weight transforms");
    auto* c_check = app.add_subcommand("check", "run integral criteria checks");
    auto* c_verify = app.add_subcommand("verify-fourier", "run transform verification sweeps");
    CLI11_PARSE(app, argc, argv);

    std::ifstream in(config_path);
    if (!in) {
        std::fprintf(stderr, "error: cannot open config '%s'\n", config_path.c_str());
        return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string config_bytes = buf.str();

    json cfg;
    try {
        cfg = json::parse(config_bytes);
    } catch (const std::exception& ex) {
        std::fprintf(stderr, "config parse error: %s\n", ex.what());
        return 2;
    }

    try {
        Workspace ws = build_workspace(cfg);
        if (seed_override >= 0) {
            ws.seed = static_cast<std::uint64_t>(seed_override);
            ws.seed_present = true;
        }
        if (tol_override > 0.0) ws.quad.rel_tol = tol_override;

        std::string digest_input = config_bytes + "|seed=" +
                                   (ws.seed_present ? std::to_string(ws.seed) : "none") +
                                   "|tol=" + std::to_string(ws.quad.rel_tol);
        char digest[32];
        std::snprintf(digest, sizeof digest, "fnv1a:%016llx",
                      static_cast<unsigned long long>(fnv1a(digest_input)));

        CommandResult result;
        std::string command;
        auto t0 = std::chrono::steady_clock::now();
        if (*c_norm) {
            command = "norm";
            result = run_norm(ws, cfg);
        } else if (*c_tw) {
            command = "transform-weight";
            result = run_transform_weight(ws, cfg);
        } else if (*c_check) {
            command = "check";
            result = run_check(ws, cfg);
        } else if (*c_verify) {
            command = "verify-fourier";
            result = run_verify(ws, cfg, jobs);
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::fprintf(stderr, "%s: %zu item(s) in %lld ms\n", command.c_str(),
                     result.items.size(), static_cast<long long>(ms));

        json report{{"tool", kToolVersion},
                    {"command", command},
                    {"config_digest", digest},
                    {"items", result.items}};
        std::ofstream out(out_path);
        if (!out) {
            std::fprintf(stderr, "error: cannot write '%s'\n", out_path.c_str());
            return 2;
        }
        out << report.dump(2) << "\n";
        out.close();

        std::string stem = out_path;
        if (auto pos = stem.rfind(".json"); pos != std::string::npos) stem.resize(pos);
        write_csvs(result.items, stem);

        return result.any_fail ? 1 : 0;
    } catch (const ConfigError& ex) {
        std::fprintf(stderr, "config error: %s\n", ex.what());
        return 2;
    } catch (const rinorms::quadrature_error& ex) {
        std::fprintf(stderr, "quadrature error: %s\n", ex.what());
        return 3;
    } catch (const std::invalid_argument& ex) {
        std::fprintf(stderr, "config error: %s\n", ex.what());
        return 2;
    } catch (const std::domain_error& ex) {
        std::fprintf(stderr, "config error: %s\n", ex.what());
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }

#pragma once

#include <mtp/parser.hpp>
#include <mtp/render.hpp>
#include <mtp/sign_decider.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace mtp::cli {

struct RunResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

namespace detail {

using nlohmann::json;

struct Trace {
    std::vector<std::pair<std::string, std::string>> steps;
    void add(std::string step, std::string detail) { steps.emplace_back(std::move(step), std::move(detail)); }
};

inline void trace_bound_report(Trace& tr, const std::string& prefix, const FactorBoundReport& rep) {
    tr.add(prefix + ".factor", to_string(rep.factor));
    tr.add(prefix + ".branch", rep.unary ? "unary" : (rep.odd_branch ? "odd c-degree" : "even c-degree"));
    if (rep.edge_identically_zero) {
        tr.add(prefix + ".edge", "edge polynomial vanishes identically -> unbounded");
        return;
    }
    if (rep.unary) {
        tr.add(prefix + ".bound", to_string(rep.bound));
        return;
    }
    if (rep.odd_branch) tr.add(prefix + ".f1", to_string(rep.f1));
    tr.add(prefix + ".g", to_string(rep.g_raw));
    tr.add(prefix + ".realroot_g", render_isolation(rep.g_roots));
    tr.add(prefix + ".r0", to_string(rep.r0_sample));
    tr.add(prefix + ".r1", to_string(rep.r1));
    tr.add(prefix + ".sample_poly", to_string(rep.sample_poly, {"x", "s", "c"}));
    tr.add(prefix + ".sample_roots",
           rep.sample_root_count > 0 ? render_isolation(rep.sample_roots) : std::string("[]"));
    tr.add(prefix + ".sample_root_count", std::to_string(rep.sample_root_count));
    if (rep.kind == Boundedness::Bounded) tr.add(prefix + ".bound", to_string(rep.bound));
}

inline void trace_bound(Trace& tr, const BoundVerdict& bv) {
    if (bv.scale != 1) tr.add("normalize.scale", to_string(bv.scale));
    tr.add("trivariate", to_string(bv.trivariate));
    for (std::size_t i = 0; i < bv.factors.size(); ++i)
        trace_bound_report(tr, "bound[" + std::to_string(i) + "]", bv.factors[i]);
}

inline void trace_window(Trace& tr, const WindowDecision& wd) {
    tr.add("sign.p", wd.p.get_str());
    if (wd.window_large) tr.add("sign.warning", "window multiplier p exceeds 10^4; expansions get large");
    tr.add("sign.window_expr", render_mtp(wd.window_expr));
    tr.add("sign.trivariate", to_string(wd.trivariate, {"t", "s", "c"}));
    tr.add("sign.tanhalf_numerator", to_string(wd.tanhalf_num, {"y", "t", "?"}));
    tr.add("sign.tanhalf_denominator", "(1+t^2)^" + std::to_string(wd.denom_power) +
                                           ", positive content " + to_string(wd.content));
    tr.add("sign.arctan_poly", to_string(wd.arctan_poly, {"t", "arctan(t)", "?"}));
    const ArctanOutcome& oc = wd.outcome;
    for (const auto& seg : oc.segments)
        tr.add("arctan.segment", "(" + to_string(seg.seg.lo) + "," + to_string(seg.seg.hi) + "): " +
                                     (seg.sign > 0 ? "positive" : "negative") + " via degree-" +
                                     std::to_string(seg.taylor_degree) + " bound");
    if (oc.kind == ArctanSign::HasZero)
        tr.add("arctan.zero", (oc.exact_zero ? "exact zero in " : "sign change across ") +
                                  render_interval(oc.zero_region));
}

inline void trace_factorization(Trace& tr, const FactorizationResult& res) {
    tr.add("laurent", to_string(res.laurent.reduce_base()));
    tr.add("laurent.unit", to_string(res.unit) + " * y^" + std::to_string(-res.p_shift));
    for (std::size_t i = 0; i < res.factors.size(); ++i) {
        const auto& f = res.factors[i];
        std::string tag = "factor[" + std::to_string(i) + "]";
        tr.add(tag + ".P", to_string(f.P, {"x", "y", "?"}));
        tr.add(tag + ".multiplicity", std::to_string(f.mult));
        tr.add(tag + ".C", to_string(f.C));
        tr.add(tag + ".p", std::to_string(f.p_exp));
        tr.add(tag + ".real_form", f.rationalized ? render_mtp(f.display) : render_witness(f.witness));
        tr.add(tag + ".witness", render_witness(f.witness));
    }
    if (res.c0_rational) tr.add("C0", to_string(res.c0));
}

inline std::string factor_expr_string(const LaurentFactor& f) {
    return f.rationalized ? render_mtp(f.display) : render_witness(f.witness);
}

inline std::string constant_string(const FactorizationResult& res) {
    if (res.c0_rational) return to_string(res.c0);
    std::string out = to_string(res.c0_base);
    if (res.c0_pow2 != 0) out += " * 2^(" + std::to_string(res.c0_pow2) + "/2)";
    for (const auto& c : res.c0_half_units) out += " * (" + to_string(c) + ")^(1/2)";
    return out;
}

struct Options {
    std::string expr_text;
    bool upto_set = false;
    Rational upto = Rational(0);
    std::string format = "text";
    bool trace = false;
    Rational isolation_width = rat(1, 10);
    unsigned taylor_cap = 63;
    unsigned depth_cap = 12;

    SignConfig sign_config() const {
        SignConfig cfg;
        cfg.caps.max_taylor_degree = taylor_cap;
        cfg.caps.max_bisection_depth = depth_cap;
        cfg.bound.display_width = isolation_width;
        return cfg;
    }
};

inline json trace_json(const Trace& tr) {
    json arr = json::array();
    for (const auto& [step, detail] : tr.steps) arr.push_back(json{{"step", step}, {"detail", detail}});
    return arr;
}

inline int run_sign(const Options& opt, std::ostream& out) {
    MTPExpr expr = parse_mtp(opt.expr_text);
    SignConfig cfg = opt.sign_config();
    SignVerdict v = opt.upto_set ? decide_on_bounded(expr, opt.upto, cfg) : decide_on_halfline(expr, cfg);

    Trace tr;
    if (opt.trace) {
        tr.add("input", opt.expr_text);
        if (!expr.is_zero() && v.kind != SignKind::IdenticallyZero) {
            FactorizationResult res = factorize(expr);
            trace_factorization(tr, res);
            tr.add("residual", render_mtp(lrhom_to_mtp(odd_residual(res))));
        }
        if (v.odd_bound) trace_bound(tr, *v.odd_bound);
        if (v.window) trace_window(tr, *v.window);
        for (std::size_t i = 0; i < v.factor_notes.size(); ++i) {
            const auto& info = v.factor_notes[i];
            if (!info.note.empty())
                tr.add("even[" + std::to_string(i) + "]", info.note);
        }
        tr.add("counters", "p = " + std::to_string(v.p_counter) + ", q = " + std::to_string(v.q_counter));
        tr.add("verdict", render_sign_text(v));
    }

    if (opt.format == "json") {
        json j{{"task", "sign"},
               {"input", opt.expr_text},
               {"verdict", render_sign_kind(v.kind)},
               {"interval", v.upto ? "(0, " + to_string(*v.upto) + ")" : "(0,+inf)"}};
        if (v.inconclusive) j["inconclusive"] = true;
        if (opt.trace) j["trace"] = trace_json(tr);
        out << j.dump(2) << "\n";
    } else {
        if (v.window && v.window->window_large)
            out << "warning: window multiplier p = " << v.window->p.get_str() << " exceeds 10^4\n";
        out << render_sign_text(v) << "\n";
        if (opt.trace)
            for (const auto& [step, detail] : tr.steps) out << "  " << step << ": " << detail << "\n";
    }
    return v.inconclusive ? 3 : 0;
}

inline int run_bound(const Options& opt, std::ostream& out) {
    MTPExpr expr = parse_mtp(opt.expr_text);
    BoundConfig cfg;
    cfg.display_width = opt.isolation_width;
    BoundVerdict v = decide_bound(expr, cfg);

    Trace tr;
    if (opt.trace) {
        tr.add("input", opt.expr_text);
        trace_bound(tr, v);
    }
    std::string verdict = v.kind == Boundedness::Bounded
                              ? "bounded"
                              : (v.kind == Boundedness::Unbounded ? "unbounded" : "identically_zero");
    if (opt.format == "json") {
        json j{{"task", "bound"}, {"input", opt.expr_text}, {"verdict", verdict}, {"interval", "(0,+inf)"}};
        if (v.kind == Boundedness::Bounded) j["bound"] = to_string(v.bound);
        if (opt.trace) j["trace"] = trace_json(tr);
        out << j.dump(2) << "\n";
    } else {
        if (v.kind == Boundedness::Bounded)
            out << "positive roots bounded: none exceeds " << to_string(v.bound) << "\n";
        else if (v.kind == Boundedness::Unbounded)
            out << "positive roots are unbounded\n";
        else
            out << "F(x) = 0 identically\n";
        if (opt.trace)
            for (const auto& [step, detail] : tr.steps) out << "  " << step << ": " << detail << "\n";
    }
    return 0;
}

inline int run_factor(const Options& opt, std::ostream& out) {
    MTPExpr expr = parse_mtp(opt.expr_text);
    if (expr.is_zero()) {
        out << (opt.format == "json"
                    ? json{{"task", "factor"}, {"input", opt.expr_text}, {"verdict", "identically_zero"},
                           {"interval", "(0,+inf)"}}
                          .dump(2) +
                          "\n"
                    : std::string("F(x) = 0 identically\n"));
        return 0;
    }
    FactorizationResult res = factorize(expr);

    Trace tr;
    if (opt.trace) {
        tr.add("input", opt.expr_text);
        trace_factorization(tr, res);
    }
    if (opt.format == "json") {
        json j{{"task", "factor"},
               {"input", opt.expr_text},
               {"verdict", "factored"},
               {"interval", "(0,+inf)"},
               {"constant", constant_string(res)}};
        json factors = json::array();
        for (const auto& f : res.factors)
            factors.push_back(json{{"expr", factor_expr_string(f)}, {"exponent", f.mult}});
        j["factors"] = factors;
        if (opt.trace) j["trace"] = trace_json(tr);
        out << j.dump(2) << "\n";
    } else {
        std::string line = constant_string(res);
        for (const auto& f : res.factors) {
            line += " * (" + factor_expr_string(f) + ")";
            if (f.mult != 1) line += "^" + std::to_string(f.mult);
        }
        out << "F = " << line << "\n";
        if (opt.trace)
            for (const auto& [step, detail] : tr.steps) out << "  " << step << ": " << detail << "\n";
    }
    return 0;
}

}  // namespace detail

// Entry point shared by the binary and the tests; argv excludes the program
// name. Exit codes: 0 success, 1 internal error, 2 parse/usage error,
// 3 inconclusive (caps exhausted).
inline RunResult run(const std::vector<std::string>& argv) {
    RunResult result;
    std::ostringstream out, err;

    CLI::App app{"exact sign, root-bound and factorization decisions for mixed trigonometric polynomials"};
    app.require_subcommand(1);

    detail::Options opt;
    std::string upto_text, width_text;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("expr", opt.expr_text, "mixed trigonometric polynomial")->required();
        sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_flag("--trace", opt.trace, "emit the proof trace");
        sub->add_option("--isolation-width", width_text, "realroot refinement width (rational)");
        sub->add_option("--max-taylor-degree", opt.taylor_cap, "arctan Taylor degree cap (odd, >= 3)");
        sub->add_option("--max-bisection-depth", opt.depth_cap, "window bisection depth cap (>= 1)");
    };
    CLI::App* sign = app.add_subcommand("sign", "decide the sign on (0,+inf) or (0,T)");
    add_common(sign);
    sign->add_option("--upto", upto_text, "decide on (0,T) instead of the half-line");
    CLI::App* bound = app.add_subcommand("bound", "decide positive-root boundedness");
    add_common(bound);
    CLI::App* factor = app.add_subcommand("factor", "square-free factorization into real factors");
    add_common(factor);

    std::vector<std::string> args(argv.rbegin(), argv.rend());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        result.exit_code = 2;
        err << e.what() << "\n";
        result.err = err.str();
        return result;
    }

    try {
        if (!width_text.empty()) {
            opt.isolation_width = parse_rational(width_text);
            if (!(opt.isolation_width > 0)) throw std::domain_error("--isolation-width must be positive");
        }
        if (!upto_text.empty()) {
            opt.upto_set = true;
            opt.upto = parse_rational(upto_text);
            if (!(opt.upto > 0)) throw std::domain_error("--upto must be positive");
        }
        if (opt.taylor_cap < 3 || opt.taylor_cap % 2 == 0)
            throw std::domain_error("--max-taylor-degree must be odd and >= 3");
        if (opt.depth_cap < 1) throw std::domain_error("--max-bisection-depth must be >= 1");

        if (sign->parsed())
            result.exit_code = detail::run_sign(opt, out);
        else if (bound->parsed())
            result.exit_code = detail::run_bound(opt, out);
        else
            result.exit_code = detail::run_factor(opt, out);
    } catch (const ParseError& e) {
        result.exit_code = 2;
        err << "parse error: " << e.what() << "\n";
    } catch (const std::domain_error& e) {
        result.exit_code = 2;
        err << "error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        result.exit_code = 1;
        err << "internal error: " << e.what() << "\n";
    }
    result.out = out.str();
    result.err = err.str();
    return result;
}

}  // namespace mtp::cli

#pragma once

#include <mtp/factorize.hpp>
#include <mtp/mtp_expr.hpp>
#include <mtp/root_bound.hpp>
#include <mtp/sign_decider.hpp>
#include <mtp/sturm.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace mtp {

// Grammar-compatible rendering: trigonometric terms by descending frequency
// (cos before sin), then pure powers of x, constant last. parse_mtp of the
// result reproduces the expression.
inline std::string render_mtp(const MTPExpr& e) {
    if (e.is_zero()) return "0";
    std::vector<MTPTerm> ts = e.terms();
    std::sort(ts.begin(), ts.end(), [](const MTPTerm& a, const MTPTerm& b) {
        bool atrig = a.q + a.r > 0, btrig = b.q + b.r > 0;
        if (atrig != btrig) return atrig;
        if (atrig) {
            if (a.omega != b.omega) return a.omega > b.omega;
            if (a.r != b.r) return a.r > b.r;
            if (a.q != b.q) return a.q > b.q;
        }
        return a.p > b.p;
    });
    std::string out;
    for (const auto& t : ts) {
        Rational coeff = t.a;
        std::string body;
        auto add_part = [&body](const std::string& s) {
            if (!body.empty()) body += "*";
            body += s;
        };
        if (t.p > 0) add_part(t.p == 1 ? "x" : "x^" + std::to_string(t.p));
        if (t.q + t.r > 0) {
            std::string arg = (t.omega == 1 ? "x" : to_string(t.omega) + "*x");
            if (t.q > 0) add_part("sin(" + arg + ")" + (t.q > 1 ? "^" + std::to_string(t.q) : ""));
            if (t.r > 0) add_part("cos(" + arg + ")" + (t.r > 1 ? "^" + std::to_string(t.r) : ""));
        }
        std::string cs = to_string(coeff);
        bool neg = cs[0] == '-';
        if (neg) cs = cs.substr(1);
        std::string piece;
        if (body.empty())
            piece = cs;
        else if (cs == "1")
            piece = body;
        else
            piece = cs + "*" + body;
        if (out.empty())
            out = (neg ? "-" : "") + piece;
        else
            out += (neg ? " - " : " + ") + piece;
    }
    return out;
}

inline std::string render_interval(const RationalInterval& iv) {
    return "[" + to_string(iv.lo) + "," + to_string(iv.hi) + "]";
}

inline std::string render_isolation(const RootIsolation& iso) {
    std::string out = "[";
    for (std::size_t i = 0; i < iso.intervals.size(); ++i) {
        if (i) out += ",";
        out += render_interval(iso.intervals[i]);
    }
    return out + "]";
}

inline std::string render_phase(const PhasedWitness::Pair& pair, const GaussianRational& c) {
    auto pi_mult = witness_phase_pi(pair.a, c);
    if (pi_mult) {
        Rational m = *pi_mult;
        if (sgn(m) == 0) return "";
        std::string num = to_string(Rational(abs(m)));
        std::string s = (sgn(m) < 0 ? "-" : "");
        if (abs(m) == 1) return s + "pi";
        // m = p/q: "p*pi/q" or "pi/q" when p = 1
        Integer p = Rational(abs(m)).get_num(), q = Rational(abs(m)).get_den();
        std::string body = (p == 1 ? "pi" : p.get_str() + "*pi");
        if (q != 1) body += "/" + q.get_str();
        return s + body;
    }
    std::string out;
    if (!(pair.a.is_real() && sgn(pair.a.re) > 0)) out = "arg(" + to_string(pair.a) + ")";
    if (!c.is_one()) {
        if (!out.empty()) out += " + ";
        out += "arg(" + to_string(c.conj()) + ")/2";
    }
    return out;
}

// Phased witness rendering, e.g. "2*cos(pi/4 + 1/2*x)".
inline std::string render_witness(const PhasedWitness& w) {
    std::string out;
    for (const auto& pair : w.pairs) {
        Rational b2 = (pair.v > 0 ? 4 : 1) * pair.a.abs2();
        std::string coeff;
        // b = sqrt(b2): print exactly when rational
        Rational root;
        {
            Integer n = b2.get_num(), d = b2.get_den();
            Integer sn, sd;
            mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
            mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
            if (sn * sn == n && sd * sd == d)
                coeff = to_string(rat(sn, sd));
            else
                coeff = "sqrt(" + to_string(b2) + ")";
        }
        std::string term;
        if (pair.v == 0) {
            term = coeff;  // real constant a * C^{-1/2}
            if (pair.a.is_real() && sgn(pair.a.re) < 0) term = "-" + term;
        } else {
            std::string phase = render_phase(pair, w.C);
            Rational freq = rat(Integer(pair.v), Integer(w.D));
            std::string arg = (freq == 1 ? "x" : to_string(freq) + "*x");
            if (!phase.empty()) arg = phase + " + " + arg;
            term = (coeff == "1" ? "" : coeff + "*");
            term += "cos(" + arg + ")";
        }
        if (pair.xpow > 0) term += "*x" + (pair.xpow > 1 ? "^" + std::to_string(pair.xpow) : "");
        if (out.empty())
            out = term;
        else
            out += " + " + term;
    }
    return out.empty() ? "0" : out;
}

inline std::string render_sign_kind(SignKind k) {
    switch (k) {
        case SignKind::Positive: return "positive";
        case SignKind::NonNegative: return "nonnegative";
        case SignKind::Negative: return "negative";
        case SignKind::NonPositive: return "nonpositive";
        case SignKind::NoConstantSign: return "no_constant_sign";
        case SignKind::IdenticallyZero: return "identically_zero";
    }
    return "unknown";
}

inline std::string render_sign_text(const SignVerdict& v) {
    std::string iv = v.upto ? "(0, " + to_string(*v.upto) + ")" : "(0,+inf)";
    std::string weak_note = v.inconclusive ? "; strictness undecided (caps exhausted)" : "";
    switch (v.kind) {
        case SignKind::Positive: return "F(x) > 0 on " + iv;
        case SignKind::NonNegative: return "F(x) >= 0 on " + iv + weak_note;
        case SignKind::Negative: return "F(x) < 0 on " + iv;
        case SignKind::NonPositive: return "F(x) <= 0 on " + iv + weak_note;
        case SignKind::NoConstantSign:
            if (v.inconclusive) return "undecided on " + iv + " (caps exhausted)";
            return "no constant sign on " + iv;
        case SignKind::IdenticallyZero: return "F(x) = 0 identically";
    }
    return "unknown";
}

}  // namespace mtp

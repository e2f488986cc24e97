#pragma once

#include <mtp/laurent.hpp>
#include <mtp/mtp_expr.hpp>
#include <mtp/poly.hpp>

#include "bigfloat.hpp"

namespace mtptest {

inline BigFloat eval_mtp(const mtp::MTPExpr& e, const BigFloat& x) {
    BigFloat acc;
    for (const auto& t : e.terms()) {
        BigFloat v(t.a);
        v *= x.pow_ui(t.p);
        if (t.q + t.r > 0) {
            BigFloat arg = BigFloat(t.omega) * x;
            if (t.q) v *= arg.sin().pow_ui(t.q);
            if (t.r) v *= arg.cos().pow_ui(t.r);
        }
        acc += v;
    }
    return acc;
}

// Trivariate f(x, s, c) evaluated at (x, sin x, cos x).
inline BigFloat eval_trivariate(const mtp::QPoly& f, const BigFloat& x) {
    BigFloat acc;
    BigFloat s = x.sin(), c = x.cos();
    for (const auto& [m, coef] : f.terms()) {
        BigFloat v(coef);
        v *= x.pow_ui(m[mtp::vars::x]);
        v *= s.pow_ui(m[mtp::vars::s]);
        v *= c.pow_ui(m[mtp::vars::c]);
        acc += v;
    }
    return acc;
}

// Bivariate h(t, a) evaluated at (t, arctan t).
inline BigFloat eval_arctan_poly(const mtp::QPoly& h, const BigFloat& t) {
    BigFloat acc;
    BigFloat a = t.atan();
    for (const auto& [m, coef] : h.terms()) {
        BigFloat v(coef);
        v *= t.pow_ui(m[mtp::vars::t]);
        v *= a.pow_ui(m[mtp::vars::a]);
        acc += v;
    }
    return acc;
}

struct ComplexBF {
    BigFloat re, im;
    ComplexBF operator*(const ComplexBF& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
    ComplexBF operator+(const ComplexBF& o) const { return {re + o.re, im + o.im}; }
};

// Laurent value P(x, e^{Ix/D}) as a complex number.
inline ComplexBF eval_laurent(const mtp::LaurentPoly& p, const BigFloat& x) {
    ComplexBF acc{BigFloat(0L), BigFloat(0L)};
    for (const auto& [m, coef] : p.num().terms()) {
        long v = static_cast<long>(m[mtp::vars::y]) - p.shift();
        BigFloat theta = BigFloat(mtp::rat(v, static_cast<long>(p.base_den()))) * x;
        ComplexBF term{BigFloat(coef.re), BigFloat(coef.im)};
        term = term * ComplexBF{theta.cos(), theta.sin()};
        BigFloat xp = x.pow_ui(m[mtp::vars::x]);
        term.re *= xp;
        term.im *= xp;
        acc = acc + term;
    }
    return acc;
}

inline bool close_rel(const BigFloat& a, const BigFloat& b, const mtp::Rational& tol) {
    BigFloat diff = (a - b).abs();
    BigFloat scale = BigFloat(1L) + a.abs();
    return diff <= BigFloat(tol) * scale;
}

}  // namespace mtptest

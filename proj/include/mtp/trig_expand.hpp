#pragma once

#include <mtp/mtp_expr.hpp>
#include <mtp/poly.hpp>

#include <stdexcept>
#include <utility>
#include <vector>

namespace mtp {

namespace detail {

// Reduced multiple-angle tables: sin(kx) and cos(kx) as polynomials in
// (s, c) with c-degree <= 1 (c^2 rewritten to 1 - s^2 along the way).
struct AngleTable {
    std::vector<QPoly> sin_table;  // sin(k x)
    std::vector<QPoly> cos_table;  // cos(k x)

    explicit AngleTable(unsigned max_n) {
        sin_table.resize(max_n + 1);
        cos_table.resize(max_n + 1);
        sin_table[0] = QPoly();
        cos_table[0] = QPoly(Rational(1));
        if (max_n == 0) return;
        QPoly s = QPoly::variable(vars::s), c = QPoly::variable(vars::c);
        sin_table[1] = s;
        cos_table[1] = c;
        for (unsigned k = 2; k <= max_n; ++k) {
            sin_table[k] = reduce_c(sin_table[k - 1] * c + cos_table[k - 1] * s);
            cos_table[k] = reduce_c(cos_table[k - 1] * c - sin_table[k - 1] * s);
        }
    }

    static QPoly reduce_c(const QPoly& f) {
        QPoly out;
        QPoly one_minus_s2 = QPoly(Rational(1)) - QPoly::variable(vars::s).pow(2);
        for (const auto& [m, coef] : f.terms()) {
            unsigned k = m[vars::c];
            Mono base = m;
            base[vars::c] = k % 2;
            out += QPoly::term(coef, base) * one_minus_s2.pow(k / 2);
        }
        return out;
    }
};

}  // namespace detail

// Expand an integer-frequency MTP into f(x, s, c) with s = sin x, c = cos x,
// keeping the c-degree of every multiple-angle image minimal.
inline QPoly to_trivariate(const MTPExpr& e) {
    unsigned max_n = 1;
    for (const auto& t : e.terms()) {
        if (t.q + t.r == 0) continue;
        if (t.omega.get_den() != 1) throw std::domain_error("to_trivariate: frequencies must be integers");
        if (!t.omega.get_num().fits_uint_p()) throw std::domain_error("to_trivariate: frequency too large");
        max_n = std::max(max_n, static_cast<unsigned>(t.omega.get_num().get_ui()));
    }
    detail::AngleTable table(max_n);
    QPoly out;
    for (const auto& t : e.terms()) {
        QPoly term = QPoly::term(t.a, Mono{t.p, 0, 0});
        if (t.q + t.r > 0) {
            unsigned n = static_cast<unsigned>(t.omega.get_num().get_ui());
            if (t.q) term *= table.sin_table[n].pow(t.q);
            if (t.r) term *= table.cos_table[n].pow(t.r);
        }
        out += term;
    }
    return detail::AngleTable::reduce_c(out);
}

// f = A + B*c modulo (c^2 + s^2 - 1), with A, B free of c.
inline std::pair<QPoly, QPoly> circle_reduce(const QPoly& f) {
    QPoly reduced = detail::AngleTable::reduce_c(f);
    QPoly a, b;
    for (const auto& [m, coef] : reduced.terms()) {
        Mono base = m;
        base[vars::c] = 0;
        if (m[vars::c] == 0)
            a += QPoly::term(coef, base);
        else
            b += QPoly::term(coef, base);
    }
    return {a, b};
}

struct TanHalfImage {
    QPoly numerator;       // polynomial in (angle@slot0, t@slot1), positive content stripped
    unsigned denom_power;  // (1 + t^2)^k cleared; k recorded, always positive on reals
    Rational content;      // input == content * numerator / (1+t^2)^k after substitution
};

// Substitute s = 2t/(1+t^2), c = (1-t^2)/(1+t^2) (t = tan(angle/2)) and clear
// the denominator. The sign of the input on angle in (0, pi/2) equals the
// sign of the numerator on t in (0, 1), scaled by the positive content.
inline TanHalfImage tan_half_substitute(const QPoly& g) {
    unsigned k = 0;
    for (const auto& [m, coef] : g.terms()) k = std::max(k, m[vars::s] + m[vars::c]);
    QPoly t = QPoly::variable(vars::s);  // reuse slot 1 for t
    QPoly one(Rational(1));
    QPoly num_s = Rational(2) * t;            // sin numerator
    QPoly num_c = one - t * t;                // cos numerator
    QPoly den = one + t * t;
    QPoly out;
    for (const auto& [m, coef] : g.terms()) {
        QPoly term = QPoly::term(coef, Mono{m[vars::x], 0, 0});
        if (m[vars::s]) term *= num_s.pow(m[vars::s]);
        if (m[vars::c]) term *= num_c.pow(m[vars::c]);
        unsigned used = m[vars::s] + m[vars::c];
        if (used < k) term *= den.pow(k - used);
        out += term;
    }
    TanHalfImage image;
    image.denom_power = k;
    image.content = rational_content(out);
    image.numerator = out.is_zero() ? out : out.scalar_div(Rational(image.content));
    return image;
}

// Replace the angle slot by 2*arctan(t): input H(angle, t) becomes an arctan
// polynomial in (t@slot0, a@slot1) with a standing for arctan(t). The result
// is content-stripped (positive factor only).
inline QPoly angle_to_arctan(const QPoly& h) {
    QPoly out;
    for (const auto& [m, coef] : h.terms()) {
        Rational c = coef * pow_rat(Rational(2), m[vars::x]);
        out += QPoly::term(c, Mono{m[vars::s], m[vars::x], 0});
    }
    return make_primitive(out);
}

}  // namespace mtp

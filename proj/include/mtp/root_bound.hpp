#pragma once

#include <mtp/mtp_expr.hpp>
#include <mtp/poly_gcd.hpp>
#include <mtp/resultant.hpp>
#include <mtp/sturm.hpp>
#include <mtp/trig_expand.hpp>

#include <optional>
#include <vector>

namespace mtp {

enum class Boundedness { Bounded, Unbounded, IdenticallyZero };

struct BoundConfig {
    // Refinement width for the isolation feeding r0; tight enough to
    // reproduce the reported dyadic bounds.
    Rational r0_width = rat(1, 100);
    // Width used for the sample-polynomial realroot display.
    Rational display_width = rat(1, 10);
    // r1 = r0_sample + sample_offset (any positive offset is valid).
    Rational sample_offset = Rational(1);
};

// Per-factor record of the boundedness decision: every intermediate the
// trace prints, kept exact so tests can replay the computation.
struct FactorBoundReport {
    QPoly factor;
    bool odd_branch = false;
    bool unary = false;
    bool edge_identically_zero = false;

    QPoly f1;                    // odd branch: res(f, s^2+c^2-1, c)
    QPoly g_raw;                 // resultant feeding r0 (odd: res(f1, df1/ds, s); even: the g1 product)
    RootIsolation g_roots;       // isolation of g_raw at r0_width
    Rational r0_sample = Rational(0);
    Rational r1 = Rational(0);
    QPoly sample_poly;           // f1(r1, s) or g(r1, s)
    RootIsolation sample_roots;  // isolation at display_width (empty when no roots)
    int sample_root_count = 0;
    std::vector<QPoly> edge_polys;  // f(x,1,0), f(x,-1,0) / g(x,1), g(x,-1)

    Boundedness kind = Boundedness::Bounded;
    Rational bound = Rational(0);
};

struct BoundVerdict {
    Boundedness kind = Boundedness::IdenticallyZero;
    Rational bound = Rational(0);  // meaningful iff Bounded; already rescaled to the input variable
    Rational scale = Rational(1);  // frequency normalization factor
    QPoly trivariate;              // normalized trivariate form after circle stripping
    unsigned circle_power = 0;     // multiplicity of (c^2+s^2-1) removed
    std::vector<FactorBoundReport> factors;
};

namespace detail {

// sup of positive roots of every non-constant guard polynomial in the list.
inline Rational guarded_sup(const std::vector<QPoly>& polys, const Rational& width) {
    Rational r0(0);
    for (const auto& p : polys) {
        if (p.is_zero() || p.is_constant()) continue;
        Rational s = positive_root_sup(p, vars::x, width);
        if (s > r0) r0 = s;
    }
    return r0;
}

// Keep the input's exact scaling when it is already square-free (the traces
// mirror the worked examples); otherwise take the distinct-factor product.
template <class K>
Poly<K> squarefree_image(const Poly<K>& f) {
    auto dec = squarefree_decompose(f);
    bool already = true;
    for (auto& [p, m] : dec.factors)
        if (m > 1) already = false;
    if (already) return f;
    Poly<K> out(K(1));
    for (auto& [p, m] : dec.factors) out *= p;
    return out;
}

inline FactorBoundReport factor_bound_odd(const QPoly& f, const BoundConfig& cfg) {
    FactorBoundReport rep;
    rep.factor = f;
    rep.odd_branch = true;

    QPoly splus = f.substitute_value(vars::s, Rational(1)).substitute_value(vars::c, Rational(0));
    QPoly sminus = f.substitute_value(vars::s, Rational(-1)).substitute_value(vars::c, Rational(0));
    rep.edge_polys = {splus, sminus};
    if (splus.is_zero() || sminus.is_zero()) {
        rep.edge_identically_zero = true;
        rep.kind = Boundedness::Unbounded;
        return rep;
    }

    rep.f1 = squarefree_image(resultant(f, QPoly::variable(vars::s).pow(2) + QPoly::variable(vars::c).pow(2) - QPoly(Rational(1)), vars::c));

    int ds = rep.f1.degree(vars::s);
    std::vector<QPoly> guards;
    if (ds == 0) {
        // f1 free of s: F cannot vanish beyond the roots of f1 itself.
        rep.g_raw = rep.f1;
    } else {
        rep.g_raw = resultant(rep.f1, rep.f1.derivative(vars::s), vars::s);
        guards.push_back(detail::content_of(rep.f1, vars::s));
        guards.push_back(rep.f1.lead_coeff_of(vars::s));
    }
    if (!rep.g_raw.is_zero()) {
        rep.g_roots = isolate_real_roots(rep.g_raw, vars::x, cfg.r0_width);
        guards.push_back(rep.g_raw);
    }
    rep.r0_sample = guarded_sup(guards, cfg.r0_width);
    rep.r1 = rep.r0_sample + cfg.sample_offset;
    rep.sample_poly = rep.f1.substitute_value(vars::x, rep.r1);
    rep.sample_root_count = rep.sample_poly.is_constant() ? 0 : count_real_roots(rep.sample_poly, vars::s);
    if (rep.sample_root_count > 0) {
        rep.sample_roots = isolate_real_roots(rep.sample_poly, vars::s, cfg.display_width);
        rep.kind = Boundedness::Unbounded;
        return rep;
    }
    rep.kind = Boundedness::Bounded;
    rep.bound = rep.r0_sample;
    for (const auto& e : rep.edge_polys) {
        if (e.is_constant()) continue;
        Rational s = positive_root_sup(e, vars::x, cfg.r0_width);
        if (s > rep.bound) rep.bound = s;
    }
    return rep;
}

inline FactorBoundReport factor_bound_even(const QPoly& g, const BoundConfig& cfg) {
    FactorBoundReport rep;
    rep.factor = g;
    rep.odd_branch = false;

    if (g.degree(vars::s) == 0) {
        rep.unary = true;
        rep.kind = Boundedness::Bounded;
        rep.bound = g.is_constant() ? Rational(0) : positive_root_sup(g, vars::x, cfg.r0_width);
        return rep;
    }

    QPoly eplus = g.substitute_value(vars::s, Rational(1));
    QPoly eminus = g.substitute_value(vars::s, Rational(-1));
    rep.edge_polys = {eplus, eminus};
    if (eplus.is_zero() || eminus.is_zero()) {
        rep.edge_identically_zero = true;
        rep.kind = Boundedness::Unbounded;
        return rep;
    }

    QPoly s = QPoly::variable(vars::s);
    QPoly r1p = resultant(s + QPoly(Rational(1)), g, vars::s);
    QPoly r1m = resultant(s - QPoly(Rational(1)), g, vars::s);
    QPoly disc = resultant(g, g.derivative(vars::s), vars::s);
    rep.g_raw = r1p * r1m * disc;

    std::vector<QPoly> guards{r1p, r1m, disc, detail::content_of(g, vars::s), g.lead_coeff_of(vars::s)};
    if (!rep.g_raw.is_zero()) rep.g_roots = isolate_real_roots(rep.g_raw, vars::x, cfg.r0_width);
    rep.r0_sample = guarded_sup(guards, cfg.r0_width);
    rep.r1 = rep.r0_sample + cfg.sample_offset;
    rep.sample_poly = g.substitute_value(vars::x, rep.r1);
    rep.sample_root_count =
        rep.sample_poly.is_constant() ? 0 : count_real_roots(rep.sample_poly, vars::s, Rational(-1), Rational(1));
    if (rep.sample_root_count > 0) {
        rep.sample_roots = isolate_real_roots(rep.sample_poly, vars::s, cfg.display_width);
        rep.kind = Boundedness::Unbounded;
        return rep;
    }
    rep.kind = Boundedness::Bounded;
    rep.bound = rep.r0_sample;
    return rep;
}

}  // namespace detail

// Algorithm step for one square-free trivariate factor (not divisible by the
// circle polynomial). Chooses the odd/even c-degree branch after reduction.
inline FactorBoundReport decide_factor_bound(const QPoly& f, const BoundConfig& cfg = {}) {
    auto [a, b] = circle_reduce(f);
    if (a.is_zero() && b.is_zero()) throw std::domain_error("decide_factor_bound: factor vanishes on the circle");
    if (!b.is_zero()) return detail::factor_bound_odd(f, cfg);
    return detail::factor_bound_even(a, cfg);
}

// Whether the positive roots of F are bounded; if so, a rational bound.
inline BoundVerdict decide_bound(const MTPExpr& input, const BoundConfig& cfg = {}) {
    BoundVerdict verdict;
    if (input.is_zero()) {
        verdict.kind = Boundedness::IdenticallyZero;
        return verdict;
    }
    auto norm = normalize_frequency(input);
    verdict.scale = norm.scale;
    QPoly tri = to_trivariate(norm.expr);
    if (tri.is_zero()) {
        // The reduced representative vanishes, so F is identically zero as a
        // function (e.g. sin^2 x + cos^2 x - 1).
        verdict.kind = Boundedness::IdenticallyZero;
        return verdict;
    }

    QPoly circle = QPoly::variable(vars::s).pow(2) + QPoly::variable(vars::c).pow(2) - QPoly(Rational(1));
    for (;;) {
        auto q = try_divide(tri, circle);
        if (!q) break;
        tri = *q;
        ++verdict.circle_power;
    }
    verdict.trivariate = tri;
    if (tri.is_constant()) {
        // Either F was a multiple of sin^2+cos^2-1 (identically zero as a
        // function) or a nonzero constant.
        verdict.kind = verdict.circle_power > 0 ? Boundedness::IdenticallyZero : Boundedness::Bounded;
        verdict.bound = Rational(0);
        return verdict;
    }

    std::vector<QPoly> pieces;
    auto dec = squarefree_decompose(tri);
    bool all_simple = true;
    for (auto& [p, m] : dec.factors)
        if (m > 1) all_simple = false;
    if (all_simple && dec.factors.size() == 1) {
        pieces.push_back(tri);  // keep the worked examples' exact scaling
    } else {
        for (auto& [p, m] : dec.factors) pieces.push_back(p);
    }

    Rational best(0);
    verdict.kind = Boundedness::Bounded;
    for (const auto& piece : pieces) {
        FactorBoundReport rep = decide_factor_bound(piece, cfg);
        verdict.factors.push_back(rep);
        if (rep.kind == Boundedness::Unbounded) verdict.kind = Boundedness::Unbounded;
        if (rep.kind == Boundedness::Bounded && rep.bound > best) best = rep.bound;
    }
    if (verdict.kind == Boundedness::Bounded) verdict.bound = best / verdict.scale;
    return verdict;
}

}  // namespace mtp

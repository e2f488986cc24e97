#pragma once

#include <mtp/arctan.hpp>
#include <mtp/factorize.hpp>
#include <mtp/root_bound.hpp>

#include <optional>
#include <string>
#include <vector>

namespace mtp {

enum class SignKind { Positive, NonNegative, Negative, NonPositive, NoConstantSign, IdenticallyZero };

struct SignConfig {
    ArctanCaps caps;
    BoundConfig bound;
    unsigned window_warn = 10000;  // warn when the p multiplier gets this large
};

// One run of the bounded-interval core: rescale into (0, pi/2), tan-half
// substitution, arctan decision.
struct WindowDecision {
    Integer p = 1;
    MTPExpr window_expr;  // G(t) = F(p t)
    QPoly trivariate;     // g(t, sin t, cos t)
    QPoly tanhalf_num;    // numerator after the half-angle substitution
    unsigned denom_power = 0;
    Rational content = Rational(1);
    QPoly arctan_poly;  // H(t, a), a = arctan t
    ArctanOutcome outcome;
    bool window_large = false;
};

struct FactorSignInfo {
    unsigned mult = 0;
    bool vanishes = false;      // contributes to q
    bool inconclusive = false;  // decider gave up on this factor
    std::string note;
};

struct SignVerdict {
    SignKind kind = SignKind::IdenticallyZero;
    bool inconclusive = false;     // some sub-decision hit its caps
    std::optional<Rational> upto;  // interval (0, T); half-line when absent

    // trace payload
    int p_counter = 0;  // 1 when the odd part is negative
    int q_counter = 0;  // number of vanishing even parts
    std::optional<BoundVerdict> odd_bound;
    std::optional<WindowDecision> window;
    std::vector<FactorSignInfo> factor_notes;
};

namespace detail {

inline WindowDecision run_window(const MTPExpr& f_intfreq, const Rational& t_norm, const SignConfig& cfg,
                                 const Rational& arctan_hi = Rational(1)) {
    WindowDecision wd;
    Integer p = floor_div_half_pi(t_norm) + 1;
    wd.p = p;
    if (p > cfg.window_warn) wd.window_large = true;
    if (!p.fits_sint_p()) throw std::domain_error("window: scaling factor out of range");
    wd.window_expr = f_intfreq.scale_argument(Rational(p));
    wd.trivariate = to_trivariate(wd.window_expr);
    TanHalfImage img = tan_half_substitute(wd.trivariate);
    wd.tanhalf_num = img.numerator;
    wd.denom_power = img.denom_power;
    wd.content = img.content;
    wd.arctan_poly = angle_to_arctan(img.numerator);
    wd.outcome = decide_arctan_sign(wd.arctan_poly, cfg.caps, arctan_hi);
    return wd;
}

// Sign of a square-free real MTP on (0, T): bound-free core used both by the
// half-line orchestrator (window covers all roots) and by the T-restricted
// standalone path.
enum class CoreSign { Positive, Negative, HasZero, Inconclusive };

struct CoreResult {
    CoreSign sign = CoreSign::Inconclusive;
    WindowDecision window;
};

// Whole-window decision: T_norm only fixes the scaling p; the verdict covers
// (0, p*pi/2) which strictly contains (0, T_norm]. Sound for callers whose
// roots are known to lie below T_norm.
inline CoreResult decide_core_full(const MTPExpr& f_norm, const Rational& t_norm, const SignConfig& cfg) {
    CoreResult res;
    res.window = run_window(f_norm, t_norm, cfg);
    switch (res.window.outcome.kind) {
        case ArctanSign::Positive: res.sign = CoreSign::Positive; break;
        case ArctanSign::Negative: res.sign = CoreSign::Negative; break;
        case ArctanSign::HasZero: res.sign = CoreSign::HasZero; break;
        default: res.sign = CoreSign::Inconclusive; break;
    }
    return res;
}

// T-restricted decision: certify on (0, tau_hi) where tau encloses the
// tan-half image of T_norm; a zero certificate counts only when it lies
// provably below the image of T_norm.
inline CoreResult decide_core_upto(const MTPExpr& f_norm, const Rational& t_norm, const SignConfig& cfg) {
    Integer p = floor_div_half_pi(t_norm) + 1;
    Rational half_angle = t_norm / (2 * Rational(p));
    CoreResult res;
    for (Rational eps = rat(1, Integer(1) << 40);; eps = eps * eps) {
        RationalInterval tau = tan_enclosure(half_angle, eps);
        Rational hi = tau.hi < 1 ? tau.hi : Rational(1);
        res.window = run_window(f_norm, t_norm, cfg, hi);
        const ArctanOutcome& oc = res.window.outcome;
        if (oc.kind == ArctanSign::Positive) {
            res.sign = CoreSign::Positive;
            return res;
        }
        if (oc.kind == ArctanSign::Negative) {
            res.sign = CoreSign::Negative;
            return res;
        }
        if (oc.kind == ArctanSign::HasZero && oc.zero_region.hi < tau.lo) {
            res.sign = CoreSign::HasZero;
            return res;
        }
        if (eps < rat(1, Integer(1) << 200)) break;  // refinement cap
    }
    res.sign = CoreSign::Inconclusive;
    return res;
}

struct FactorSplit {
    GPoly x_part;  // content in Q(i)[x]
    GPoly y_part;  // content in Q(i)[y]
    GPoly mixed;   // doubly primitive remainder
};

inline FactorSplit split_factor(const GPoly& p) {
    FactorSplit s;
    s.x_part = content_of(p, vars::y);
    GPoly rest = divexact(p, s.x_part);
    s.y_part = content_of(rest, vars::x);
    s.mixed = divexact(rest, s.y_part);
    return s;
}

inline QPoly real_coeff_poly(const GPoly& g) {
    QPoly out;
    for (const auto& [m, c] : g.terms()) {
        if (sgn(c.im) != 0) throw std::logic_error("real_coeff_poly: non-real coefficient");
        out += QPoly::term(c.re, m);
    }
    return out;
}

// Does A(x) (an x-only factor over Q(i)) have a real root in (0, T)?
// T absent means (0, +inf). Exact via Sturm on A * conj(A).
inline bool x_part_vanishes(const GPoly& a, const std::optional<Rational>& t) {
    if (a.degree(vars::x) < 1) return false;
    QPoly aa = real_coeff_poly(a * a.conjugate_coeffs());
    return count_real_roots(aa, vars::x, Rational(0), t ? std::optional<Rational>(*t) : std::nullopt) > 0;
}

// Circle roots of a y-only factor B: angles theta with B(e^{i theta}) = 0.
// The x-zeros of lrhom(B con B) are D(theta + 2 pi k). Exact decision of
// "some zero lies in (0, T)" by isolating the tan-half parameters of the
// circle roots and comparing certified angle enclosures against T.
inline bool y_part_vanishes_below(const GPoly& b, unsigned D, const Rational& T) {
    if (b.degree(vars::y) < 1) return false;
    // N(u) = B(((1-u^2) + 2u I)/(1+u^2)) * (1+u^2)^deg: real roots u <-> circle
    // roots y != -1 with u = tan(theta/2).
    int deg = b.degree(vars::y);
    GPoly u = GPoly::variable(vars::t);  // reuse slot 0 for the parameter
    GPoly one(GaussianRational(1));
    GPoly num = one - u * u + GaussianRational(0, 2) * u;  // (1-u^2) + 2uI
    GPoly den = one + u * u;
    GPoly n;
    for (int k = 0; k <= deg; ++k) {
        GPoly ck = b.coeff_of(vars::y, static_cast<unsigned>(k));
        if (ck.is_zero()) continue;
        n += ck * num.pow(static_cast<unsigned>(k)) * den.pow(static_cast<unsigned>(deg - k));
    }
    QPoly re, im;
    for (const auto& [m, c] : n.terms()) {
        re += QPoly::term(c.re, m);
        im += QPoly::term(c.im, m);
    }
    QPoly r = re.is_zero() ? im : (im.is_zero() ? re : poly_gcd(re, im));
    // y = -1 (theta = pi): exact check.
    bool minus_one_root = b.substitute_value(vars::y, GaussianRational(-1)).is_zero();

    std::vector<RationalInterval> roots;
    if (!r.is_constant() && !r.is_zero()) {
        auto iso = isolate_real_roots(r, vars::t, rat(1, 1024));
        roots = iso.intervals;
    }
    if (roots.empty() && !minus_one_root) return false;

    RationalInterval pi = pi_enclosure(64);
    // A zero below T exists iff min over circle roots of the first positive
    // x-zero D*(theta mod 2pi, in (0, 2pi]) is < T.
    auto first_zero_below = [&](RationalInterval theta) -> std::optional<bool> {
        // candidate x0 = D*theta or D*(theta + 2pi), whichever is positive
        RationalInterval x0 = Rational(static_cast<long>(D)) * theta;
        if (sgn(x0.lo) <= 0 && sgn(x0.hi) >= 0) return std::nullopt;  // refine: theta ~ 0
        if (sgn(x0.hi) < 0) x0 = x0 + Rational(static_cast<long>(2 * D)) * pi;
        if (x0.hi < T) return true;
        if (x0.lo > T) return false;
        return std::nullopt;  // undecided at this precision
    };

    for (Rational eps = rat(1, Integer(1) << 32);; eps = eps * eps) {
        bool all_decided = true;
        if (minus_one_root) {
            RationalInterval x0 = Rational(static_cast<long>(D)) * pi;
            if (x0.hi < T) return true;
            if (!(x0.lo > T)) all_decided = false;  // refine pi below
        }
        for (auto& iv : roots) {
            RationalInterval theta =
                RationalInterval(Rational(2) * atan_enclosure(iv.lo, eps).lo, Rational(2) * atan_enclosure(iv.hi, eps).hi);
            // an exact u = 0 root means B(1) = 0: zeros at x = 2 pi D k > 0
            if (iv.is_point() && sgn(iv.lo) == 0) {
                RationalInterval x0 = Rational(static_cast<long>(2 * D)) * pi;
                if (x0.hi < T) return true;
                if (x0.lo > T) continue;
                all_decided = false;
                continue;
            }
            auto verdict = first_zero_below(theta);
            if (!verdict) {
                all_decided = false;
                continue;
            }
            if (*verdict) return true;
        }
        if (all_decided) return false;
        if (eps < rat(1, Integer(1) << 512))
            throw std::runtime_error("y_part_vanishes_below: no separation from T");
        // refine the root intervals and pi as well
        if (!r.is_constant() && !r.is_zero()) {
            Rational width = eps;
            auto iso = isolate_real_roots(r, vars::t, width);
            roots = iso.intervals;
        }
        pi = pi_enclosure(256);
    }
}

}  // namespace detail

// Sign of F on the open interval (0, T).
inline SignVerdict decide_on_bounded(const MTPExpr& input, const Rational& T, const SignConfig& cfg = {},
                                     bool require_squarefree = false);

// Sign of F on (0, +infinity).
inline SignVerdict decide_on_halfline(const MTPExpr& input, const SignConfig& cfg = {});

namespace detail {

inline SignKind strict_kind(int s) { return s > 0 ? SignKind::Positive : SignKind::Negative; }
inline SignKind weak_kind(int s) { return s > 0 ? SignKind::NonNegative : SignKind::NonPositive; }

// Shared orchestration of Algorithm steps over the factorization: odd-part
// residual sign plus even-part vanishing counters. T absent = half-line.
inline SignVerdict decide_via_factors(const MTPExpr& input, const std::optional<Rational>& T, const SignConfig& cfg) {
    SignVerdict v;
    v.upto = T;
    if (input.is_zero()) {
        v.kind = SignKind::IdenticallyZero;
        return v;
    }
    LaurentPoly lp = to_laurent(input);
    if (lp.is_zero()) {
        v.kind = SignKind::IdenticallyZero;
        return v;
    }
    FactorizationResult res = factorize(input);
    LaurentPoly residual = odd_residual(res);
    MTPExpr rmtp = lrhom_to_mtp(residual);

    int s_r = 0;
    if (residual.is_constant()) {
        GaussianRational c = residual.constant_value();
        if (sgn(c.im) != 0) throw std::logic_error("odd residual constant not real");
        s_r = sgn(c.re);
    } else {
        auto norm = normalize_frequency(rmtp);
        if (!T) {
            BoundVerdict bv = decide_bound(rmtp, cfg.bound);
            v.odd_bound = bv;
            if (bv.kind == Boundedness::Unbounded) {
                v.kind = SignKind::NoConstantSign;
                return v;
            }
            if (bv.kind == Boundedness::IdenticallyZero) throw std::logic_error("square-free residual vanished");
            CoreResult core = decide_core_full(norm.expr, Rational(bv.bound * norm.scale), cfg);
            v.window = core.window;
            if (core.sign == CoreSign::HasZero) {
                v.kind = SignKind::NoConstantSign;
                return v;
            }
            if (core.sign == CoreSign::Inconclusive) {
                v.kind = SignKind::NoConstantSign;
                v.inconclusive = true;
                return v;
            }
            s_r = core.sign == CoreSign::Positive ? 1 : -1;
        } else {
            CoreResult core = decide_core_upto(norm.expr, Rational(*T * norm.scale), cfg);
            v.window = core.window;
            if (core.sign == CoreSign::HasZero) {
                v.kind = SignKind::NoConstantSign;
                return v;
            }
            if (core.sign == CoreSign::Inconclusive) {
                v.kind = SignKind::NoConstantSign;
                v.inconclusive = true;
                return v;
            }
            s_r = core.sign == CoreSign::Positive ? 1 : -1;
        }
    }
    v.p_counter = s_r < 0 ? 1 : 0;

    // Even-multiplicity parts: their squares are nonnegative; only vanishing
    // inside the interval matters (q counter).
    for (const auto& f : res.factors) {
        if (f.mult % 2 != 0) continue;  // odd factors live in the residual
        FactorSignInfo info;
        info.mult = f.mult;
        FactorSplit split = split_factor(f.P);

        if (x_part_vanishes(split.x_part, T)) {
            info.vanishes = true;
            info.note = "polynomial part has a real root in the interval";
        }
        if (!info.vanishes && split.y_part.degree(vars::y) >= 1) {
            LaurentPoly base(res.D, split.y_part, 0);
            MTPExpr bb = lrhom_to_mtp(base * base.con());
            if (!T) {
                BoundVerdict bv = decide_bound(bb, cfg.bound);
                if (bv.kind == Boundedness::Unbounded) {
                    info.vanishes = true;
                    info.note = "periodic part vanishes (unbounded zeros)";
                }
            } else if (y_part_vanishes_below(split.y_part, res.D, *T)) {
                info.vanishes = true;
                info.note = "periodic part vanishes below T";
            }
        }
        if (!info.vanishes && !split.mixed.is_constant()) {
            LaurentPoly base(res.D, split.mixed, 0);
            MTPExpr mm = lrhom_to_mtp(base * base.con());
            BoundVerdict bv = decide_bound(mm, cfg.bound);
            if (bv.kind == Boundedness::Unbounded && !T) {
                info.vanishes = true;
                info.note = "mixed part vanishes (unbounded zeros)";
            } else {
                auto norm = normalize_frequency(mm);
                Rational limit;
                if (T && bv.kind == Boundedness::Bounded)
                    limit = std::min(Rational(*T), Rational(bv.bound));
                else if (T)
                    limit = *T;
                else
                    limit = bv.bound;
                CoreResult core = T ? decide_core_upto(norm.expr, Rational(limit * norm.scale), cfg)
                                    : decide_core_full(norm.expr, Rational(limit * norm.scale), cfg);
                if (core.sign == CoreSign::HasZero) {
                    info.vanishes = true;
                    info.note = "mixed part has an exact interior zero";
                } else if (core.sign == CoreSign::Negative) {
                    throw std::logic_error("square of a factor certified negative");
                } else if (core.sign == CoreSign::Inconclusive) {
                    info.inconclusive = true;
                    v.inconclusive = true;
                    info.note = "mixed even part undecided (touching zeros are not certifiable)";
                }
            }
        }
        if (info.vanishes) ++v.q_counter;
        v.factor_notes.push_back(info);
    }

    // Squares are nonnegative, so the weak verdict is certain even when a
    // vanishing test gave up; only strictness is then undecided.
    if (v.q_counter > 0 || v.inconclusive)
        v.kind = weak_kind(s_r);
    else
        v.kind = strict_kind(s_r);
    return v;
}

}  // namespace detail

inline SignVerdict decide_on_bounded(const MTPExpr& input, const Rational& T, const SignConfig& cfg,
                                     bool require_squarefree) {
    if (!(T > 0)) throw std::domain_error("decide_on_bounded: T > 0 required");
    if (input.is_zero()) throw std::domain_error("decide_on_bounded: zero expression");
    if (require_squarefree) {
        SignVerdict v;
        v.upto = T;
        auto norm = normalize_frequency(input);
        detail::CoreResult core = detail::decide_core_upto(norm.expr, Rational(T * norm.scale), cfg);
        v.window = core.window;
        switch (core.sign) {
            case detail::CoreSign::Positive: v.kind = SignKind::Positive; break;
            case detail::CoreSign::Negative: v.kind = SignKind::Negative; break;
            case detail::CoreSign::HasZero: v.kind = SignKind::NoConstantSign; break;
            default:
                v.kind = SignKind::NoConstantSign;
                v.inconclusive = true;
                break;
        }
        return v;
    }
    return detail::decide_via_factors(input, T, cfg);
}

inline SignVerdict decide_on_halfline(const MTPExpr& input, const SignConfig& cfg) {
    return detail::decide_via_factors(input, std::nullopt, cfg);
}

}  // namespace mtp

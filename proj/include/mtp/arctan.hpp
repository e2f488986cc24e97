#pragma once

#include <mtp/enclosure.hpp>
#include <mtp/poly_gcd.hpp>
#include <mtp/sturm.hpp>

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

namespace mtp {

// Alternating Maclaurin partial sums bracketing arctan on [0, 1]:
// L(t) <= arctan(t) <= U(t), with L ending in a negative term and U in a
// positive one. L >= 0 on [0, 1], and both bounds are increasing there.
struct ArctanBounds {
    QPoly lower;
    QPoly upper;
};

inline ArctanBounds arctan_bounds(unsigned degree) {
    if (degree < 1 || degree % 2 == 0) throw std::domain_error("arctan_bounds: odd degree >= 1 required");
    ArctanBounds out;
    QPoly running;
    for (unsigned e = 1; e <= degree; e += 2) {
        Rational c = rat(e % 4 == 1 ? 1 : -1, e);
        running += c * QPoly::variable(vars::t, e);
        if (e % 4 == 1)
            out.upper = running;
        else
            out.lower = running;
    }
    return out;
}

enum class ArctanSign { Positive, Negative, HasZero, Inconclusive };

struct ArctanCaps {
    unsigned max_taylor_degree = 63;
    unsigned max_bisection_depth = 12;
};

// One certified subinterval: bound_poly has no root in (lo, hi) and carries
// the stated sign there, so H(t, arctan t) does too. Checkable by Sturm
// counting alone.
struct SegmentCertificate {
    RationalInterval seg;
    int sign = 0;
    QPoly bound_poly;
    unsigned taylor_degree = 0;
};

struct ArctanOutcome {
    ArctanSign kind = ArctanSign::Inconclusive;
    std::vector<SegmentCertificate> segments;
    // HasZero data: either an exact common-factor root region or a bracket
    // between two certified segments of opposite sign.
    RationalInterval zero_region;
    bool exact_zero = false;
    QPoly common_factor;  // nonzero when the zero comes from gcd of the a-coefficients
};

namespace detail {

inline RationalInterval interval_eval(const QPoly& f, int v, const RationalInterval& box) {
    RationalInterval acc(Rational(0), Rational(0));
    int d = f.degree(v);
    for (int k = d; k >= 0; --k) {
        QPoly ck = f.coeff_of(v, static_cast<unsigned>(k));
        acc = acc * box + RationalInterval::point(ck.constant_value());
    }
    return acc;
}

struct ArctanWork {
    Rational lo, hi;
    unsigned depth;
};

// Try to certify the sign of H(t, arctan t) on the open segment via the
// sign-stratified Taylor bounds; indefinite a-coefficients are enclosed by
// interval constants.
inline std::optional<SegmentCertificate> certify_segment(const QPoly& h, int adeg, const ArctanBounds& bounds,
                                                         unsigned degree, const Rational& lo, const Rational& hi) {
    Rational mid = (lo + hi) / 2;
    QPoly phi_lower, phi_upper;
    Rational const_lower(0), const_upper(0);
    RationalInterval tbox(lo, hi);
    for (int k = 0; k <= adeg; ++k) {
        QPoly hk = h.coeff_of(vars::a, static_cast<unsigned>(k));
        if (hk.is_zero()) continue;
        if (k == 0) {
            phi_lower += hk;
            phi_upper += hk;
            continue;
        }
        bool definite = count_real_roots(hk, vars::t, lo, hi) == 0;
        if (definite) {
            int s = sgn(hk.substitute_value(vars::t, mid).constant_value());
            const QPoly& low_pow = s > 0 ? bounds.lower : bounds.upper;
            const QPoly& up_pow = s > 0 ? bounds.upper : bounds.lower;
            phi_lower += hk * low_pow.pow(static_cast<unsigned>(k));
            phi_upper += hk * up_pow.pow(static_cast<unsigned>(k));
        } else {
            // a^k over the segment lies in [L(lo)^k, U(hi)^k] (monotone bounds).
            Rational alo = pow_rat(bounds.lower.substitute_value(vars::t, lo).constant_value(),
                                   static_cast<unsigned long>(k));
            Rational ahi = pow_rat(bounds.upper.substitute_value(vars::t, hi).constant_value(),
                                   static_cast<unsigned long>(k));
            RationalInterval prod = interval_eval(hk, vars::t, tbox) * RationalInterval(alo, ahi);
            const_lower += prod.lo;
            const_upper += prod.hi;
        }
    }
    phi_lower += QPoly(const_lower);
    phi_upper += QPoly(const_upper);

    auto positive_on = [&](const QPoly& f) {
        if (f.is_zero()) return false;
        if (f.is_constant()) return sgn(f.constant_value()) > 0;
        return sgn(f.substitute_value(vars::t, mid).constant_value()) > 0 &&
               count_real_roots(f, vars::t, lo, hi) == 0;
    };
    if (positive_on(phi_lower)) {
        SegmentCertificate cert;
        cert.seg = RationalInterval(lo, hi);
        cert.sign = 1;
        cert.bound_poly = phi_lower;
        cert.taylor_degree = degree;
        return cert;
    }
    QPoly neg_upper = -phi_upper;
    if (positive_on(neg_upper)) {
        SegmentCertificate cert;
        cert.seg = RationalInterval(lo, hi);
        cert.sign = -1;
        cert.bound_poly = phi_upper;
        cert.taylor_degree = degree;
        return cert;
    }
    return std::nullopt;
}

}  // namespace detail

// Sign of H(t, arctan t) on the open interval (0, hi_limit), hi_limit <= 1.
// Sound always; HasZero is reported only with an exact certificate (a common
// root of all a-coefficients, or a bracket between certified segments of
// opposite sign). Inconclusive when the caps run out.
inline ArctanOutcome decide_arctan_sign(QPoly h, const ArctanCaps& caps = {}, const Rational& hi_limit = Rational(1)) {
    if (h.is_zero()) throw std::domain_error("decide_arctan_sign: zero polynomial");
    if (!(hi_limit > 0 && hi_limit <= 1)) throw std::domain_error("decide_arctan_sign: window must be in (0, 1]");
    ArctanOutcome out;

    // t^m factors do not affect the sign on (0, 1).
    unsigned m = h.min_exponent(vars::t);
    if (m > 0) h = divexact(h, QPoly::variable(vars::t, m));
    h = make_primitive(h);

    // Common factor of all a-coefficients: its roots are exact zeros of
    // H(t, arctan t) (a vanishing value at algebraic t forces every
    // coefficient to vanish there).
    int adeg = h.degree(vars::a);
    int sign_flip = 1;
    QPoly w = detail::content_of(h, vars::a);
    if (w.degree(vars::t) > 0) {
        if (count_real_roots(w, vars::t, Rational(0), hi_limit) > 0) {
            // Shrink until one isolating interval lies strictly inside the
            // window (the in-window root is interior, so this terminates).
            for (Rational width = rat(1, 64);; width /= 4) {
                auto iso = isolate_real_roots(w, vars::t, width);
                bool found = false;
                for (const auto& iv : iso.intervals) {
                    if (sgn(iv.lo) > 0 && iv.hi < hi_limit) {
                        out.zero_region = iv;
                        out.exact_zero = iv.is_point();
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            out.kind = ArctanSign::HasZero;
            out.common_factor = w;
            return out;
        }
        h = divexact(h, w);
        adeg = h.degree(vars::a);
        // No roots of w inside the window, so its sign there is constant.
        Rational wmid = w.substitute_value(vars::t, hi_limit / 2).constant_value();
        sign_flip = sgn(wmid);
    }

    // Initial segmentation: breakpoints at isolating intervals of the
    // a-coefficients' roots inside (0, hi_limit).
    std::set<Rational> cuts;
    cuts.insert(Rational(0));
    cuts.insert(hi_limit);
    for (int k = 0; k <= adeg; ++k) {
        QPoly hk = h.coeff_of(vars::a, static_cast<unsigned>(k));
        if (hk.is_zero() || hk.degree(vars::t) < 1) continue;
        auto iso = isolate_real_roots(hk, vars::t, rat(1, 32));
        for (const auto& iv : iso.intervals) {
            if (sgn(iv.lo) > 0 && iv.lo < hi_limit) cuts.insert(iv.lo);
            if (sgn(iv.hi) > 0 && iv.hi < hi_limit) cuts.insert(iv.hi);
        }
    }

    std::vector<detail::ArctanWork> queue;
    {
        auto it = cuts.begin();
        Rational prev = *it;
        for (++it; it != cuts.end(); ++it) {
            queue.push_back({prev, *it, 0});
            prev = *it;
        }
    }

    std::vector<SegmentCertificate> done;
    auto has_zero_between = [&]() -> std::optional<RationalInterval> {
        std::sort(done.begin(), done.end(),
                  [](const SegmentCertificate& a, const SegmentCertificate& b) { return a.seg.lo < b.seg.lo; });
        for (std::size_t i = 0; i + 1 < done.size(); ++i) {
            if (done[i].sign != done[i + 1].sign) {
                Rational a = (done[i].seg.lo + done[i].seg.hi) / 2;
                Rational b = (done[i + 1].seg.lo + done[i + 1].seg.hi) / 2;
                return RationalInterval(a, b);
            }
        }
        return std::nullopt;
    };

    unsigned degree = std::min(7u, caps.max_taylor_degree);
    if (degree % 2 == 0) degree -= 1;
    for (;;) {
        ArctanBounds bounds = arctan_bounds(degree);
        bool progressed = true;
        while (!queue.empty() && progressed) {
            progressed = false;
            std::vector<detail::ArctanWork> next;
            for (const auto& item : queue) {
                auto cert = detail::certify_segment(h, adeg, bounds, degree, item.lo, item.hi);
                if (cert) {
                    done.push_back(*cert);
                    progressed = true;
                } else if (item.depth < caps.max_bisection_depth) {
                    Rational mid = (item.lo + item.hi) / 2;
                    next.push_back({item.lo, mid, item.depth + 1});
                    next.push_back({mid, item.hi, item.depth + 1});
                    progressed = true;
                } else {
                    next.push_back(item);
                }
            }
            queue = std::move(next);
            if (auto z = has_zero_between()) {
                out.kind = ArctanSign::HasZero;
                out.zero_region = *z;
                out.segments = done;
                return out;
            }
        }
        if (queue.empty()) {
            out.segments = done;
            int s = done.empty() ? 0 : done.front().sign;
            s *= sign_flip;
            out.kind = s > 0 ? ArctanSign::Positive : ArctanSign::Negative;
            return out;
        }
        if (degree >= caps.max_taylor_degree) break;
        degree = std::min(2 * degree + 1, caps.max_taylor_degree);
        if (degree % 2 == 0) degree -= 1;
    }
    out.segments = done;
    out.kind = ArctanSign::Inconclusive;
    return out;
}

}  // namespace mtp

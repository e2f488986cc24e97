#pragma once

#include <mtp/enclosure.hpp>
#include <mtp/poly.hpp>
#include <mtp/poly_gcd.hpp>

#include <optional>
#include <vector>

namespace mtp {

// Isolating intervals for the distinct real roots of a univariate polynomial,
// ascending. Degenerate intervals [r,r] are exact rational roots; open ones
// carry a sign change and contain exactly one root.
struct RootIsolation {
    std::vector<RationalInterval> intervals;
    Rational width_bound;
};

namespace detail {

struct DenseUni {
    std::vector<Rational> c;  // ascending powers; normalized so back() != 0

    static DenseUni from(const QPoly& f, int v) {
        DenseUni d;
        int deg = f.degree(v);
        if (deg < 0) return d;
        d.c.assign(static_cast<std::size_t>(deg) + 1, Rational(0));
        for (const auto& [m, coeff] : f.terms()) d.c[m[v]] = coeff;
        return d;
    }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    Rational eval(const Rational& q) const {
        Rational r(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * q + *it;
        return r;
    }
    int sign_at(const Rational& q) const { return sgn(eval(q)); }
    int sign_at_inf(bool positive) const {
        if (c.empty()) return 0;
        int s = sgn(c.back());
        if (!positive && deg() % 2 != 0) s = -s;
        return s;
    }
};

struct SturmChain {
    std::vector<DenseUni> chain;

    // f must be square-free in v.
    static SturmChain build(const QPoly& f, int v) {
        SturmChain out;
        QPoly p0 = make_primitive(f);
        out.chain.push_back(DenseUni::from(p0, v));
        QPoly p1 = make_primitive(p0.derivative(v));
        if (p1.is_zero()) return out;
        out.chain.push_back(DenseUni::from(p1, v));
        QPoly prev = p0, cur = p1;
        while (cur.degree(v) > 0) {
            QPoly r = prem(prev, cur, v);
            if (r.is_zero()) break;
            int delta = prev.degree(v) - cur.degree(v);
            Rational lc = cur.lead_coeff_of(v).constant_value();
            bool mult_negative = sgn(lc) < 0 && (delta + 1) % 2 == 1;
            QPoly entry = mult_negative ? r : -r;
            entry = make_primitive(entry);
            out.chain.push_back(DenseUni::from(entry, v));
            prev = cur;
            cur = entry;
        }
        return out;
    }

    int variations(const std::optional<Rational>& at, bool positive_inf) const {
        int count = 0, last = 0;
        for (const auto& p : chain) {
            int s = at ? p.sign_at(*at) : p.sign_at_inf(positive_inf);
            if (s == 0) continue;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    }
};

inline QPoly linear_factor(int v, const Rational& root) {
    QPoly p = QPoly::variable(v, 1);
    p += QPoly(Rational(-root));
    return p;
}

// Smallest power of two strictly greater than the Cauchy root bound.
inline Rational dyadic_root_bound(const DenseUni& f) {
    Rational bound(1);
    Rational lead = abs(f.c.back());
    for (std::size_t i = 0; i + 1 < f.c.size(); ++i) {
        Rational q = 1 + abs(f.c[i]) / lead;
        if (q > bound) bound = q;
    }
    Rational two(2);
    Rational l(1);
    while (l <= bound) l *= two;
    return l;
}

}  // namespace detail

// Exact count of distinct real roots in the open interval (lo, hi);
// nullopt endpoints mean -inf / +inf.
inline int count_real_roots(const QPoly& f, int v, std::optional<Rational> lo = std::nullopt,
                            std::optional<Rational> hi = std::nullopt) {
    if (f.is_zero()) throw std::domain_error("count_real_roots: zero polynomial");
    QPoly sf = squarefree_part(f, v);
    if (sf.degree(v) <= 0) return 0;
    if (lo && hi && *lo >= *hi) return 0;
    // Exclude exact endpoint roots (square-free: at most simple).
    if (lo && sf.substitute_value(v, *lo).is_zero()) sf = divexact(sf, detail::linear_factor(v, *lo));
    if (hi && sf.substitute_value(v, *hi).is_zero()) sf = divexact(sf, detail::linear_factor(v, *hi));
    if (sf.degree(v) <= 0) return 0;
    auto chain = detail::SturmChain::build(sf, v);
    return chain.variations(lo, false) - chain.variations(hi, true);
}

// Root isolation by Sturm counts and dyadic bisection. Midpoints that are
// exact roots become degenerate intervals and are divided out.
inline RootIsolation isolate_real_roots(const QPoly& f, int v, const Rational& width) {
    if (f.is_zero()) throw std::domain_error("isolate_real_roots: zero polynomial");
    RootIsolation out;
    out.width_bound = width;
    QPoly sf = make_primitive(squarefree_part(f, v));
    if (sf.degree(v) <= 0) return out;

    struct Walker {
        int v;
        const Rational& width;
        std::vector<RationalInterval>& res;

        void refine(const detail::DenseUni& d, Rational lo, Rational hi) {
            int slo = d.sign_at(lo);
            while (hi - lo > width) {
                Rational m = (lo + hi) / 2;
                int sm = d.sign_at(m);
                if (sm == 0) {
                    res.push_back(RationalInterval::point(m));
                    return;
                }
                if (sm == slo)
                    lo = m;
                else
                    hi = m;
            }
            res.emplace_back(lo, hi);
        }

        void process(const QPoly& cur, const detail::SturmChain& chain, const detail::DenseUni& dense,
                     const Rational& lo, const Rational& hi) {
            int n = chain.variations(lo, false) - chain.variations(hi, true);
            if (n == 0) return;
            if (n == 1) {
                refine(dense, lo, hi);
                return;
            }
            Rational m = (lo + hi) / 2;
            if (dense.sign_at(m) == 0) {
                QPoly next = divexact(cur, detail::linear_factor(v, m));
                auto nchain = detail::SturmChain::build(next, v);
                auto ndense = detail::DenseUni::from(next, v);
                process(next, nchain, ndense, lo, m);
                res.push_back(RationalInterval::point(m));
                process(next, nchain, ndense, m, hi);
            } else {
                process(cur, chain, dense, lo, m);
                process(cur, chain, dense, m, hi);
            }
        }
    };

    auto dense = detail::DenseUni::from(sf, v);
    Rational bound = detail::dyadic_root_bound(dense);
    auto chain = detail::SturmChain::build(sf, v);
    Walker w{v, width, out.intervals};
    w.process(sf, chain, dense, -bound, bound);
    return out;
}

// A rational upper bound for all positive real roots: the right endpoint of
// the rightmost positive isolating interval (0 if there is none). The
// refinement width only tightens the bound; any value satisfies the contract.
inline Rational positive_root_sup(const QPoly& f, int v, const Rational& refine_width = rat(1, 100)) {
    if (f.is_zero()) throw std::domain_error("positive_root_sup: zero polynomial");
    RootIsolation iso = isolate_real_roots(f, v, refine_width);
    if (iso.intervals.empty()) return Rational(0);
    QPoly sf = squarefree_part(f, v);
    for (auto it = iso.intervals.rbegin(); it != iso.intervals.rend(); ++it) {
        if (it->is_point()) {
            if (sgn(it->lo) > 0) return it->lo;
            return Rational(0);  // rightmost root is <= 0
        }
        if (sgn(it->lo) >= 0) return it->hi;
        if (sgn(it->hi) <= 0) return Rational(0);
        // Interval straddles zero with a single non-zero root inside.
        int s0 = sgn(sf.substitute_value(v, Rational(0)).constant_value());
        int slo = sgn(sf.substitute_value(v, it->lo).constant_value());
        if (s0 != 0 && slo != 0 && s0 != slo) return Rational(0);  // the root is negative
        return it->hi;
    }
    return Rational(0);
}

}  // namespace mtp

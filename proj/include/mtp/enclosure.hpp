#pragma once

#include <mtp/gaussian.hpp>
#include <mtp/rational.hpp>

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace mtp {

// Closed rational interval [lo, hi]. All enclosure routines here are exact:
// the returned interval is proven to contain the target value.
struct RationalInterval {
    Rational lo;
    Rational hi;

    RationalInterval() : lo(0), hi(0) {}
    RationalInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("interval: lo > hi");
    }
    static RationalInterval point(const Rational& v) { return {v, v}; }

    Rational width() const { return hi - lo; }
    bool is_point() const { return lo == hi; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool contains(const RationalInterval& o) const { return lo <= o.lo && o.hi <= hi; }

    friend bool operator==(const RationalInterval& a, const RationalInterval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
    friend bool operator!=(const RationalInterval& a, const RationalInterval& b) { return !(a == b); }

    friend RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
        return {a.lo + b.lo, a.hi + b.hi};
    }
    friend RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
        return {a.lo - b.hi, a.hi - b.lo};
    }
    RationalInterval operator-() const { return {-hi, -lo}; }
    friend RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
        Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
        return {std::min(std::min(p1, p2), std::min(p3, p4)), std::max(std::max(p1, p2), std::max(p3, p4))};
    }
    friend RationalInterval operator*(const Rational& s, const RationalInterval& a) {
        if (sgn(s) >= 0) return {s * a.lo, s * a.hi};
        return {s * a.hi, s * a.lo};
    }
    // Division by an interval that provably excludes zero.
    friend RationalInterval operator/(const RationalInterval& a, const RationalInterval& b) {
        if (sgn(b.lo) <= 0 && sgn(b.hi) >= 0) throw std::domain_error("interval: division by interval containing 0");
        RationalInterval inv{Rational(1) / b.hi, Rational(1) / b.lo};
        return a * inv;
    }
    // Sign if provable, 0 if the interval straddles zero.
    int definite_sign() const {
        if (sgn(lo) > 0) return 1;
        if (sgn(hi) < 0) return -1;
        return 0;
    }
};

namespace detail {

// arctan(x) for rational 0 <= x <= 1 by the alternating Maclaurin series;
// partial sums bracket the value, truncation error <= first omitted term.
inline RationalInterval atan_series_unit(const Rational& x, const Rational& eps) {
    assert(sgn(x) >= 0 && x <= 1);
    Rational x2 = x * x;
    Rational term = x;  // x^(2k+1)
    Rational sum = 0;
    unsigned long k = 0;
    while (true) {
        Rational t = term / Rational(2 * k + 1);
        if (t <= eps || sgn(term) == 0) {
            // sum brackets arctan(x) together with sum +/- t depending on parity
            if (k % 2 == 0) return {sum, sum + t};
            return {sum - t, sum};
        }
        if (k % 2 == 0)
            sum += t;
        else
            sum -= t;
        term *= x2;
        ++k;
    }
}

}  // namespace detail

// Interval containing pi with width <= 2^-bits.
// Machin: pi = 16*arctan(1/5) - 4*arctan(1/239).
inline RationalInterval pi_enclosure(unsigned bits) {
    if (bits < 1) throw std::invalid_argument("pi_enclosure: bits >= 1 required");
    Rational eps = rat(1, 1) / pow_int(Integer(2), bits);
    RationalInterval a = detail::atan_series_unit(rat(1, 5), eps / 64);
    RationalInterval b = detail::atan_series_unit(rat(1, 239), eps / 16);
    RationalInterval pi = Rational(16) * a - Rational(4) * b;
    assert(pi.width() <= eps);
    return pi;
}

namespace detail {
inline RationalInterval atan_series_signed(const Rational& x, const Rational& eps) {
    if (sgn(x) < 0) return -atan_series_unit(-x, eps);
    return atan_series_unit(x, eps);
}
}  // namespace detail

// Interval containing arctan(x) for any rational x, width <= eps. Arguments
// near 1 are reduced through arctan(x) = pi/4 + arctan((x-1)/(1+x)) so the
// series stays geometric with ratio <= 1/9.
inline RationalInterval atan_enclosure(const Rational& x, const Rational& eps) {
    if (sgn(x) < 0) return -atan_enclosure(-x, eps);
    if (x <= rat(1, 2)) return detail::atan_series_signed(x, eps / 2);
    unsigned bits = 4;
    while (rat(1, 1) / pow_int(Integer(2), bits) > eps / 8) ++bits;
    if (x <= 2) {
        RationalInterval quarter_pi = rat(1, 4) * pi_enclosure(bits);
        return quarter_pi + detail::atan_series_signed((x - 1) / (1 + x), eps / 4);
    }
    // arctan(x) = pi/2 - arctan(1/x), 1/x < 1/2
    RationalInterval half_pi = rat(1, 2) * pi_enclosure(bits);
    return half_pi - detail::atan_series_signed(Rational(1) / x, eps / 4);
}

namespace detail {

// Alternating Taylor enclosures for sin and cos; valid where the term
// magnitudes decrease from the first term (|x|^2 < 2 suffices for both).
inline RationalInterval sin_series(const Rational& x, const Rational& eps) {
    assert(x * x < 2);
    Rational x2 = x * x;
    Rational term = x;  // x^(2k+1)/(2k+1)!
    Rational sum = 0;
    unsigned long k = 0;
    while (true) {
        if (abs(term) <= eps) {
            if (k % 2 == 0) return sgn(term) >= 0 ? RationalInterval{sum, sum + term} : RationalInterval{sum + term, sum};
            return sgn(term) >= 0 ? RationalInterval{sum - term, sum} : RationalInterval{sum, sum - term};
        }
        if (k % 2 == 0)
            sum += term;
        else
            sum -= term;
        ++k;
        term *= x2 / Rational((2 * k) * (2 * k + 1));
    }
}

inline RationalInterval cos_series(const Rational& x, const Rational& eps) {
    assert(x * x < 2);
    Rational x2 = x * x;
    Rational term = 1;  // x^(2k)/(2k)!
    Rational sum = 0;
    unsigned long k = 0;
    while (true) {
        if (term <= eps) {
            if (k % 2 == 0) return {sum, sum + term};
            return {sum - term, sum};
        }
        if (k % 2 == 0)
            sum += term;
        else
            sum -= term;
        ++k;
        term *= x2 / Rational((2 * k - 1) * (2 * k));
    }
}

}  // namespace detail

// tan(x) enclosure for rational |x| < 1 (well inside (-pi/2, pi/2)).
inline RationalInterval tan_enclosure(const Rational& x, const Rational& eps) {
    if (sgn(x) < 0) return -tan_enclosure(-x, eps);
    assert(x < 1);
    Rational e = eps / 8;
    for (;;) {
        RationalInterval s = detail::sin_series(x, e);
        RationalInterval c = detail::cos_series(x, e);
        if (c.definite_sign() > 0) {
            RationalInterval t = s / c;
            if (t.width() <= eps) return t;
        }
        e /= 16;
    }
}

// floor(num / (pi/2)) = floor(2*num/pi), decided exactly by refining the
// pi enclosure until the floor is unambiguous (terminates: pi irrational).
inline Integer floor_div_half_pi(const Rational& num) {
    for (unsigned bits = 16;; bits *= 2) {
        RationalInterval pi = pi_enclosure(bits);
        Rational lo = 2 * num / pi.hi, hi = 2 * num / pi.lo;
        if (sgn(num) < 0) std::swap(lo, hi);
        Integer flo = floor_int(lo), fhi = floor_int(hi);
        if (flo == fhi) return flo;
        if (bits > 1u << 20) throw std::runtime_error("floor_div_half_pi: no convergence");
    }
}

// arg(z) enclosure for z != 0, in (-pi, pi].
inline RationalInterval arg_enclosure(const GaussianRational& z, const Rational& eps) {
    if (z.is_zero()) throw std::domain_error("arg: zero has no argument");
    unsigned bits = 4;
    while (rat(1, 1) / pow_int(Integer(2), bits) > eps / 8) ++bits;
    RationalInterval pi = pi_enclosure(bits);
    if (sgn(z.re) > 0) return atan_enclosure(z.im / z.re, eps);
    if (sgn(z.re) == 0) {
        RationalInterval half = rat(1, 2) * pi;
        return sgn(z.im) > 0 ? half : -half;
    }
    // re < 0: arg = atan(im/re) +/- pi
    RationalInterval base = atan_enclosure(z.im / z.re, eps / 2);
    if (sgn(z.im) >= 0) return base + pi;
    return base - pi;
}

}  // namespace mtp

#pragma once

#include <mtp/mtp_expr.hpp>
#include <mtp/poly.hpp>

#include <numeric>
#include <stdexcept>
#include <string>

namespace mtp {

// Element of Q(i)[x, y, 1/y] in canonical form Q(x,y) / y^shift with y not
// dividing Q. The base denominator D records the meaning y = e^{Ix/D}; D is
// fixed to 2*lcm of the frequency denominators so that half powers of
// e^{Ix} stay integral here.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(unsigned base_den) : D_(base_den) {}
    LaurentPoly(unsigned base_den, GPoly num, long shift) : D_(base_den), num_(std::move(num)), shift_(shift) {
        canonicalize();
    }

    unsigned base_den() const { return D_; }
    const GPoly& num() const { return num_; }
    long shift() const { return shift_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return shift_ == 0 && num_.is_constant(); }
    GaussianRational constant_value() const { return num_.constant_value(); }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        unsigned D = a.aligned_base(b);
        long shift = std::max(a.shift_, b.shift_);
        GPoly num = a.num_ * GPoly::variable(vars::y, static_cast<unsigned>(shift - a.shift_)) +
                    b.num_ * GPoly::variable(vars::y, static_cast<unsigned>(shift - b.shift_));
        return LaurentPoly(D, std::move(num), shift);
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
    LaurentPoly operator-() const { return LaurentPoly(D_, -num_, shift_); }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        unsigned D = a.aligned_base(b);
        return LaurentPoly(D, a.num_ * b.num_, a.shift_ + b.shift_);
    }
    friend LaurentPoly operator*(const GaussianRational& s, const LaurentPoly& a) {
        return LaurentPoly(a.D_, s * a.num_, a.shift_);
    }
    LaurentPoly pow(unsigned e) const { return LaurentPoly(D_, num_.pow(e), shift_ * static_cast<long>(e)); }

    friend LaurentPoly divexact(const LaurentPoly& a, const LaurentPoly& b) {
        unsigned D = a.aligned_base(b);
        return LaurentPoly(D, mtp::divexact(a.num_, b.num_), a.shift_ - b.shift_);
    }

    // Conjugate coefficients and invert y.
    LaurentPoly con() const {
        if (is_zero()) return *this;
        int d = num_.degree(vars::y);
        GPoly rev;
        for (const auto& [m, c] : num_.terms()) {
            Mono n = m;
            n[vars::y] = static_cast<unsigned>(d) - m[vars::y];
            rev += GPoly::term(c.conj(), n);
        }
        return LaurentPoly(D_, std::move(rev), d - shift_);
    }
    bool is_selfconj() const { return *this == con(); }

    // Equivalent value on the smallest base denominator (exponent gcd pulled out).
    LaurentPoly reduce_base() const {
        if (is_zero()) return LaurentPoly(1, GPoly(), 0);
        unsigned long g = D_;
        g = std::gcd(g, static_cast<unsigned long>(shift_ < 0 ? -shift_ : shift_));
        for (const auto& [m, c] : num_.terms()) g = std::gcd(g, static_cast<unsigned long>(m[vars::y]));
        if (g <= 1) return *this;
        GPoly num;
        for (const auto& [m, c] : num_.terms()) {
            Mono n = m;
            n[vars::y] = m[vars::y] / static_cast<unsigned>(g);
            num += GPoly::term(c, n);
        }
        return LaurentPoly(static_cast<unsigned>(D_ / g), std::move(num), shift_ / static_cast<long>(g));
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.D_ == b.D_) return a.shift_ == b.shift_ && a.num_ == b.num_;
        LaurentPoly ra = a.reduce_base(), rb = b.reduce_base();
        if (ra.D_ != rb.D_) {
            unsigned l = static_cast<unsigned>(std::lcm(ra.D_, rb.D_));
            ra = ra.rebase(l);
            rb = rb.rebase(l);
        }
        return ra.shift_ == rb.shift_ && ra.num_ == rb.num_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly rebase(unsigned new_base) const {
        if (new_base == D_) return *this;
        if (new_base % D_ != 0) throw std::domain_error("laurent: incompatible base change");
        unsigned k = new_base / D_;
        GPoly num;
        for (const auto& [m, c] : num_.terms()) {
            Mono n = m;
            n[vars::y] = m[vars::y] * k;
            num += GPoly::term(c, n);
        }
        return LaurentPoly(new_base, std::move(num), shift_ * static_cast<long>(k));
    }

  private:
    unsigned D_ = 2;
    GPoly num_;
    long shift_ = 0;

    void canonicalize() {
        if (num_.is_zero()) {
            shift_ = 0;
            return;
        }
        unsigned m = num_.min_exponent(vars::y);
        if (m > 0) {
            num_ = mtp::divexact(num_, GPoly::variable(vars::y, m));
            shift_ -= static_cast<long>(m);
        }
    }
    unsigned aligned_base(const LaurentPoly& o) const {
        if (D_ != o.D_ && !is_zero() && !o.is_zero()) throw std::domain_error("laurent: base denominator mismatch");
        return is_zero() ? o.D_ : D_;
    }
};

// Euler substitution: sin(wx) = (y^m - y^-m)/(2I), cos(wx) = (y^m + y^-m)/2
// with m = w*D and D = 2*lcm of the frequency denominators.
inline LaurentPoly to_laurent(const MTPExpr& e) {
    Integer den_lcm = 1;
    for (const auto& t : e.terms()) {
        if (t.q + t.r == 0) continue;
        Integer d = t.omega.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    if (!den_lcm.fits_uint_p()) throw std::domain_error("to_laurent: frequency denominators too large");
    unsigned D = 2 * static_cast<unsigned>(den_lcm.get_ui());

    LaurentPoly acc(D);
    const GaussianRational half(rat(1, 2));
    const GaussianRational minus_half_i(Rational(0), rat(-1, 2));  // 1/(2I)
    for (const auto& t : e.terms()) {
        Rational m_rat = t.omega * D;
        if (m_rat.get_den() != 1) throw std::logic_error("to_laurent: non-integral exponent");
        unsigned m = static_cast<unsigned>(m_rat.get_num().get_ui());
        LaurentPoly term(D, GPoly::term(GaussianRational(t.a), Mono{t.p, 0, 0}), 0);
        if (t.q) {
            GPoly num = minus_half_i * (GPoly::variable(vars::y, 2 * m) - GPoly(GaussianRational(1)));
            term = term * LaurentPoly(D, num, m).pow(t.q);
        }
        if (t.r) {
            GPoly num = half * (GPoly::variable(vars::y, 2 * m) + GPoly(GaussianRational(1)));
            term = term * LaurentPoly(D, num, m).pow(t.r);
        }
        acc = acc + term;
    }
    return acc;
}

// Back-substitution y = e^{Ix/D} for self-conjugate inputs: the imaginary
// parts cancel exactly and the result is a real MTP with frequencies v/D.
inline MTPExpr lrhom_to_mtp(const LaurentPoly& p) {
    if (p.is_zero()) return MTPExpr();
    if (!p.is_selfconj()) throw std::domain_error("lrhom_to_mtp: input is not self-conjugate");
    MTPExpr out;
    for (const auto& [m, c] : p.num().terms()) {
        long v = static_cast<long>(m[vars::y]) - p.shift();
        if (v < 0) continue;  // conjugate pair of a positive exponent
        if (v == 0) {
            if (sgn(c.im) != 0) throw std::logic_error("lrhom_to_mtp: non-real mean term");
            out.push(c.re, m[vars::x], 0, 0, Rational(1));
        } else {
            Rational freq = rat(Integer(v), Integer(p.base_den()));
            out.push(2 * c.re, m[vars::x], 0, 1, freq);
            out.push(-2 * c.im, m[vars::x], 1, 0, freq);
        }
    }
    return out;
}

// Trace rendering: content * (integer-primitive numerator) / y^shift.
inline std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    Rational content = rational_content(p.num());
    GPoly prim = p.num().scalar_div(GaussianRational(content));
    std::string s;
    if (content != 1) s += to_string(content) + "*";
    s += "(" + to_string(prim, {"x", "y", "?"}) + ")";
    if (p.shift() != 0) s += "/y" + (p.shift() == 1 ? std::string() : "^" + std::to_string(p.shift()));
    return s;
}

}  // namespace mtp

#pragma once

#include <mtp/gaussian.hpp>
#include <mtp/rational.hpp>

#include <array>
#include <cassert>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mtp {

// Sparse exact polynomials in up to three variable slots. Slot meaning is
// contextual: (x,s,c) for trivariate trig polynomials, (x,y) for Laurent
// numerators, (t,a) for arctan polynomials.
inline constexpr int kNumVars = 3;
using Mono = std::array<unsigned, kNumVars>;

namespace vars {
inline constexpr int x = 0;
inline constexpr int s = 1;
inline constexpr int c = 2;
inline constexpr int y = 1;  // Laurent slot
inline constexpr int t = 0;  // arctan slots
inline constexpr int a = 1;
}  // namespace vars

// Lex order with slot 2 most significant (c > s > x). Deterministic leading
// terms for division and normalization.
struct MonoLess {
    bool operator()(const Mono& u, const Mono& v) const noexcept {
        for (int i = kNumVars - 1; i >= 0; --i)
            if (u[i] != v[i]) return u[i] < v[i];
        return false;
    }
};

inline bool mono_divides(const Mono& d, const Mono& m) {
    for (int i = 0; i < kNumVars; ++i)
        if (d[i] > m[i]) return false;
    return true;
}

inline Mono mono_add(const Mono& a, const Mono& b) {
    Mono r;
    for (int i = 0; i < kNumVars; ++i) r[i] = a[i] + b[i];
    return r;
}

inline Mono mono_sub(const Mono& a, const Mono& b) {
    Mono r;
    for (int i = 0; i < kNumVars; ++i) {
        assert(a[i] >= b[i]);
        r[i] = a[i] - b[i];
    }
    return r;
}

namespace detail {
inline bool coeff_is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool coeff_is_zero(const GaussianRational& z) { return z.is_zero(); }
inline Rational coeff_conj(const Rational& q) { return q; }
inline GaussianRational coeff_conj(const GaussianRational& z) { return z.conj(); }
inline Rational coeff_pow(const Rational& b, unsigned long e) { return pow_rat(b, e); }
inline GaussianRational coeff_pow(const GaussianRational& b, unsigned long e) { return b.pow(e); }
}  // namespace detail

template <class K>
class Poly {
  public:
    using Terms = std::map<Mono, K, MonoLess>;

    Poly() = default;
    explicit Poly(const K& constant) {
        if (!detail::coeff_is_zero(constant)) t_[Mono{0, 0, 0}] = constant;
    }
    explicit Poly(long constant) : Poly(K(constant)) {}

    static Poly variable(int v, unsigned e = 1) {
        Poly p;
        if (e == 0) return Poly(K(1));
        Mono m{0, 0, 0};
        m[v] = e;
        p.t_[m] = K(1);
        return p;
    }
    static Poly term(const K& coeff, const Mono& m) {
        Poly p;
        if (!detail::coeff_is_zero(coeff)) p.t_[m] = coeff;
        return p;
    }

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == Mono{0, 0, 0}); }
    K constant_value() const {
        if (t_.empty()) return K(0);
        assert(is_constant());
        return t_.begin()->second;
    }
    std::size_t term_count() const { return t_.size(); }
    const Terms& terms() const { return t_; }

    void add_term(const Mono& m, const K& c) {
        if (detail::coeff_is_zero(c)) return;
        auto [it, fresh] = t_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (detail::coeff_is_zero(it->second)) t_.erase(it);
        }
    }

    // -1 for the zero polynomial.
    int degree(int v) const {
        int d = -1;
        for (const auto& [m, c] : t_) d = std::max(d, static_cast<int>(m[v]));
        return d;
    }
    bool uses_var(int v) const {
        for (const auto& [m, c] : t_)
            if (m[v] > 0) return true;
        return false;
    }
    // Highest slot present, or -1 for constants.
    int max_var() const {
        int mv = -1;
        for (const auto& [m, c] : t_)
            for (int i = 0; i < kNumVars; ++i)
                if (m[i] > 0) mv = std::max(mv, i);
        return mv;
    }
    unsigned min_exponent(int v) const {
        if (t_.empty()) return 0;
        unsigned e = ~0u;
        for (const auto& [m, c] : t_) e = std::min(e, m[v]);
        return e;
    }

    const Mono& lead_mono() const {
        assert(!t_.empty());
        return t_.rbegin()->first;
    }
    const K& lead_coeff() const {
        assert(!t_.empty());
        return t_.rbegin()->second;
    }

    // Coefficient of v^k, with slot v cleared.
    Poly coeff_of(int v, unsigned k) const {
        Poly r;
        for (const auto& [m, c] : t_) {
            if (m[v] != k) continue;
            Mono n = m;
            n[v] = 0;
            r.t_[n] = c;
        }
        return r;
    }
    Poly lead_coeff_of(int v) const {
        int d = degree(v);
        assert(d >= 0);
        return coeff_of(v, static_cast<unsigned>(d));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r = a;
        for (const auto& [m, c] : b.t_) r.add_term(m, c);
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r = a;
        for (const auto& [m, c] : b.t_) r.add_term(m, -c);
        return r;
    }
    Poly operator-() const {
        Poly r = *this;
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_) r.add_term(mono_add(ma, mb), ca * cb);
        return r;
    }
    friend Poly operator*(const K& s, const Poly& a) {
        Poly r;
        if (detail::coeff_is_zero(s)) return r;
        for (const auto& [m, c] : a.t_) r.t_[m] = s * c;
        return r;
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scalar_div(const K& s) const {
        assert(!detail::coeff_is_zero(s));
        Poly r;
        for (const auto& [m, c] : t_) r.t_[m] = c / s;
        return r;
    }

    Poly pow(unsigned long e) const {
        Poly acc(K(1)), base = *this;
        while (e) {
            if (e & 1) acc *= base;
            if (e >>= 1) base *= base;
        }
        return acc;
    }

    Poly derivative(int v) const {
        Poly r;
        for (const auto& [m, c] : t_) {
            if (m[v] == 0) continue;
            Mono n = m;
            n[v] -= 1;
            r.add_term(n, K(static_cast<long>(m[v])) * c);
        }
        return r;
    }

    Poly substitute_value(int v, const K& value) const {
        // Horner over grouped powers of v.
        int d = degree(v);
        if (d <= 0) return *this;
        Poly r = coeff_of(v, static_cast<unsigned>(d));
        for (int k = d - 1; k >= 0; --k) {
            r = value * r;
            r += coeff_of(v, static_cast<unsigned>(k));
        }
        return r;
    }

    Poly substitute_poly(int v, const Poly& value) const {
        int d = degree(v);
        if (d <= 0) return *this;
        Poly r = coeff_of(v, static_cast<unsigned>(d));
        for (int k = d - 1; k >= 0; --k) {
            r = r * value;
            r += coeff_of(v, static_cast<unsigned>(k));
        }
        return r;
    }

    // Scale slot v by a constant: p(.., lambda*v, ..).
    Poly scale_var(int v, const K& lambda) const {
        Poly r;
        for (const auto& [m, c] : t_) {
            K nc = m[v] > 0 ? K(c * detail::coeff_pow(lambda, m[v])) : c;
            r.add_term(m, nc);
        }
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly conjugate_coeffs() const {
        Poly r;
        for (const auto& [m, c] : t_) r.t_[m] = detail::coeff_conj(c);
        return r;
    }

  private:
    Terms t_;
};

using QPoly = Poly<Rational>;
using GPoly = Poly<GaussianRational>;

// Exact division; throws if g does not divide f.
template <class K>
Poly<K> divexact(const Poly<K>& f, const Poly<K>& g) {
    if (g.is_zero()) throw std::domain_error("divexact: division by zero polynomial");
    Poly<K> q, r = f;
    const Mono& gm = g.lead_mono();
    const K& gc = g.lead_coeff();
    while (!r.is_zero()) {
        const Mono& rm = r.lead_mono();
        if (!mono_divides(gm, rm)) throw std::domain_error("divexact: inexact division");
        Mono d = mono_sub(rm, gm);
        K c = r.lead_coeff() / gc;
        Poly<K> piece = Poly<K>::term(c, d);
        q += piece;
        r -= piece * g;
    }
    return q;
}

template <class K>
std::optional<Poly<K>> try_divide(const Poly<K>& f, const Poly<K>& g) {
    if (g.is_zero()) return std::nullopt;
    Poly<K> q, r = f;
    const Mono& gm = g.lead_mono();
    const K& gc = g.lead_coeff();
    while (!r.is_zero()) {
        const Mono& rm = r.lead_mono();
        if (!mono_divides(gm, rm)) return std::nullopt;
        Mono d = mono_sub(rm, gm);
        K c = r.lead_coeff() / gc;
        Poly<K> piece = Poly<K>::term(c, d);
        q += piece;
        r -= piece * g;
    }
    return q;
}

// Pseudo-remainder of f by g w.r.t. slot v: returns lc(g)^(df-dg+1) * f mod g.
template <class K>
Poly<K> prem(const Poly<K>& f, const Poly<K>& g, int v) {
    int dg = g.degree(v);
    assert(dg >= 0);
    int df = f.degree(v);
    if (df < dg) {
        // Convention: multiply by lc^(df-dg+1) would be a negative power; just return f.
        return f;
    }
    Poly<K> lcg = g.lead_coeff_of(v);
    Poly<K> r = f;
    int steps = 0;
    while (!r.is_zero() && r.degree(v) >= dg) {
        int dr = r.degree(v);
        Poly<K> lcr = r.lead_coeff_of(v);
        Poly<K> shift = Poly<K>::variable(v, static_cast<unsigned>(dr - dg));
        r = lcg * r - lcr * shift * g;
        ++steps;
    }
    // Pad to the canonical multiplier lc(g)^(df-dg+1).
    for (int i = steps; i < df - dg + 1; ++i) r = lcg * r;
    return r;
}

// Positive rational content: f / content has coprime integer coefficients.
inline Rational rational_content(const QPoly& f) {
    if (f.is_zero()) return Rational(1);
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : f.terms()) {
        Integer n = abs(c.get_num());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        Integer d = c.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    return rat(num_gcd, den_lcm);
}

inline Rational rational_content(const GPoly& f) {
    if (f.is_zero()) return Rational(1);
    Integer num_gcd = 0, den_lcm = 1;
    auto fold = [&](const Rational& q) {
        if (sgn(q) == 0) return;
        Integer n = abs(q.get_num());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        Integer d = q.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    };
    for (const auto& [m, c] : f.terms()) {
        fold(c.re);
        fold(c.im);
    }
    return rat(num_gcd, den_lcm);
}

// Strip the positive rational content (sign preserved).
template <class K>
Poly<K> make_primitive(const Poly<K>& f) {
    if (f.is_zero()) return f;
    Rational c = rational_content(f);
    return f.scalar_div(K(c));
}

inline Integer round_to_int(const Rational& q) { return floor_int(q + rat(1, 2)); }

// gcd in Z[i] (Euclidean with rounded quotients), up to units.
inline GaussianRational gaussian_int_gcd(GaussianRational a, GaussianRational b) {
    while (!b.is_zero()) {
        GaussianRational q = a / b;
        GaussianRational qr(Rational(round_to_int(q.re)), Rational(round_to_int(q.im)));
        GaussianRational r = a - qr * b;
        a = b;
        b = r;
    }
    return a;
}

// Gaussian coefficients additionally carry a Z[i] content; stripping it keeps
// pseudo-remainder sequences polynomially sized.
inline GPoly make_primitive(const GPoly& f) {
    if (f.is_zero()) return f;
    GPoly g = f.scalar_div(GaussianRational(rational_content(f)));
    GaussianRational content(0);
    for (const auto& [m, c] : g.terms()) {
        content = gaussian_int_gcd(content, c);
        if (content.abs2() == 1) break;
    }
    if (!content.is_zero() && content.abs2() != 1) g = g.scalar_div(content);
    const GaussianRational& lc = g.lead_coeff();
    if (sgn(lc.re) < 0 || (sgn(lc.re) == 0 && sgn(lc.im) < 0)) g = GaussianRational(-1) * g;
    return g;
}

// Divide by the leading coefficient (canonical associate over a field).
template <class K>
Poly<K> normalize_monic(const Poly<K>& f) {
    if (f.is_zero()) return f;
    return f.scalar_div(f.lead_coeff());
}

template <class K>
std::string coeff_to_display(const K& c);

template <>
inline std::string coeff_to_display<Rational>(const Rational& c) {
    return to_string(c);
}
template <>
inline std::string coeff_to_display<GaussianRational>(const GaussianRational& c) {
    if (c.is_real()) return to_string(c.re);
    if (sgn(c.re) == 0) return to_string(c);
    return "(" + to_string(c) + ")";
}

// Deterministic rendering, lex-descending term order.
template <class K>
std::string to_string(const Poly<K>& f, const std::array<std::string, 3>& names = {"x", "s", "c"}) {
    if (f.is_zero()) return "0";
    std::string out;
    const auto& t = f.terms();
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string cs = coeff_to_display<K>(c);
        bool neg = !cs.empty() && cs[0] == '-';
        if (out.empty()) {
            if (neg) {
                out += "-";
                cs = cs.substr(1);
            }
        } else {
            out += neg ? " - " : " + ";
            if (neg) cs = cs.substr(1);
        }
        std::string monos;
        for (int v = 0; v < kNumVars; ++v) {
            if (m[v] == 0) continue;
            if (!monos.empty()) monos += "*";
            monos += names[v];
            if (m[v] > 1) monos += "^" + std::to_string(m[v]);
        }
        if (monos.empty()) {
            out += cs;
        } else if (cs == "1") {
            out += monos;
        } else {
            out += cs + "*" + monos;
        }
    }
    return out;
}

template <class K>
std::ostream& operator<<(std::ostream& os, const Poly<K>& f) {
    return os << to_string(f);
}

}  // namespace mtp

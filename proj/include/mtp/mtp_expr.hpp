#pragma once

#include <mtp/gaussian.hpp>
#include <mtp/rational.hpp>

#include <map>
#include <stdexcept>
#include <vector>

namespace mtp {

// One monomial a * x^p * sin^q(w x) * cos^r(w x). Terms with q = r = 0 carry
// the placeholder frequency 1.
struct MTPTerm {
    Rational a;
    unsigned p = 0;
    unsigned q = 0;
    unsigned r = 0;
    Rational omega = Rational(1);

    friend bool operator==(const MTPTerm& lhs, const MTPTerm& rhs) {
        return lhs.a == rhs.a && lhs.p == rhs.p && lhs.q == rhs.q && lhs.r == rhs.r && lhs.omega == rhs.omega;
    }
};

// Canonical mixed trigonometric-polynomial: like terms merged, zero terms
// dropped, frequencies positive, deterministic term order.
class MTPExpr {
  public:
    MTPExpr() = default;

    static MTPExpr constant(const Rational& c) {
        MTPExpr e;
        e.push(c, 0, 0, 0, Rational(1));
        return e;
    }
    static MTPExpr from_terms(const std::vector<MTPTerm>& raw) {
        MTPExpr e;
        for (const auto& t : raw) e.push(t.a, t.p, t.q, t.r, t.omega);
        return e;
    }

    // Adds one monomial, normalizing frequency sign and zero-frequency trig.
    void push(Rational a, unsigned p, unsigned q, unsigned r, Rational omega) {
        if (sgn(a) == 0) return;
        if (q + r == 0) {
            omega = 1;
        } else if (sgn(omega) == 0) {
            if (q > 0) return;  // sin(0)^q kills the term
            omega = 1;
            r = 0;  // cos(0)^r = 1
        } else if (sgn(omega) < 0) {
            omega = -omega;
            if (q % 2 == 1) a = -a;
        }
        auto key = std::make_tuple(omega, p, q, r);
        auto [it, fresh] = map_.emplace(key, a);
        if (!fresh) {
            it->second += a;
            if (sgn(it->second) == 0) map_.erase(it);
        }
    }

    bool is_zero() const { return map_.empty(); }

    std::vector<MTPTerm> terms() const {
        std::vector<MTPTerm> out;
        out.reserve(map_.size());
        for (const auto& [key, a] : map_) {
            const auto& [omega, p, q, r] = key;
            out.push_back(MTPTerm{a, p, q, r, omega});
        }
        return out;
    }
    std::size_t term_count() const { return map_.size(); }

    friend MTPExpr operator+(const MTPExpr& lhs, const MTPExpr& rhs) {
        MTPExpr e = lhs;
        for (const auto& [key, a] : rhs.map_) {
            const auto& [omega, p, q, r] = key;
            e.push(a, p, q, r, omega);
        }
        return e;
    }
    friend MTPExpr operator-(const MTPExpr& lhs, const MTPExpr& rhs) {
        MTPExpr e = lhs;
        for (const auto& [key, a] : rhs.map_) {
            const auto& [omega, p, q, r] = key;
            e.push(-a, p, q, r, omega);
        }
        return e;
    }
    MTPExpr operator-() const { return MTPExpr() - *this; }

    friend MTPExpr operator*(const MTPExpr& lhs, const MTPExpr& rhs);

    MTPExpr pow(unsigned e) const {
        MTPExpr acc = MTPExpr::constant(Rational(1));
        MTPExpr base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            if (e >>= 1) base = base * base;
        }
        return acc;
    }

    // Substitute x -> lambda * x (lambda > 0): scales powers and frequencies.
    MTPExpr scale_argument(const Rational& lambda) const {
        if (sgn(lambda) <= 0) throw std::domain_error("scale_argument: positive factor required");
        MTPExpr e;
        for (const auto& [key, a] : map_) {
            const auto& [omega, p, q, r] = key;
            e.push(a * pow_rat(lambda, p), p, q, r, omega * lambda);
        }
        return e;
    }

    friend bool operator==(const MTPExpr& lhs, const MTPExpr& rhs) { return lhs.map_ == rhs.map_; }
    friend bool operator!=(const MTPExpr& lhs, const MTPExpr& rhs) { return !(lhs == rhs); }

  private:
    // key: (omega, p, q, r) -> coefficient
    std::map<std::tuple<Rational, unsigned, unsigned, unsigned>, Rational> map_;
};

namespace detail {

// sin^q(wx)cos^r(wx) as sum of gamma_k e^{i k w x}, k = -(q+r)..(q+r).
inline std::map<long, GaussianRational> trig_monomial_exponential(unsigned q, unsigned r) {
    std::map<long, GaussianRational> acc;
    acc[0] = GaussianRational(1);
    GaussianRational half(rat(1, 2));
    GaussianRational minus_half_i(Rational(0), rat(-1, 2));  // 1/(2I)
    auto convolve = [](const std::map<long, GaussianRational>& a, long e1, const GaussianRational& c1, long e2,
                       const GaussianRational& c2) {
        std::map<long, GaussianRational> out;
        for (const auto& [k, v] : a) {
            auto fold = [&](long e, const GaussianRational& c) {
                GaussianRational add = v * c;
                auto [it, fresh] = out.emplace(k + e, add);
                if (!fresh) {
                    it->second += add;
                    if (it->second.is_zero()) out.erase(it);
                }
            };
            fold(e1, c1);
            fold(e2, c2);
        }
        return out;
    };
    for (unsigned i = 0; i < q; ++i) acc = convolve(acc, 1, minus_half_i, -1, -minus_half_i);
    for (unsigned i = 0; i < r; ++i) acc = convolve(acc, 1, half, -1, half);
    return acc;
}

}  // namespace detail

// Product of MTPs. Same-frequency (or trig-free) monomial pairs multiply
// directly; mixed-frequency pairs are linearized through the exponential
// representation, which turns the product into single-frequency terms again.
inline MTPExpr operator*(const MTPExpr& lhs, const MTPExpr& rhs) {
    MTPExpr out;
    for (const auto& t1 : lhs.terms()) {
        for (const auto& t2 : rhs.terms()) {
            bool trig1 = t1.q + t1.r > 0, trig2 = t2.q + t2.r > 0;
            if (!trig1 || !trig2 || t1.omega == t2.omega) {
                Rational w = trig1 ? t1.omega : t2.omega;
                out.push(t1.a * t2.a, t1.p + t2.p, t1.q + t2.q, t1.r + t2.r, w);
                continue;
            }
            auto e1 = detail::trig_monomial_exponential(t1.q, t1.r);
            auto e2 = detail::trig_monomial_exponential(t2.q, t2.r);
            // gather gamma over rational frequencies k1*w1 + k2*w2
            std::map<Rational, GaussianRational> freq;
            for (const auto& [k1, c1] : e1)
                for (const auto& [k2, c2] : e2) {
                    Rational f = k1 * t1.omega + k2 * t2.omega;
                    GaussianRational add = c1 * c2;
                    auto [it, fresh] = freq.emplace(f, add);
                    if (!fresh) it->second += add;
                }
            Rational coef = t1.a * t2.a;
            unsigned p = t1.p + t2.p;
            for (const auto& [f, gamma] : freq) {
                if (sgn(f) < 0) continue;  // covered by the conjugate pair
                if (sgn(f) == 0) {
                    if (sgn(gamma.im) != 0) throw std::logic_error("mtp product: non-real mean term");
                    out.push(coef * gamma.re, p, 0, 0, Rational(1));
                } else {
                    out.push(coef * 2 * gamma.re, p, 0, 1, f);
                    out.push(coef * -2 * gamma.im, p, 1, 0, f);
                }
            }
        }
    }
    return out;
}

struct FrequencyNormalization {
    MTPExpr expr;    // integer frequencies
    Rational scale;  // expr(t) = input(t / scale); roots rescale as x = t / scale
};

// gcd of frequency numerators over lcm of denominators; substituting
// x = t/scale makes every frequency a positive integer.
inline FrequencyNormalization normalize_frequency(const MTPExpr& e) {
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& t : e.terms()) {
        if (t.q + t.r == 0) continue;
        Integer n = t.omega.get_num();
        Integer d = t.omega.get_den();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    FrequencyNormalization out;
    if (num_gcd == 0) {  // no trigonometric terms
        out.expr = e;
        out.scale = 1;
        return out;
    }
    out.scale = rat(num_gcd, den_lcm);
    out.expr = e.scale_argument(Rational(1) / out.scale);
    return out;
}

}  // namespace mtp

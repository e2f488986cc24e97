#pragma once

#include <mtp/enclosure.hpp>
#include <mtp/laurent.hpp>
#include <mtp/poly_gcd.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

namespace mtp {

// Exact phased form of one real factor f_i = lrhom(P_i y^{-p/2} C^{-1/2}).
// Each pair with v > 0 contributes 2*Re(a C^{-1/2} e^{ivx/D}) x^xpow, the
// v = 0 entries contribute the real scalar a C^{-1/2} times x^xpow.
struct PhasedWitness {
    unsigned D = 2;
    GaussianRational C = GaussianRational(1);
    struct Pair {
        GaussianRational a;
        unsigned xpow;
        unsigned v;
    };
    std::vector<Pair> pairs;
};

// phase of 2*Re(a C^{-1/2} e^{i...}) as an exact multiple of pi, when the
// phase unit lands on a quarter turn: returns phi/pi in (-1, 1].
inline std::optional<Rational> witness_phase_pi(const GaussianRational& a, const GaussianRational& C) {
    if (a.is_zero()) return std::nullopt;
    GaussianRational w = a * a / (GaussianRational(a.abs2()) * C);  // e^{2 i phi}
    Rational two_phi_over_pi;
    if (w == GaussianRational(1))
        two_phi_over_pi = 0;
    else if (w == GaussianRational(-1))
        two_phi_over_pi = 1;
    else if (w == GaussianRational(0, 1))
        two_phi_over_pi = rat(1, 2);
    else if (w == GaussianRational(0, -1))
        two_phi_over_pi = rat(-1, 2);
    else
        return std::nullopt;
    // candidates phi/pi = two_phi_over_pi/2 + k; pick the one inside a
    // certified enclosure of arg(a) - arg(C)/2.
    Rational eps = rat(1, 100);
    RationalInterval phi = arg_enclosure(a, eps) - rat(1, 2) * arg_enclosure(C, eps);
    RationalInterval pi = pi_enclosure(16);
    Rational base = two_phi_over_pi / 2;
    for (const Rational& cand : {Rational(base), Rational(base - 1), Rational(base + 1)}) {
        RationalInterval target = cand * pi;
        if (target.lo <= phi.hi && phi.lo <= target.hi) return cand;
    }
    return std::nullopt;
}

struct LaurentFactor {
    GPoly P;           // monic square-free factor over Q(i)[x,y], y does not divide P
    unsigned mult;     // r_i
    GaussianRational C;  // P = C y^p con(P), |C| = 1
    long p_exp;          // = deg_y(P), even under the D = 2*lcm convention

    bool rationalized = false;  // C in {1,-1,I,-I}: display below is exact
    MTPExpr display;            // real MTP g_i, positive content stripped
    Rational content = Rational(1);  // f_i = content * display * 2^{-sqrt2_halves/2}
    int sqrt2_halves = 0;            // 1 when C = +-I, else 0
    PhasedWitness witness;
};

struct FactorizationResult {
    unsigned D = 2;
    LaurentPoly laurent;      // P = unit * y^{-p_shift} * prod P_i^{r_i}
    GaussianRational unit;
    long p_shift = 0;
    std::vector<LaurentFactor> factors;

    // Assembled real constant with the display normalization folded in:
    // F = c0 * prod(display_i ^ mult_i) when every factor is rationalized.
    bool c0_rational = false;
    Rational c0 = Rational(0);
    // General path: c0 = c0_base * 2^{c0_pow2/2} * prod sqrt(C) over c0_half_units.
    GaussianRational c0_base;
    long c0_pow2 = 0;
    std::vector<GaussianRational> c0_half_units;
};

// P = C y^p con(P) for a square-free factor of a self-conjugate Laurent
// polynomial; p = deg_y(P). Signals a structural error when the quotient
// P / con(P) is not a monomial times a unit.
inline std::pair<GaussianRational, long> selfconj_constants(const GPoly& P) {
    if (P.is_zero()) throw std::domain_error("selfconj_constants: zero polynomial");
    if (P.min_exponent(vars::y) > 0) throw std::domain_error("selfconj_constants: y divides the factor");
    long p = P.degree(vars::y);
    GPoly rev;
    for (const auto& [m, c] : P.terms()) {
        Mono n = m;
        n[vars::y] = static_cast<unsigned>(p) - m[vars::y];
        rev += GPoly::term(c.conj(), n);
    }
    const Mono& lead = P.lead_mono();
    GPoly lead_rev_coeff = rev.coeff_of(vars::y, lead[vars::y]).coeff_of(vars::x, lead[vars::x]);
    if (lead_rev_coeff.is_zero()) throw std::domain_error("selfconj_constants: support mismatch");
    GaussianRational c = P.lead_coeff() / lead_rev_coeff.constant_value();
    if (P != c * rev) throw std::domain_error("selfconj_constants: P/con(P) is not a monomial");
    if (c.abs2() != 1) throw std::domain_error("selfconj_constants: constant is not unit-modulus");
    return {c, p};
}

namespace detail {

inline Rational mtp_content(const MTPExpr& e) {
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& t : e.terms()) {
        Integer n = abs(t.a.get_num());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        Integer d = t.a.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    if (num_gcd == 0) return Rational(1);
    return rat(num_gcd, den_lcm);
}

inline PhasedWitness make_witness(const GPoly& P, const GaussianRational& C, long p, unsigned D) {
    PhasedWitness w;
    w.D = D;
    w.C = C;
    for (const auto& [m, coeff] : P.terms()) {
        long v = static_cast<long>(m[vars::y]) - p / 2;
        if (v < 0) continue;
        w.pairs.push_back(PhasedWitness::Pair{coeff, m[vars::x], static_cast<unsigned>(v)});
    }
    // coefficient relation c_{p - beta} = C * conj(c_beta)
    for (const auto& [m, coeff] : P.terms()) {
        Mono partner = m;
        partner[vars::y] = static_cast<unsigned>(p) - m[vars::y];
        GPoly pc = P.coeff_of(vars::y, partner[vars::y]).coeff_of(vars::x, partner[vars::x]);
        if (pc.is_zero() || pc.constant_value() != C * coeff.conj())
            throw std::logic_error("witness: self-conjugacy relation violated");
    }
    return w;
}

}  // namespace detail

// Algorithm: Euler transform, square-free decomposition over Q(i)[x,y],
// self-conjugacy constants per factor, then real factor assembly.
inline FactorizationResult factorize(const MTPExpr& input) {
    if (input.is_zero()) throw std::domain_error("factorize: zero expression");
    FactorizationResult out;
    out.laurent = to_laurent(input);
    if (out.laurent.is_zero()) throw std::domain_error("factorize: expression is identically zero");
    out.D = out.laurent.base_den();
    out.p_shift = out.laurent.shift();

    auto dec = squarefree_decompose(out.laurent.num());
    out.unit = dec.unit;

    out.c0_base = out.unit;
    out.c0_pow2 = 0;
    long halfpow_sum = 0;

    for (auto& [poly, mult] : dec.factors) {
        if (poly == GPoly::variable(vars::y, 1))
            throw std::logic_error("factorize: canonical form should exclude y factors");
        LaurentFactor f;
        f.P = poly;
        f.mult = mult;
        auto [c, p] = selfconj_constants(poly);
        f.C = c;
        f.p_exp = p;
        if (p % 2 != 0) throw std::logic_error("factorize: odd y-degree under doubled base");
        halfpow_sum += static_cast<long>(mult) * (p / 2);
        f.witness = detail::make_witness(poly, c, p, out.D);

        GaussianRational inv_half;  // exact C^{-1/2} or its sqrt2-free numerator
        bool have_exact = true;
        if (c == GaussianRational(1)) {
            inv_half = GaussianRational(1);
        } else if (c == GaussianRational(-1)) {
            inv_half = GaussianRational(0, -1);  // e^{-i pi/2}
        } else if (c == GaussianRational(0, 1)) {
            inv_half = GaussianRational(Rational(1), Rational(-1));  // sqrt2 * e^{-i pi/4}
            f.sqrt2_halves = 1;
        } else if (c == GaussianRational(0, -1)) {
            inv_half = GaussianRational(Rational(1), Rational(1));  // sqrt2 * e^{+i pi/4}
            f.sqrt2_halves = 1;
        } else {
            have_exact = false;
        }

        if (have_exact) {
            LaurentPoly s_exact =
                inv_half * LaurentPoly(out.D, poly, p / 2);  // P * y^{-p/2} * (sqrt2^h * C^{-1/2})
            MTPExpr raw = lrhom_to_mtp(s_exact);
            f.content = detail::mtp_content(raw);
            MTPExpr display;
            for (const auto& t : raw.terms()) display.push(t.a / f.content, t.p, t.q, t.r, t.omega);
            f.display = display;
            f.rationalized = true;
        }

        // constant bookkeeping: (C^{1/2})^mult and the display pulls
        if (c == GaussianRational(1)) {
            // nothing
        } else if (c == GaussianRational(-1)) {
            out.c0_base *= GaussianRational(0, 1).pow(mult);
        } else if (c == GaussianRational(0, 1)) {
            out.c0_base *= GaussianRational(Rational(1), Rational(1)).pow(mult);  // (1+I)^mult
            out.c0_pow2 -= static_cast<long>(mult);
        } else if (c == GaussianRational(0, -1)) {
            out.c0_base *= GaussianRational(Rational(1), Rational(-1)).pow(mult);  // (1-I)^mult
            out.c0_pow2 -= static_cast<long>(mult);
        } else {
            out.c0_base *= c.pow(mult / 2);
            if (mult % 2 == 1) out.c0_half_units.push_back(c);
        }
        if (f.rationalized) {
            out.c0_base *= GaussianRational(pow_rat(f.content, mult));
            out.c0_pow2 -= static_cast<long>(f.sqrt2_halves) * static_cast<long>(mult);
        }
        out.factors.push_back(std::move(f));
    }

    if (halfpow_sum != out.p_shift)
        throw std::logic_error("factorize: y-power mismatch; input was not self-conjugate");

    if (out.c0_half_units.empty()) {
        bool all_rat = true;
        for (const auto& f : out.factors) all_rat = all_rat && f.rationalized;
        if (all_rat) {
            if (out.c0_pow2 % 2 != 0) throw std::logic_error("factorize: dangling sqrt(2)");
            GaussianRational c0 = out.c0_base;
            long e = out.c0_pow2 / 2;
            Rational scale = e >= 0 ? pow_rat(Rational(2), static_cast<unsigned long>(e))
                                    : Rational(1) / pow_rat(Rational(2), static_cast<unsigned long>(-e));
            c0 *= GaussianRational(scale);
            if (sgn(c0.im) != 0) throw std::logic_error("factorize: real constant has imaginary part");
            out.c0_rational = true;
            out.c0 = c0.re;
        }
    }
    return out;
}

// The real image f_i = lrhom(P y^{-p/2} C^{-1/2}) as an exact phased
// expression (p even under the doubled-base convention).
inline PhasedWitness real_factor(const GPoly& P, const GaussianRational& C, long p, unsigned D) {
    if (p % 2 != 0) throw std::domain_error("real_factor: odd y-power; construct over the doubled base");
    if (C.abs2() != 1) throw std::domain_error("real_factor: constant must be unit-modulus");
    return detail::make_witness(P, C, p, D);
}

// Product of all odd-multiplicity factors together with the constant and the
// leftover y-power: self-conjugate, so its lrhom image is a real square-free
// MTP. This is the phase-free carrier of the sign of F.
inline LaurentPoly odd_residual(const FactorizationResult& res) {
    LaurentPoly r = res.laurent;
    for (const auto& f : res.factors) {
        unsigned k = f.mult / 2;
        if (k == 0) continue;
        LaurentPoly base(res.D, f.P, 0);
        LaurentPoly square = base * base.con();
        for (unsigned i = 0; i < k; ++i) r = divexact(r, square);
    }
    if (!r.is_selfconj()) throw std::logic_error("odd_residual: residual not self-conjugate");
    return r;
}

// P_i * con(P_i): the self-conjugate square of one factor; its lrhom image
// equals f_i^2.
inline LaurentPoly even_square(const FactorizationResult& res, const LaurentFactor& f) {
    LaurentPoly base(res.D, f.P, 0);
    return base * base.con();
}

}  // namespace mtp

#pragma once

#include <mtp/poly.hpp>

#include <map>
#include <vector>

namespace mtp {

namespace detail {

// Content w.r.t. slot v: gcd of the coefficient polynomials.
template <class K>
Poly<K> content_of(const Poly<K>& f, int v);

// The PRS variable with the fewest pseudo-division steps: smallest maximum
// degree among the variables present.
template <class K>
int choose_gcd_var(const Poly<K>& f, const Poly<K>& g) {
    int best = -1;
    int best_score = 0;
    for (int v = 0; v < kNumVars; ++v) {
        int d = std::max(f.degree(v), g.degree(v));
        if (d < 1) continue;
        if (best < 0 || d < best_score) {
            best = v;
            best_score = d;
        }
    }
    return best;
}

template <class K>
Poly<K> gcd_impl(Poly<K> f, Poly<K> g) {
    if (f.is_zero()) return normalize_monic(g);
    if (g.is_zero()) return normalize_monic(f);
    if (f.is_constant() || g.is_constant()) return Poly<K>(K(1));

    int v = choose_gcd_var(f, g);
    if (!f.uses_var(v)) return gcd_impl(f, content_of(g, v));
    if (!g.uses_var(v)) return gcd_impl(content_of(f, v), g);

    Poly<K> cf = content_of(f, v);
    Poly<K> cg = content_of(g, v);
    Poly<K> c = gcd_impl(cf, cg);
    // Strip the rational content as well; pseudo-remainders double the
    // coefficient size otherwise.
    Poly<K> a = make_primitive(divexact(f, cf));
    Poly<K> b = make_primitive(divexact(g, cg));
    if (a.degree(v) < b.degree(v)) std::swap(a, b);

    // Primitive PRS.
    for (;;) {
        Poly<K> r = prem(a, b, v);
        if (r.is_zero()) {
            Poly<K> pp = divexact(b, content_of(b, v));
            return normalize_monic(c * pp);
        }
        if (r.degree(v) == 0) return normalize_monic(c);
        a = b;
        b = make_primitive(divexact(r, content_of(r, v)));
    }
}

template <class K>
Poly<K> content_of(const Poly<K>& f, int v) {
    int d = f.degree(v);
    if (d <= 0) return f;
    Poly<K> c;
    for (int k = 0; k <= d; ++k) {
        Poly<K> ck = f.coeff_of(v, static_cast<unsigned>(k));
        if (ck.is_zero()) continue;
        c = c.is_zero() ? ck : gcd_impl(c, ck);
        if (c.is_constant()) return Poly<K>(K(1));
    }
    return c;
}

}  // namespace detail

// Monic-normalized gcd; gcd(f, 0) = normalize(f).
template <class K>
Poly<K> poly_gcd(const Poly<K>& f, const Poly<K>& g) {
    return detail::gcd_impl(f, g);
}

// f / gcd(f, df/dv), monic. For inputs constant in v this is just the
// normalized input.
template <class K>
Poly<K> squarefree_part(const Poly<K>& f, int v) {
    if (f.is_zero()) return f;
    Poly<K> d = f.derivative(v);
    if (d.is_zero()) return normalize_monic(f);
    return normalize_monic(divexact(f, poly_gcd(f, d)));
}

template <class K>
struct SquarefreeDecomposition {
    // f = unit * prod(factors[i].first ^ factors[i].second)
    K unit;
    // Monic, square-free, pairwise coprime; multiplicities strictly ascending.
    std::vector<std::pair<Poly<K>, unsigned>> factors;
};

namespace detail {

// Yun's algorithm w.r.t. slot v; f must be primitive in v.
template <class K>
void yun(const Poly<K>& f, int v, std::map<unsigned, Poly<K>>& acc) {
    Poly<K> fp = f.derivative(v);
    Poly<K> g = poly_gcd(f, fp);
    Poly<K> ci = divexact(f, g);
    Poly<K> di = divexact(fp, g) - ci.derivative(v);
    unsigned i = 1;
    while (!ci.is_constant()) {
        Poly<K> ai = poly_gcd(ci, di);
        if (!ai.is_constant()) {
            auto [it, fresh] = acc.emplace(i, ai);
            if (!fresh) it->second *= ai;
        }
        ci = divexact(ci, ai);
        di = divexact(di, ai) - ci.derivative(v);
        ++i;
    }
}

template <class K>
void squarefree_rec(const Poly<K>& f, std::map<unsigned, Poly<K>>& acc) {
    if (f.is_constant()) return;
    int v = f.max_var();
    Poly<K> cont = content_of(f, v);
    Poly<K> pp = divexact(f, cont);
    squarefree_rec(cont, acc);
    yun(pp, v, acc);
}

}  // namespace detail

// Square-free decomposition over a field of characteristic 0. Monomial parts
// (pure variable powers) are split off first, so the y-power of a Laurent
// numerator shows up as the factor "y" with its multiplicity.
template <class K>
SquarefreeDecomposition<K> squarefree_decompose(const Poly<K>& f) {
    if (f.is_zero()) throw std::domain_error("squarefree_decompose: zero polynomial");
    SquarefreeDecomposition<K> out;
    std::map<unsigned, Poly<K>> acc;
    Poly<K> rest = f;
    for (int v = 0; v < kNumVars; ++v) {
        unsigned e = rest.min_exponent(v);
        if (e > 0) {
            rest = divexact(rest, Poly<K>::variable(v, e));
            auto [it, fresh] = acc.emplace(e, Poly<K>::variable(v, 1));
            if (!fresh) it->second *= Poly<K>::variable(v, 1);
        }
    }
    detail::squarefree_rec(rest, acc);
    Poly<K> prod(K(1));
    for (auto& [mult, poly] : acc) {
        Poly<K> norm = normalize_monic(poly);
        prod *= norm.pow(mult);
        out.factors.emplace_back(norm, mult);
    }
    Poly<K> unit_poly = divexact(f, prod);
    if (!unit_poly.is_constant()) throw std::logic_error("squarefree_decompose: non-constant unit");
    out.unit = unit_poly.constant_value();
    return out;
}

}  // namespace mtp

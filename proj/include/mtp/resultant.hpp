#pragma once

#include <mtp/poly.hpp>

#include <vector>

namespace mtp {

namespace detail {

// Fraction-free Gaussian elimination; exact over any polynomial ring with
// exact division.
template <class K>
Poly<K> bareiss_det(std::vector<std::vector<Poly<K>>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return Poly<K>(K(1));
    int sign = 1;
    Poly<K> prev(K(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return Poly<K>();
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = divexact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            }
            m[i][k] = Poly<K>();
        }
        prev = m[k][k];
    }
    Poly<K> det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

// Univariate resultant over a field by Euclidean reduction; equals the
// Sylvester determinant.
template <class K>
K resultant_uni(Poly<K> f, Poly<K> g, int v) {
    int m = f.degree(v), n = g.degree(v);
    if (m < 0 || n < 0) return K(0);
    if (m == 0 && n == 0) return K(1);
    if (n == 0) return detail::coeff_pow(g.constant_value(), static_cast<unsigned long>(m));
    if (m == 0) return detail::coeff_pow(f.constant_value(), static_cast<unsigned long>(n));
    // r = f mod g (field long division)
    Poly<K> r = f;
    K glc = g.lead_coeff_of(v).constant_value();
    while (!r.is_zero() && r.degree(v) >= n) {
        int dr = r.degree(v);
        K c = r.lead_coeff_of(v).constant_value() / glc;
        r -= Poly<K>::term(c, [&] {
                 Mono mm{0, 0, 0};
                 mm[v] = static_cast<unsigned>(dr - n);
                 return mm;
             }()) *
             g;
    }
    if (r.is_zero()) return K(0);
    int k = r.degree(v);
    K lead_pow = detail::coeff_pow(glc, static_cast<unsigned long>(m - k));
    K rec = resultant_uni(g, r, v);
    K out = lead_pow * rec;
    if ((static_cast<long>(m) * n) % 2 != 0) out = -out;
    return out;
}

template <class K>
bool is_univariate_in(const Poly<K>& f, int v) {
    for (const auto& [mo, c] : f.terms())
        for (int i = 0; i < kNumVars; ++i)
            if (i != v && mo[i] > 0) return false;
    return true;
}

}  // namespace detail

// Sylvester resultant of f and g w.r.t. slot v. Determinant of the Sylvester
// matrix with the deg(g) rows of f-coefficients on top.
template <class K>
Poly<K> resultant(const Poly<K>& f, const Poly<K>& g, int v) {
    int m = f.degree(v), n = g.degree(v);
    if (m < 1 && n < 1) {
        if (f.is_zero() || g.is_zero()) return Poly<K>();
        throw std::domain_error("resultant: both arguments constant in the chosen variable");
    }
    if (f.is_zero() || g.is_zero()) return Poly<K>();
    if (detail::is_univariate_in(f, v) && detail::is_univariate_in(g, v))
        return Poly<K>(detail::resultant_uni(f, g, v));
    if (m == 0) return f.pow(static_cast<unsigned long>(n));
    if (n == 0) return g.pow(static_cast<unsigned long>(m));

    const std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<Poly<K>>> mat(size, std::vector<Poly<K>>(size));
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j) mat[row][row + j] = f.coeff_of(v, static_cast<unsigned>(m - j));
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j) mat[n + row][row + j] = g.coeff_of(v, static_cast<unsigned>(n - j));
    return detail::bareiss_det(mat);
}

}  // namespace mtp

#ifndef GITSTAB_POLYALG_HPP
#define GITSTAB_POLYALG_HPP

#include <optional>
#include <vector>

#include "gitstab/poly.hpp"

namespace gitstab {

// Exact division in Q[x_0..x_n]: returns f/g when g divides f, nullopt
// otherwise. Leading-term peeling in the lex order.
inline std::optional<Poly> try_exact_divide(const Poly& f, const Poly& g) {
    f.check_same_ring(g);
    int n = f.num_vars();
    std::optional<Poly> r = f;
    Poly::TermMap q;
    while (r) {
        const Exponents& er = r->leading_exponents();
        const Exponents& eg = g.leading_exponents();
        Exponents d(n);
        for (int i = 0; i < n; ++i) {
            d[i] = er[i] - eg[i];
            if (d[i] < 0) return std::nullopt;
        }
        Rat c = r->leading_coeff() / g.leading_coeff();
        q[d] = c;
        r = Poly::sub(*r, g * Poly::monomial(n, d, c));
    }
    return Poly(n, std::move(q));
}

inline Poly exact_divide(const Poly& f, const Poly& g) {
    auto q = try_exact_divide(f, g);
    if (!q) throw input_error("inexact polynomial division");
    return *q;
}

// ---------------------------------------------------------------------------
// Determinants of polynomial matrices (Bareiss fraction-free elimination).
// Zero entries are nullopt; a zero determinant comes back as nullopt.
// ---------------------------------------------------------------------------

using PolyMat = std::vector<std::vector<std::optional<Poly>>>;

namespace detail {
inline std::optional<Poly> opt_mul(const std::optional<Poly>& a, const std::optional<Poly>& b) {
    if (!a || !b) return std::nullopt;
    return *a * *b;
}
inline std::optional<Poly> opt_sub(const std::optional<Poly>& a, const std::optional<Poly>& b) {
    if (!a && !b) return std::nullopt;
    if (!b) return a;
    if (!a) return -*b;
    return Poly::sub(*a, *b);
}
} // namespace detail

inline std::optional<Poly> det_poly_matrix(PolyMat m) {
    int sz = static_cast<int>(m.size());
    if (sz == 0) throw input_error("empty matrix");
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != sz) throw input_error("non-square matrix");
    bool neg = false;
    std::optional<Poly> prev; // pivot of the previous step; exact divisor
    for (int k = 0; k + 1 < sz; ++k) {
        int p = -1;
        for (int r = k; r < sz; ++r)
            if (m[r][k]) {
                p = r;
                break;
            }
        if (p < 0) return std::nullopt;
        if (p != k) {
            std::swap(m[p], m[k]);
            neg = !neg;
        }
        for (int i = k + 1; i < sz; ++i)
            for (int j = k + 1; j < sz; ++j) {
                auto num = detail::opt_sub(detail::opt_mul(m[k][k], m[i][j]),
                                           detail::opt_mul(m[i][k], m[k][j]));
                if (num && prev) num = exact_divide(*num, *prev);
                m[i][j] = std::move(num);
            }
        prev = m[k][k];
    }
    auto d = m[sz - 1][sz - 1];
    if (!d) return std::nullopt;
    return neg ? -*d : *d;
}

// Coefficients of f seen as a polynomial in x_var, ascending in the exponent.
// Each coefficient keeps the full variable set with x_var zeroed out.
inline std::vector<std::optional<Poly>> coeffs_wrt(const Poly& f, int var) {
    int n = f.num_vars();
    int top = 0;
    for (const auto& [e, c] : f.terms()) top = std::max(top, e[var]);
    std::vector<Poly::TermMap> maps(top + 1);
    for (const auto& [e, c] : f.terms()) {
        Exponents r(e);
        int j = r[var];
        r[var] = 0;
        maps[j][r] = c;
    }
    std::vector<std::optional<Poly>> out(top + 1);
    for (int j = 0; j <= top; ++j)
        if (!maps[j].empty()) out[j] = Poly(n, std::move(maps[j]));
    return out;
}

inline int degree_in(const Poly& f, int var) {
    int top = 0;
    for (const auto& [e, c] : f.terms()) top = std::max(top, e[var]);
    return top;
}

// Sylvester resultant eliminating x_var, with the f-block first. Returns
// nullopt exactly when the resultant is identically zero (shared factor
// involving x_var).
inline std::optional<Poly> resultant(const Poly& f, const Poly& g, int var) {
    f.check_same_ring(g);
    auto fc = coeffs_wrt(f, var);
    auto gc = coeffs_wrt(g, var);
    int df = static_cast<int>(fc.size()) - 1;
    int dg = static_cast<int>(gc.size()) - 1;
    if (df == 0 && dg == 0) return Poly::constant(f.num_vars(), Rat(1));
    int sz = df + dg;
    PolyMat m(sz, std::vector<std::optional<Poly>>(sz));
    for (int r = 0; r < dg; ++r)
        for (int j = 0; j <= df; ++j) m[r][r + j] = fc[df - j];
    for (int r = 0; r < df; ++r)
        for (int j = 0; j <= dg; ++j) m[dg + r][r + j] = gc[dg - j];
    return det_poly_matrix(std::move(m));
}

// ---------------------------------------------------------------------------
// Multivariate gcd (primitive pseudo-remainder sequence) and square-free part.
// ---------------------------------------------------------------------------

namespace detail {

inline Poly gcd_poly_impl(Poly f, Poly g);

inline std::optional<Poly> poly_from_coeff_gcd(const std::vector<std::optional<Poly>>& cs) {
    std::optional<Poly> acc;
    for (const auto& c : cs) {
        if (!c) continue;
        acc = acc ? gcd_poly_impl(*acc, *c) : *c;
    }
    return acc;
}

inline Poly content_wrt(const Poly& f, int var) {
    auto c = poly_from_coeff_gcd(coeffs_wrt(f, var));
    return c->primitive();
}

// lb^k * a reduced mod b in x_var (k as small as the loop needs); used only
// inside the primitive PRS where content removal cancels the lb powers.
inline std::optional<Poly> pseudo_rem(const Poly& a, const Poly& b, int var) {
    int db = degree_in(b, var);
    auto bc = coeffs_wrt(b, var);
    Poly lb = *bc[db];
    std::optional<Poly> r = a;
    while (r && degree_in(*r, var) >= db) {
        int dr = degree_in(*r, var);
        auto rc = coeffs_wrt(*r, var);
        Poly lr = *rc[dr];
        Exponents shift(a.num_vars(), 0);
        shift[var] = dr - db;
        // lb*r - lr*x^(dr-db)*b : kills the x_var^dr coefficient exactly
        r = Poly::sub(lb * *r, lr * Poly::monomial(a.num_vars(), shift) * b);
    }
    return r;
}

inline Poly gcd_poly_impl(Poly f, Poly g) {
    if (f.is_constant() || g.is_constant()) return Poly::constant(f.num_vars(), Rat(1));
    int n = f.num_vars();
    int var = -1;
    for (int i = 0; i < n; ++i)
        if (degree_in(f, i) > 0 || degree_in(g, i) > 0) {
            var = i;
            break;
        }
    if (degree_in(f, var) == 0) return gcd_poly_impl(f, content_wrt(g, var));
    if (degree_in(g, var) == 0) return gcd_poly_impl(content_wrt(f, var), g);

    Poly cf = content_wrt(f, var);
    Poly cg = content_wrt(g, var);
    Poly c = gcd_poly_impl(cf, cg);
    std::optional<Poly> a = exact_divide(f, cf);
    std::optional<Poly> b = exact_divide(g, cg);
    if (degree_in(*a, var) < degree_in(*b, var)) std::swap(a, b);
    while (b) {
        auto r = pseudo_rem(*a, *b, var);
        a = b;
        if (r) r = exact_divide(*r, content_wrt(*r, var));
        b = r;
    }
    Poly pp = exact_divide(*a, content_wrt(*a, var)).primitive();
    if (c.is_constant()) return pp;
    return (c * pp).primitive();
}

} // namespace detail

// gcd up to scalar, returned primitive with positive leading coefficient.
inline Poly gcd_poly(const Poly& f, const Poly& g) {
    f.check_same_ring(g);
    return detail::gcd_poly_impl(f, g).primitive();
}

inline Poly gcd_poly(const std::vector<Poly>& fs) {
    if (fs.empty()) throw input_error("gcd of empty family");
    Poly acc = fs[0];
    for (std::size_t i = 1; i < fs.size(); ++i) {
        if (acc.is_constant()) break;
        acc = gcd_poly(acc, fs[i]);
    }
    return acc.primitive();
}

// Product of the distinct irreducible factors, up to scalar: f / gcd(f, all
// partial derivatives). Exact in characteristic zero.
inline Poly squarefree_part(const Poly& f) {
    if (f.is_constant()) return Poly::constant(f.num_vars(), Rat(1));
    std::optional<Poly> s;
    for (int i = 0; i < f.num_vars(); ++i) {
        auto d = f.diff(i);
        if (!d) continue;
        Poly gi = gcd_poly(f, *d);
        s = s ? gcd_poly(*s, gi) : gi;
        if (s->is_constant()) break;
    }
    if (!s || s->is_constant()) return f.primitive();
    return exact_divide(f, *s).primitive();
}

inline bool is_reduced_poly(const Poly& f) {
    return squarefree_part(f).degree() == f.degree();
}

} // namespace gitstab

#endif

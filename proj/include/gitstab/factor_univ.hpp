#ifndef GITSTAB_FACTOR_UNIV_HPP
#define GITSTAB_FACTOR_UNIV_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "gitstab/numberfield.hpp"

namespace gitstab {

// Dense univariate polynomial over Q, ascending coefficients, no trailing
// zeros; the empty vector is the zero polynomial.
using UPoly = std::vector<Rat>;

inline void utrim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

inline Rat ueval(const UPoly& p, const Rat& x) {
    Rat acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

inline UPoly uderiv(const UPoly& p) {
    UPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
    utrim(d);
    return d;
}

inline UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly out(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    utrim(out);
    return out;
}

// Division with remainder over the field Q.
inline void udivmod(UPoly a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.empty()) throw input_error("univariate division by zero");
    q.assign(a.size(), Rat(0));
    while (udeg(a) >= udeg(b)) {
        int shift = udeg(a) - udeg(b);
        Rat c = a.back() / b.back();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        utrim(a);
        if (a.empty()) break;
    }
    utrim(q);
    r = std::move(a);
}

inline UPoly ugcd(UPoly a, UPoly b) {
    utrim(a);
    utrim(b);
    while (!b.empty()) {
        UPoly q, r;
        udivmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lc = a.back();
        for (auto& c : a) c /= lc;
    }
    return a;
}

inline UPoly usquarefree(const UPoly& p) {
    UPoly d = uderiv(p);
    if (d.empty()) return p;
    UPoly g = ugcd(p, d);
    if (udeg(g) <= 0) return p;
    UPoly q, r;
    udivmod(p, g, q, r);
    return q;
}

// ---------------------------------------------------------------------------
// Root extraction within Q and quadratic extensions.
// ---------------------------------------------------------------------------

// All divisors of |n|, or failure when |n| cannot be fully factored by
// trial division plus a primality test.
inline bool divisors_of(Int n, std::vector<Int>& out) {
    n = abs(n);
    if (n == 0) return false;
    std::vector<std::pair<Int, int>> fac;
    for (Int p = 2; p <= 100000 && p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            fac.emplace_back(p, e);
        }
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) {
            if (mpz_perfect_square_p(n.get_mpz_t())) {
                Int r;
                mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
                if (mpz_probab_prime_p(r.get_mpz_t(), 30) != 0) {
                    fac.emplace_back(r, 2);
                    n = 1;
                }
            }
            if (n > 1) return false;
        } else {
            fac.emplace_back(n, 1);
        }
    }
    out = {Int(1)};
    for (const auto& [p, e] : fac) {
        std::size_t base = out.size();
        Int pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) {
                out.push_back(out[i] * pk);
                if (out.size() > 20000) return false;
            }
        }
    }
    return true;
}

// Roots of a*t^2 + b*t + c (a != 0) as a pair in Q or one Q(sqrt(d)).
inline std::pair<Quad, Quad> quadratic_roots(const Rat& a, const Rat& b, const Rat& c) {
    Rat disc = b * b - 4 * a * c;
    if (disc == 0) {
        Quad r(-b / (2 * a));
        return {r, r};
    }
    auto dec = sqrt_decompose(abs(disc));
    Int d = dec.disc;
    Rat s = dec.coef;
    if (disc < 0) d = (d == 1) ? Int(-1) : Int(-d);
    if (d == 1) {
        return {Quad((-b + s) / (2 * a)), Quad((-b - s) / (2 * a))};
    }
    Rat re = -b / (2 * a);
    Rat im = s / (2 * a);
    return {Quad(re, im, d), Quad(re, -im, d)};
}

struct RootScan {
    std::vector<Rat> rational;  // distinct rational roots
    std::vector<Quad> quadratic; // distinct roots lying in quadratic extensions
    bool complete = true;        // every complex root is listed or provably none missed
};

namespace detail {

// Rational roots via the rational root theorem on the primitive integer form.
inline bool rational_roots_of(const UPoly& p, std::vector<Rat>& roots) {
    Int den = 1;
    for (const auto& c : p) den = int_lcm(den, c.get_den());
    std::vector<Int> ic;
    for (const auto& c : p) ic.push_back(Int(c.get_num() * (den / c.get_den())));
    while (!ic.empty() && ic.front() == 0) ic.erase(ic.begin()); // x | p handled by caller
    if (ic.empty()) return true;
    std::vector<Int> ps, qs;
    if (!divisors_of(ic.front(), ps) || !divisors_of(ic.back(), qs)) return false;
    for (const Int& q : qs)
        for (const Int& pp : ps)
            for (int s : {1, -1}) {
                Rat cand(s * pp, q);
                cand.canonicalize();
                if (ueval(p, cand) == 0 &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
    return true;
}

// Quartic into rational quadratics via the resolvent cubic, when possible;
// pushes all四 roots and returns true, or returns false (roots out of scope).
inline bool quartic_roots(const UPoly& p, RootScan& out);

} // namespace detail

// Roots of p: rational ones always found (subject to integer factoring),
// quadratic-extension ones found through degree-2 leftovers and rational
// quartic splits. `complete` reports whether anything was left unresolved.
inline RootScan find_roots(UPoly p) {
    utrim(p);
    if (p.empty()) throw input_error("roots of the zero polynomial");
    RootScan out;
    p = usquarefree(p);
    while (!p.empty() && p.front() == 0) {
        if (std::find(out.rational.begin(), out.rational.end(), Rat(0)) == out.rational.end())
            out.rational.push_back(Rat(0));
        p.erase(p.begin());
    }
    if (udeg(p) <= 0) return out;
    std::vector<Rat> rr;
    if (!detail::rational_roots_of(p, rr)) out.complete = false;
    for (const Rat& r : rr) {
        out.rational.push_back(r);
        UPoly q, rem;
        udivmod(p, UPoly{-r, Rat(1)}, q, rem);
        p = std::move(q);
    }
    int d = udeg(p);
    if (d <= 0) return out;
    if (d == 1) {
        out.rational.push_back(-p[0] / p[1]);
        return out;
    }
    if (d == 2) {
        auto [r1, r2] = quadratic_roots(p[2], p[1], p[0]);
        if (r1.is_rational()) {
            out.rational.push_back(r1.rational_part());
            if (r2 != r1) out.rational.push_back(r2.rational_part());
        } else {
            out.quadratic.push_back(r1);
            out.quadratic.push_back(r2);
        }
        return out;
    }
    if (d == 4 && detail::quartic_roots(p, out)) return out;
    out.complete = false;
    return out;
}

namespace detail {

inline bool quartic_roots(const UPoly& p0, RootScan& out) {
    // Monic and depressed: x = y - a3/4 gives y^4 + P y^2 + Q y + R.
    UPoly p = p0;
    Rat lead = p[4];
    for (auto& c : p) c /= lead;
    Rat a3 = p[3], a2 = p[2], a1 = p[1], a0 = p[0];
    Rat P = a2 - 3 * a3 * a3 / 8;
    Rat Q = a1 - a3 * a2 / 2 + a3 * a3 * a3 / 8;
    Rat R = a0 - a3 * a1 / 4 + a3 * a3 * a2 / 16 - 3 * a3 * a3 * a3 * a3 / 256;
    Rat back = -a3 / 4; // x = y + back

    std::vector<Quad> found;
    auto emit_pair = [&](const Rat& u, const Rat& v) -> bool {
        auto [r1, r2] = quadratic_roots(Rat(1), u, v);
        found.push_back(r1 + Quad(back));
        found.push_back(r2 + Quad(back));
        return true;
    };

    bool split = false;
    if (Q == 0) {
        // biquadratic: y^2 = z with z^2 + P z + R = 0
        auto [z1, z2] = quadratic_roots(Rat(1), P, R);
        if (!z1.is_rational() || !z2.is_rational()) return false; // nested radicals
        split = emit_pair(Rat(0), -z1.rational_part()) && emit_pair(Rat(0), -z2.rational_part());
    } else {
        // resolvent: U^3 + 2P U^2 + (P^2 - 4R) U - Q^2 = 0, need U = u^2 square
        UPoly res{-Q * Q, P * P - 4 * R, 2 * P, Rat(1)};
        std::vector<Rat> ur;
        if (!rational_roots_of(res, ur)) return false;
        for (const Rat& U : ur) {
            Rat u;
            if (U <= 0 || !is_rational_square(U, u)) continue;
            Rat v = (P + U - Q / u) / 2;
            Rat w = (P + U + Q / u) / 2;
            if (v + w - u * u == P && u * (w - v) == Q && v * w == R) {
                split = emit_pair(u, v) && emit_pair(-u, w);
                break;
            }
        }
    }
    if (!split) return false;
    for (const Quad& x : found) {
        if (x.is_rational()) {
            if (std::find(out.rational.begin(), out.rational.end(), x.rational_part()) ==
                out.rational.end())
                out.rational.push_back(x.rational_part());
        } else if (std::find(out.quadratic.begin(), out.quadratic.end(), x) ==
                   out.quadratic.end()) {
            out.quadratic.push_back(x);
        }
    }
    return true;
}

} // namespace detail

// Multiplicity of a rational or quadratic root of p (0 when not a root).
inline int root_multiplicity(UPoly p, const Quad& root) {
    utrim(p);
    if (p.empty()) throw input_error("root multiplicity in zero polynomial");
    UPoly divisor;
    if (root.is_rational()) {
        divisor = {-root.rational_part(), Rat(1)};
    } else {
        // minimal polynomial x^2 - 2a x + (a^2 - d b^2)
        divisor = {root.norm(), -2 * root.rational_part(), Rat(1)};
    }
    int mult = 0;
    for (;;) {
        UPoly q, r;
        udivmod(p, divisor, q, r);
        if (!r.empty()) break;
        ++mult;
        p = std::move(q);
        if (p.empty()) break;
    }
    return mult;
}

} // namespace gitstab

#endif

#ifndef GITSTAB_PLANEGEOM_HPP
#define GITSTAB_PLANEGEOM_HPP

#include <array>
#include <optional>
#include <vector>

#include "gitstab/factor_univ.hpp"
#include "gitstab/polyalg.hpp"
#include "gitstab/weights.hpp"

namespace gitstab {

struct positive_dimensional_error : input_error {
    using input_error::input_error;
};

// Point of P^2 with coordinates in Q or one quadratic extension, scaled so
// the first nonzero coordinate is 1.
class ProjPoint {
public:
    explicit ProjPoint(std::vector<Quad> c) : c_(std::move(c)) {
        if (c_.size() != 3) throw input_error("ProjPoint needs three coordinates");
        int lead = -1;
        for (int i = 0; i < 3; ++i)
            if (!c_[i].is_zero()) {
                lead = i;
                break;
            }
        if (lead < 0) throw input_error("all-zero projective point");
        Quad s = c_[lead];
        for (auto& x : c_) x = x / s;
        disc_ = 0;
        for (const auto& x : c_) {
            if (x.disc() == 0) continue;
            if (disc_ != 0 && disc_ != x.disc())
                throw input_error("point coordinates mix extensions");
            disc_ = x.disc();
        }
    }

    static ProjPoint rational(const Rat& x, const Rat& y, const Rat& z) {
        return ProjPoint({Quad(x), Quad(y), Quad(z)});
    }

    const std::vector<Quad>& coords() const { return c_; }
    const Quad& operator[](int i) const { return c_.at(i); }
    const Int& disc() const { return disc_; }
    bool is_rational() const { return disc_ == 0; }

    ProjPoint conj() const {
        return ProjPoint({c_[0].conj(), c_[1].conj(), c_[2].conj()});
    }

    bool operator==(const ProjPoint& o) const { return c_ == o.c_; }
    bool operator<(const ProjPoint& o) const {
        for (int i = 0; i < 3; ++i) {
            if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
        }
        return false;
    }

    std::string str() const {
        return "(" + c_[0].str() + " : " + c_[1].str() + " : " + c_[2].str() + ")";
    }

private:
    std::vector<Quad> c_;
    Int disc_;
};

inline Quad eval_at(const Poly& f, const ProjPoint& p) { return f.eval<Quad>(p.coords()); }

inline std::vector<Quad> gradient_at(const Poly& f, const ProjPoint& p) {
    std::vector<Quad> g;
    for (int i = 0; i < f.num_vars(); ++i) {
        auto d = f.diff(i);
        g.push_back(d ? eval_at(*d, p) : Quad(Rat(0)));
    }
    return g;
}

// Order of vanishing at p: smallest m with a nonzero m-th partial derivative.
inline int multiplicity_at(const Poly& f, const ProjPoint& p) {
    if (f.num_vars() != 3) throw input_error("multiplicity_at expects plane curves");
    if (!eval_at(f, p).is_zero()) return 0;
    std::map<std::array<int, 3>, std::optional<Poly>> level;
    level[{0, 0, 0}] = f;
    for (int m = 1; m <= f.degree(); ++m) {
        std::map<std::array<int, 3>, std::optional<Poly>> next;
        for (const auto& [a, g] : level)
            for (int v = 0; v < 3; ++v) {
                std::array<int, 3> b = a;
                ++b[v];
                if (next.count(b)) continue;
                next[b] = g ? g->diff(v) : std::nullopt;
            }
        for (const auto& [a, g] : next)
            if (g && !eval_at(*g, p).is_zero()) return m;
        level = std::move(next);
    }
    throw input_error("vanishing beyond the degree"); // unreachable for valid input
}

// Rank of the (symmetric) Hessian at p. At a multiplicity-2 point this is
// the rank of the local quadratic part: 2 is a node, 1 is worse.
inline int hessian_rank_at(const Poly& f, const ProjPoint& p) {
    std::array<std::array<Quad, 3>, 3> h;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            auto di = f.diff(i);
            Quad v(Rat(0));
            if (di) {
                auto dij = di->diff(j);
                if (dij) v = eval_at(*dij, p);
            }
            h[i][j] = v;
            h[j][i] = v;
        }
    bool all_zero = true;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!h[i][j].is_zero()) all_zero = false;
    if (all_zero) return 0;
    Quad det3 = h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) -
                h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
                h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
    if (!det3.is_zero()) return 3;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int i2 = (i + 1) % 3, j2 = (j + 1) % 3;
            Quad m = h[i][j] * h[i2][j2] - h[i][j2] * h[i2][j];
            if (!m.is_zero()) return 2;
        }
    return 1;
}

// ---------------------------------------------------------------------------
// Common zeros of plane forms, within Q and quadratic extensions.
// ---------------------------------------------------------------------------

struct ZeroLocus {
    std::vector<ProjPoint> points;
    bool complete = true;           // every common zero is listed
    bool positive_dimensional = false;
};

namespace detail {

// Univariate gcd over Q(sqrt(d)).
inline std::vector<Quad> qgcd(std::vector<Quad> a, std::vector<Quad> b) {
    auto trim = [](std::vector<Quad>& p) {
        while (!p.empty() && p.back().is_zero()) p.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        while (a.size() >= b.size() && !a.empty()) {
            Quad c = a.back() / b.back();
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[shift + i] = a[shift + i] - c * b[i];
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        Quad lc = a.back();
        for (auto& c : a) c = c / lc;
    }
    return a;
}

struct BinaryRoots {
    std::vector<std::pair<Quad, Quad>> roots; // (x : y)
    bool complete = true;
};

// Projective roots of a binary form in variables (x_i, x_j) of a 3-var poly.
inline BinaryRoots binary_form_roots(const Poly& form, int vi, int vj) {
    int deg = form.degree();
    UPoly u(deg + 1, Rat(0));
    for (const auto& [e, c] : form.terms()) u[e[vi]] = c;
    utrim(u);
    BinaryRoots out;
    if (static_cast<int>(u.size()) - 1 < deg) out.roots.emplace_back(Quad(Rat(1)), Quad(Rat(0)));
    if (u.empty()) throw input_error("zero binary form");
    if (udeg(u) >= 1) {
        RootScan rs = find_roots(u);
        out.complete = rs.complete;
        for (const Rat& r : rs.rational) out.roots.emplace_back(Quad(r), Quad(Rat(1)));
        for (const Quad& r : rs.quadratic) out.roots.emplace_back(r, Quad(Rat(1)));
    }
    return out;
}

// Roots of a Quad-coefficient univariate polynomial that stay inside the
// coefficients' field (or one quadratic extension of Q when rational).
struct FieldRoots {
    std::vector<Quad> roots;
    bool complete = true;
};

inline FieldRoots roots_in_field(const std::vector<Quad>& g, const Int& field_disc) {
    FieldRoots out;
    int d = static_cast<int>(g.size()) - 1;
    if (d <= 0) return out;
    if (d == 1) {
        out.roots.push_back(-(g[0] / g[1]));
        return out;
    }
    bool rational_coeffs = true;
    for (const auto& c : g)
        if (!c.is_rational()) rational_coeffs = false;
    if (rational_coeffs) {
        UPoly u;
        for (const auto& c : g) u.push_back(c.rational_part());
        utrim(u);
        RootScan rs = find_roots(u);
        out.complete = rs.complete;
        for (const Rat& r : rs.rational) out.roots.push_back(Quad(r));
        for (const Quad& r : rs.quadratic) {
            // representable only when the root stays in the point's field
            if (field_disc == 0 || r.disc() == field_disc) out.roots.push_back(r);
            else out.complete = false;
        }
        return out;
    }
    if (d == 2) {
        Quad a = g[2], b = g[1], c = g[0];
        Quad disc = b * b - Quad(Rat(4)) * a * c;
        auto s = sqrt_in_field(disc, field_disc);
        if (s) {
            Quad two_a = a + a;
            out.roots.push_back((-b + *s) / two_a);
            out.roots.push_back((-b - *s) / two_a);
            return out;
        }
        out.complete = false;
        return out;
    }
    out.complete = false;
    return out;
}

inline std::vector<ProjChange> shear_schedule() {
    static const int pts[][2] = {{0, 0}, {1, 1},  {1, 2}, {2, 1},  {1, -1}, {2, 3},
                                 {-1, 2}, {3, 1}, {1, 3}, {-2, 1}, {5, 2},  {2, 5}};
    std::vector<ProjChange> out;
    for (const auto& ab : pts) {
        RatMat m = identity_mat(3);
        m[0][2] = ab[0];
        m[1][2] = ab[1];
        out.push_back(ProjChange(std::move(m)));
    }
    return out;
}

inline ZeroLocus common_zeros_impl(std::vector<Poly> gens, int depth);

// zeros(S) when some pair shares the nonconstant factor h: split into
// zeros(S with the pair divided by h, keeping the rest) union
// zeros({h} + rest).
inline ZeroLocus split_on_factor(const std::vector<Poly>& gens, std::size_t i, std::size_t j,
                                 const Poly& h, int depth) {
    std::vector<Poly> rest;
    for (std::size_t t = 0; t < gens.size(); ++t)
        if (t != i && t != j) rest.push_back(gens[t]);

    ZeroLocus merged;
    std::vector<Poly> s1 = rest;
    s1.push_back(h);
    ZeroLocus z1 = common_zeros_impl(std::move(s1), depth + 1);

    Poly ai = exact_divide(gens[i], h);
    Poly aj = exact_divide(gens[j], h);
    ZeroLocus z2;
    if (ai.is_constant() || aj.is_constant()) {
        z2.complete = true; // empty set: a unit kills the branch
    } else {
        std::vector<Poly> s2 = rest;
        s2.push_back(ai);
        s2.push_back(aj);
        z2 = common_zeros_impl(std::move(s2), depth + 1);
    }
    merged.positive_dimensional = z1.positive_dimensional || z2.positive_dimensional;
    merged.complete = z1.complete && z2.complete && !merged.positive_dimensional;
    merged.points = z1.points;
    for (const auto& p : z2.points)
        if (std::find(merged.points.begin(), merged.points.end(), p) == merged.points.end())
            merged.points.push_back(p);
    std::sort(merged.points.begin(), merged.points.end());
    return merged;
}

inline ZeroLocus common_zeros_impl(std::vector<Poly> gens, int depth) {
    ZeroLocus out;
    if (depth > 16) {
        out.complete = false;
        return out;
    }
    // Constants have no zeros; square factors do not change the zero set.
    std::vector<Poly> gs;
    for (const auto& g : gens) {
        if (g.is_constant()) return out; // empty, complete
        Poly s = squarefree_part(g);
        if (std::find(gs.begin(), gs.end(), s) == gs.end()) gs.push_back(s);
    }
    if (gs.size() == 1) {
        out.positive_dimensional = true;
        out.complete = false;
        return out;
    }
    Poly total = gcd_poly(gs);
    if (!total.is_constant()) {
        out.positive_dimensional = true;
        out.complete = false;
        return out;
    }
    for (std::size_t i = 0; i < gs.size(); ++i)
        for (std::size_t j = i + 1; j < gs.size(); ++j) {
            Poly h = gcd_poly(gs[i], gs[j]);
            if (!h.is_constant()) return split_on_factor(gs, i, j, h, depth);
        }

    // Pairwise coprime now. Find a shear putting (0:0:1) off every curve,
    // so no z-leading coefficient drops and the projection is faithful.
    for (const ProjChange& shear : shear_schedule()) {
        std::vector<Poly> t;
        bool ok = true;
        for (const auto& g : gs) {
            Poly tg = apply_change(g, shear);
            Exponents ztop(3, 0);
            ztop[2] = tg.degree();
            if (tg.coeff(ztop) == 0) {
                ok = false;
                break;
            }
            t.push_back(std::move(tg));
        }
        if (!ok) continue;

        std::optional<Poly> D;
        for (std::size_t i = 0; i < t.size() && (!D || !D->is_constant()); ++i)
            for (std::size_t j = i + 1; j < t.size(); ++j) {
                auto R = resultant(t[i], t[j], 2);
                if (!R) throw input_error("vanishing resultant for coprime forms");
                D = D ? gcd_poly(*D, *R) : R->primitive();
            }
        if (D->is_constant()) return out; // empty, proven

        BinaryRoots br = binary_form_roots(*D, 0, 1);
        out.complete = br.complete;
        for (const auto& [x0, y0] : br.roots) {
            Int fd = x0.disc() != 0 ? x0.disc() : y0.disc();
            // specialize each form to a univariate in z over the root's field
            std::vector<Quad> g_common;
            bool phantom = false;
            for (std::size_t i = 0; i < t.size(); ++i) {
                auto cz = coeffs_wrt(t[i], 2);
                std::vector<Quad> u;
                for (const auto& cpoly : cz) {
                    if (!cpoly) {
                        u.push_back(Quad(Rat(0)));
                        continue;
                    }
                    u.push_back(cpoly->eval<Quad>({x0, y0, Quad(Rat(0))}));
                }
                while (!u.empty() && u.back().is_zero()) u.pop_back();
                if (u.empty()) continue; // the form vanishes along this fiber
                if (u.size() == 1) {
                    phantom = true; // nonzero constant: no common z here
                    break;
                }
                g_common = g_common.empty() ? u : qgcd(g_common, u);
                if (g_common.size() == 1) {
                    phantom = true;
                    break;
                }
            }
            if (phantom) continue;
            if (g_common.empty()) {
                out.complete = false; // fiber not pinned down
                continue;
            }
            FieldRoots fr = roots_in_field(g_common, fd);
            if (!fr.complete) out.complete = false;
            for (const Quad& z0 : fr.roots) {
                ProjPoint sheared({x0, y0, z0});
                std::vector<Quad> back;
                for (int r = 0; r < 3; ++r) {
                    Quad acc(Rat(0));
                    for (int cidx = 0; cidx < 3; ++cidx)
                        acc = acc + Quad(shear.matrix()[r][cidx]) * sheared[cidx];
                    back.push_back(acc);
                }
                ProjPoint p(std::move(back));
                bool on_all = true;
                for (const auto& g : gs)
                    if (!eval_at(g, p).is_zero()) on_all = false;
                if (!on_all) throw input_error("located point fails verification");
                if (std::find(out.points.begin(), out.points.end(), p) == out.points.end())
                    out.points.push_back(p);
            }
        }
        std::sort(out.points.begin(), out.points.end());
        return out;
    }
    out.complete = false;
    return out;
}

} // namespace detail

// All common zeros of homogeneous forms in three variables, located inside
// Q or quadratic extensions; `complete` is false whenever root extraction
// exceeded that scope.
inline ZeroLocus common_zeros(const std::vector<Poly>& gens) {
    if (gens.empty()) throw input_error("common zeros of an empty family");
    for (const auto& g : gens)
        if (g.num_vars() != 3) throw input_error("common_zeros expects plane forms");
    return detail::common_zeros_impl(gens, 0);
}

// Singular locus of a plane curve as the common zeros of the partials.
inline ZeroLocus singular_locus(const Poly& f) {
    std::vector<Poly> parts;
    for (int v = 0; v < 3; ++v) {
        auto d = f.diff(v);
        if (d) parts.push_back(*std::move(d));
    }
    if (parts.empty()) throw input_error("constant curve");
    if (parts.size() == 1) {
        // a curve of critical points: certainly singular somewhere
        ZeroLocus z;
        z.positive_dimensional = true;
        z.complete = false;
        return z;
    }
    return detail::common_zeros_impl(parts, 0);
}

enum class TriState { yes, no, unknown };

inline const char* tristate_name(TriState t) {
    switch (t) {
        case TriState::yes: return "yes";
        case TriState::no: return "no";
        case TriState::unknown: return "unknown";
    }
    return "?";
}

inline TriState is_smooth_curve(const Poly& f) {
    if (f.degree() == 1) return TriState::yes;
    ZeroLocus z = singular_locus(f);
    if (z.positive_dimensional || !z.points.empty()) return TriState::no;
    return z.complete ? TriState::yes : TriState::unknown;
}

struct BasePoints {
    std::vector<ProjPoint> points;
    bool complete;
};

// Base points of a plane linear system. Throws positive_dimensional_error
// when the base locus contains a curve.
inline BasePoints base_points(const LinearSystem& L) {
    if (L.num_vars() != 3) throw input_error("base_points expects plane systems");
    ZeroLocus z = common_zeros(L.generators());
    if (z.positive_dimensional)
        throw positive_dimensional_error("positive-dimensional base locus");
    return BasePoints{z.points, z.complete};
}

inline bool is_reduced(const Poly& f) { return is_reduced_poly(f); }

// ---------------------------------------------------------------------------
// Local intersection numbers
// ---------------------------------------------------------------------------

// I_p(f,g) as the order of the projected resultant root after a shear that
// keeps (0:0:1) off both curves; bad shears only overcount, so the minimum
// over the schedule is taken.
inline int intersection_multiplicity_at(const Poly& f, const Poly& g, const ProjPoint& p) {
    if (f.num_vars() != 3 || g.num_vars() != 3)
        throw input_error("intersection numbers live on plane curves");
    Poly h = gcd_poly(f, g);
    Poly fa = f, ga = g;
    if (!h.is_constant()) {
        if (eval_at(h, p).is_zero())
            throw input_error("common component through the point");
        fa = exact_divide(f, h);
        ga = exact_divide(g, h);
        if (fa.is_constant() || ga.is_constant())
            throw input_error("common component through the point");
    }
    if (!eval_at(fa, p).is_zero() || !eval_at(ga, p).is_zero()) return 0;

    std::optional<int> best;
    for (const ProjChange& shear : detail::shear_schedule()) {
        Poly tf = apply_change(fa, shear);
        Poly tg = apply_change(ga, shear);
        Exponents ftop(3, 0), gtop(3, 0);
        ftop[2] = tf.degree();
        gtop[2] = tg.degree();
        if (tf.coeff(ftop) == 0 || tg.coeff(gtop) == 0) continue;
        // p in the sheared frame
        ProjChange inv = shear.inverse_change();
        std::vector<Quad> q;
        for (int r = 0; r < 3; ++r) {
            Quad acc(Rat(0));
            for (int c = 0; c < 3; ++c) acc = acc + Quad(inv.matrix()[r][c]) * p[c];
            q.push_back(acc);
        }
        ProjPoint ps(std::move(q));
        auto R = resultant(tf, tg, 2);
        if (!R) throw input_error("vanishing resultant after component removal");
        // order of R at the projection (x0 : y0)
        UPoly u(R->degree() + 1, Rat(0));
        bool proj_at_infinity = ps[1].is_zero();
        for (const auto& [e, c] : R->terms()) u[proj_at_infinity ? e[1] : e[0]] = c;
        utrim(u);
        Quad t0 = proj_at_infinity ? (ps[1] / ps[0]) : (ps[0] / ps[1]);
        int ord = root_multiplicity(u, t0);
        if (ord <= 0) throw input_error("projection lost the intersection point");
        if (!best || ord < *best) best = ord;
    }
    if (!best) throw input_error("no usable shear for the intersection number");
    return *best;
}

// ---------------------------------------------------------------------------
// Smooth members, line components, flags
// ---------------------------------------------------------------------------

// Deterministic sweep over members f + t g (plus g itself). "yes" needs one
// certified smooth member. "no" is proven once more than 3(d-1)^2 distinct
// members are certified singular: a pencil with a smooth member meets the
// discriminant hypersurface (degree 3(d-1)^2) in at most that many members.
inline TriState pencil_has_smooth_member(const LinearSystem& P, int extra_bound = 0) {
    if (P.k() != 1 || P.num_vars() != 3)
        throw input_error("smooth-member search expects a plane pencil");
    const Poly& f = P.generators()[0];
    const Poly& g = P.generators()[1];
    if (!gcd_poly(f, g).is_constant()) return TriState::no;
    int d = P.d();
    long disc_degree = 3L * (d - 1) * (d - 1);
    long need = disc_degree + 1;

    std::vector<Poly> members{g};
    members.push_back(f);
    for (long t = 1; static_cast<long>(members.size()) < need + extra_bound + 1; ++t) {
        for (long s : {t, -t}) {
            auto m = linear_combination(Rat(1), f, Rat(s), g);
            if (m) members.push_back(*std::move(m));
        }
    }
    long singular = 0;
    bool unknown = false;
    for (const auto& m : members) {
        switch (is_smooth_curve(m)) {
            case TriState::yes: return TriState::yes;
            case TriState::no: ++singular; break;
            case TriState::unknown: unknown = true; break;
        }
    }
    if (singular >= need) return TriState::no;
    (void)unknown;
    return TriState::unknown;
}

// Degree-one factors of a plane curve with rational coefficients, found via
// coordinate divisibility, the x-free content, and root interpolation on two
// slices. Not exhaustive for irrational lines, which is fine for flags.
inline std::vector<Poly> rational_line_components(const Poly& h0) {
    if (h0.num_vars() != 3) throw input_error("line components of plane curves only");
    std::vector<Poly> lines;
    auto push = [&](const Poly& l) {
        Poly n = l.primitive();
        for (const auto& q : lines)
            if (q == n) return;
        lines.push_back(n);
    };
    Poly h = squarefree_part(h0);
    // coordinate lines
    for (int v = 0; v < 3; ++v) {
        Poly xv = Poly::variable(3, v);
        if (try_exact_divide(h, xv)) push(xv);
    }
    // lines not involving x: linear factors of the x-content
    Poly cx = detail::content_wrt(h, 0);
    if (!cx.is_constant()) {
        auto br = detail::binary_form_roots(cx, 1, 2);
        for (const auto& [a, b] : br.roots)
            if (a.is_rational() && b.is_rational()) {
                // root (y:z) = (a:b) gives the line b*y - a*z
                Poly::TermMap t;
                Exponents ey(3, 0), ez(3, 0);
                ey[1] = 1;
                ez[2] = 1;
                if (b.rational_part() != 0) t[ey] = b.rational_part();
                if (a.rational_part() != 0) t[ez] = -a.rational_part();
                if (!t.empty()) push(Poly(3, std::move(t)));
            }
    }
    // lines with x: interpolate roots of two slices y=0 and y=1, z=1
    auto slice_roots = [&](long yval) {
        std::vector<Rat> out;
        UPoly u(h.degree() + 1, Rat(0));
        for (const auto& [e, c] : h.terms()) {
            Rat term = c;
            for (int k = 0; k < e[1]; ++k) term *= Rat(yval);
            u[e[0]] += term;
        }
        utrim(u);
        if (!u.empty() && udeg(u) >= 1) {
            RootScan rs = find_roots(u);
            out = rs.rational;
        }
        return out;
    };
    auto r0 = slice_roots(0);
    auto r1 = slice_roots(1);
    for (const Rat& beta : r0)
        for (const Rat& x1 : r1) {
            Rat alpha = x1 - beta;
            // candidate x - alpha y - beta z
            Poly::TermMap t;
            Exponents ex(3, 0), ey(3, 0), ez(3, 0);
            ex[0] = 1;
            ey[1] = 1;
            ez[2] = 1;
            t[ex] = 1;
            if (alpha != 0) t[ey] = -alpha;
            if (beta != 0) t[ez] = -beta;
            Poly cand(3, std::move(t));
            if (try_exact_divide(h, cand)) push(cand);
        }
    return lines;
}

struct FlagCandidate {
    ProjPoint point;
    std::optional<Poly> line; // degree-1, passes through the point when set
    std::string source;       // base_point | singular_point | line_component | manual
};

// Coordinate frame adapted to a flag: the point goes to (0:0:1), the line
// (when given) to {x_0 = 0}. Returns the substitution to feed apply_change.
inline std::optional<ProjChange> frame_from_flag(const FlagCandidate& fc) {
    if (!fc.point.is_rational()) return std::nullopt;
    RatVec p(3);
    for (int i = 0; i < 3; ++i) p[i] = fc.point[i].rational_part();

    auto linear_coeffs = [](const Poly& l) {
        RatVec c(3, Rat(0));
        for (const auto& [e, coef] : l.terms())
            for (int i = 0; i < 3; ++i)
                if (e[i] == 1) c[i] = coef;
        return c;
    };

    std::vector<RatVec> rows;
    if (fc.line) {
        RatVec u0 = linear_coeffs(*fc.line);
        Rat at_p = u0[0] * p[0] + u0[1] * p[1] + u0[2] * p[2];
        if (at_p != 0) throw input_error("flag line misses the flag point");
        rows.push_back(u0);
    }
    // complete with coordinate-pair forms through p, then any form off p
    for (int i = 0; i < 3 && rows.size() < 2; ++i)
        for (int j = i + 1; j < 3 && rows.size() < 2; ++j) {
            RatVec u(3, Rat(0));
            u[i] = p[j];
            u[j] = -p[i];
            if (u[i] == 0 && u[j] == 0) continue;
            RatMat test = rows.empty() ? RatMat{} : RatMat{rows[0]};
            test.push_back(u);
            if (rank(test) == static_cast<int>(test.size())) rows.push_back(u);
        }
    for (int i = 0; i < 3 && rows.size() < 3; ++i) {
        if (p[i] == 0) continue;
        RatVec u(3, Rat(0));
        u[i] = 1;
        RatMat test = rows;
        test.push_back(u);
        if (rank(test) == 3) rows.push_back(u);
    }
    if (rows.size() != 3) return std::nullopt;
    RatMat M{rows[0], rows[1], rows[2]};
    if (det(M) == 0) return std::nullopt;
    return ProjChange(M).inverse_change();
}

// Flag candidates for the destabilizer search: base points, singular points
// of the generators, rational line components, in a fixed deterministic
// order. Degenerate loci are skipped.
inline std::vector<FlagCandidate> enumerate_flags(const LinearSystem& L, int degree_cap = 6) {
    if (L.num_vars() != 3) throw input_error("flags are enumerated for plane systems");
    std::vector<FlagCandidate> out;
    auto add_point = [&](const ProjPoint& p, const std::optional<Poly>& line,
                         const std::string& source) {
        for (const auto& fc : out)
            if (fc.point == p && fc.line == line) return;
        out.push_back(FlagCandidate{p, line, source});
    };

    std::vector<Poly> lines;
    for (const auto& g : L.generators())
        for (const auto& l : rational_line_components(g)) {
            bool seen = false;
            for (const auto& q : lines) seen = seen || q == l;
            if (!seen) lines.push_back(l);
        }

    std::vector<ProjPoint> pts;
    try {
        BasePoints bp = base_points(L);
        for (const auto& p : bp.points) add_point(p, std::nullopt, "base_point");
        pts.insert(pts.end(), bp.points.begin(), bp.points.end());
    } catch (const positive_dimensional_error&) {
        // one-dimensional base locus: flags come from the other sources
    }
    for (const auto& g : L.generators()) {
        if (g.degree() > degree_cap) continue;
        ZeroLocus z = singular_locus(g);
        if (z.positive_dimensional) continue;
        for (const auto& p : z.points) {
            add_point(p, std::nullopt, "singular_point");
            pts.push_back(p);
        }
    }
    for (const auto& l : lines) {
        bool placed = false;
        for (const auto& p : pts) {
            if (!p.is_rational()) continue;
            if (eval_at(l, p).is_zero()) {
                add_point(p, l, "line_component");
                placed = true;
            }
        }
        if (!placed) {
            RatVec c(3, Rat(0));
            for (const auto& [e, coef] : l.terms())
                for (int i = 0; i < 3; ++i)
                    if (e[i] == 1) c[i] = coef;
            ProjPoint p = c[2] != 0   ? ProjPoint::rational(Rat(1), Rat(0), -c[0] / c[2])
                          : c[1] != 0 ? ProjPoint::rational(Rat(1), -c[0] / c[1], Rat(0))
                                      : ProjPoint::rational(Rat(0), Rat(1), Rat(0));
            if (eval_at(l, p).is_zero()) add_point(p, l, "line_component");
        }
    }
    return out;
}

inline std::vector<ProjChange> frames_from_flags(const std::vector<FlagCandidate>& flags) {
    std::vector<ProjChange> frames;
    for (const auto& fc : flags) {
        auto fr = frame_from_flag(fc);
        if (!fr) continue;
        bool seen = false;
        for (const auto& g : frames) seen = seen || g == *fr;
        if (!seen) frames.push_back(*std::move(fr));
    }
    return frames;
}

} // namespace gitstab

#endif

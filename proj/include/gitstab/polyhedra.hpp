#ifndef GITSTAB_POLYHEDRA_HPP
#define GITSTAB_POLYHEDRA_HPP

#include <optional>
#include <set>
#include <vector>

#include "gitstab/simplex.hpp"
#include "gitstab/weights.hpp"

namespace gitstab {

// Shifted-exponent totals of the nonzero Pluecker coordinates; length n,
// the minimal-weight variable's exponents dropped.
using SupportVector = std::vector<Int>;

namespace detail {

// Drop component `drop`, deduplicate, discard componentwise-dominated
// vectors (they never achieve the minimum for nonnegative weights).
inline std::vector<SupportVector> project_and_prune(const SystemSupport& s, int drop) {
    std::set<SupportVector> set;
    for (const auto& mi : s.minors) {
        SupportVector v;
        v.reserve(mi.colsum.size() - 1);
        for (std::size_t i = 0; i < mi.colsum.size(); ++i)
            if (static_cast<int>(i) != drop) v.push_back(mi.colsum[i]);
        set.insert(std::move(v));
    }
    std::vector<SupportVector> vs(set.begin(), set.end());
    std::vector<SupportVector> kept;
    for (const auto& v : vs) {
        bool dominated = false;
        for (const auto& u : vs) {
            if (u == v) continue;
            bool le = true, lt = false;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (u[i] > v[i]) {
                    le = false;
                    break;
                }
                if (u[i] < v[i]) lt = true;
            }
            if (le && lt) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(v);
    }
    return kept;
}

} // namespace detail

// The spec-level support set: minimal-weight variable fixed to the last one.
inline std::vector<SupportVector> support_vectors(const LinearSystem& L) {
    SystemSupport s = build_support(L);
    return detail::project_and_prune(s, L.num_vars() - 1);
}

struct MaxMinResult {
    Rat value;  // max over the cone of min_v <w,v>, normalized sum(w) = n+1
    RatVec w;   // an optimal weight vector, length n
};

// Exact LP: maximize t subject to t <= <w,v> for each support vector,
// w >= 0 componentwise, sum(w) <= n+1 (tight at any optimum with t > 0).
inline MaxMinResult maxmin_ratio(const std::vector<SupportVector>& vectors, int n) {
    if (vectors.empty()) throw input_error("empty support vector set");
    int m = static_cast<int>(vectors.size());
    RatMat A(m + 1, RatVec(n + 1, Rat(0)));
    RatVec b(m + 1, Rat(0));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) A[i][j] = -Rat(vectors[i][j]);
        A[i][n] = 1; // the epigraph variable t
    }
    for (int j = 0; j < n; ++j) A[m][j] = 1;
    b[m] = Rat(n + 1);
    RatVec c(n + 1, Rat(0));
    c[n] = 1;

    SimplexSolution sol = simplex_maximize(A, b, c);
    MaxMinResult out;
    out.value = sol.value;
    out.w.assign(sol.x.begin(), sol.x.begin() + n);

    // Feasibility and optimality spot checks, all exact.
    Rat wsum(0);
    for (const auto& wi : out.w) {
        if (wi < 0) throw input_error("simplex returned an infeasible weight");
        wsum += wi;
    }
    int tight = (wsum == Rat(n + 1)) ? 1 : 0;
    bool first = true;
    Rat minval(0);
    for (const auto& v : vectors) {
        Rat t(0);
        for (int j = 0; j < n; ++j) t += Rat(v[j]) * out.w[j];
        if (first || t < minval) {
            minval = t;
            first = false;
        }
    }
    if (minval != out.value) throw input_error("simplex value mismatch");
    if (out.value > 0) {
        if (wsum != Rat(n + 1)) throw input_error("normalization slack at a positive optimum");
        for (const auto& v : vectors) {
            Rat t(0);
            for (int j = 0; j < n; ++j) t += Rat(v[j]) * out.w[j];
            if (t == out.value) ++tight;
        }
        for (const auto& wi : out.w)
            if (wi == 0) ++tight;
        if (tight < n) throw input_error("optimum is not at a vertex");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

struct Certificate {
    OneParamSubgroup lambda;  // normalized, in the frame below
    ProjChange coordinates;   // apply this change to the system first
    Int omega;
    Int a_lambda;
    Rat ratio;
    Rat threshold;
    bool strict;              // ratio > threshold
    std::vector<Poly> witnesses; // members of the transformed system
};

// Re-evaluates the certificate from scratch; throws when anything fails to
// reproduce. Also checks the witness-product identity of the main theorem.
inline void verify_certificate(const LinearSystem& L, const Certificate& c) {
    LinearSystem Lg = L.transformed(c.coordinates);
    WeightReport r = verdict_at_lambda(Lg, c.lambda);
    if (r.omega != c.omega || r.ratio != c.ratio || r.threshold != c.threshold)
        throw input_error("certificate failed re-verification");
    if (c.strict && r.status != StatusAtLambda::unstable_at)
        throw input_error("strict certificate is not strict");
    if (!c.strict && r.status != StatusAtLambda::strictly_semistable_at)
        throw input_error("non-strict certificate off the boundary");
    Poly prod = c.witnesses.at(0);
    for (std::size_t i = 1; i < c.witnesses.size(); ++i) prod = prod * c.witnesses[i];
    Int w_omega = omega_hyp(prod, c.lambda);
    if (w_omega != c.omega)
        throw input_error("witness product does not reproduce the system weight");
}

namespace detail {

struct TorusScan {
    Rat best;        // compares to d(k+1)
    int drop;        // variable handed the minimal weight
    RatVec w_full;   // shifted weights per original variable (drop slot = 0)
};

inline TorusScan torus_scan(const SystemSupport& s, int nvars) {
    TorusScan out{Rat(-1), -1, {}};
    for (int drop = 0; drop < nvars; ++drop) {
        auto vecs = project_and_prune(s, drop);
        MaxMinResult r = maxmin_ratio(vecs, nvars - 1);
        if (r.value > out.best) {
            out.best = r.value;
            out.drop = drop;
            out.w_full.assign(nvars, Rat(0));
            int j = 0;
            for (int i = 0; i < nvars; ++i)
                if (i != drop) out.w_full[i] = r.w[j++];
        }
    }
    return out;
}

// Turn rational shifted weights (sum n+1) into a sorted integer 1-PS plus
// the coordinate permutation realizing it in the original frame.
inline std::pair<OneParamSubgroup, ProjChange> lambda_from_weights(const RatVec& w_full) {
    int nv = static_cast<int>(w_full.size());
    std::vector<Rat> a(nv);
    for (int i = 0; i < nv; ++i) a[i] = w_full[i] - 1;
    Int den = common_denominator(a);
    std::vector<Int> ints(nv);
    for (int i = 0; i < nv; ++i) ints[i] = Int(a[i].get_num() * (den / a[i].get_den()));
    // sort descending, remembering which original variable lands where
    std::vector<int> order(nv);
    for (int i = 0; i < nv; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return ints[x] > ints[y]; });
    std::vector<Int> sorted(nv);
    for (int i = 0; i < nv; ++i) sorted[i] = ints[order[i]];
    OneParamSubgroup lambda = OneParamSubgroup::normalize(sorted);
    // substitution x_j -> x_{position of j}, so new coordinate i sees old
    // variable order[i]
    std::vector<int> pos(nv);
    for (int i = 0; i < nv; ++i) pos[order[i]] = i;
    return {lambda, ProjChange::permutation(pos)};
}

} // namespace detail

// Best torus-level destabilizer in the given frame (all diagonal 1-PS,
// i.e. every choice of which variable carries the minimal weight). Returns
// a verified certificate when the LP optimum meets or exceeds d(k+1).
inline std::optional<Certificate> torus_destabilizer(const LinearSystem& L) {
    SystemSupport s = build_support(L);
    detail::TorusScan scan = detail::torus_scan(s, L.num_vars());
    Rat target = Rat(L.d() * (L.k() + 1));
    if (scan.best < target) return std::nullopt;
    auto [lambda, frame] = detail::lambda_from_weights(scan.w_full);

    LinearSystem Lg = L.transformed(frame);
    GreedyResult g = omega_system_greedy(Lg, lambda);
    Certificate cert{lambda,        frame,
                     g.report.omega, g.report.a_lambda,
                     g.report.ratio, g.report.threshold,
                     scan.best > target, std::move(g.witnesses)};
    if (g.report.ratio != scan.best / Rat(L.num_vars()))
        throw input_error("LP optimum and greedy weight disagree");
    verify_certificate(L, cert);
    return cert;
}

// In-frame toric bound for lct(P^n, H_f): (n+1) / max_lambda omega/A over
// the diagonal torus. nullopt when no toric valuation sees H_f (the bound
// is vacuous, +infinity). The value bounds lct from above and attains it
// exactly when a toric divisor computes the lct in this frame.
inline std::optional<Rat> toric_lct_bound(const Poly& f) {
    if (f.is_constant()) throw input_error("lct bound of a constant");
    LinearSystem L({f});
    SystemSupport s = build_support(L);
    detail::TorusScan scan = detail::torus_scan(s, L.num_vars());
    if (scan.best == 0) return std::nullopt;
    return Rat(L.num_vars()) / scan.best;
}

// ---------------------------------------------------------------------------
// Frame search
// ---------------------------------------------------------------------------

enum class SearchKind { unstable, non_stable, presumed_stable };

inline const char* search_kind_name(SearchKind k) {
    switch (k) {
        case SearchKind::unstable: return "unstable";
        case SearchKind::non_stable: return "non_stable";
        case SearchKind::presumed_stable: return "presumed_stable";
    }
    return "?";
}

struct SearchVerdict {
    SearchKind kind;
    std::optional<Certificate> certificate;
    int frames_examined = 0;
};

// Strongest verdict across the frames, identity always included first.
// Only destabilization is ever certified; "presumed_stable" records an
// honest non-answer after the finite search.
inline SearchVerdict search_destabilizer(const LinearSystem& L,
                                         const std::vector<ProjChange>& flags) {
    std::vector<ProjChange> frames;
    frames.push_back(ProjChange::identity(L.num_vars()));
    for (const auto& g : flags)
        if (!g.is_identity()) frames.push_back(g);

    std::optional<Certificate> non_strict;
    int examined = 0;
    for (const auto& g : frames) {
        ++examined;
        LinearSystem Lg = L.transformed(g);
        auto c = torus_destabilizer(Lg);
        if (!c) continue;
        Certificate lifted{c->lambda,  g.compose(c->coordinates), c->omega,
                           c->a_lambda, c->ratio,                 c->threshold,
                           c->strict,   c->witnesses};
        verify_certificate(L, lifted);
        if (lifted.strict)
            return SearchVerdict{SearchKind::unstable, std::move(lifted), examined};
        if (!non_strict) non_strict = std::move(lifted);
    }
    if (non_strict)
        return SearchVerdict{SearchKind::non_stable, std::move(non_strict), examined};
    return SearchVerdict{SearchKind::presumed_stable, std::nullopt, examined};
}

} // namespace gitstab

#endif

#ifndef GITSTAB_WEIGHTS_HPP
#define GITSTAB_WEIGHTS_HPP

#include <optional>
#include <set>
#include <vector>

#include "gitstab/linalg.hpp"
#include "gitstab/onepar.hpp"
#include "gitstab/poly.hpp"

namespace gitstab {

// A k-dimensional linear system of degree-d hypersurfaces in P^n, stored as
// k+1 independent generators.
class LinearSystem {
public:
    explicit LinearSystem(std::vector<Poly> gens) : gens_(std::move(gens)) {
        if (gens_.empty()) throw input_error("linear system needs generators");
        for (const auto& g : gens_) {
            gens_[0].check_same_ring(g);
            if (g.degree() != gens_[0].degree())
                throw input_error("generators must share one degree");
        }
        if (!independent())
            throw input_error("generators are linearly dependent");
    }

    int num_vars() const { return gens_[0].num_vars(); } // n+1
    int n() const { return num_vars() - 1; }
    int d() const { return gens_[0].degree(); }
    int k() const { return static_cast<int>(gens_.size()) - 1; }
    const std::vector<Poly>& generators() const { return gens_; }

    Rat threshold() const { return rat_of(static_cast<long>(d()) * (k() + 1), n() + 1); }

    LinearSystem transformed(const ProjChange& g) const {
        std::vector<Poly> out;
        out.reserve(gens_.size());
        for (const auto& f : gens_) out.push_back(apply_change(f, g));
        return LinearSystem(std::move(out));
    }

    // The union of the generators' supports, in canonical (lex) order.
    std::vector<Exponents> support_columns() const {
        std::set<Exponents> cols;
        for (const auto& g : gens_)
            for (const auto& [e, c] : g.terms()) cols.insert(e);
        return std::vector<Exponents>(cols.begin(), cols.end());
    }

private:
    bool independent() const {
        auto cols = support_columns();
        RatMat m;
        for (const auto& g : gens_) {
            RatVec row;
            row.reserve(cols.size());
            for (const auto& e : cols) row.push_back(g.coeff(e));
            m.push_back(std::move(row));
        }
        return rank(std::move(m)) == static_cast<int>(gens_.size());
    }

    std::vector<Poly> gens_;
};

enum class StatusAtLambda { stable_at, strictly_semistable_at, unstable_at };

inline const char* status_name(StatusAtLambda s) {
    switch (s) {
        case StatusAtLambda::stable_at: return "stable_at";
        case StatusAtLambda::strictly_semistable_at: return "strictly_semistable_at";
        case StatusAtLambda::unstable_at: return "unstable_at";
    }
    return "?";
}

struct WeightReport {
    Int omega;
    Int a_lambda;
    Rat ratio;     // omega / A_lambda
    Rat threshold; // d(k+1)/(n+1)
    StatusAtLambda status;
    // Minimizing monomial tuples: each entry lists k+1 exponent tuples.
    std::vector<std::vector<Exponents>> achieving;
};

inline StatusAtLambda status_of(const Rat& ratio, const Rat& threshold) {
    if (ratio > threshold) return StatusAtLambda::unstable_at;
    if (ratio == threshold) return StatusAtLambda::strictly_semistable_at;
    return StatusAtLambda::stable_at;
}

// Weight of one monomial under shifted weights w (one entry per variable).
inline Int monomial_weight(const Exponents& e, const std::vector<Int>& w) {
    Int s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s += Int(e[i]) * w[i];
    return s;
}

// omega(f, lambda) = min over the support of the shifted monomial weight.
inline Int omega_hyp_shifted(const Poly& f, const std::vector<Int>& w) {
    if (static_cast<int>(w.size()) != f.num_vars())
        throw input_error("weight vector dimension mismatch");
    bool first = true;
    Int best = 0;
    for (const auto& [e, c] : f.terms()) {
        Int t = monomial_weight(e, w);
        if (first || t < best) {
            best = t;
            first = false;
        }
    }
    return best;
}

inline Int omega_hyp(const Poly& f, const OneParamSubgroup& lambda) {
    if (lambda.dim() != f.num_vars())
        throw input_error("1-PS dimension mismatch");
    return omega_hyp_shifted(f, lambda.shifted());
}

// Hypersurface Hilbert-Mumford ratio omega/A and status against d/(n+1).
inline WeightReport verdict_hypersurface(const Poly& f, const OneParamSubgroup& lambda) {
    WeightReport r;
    r.omega = omega_hyp(f, lambda);
    r.a_lambda = lambda.a_lambda();
    r.ratio = Rat(r.omega) / Rat(r.a_lambda);
    r.threshold = rat_of(f.degree(), f.num_vars());
    r.status = status_of(r.ratio, r.threshold);
    return r;
}

// ---------------------------------------------------------------------------
// Pluecker support of a system: the nonzero (k+1)x(k+1) minors of the
// generator coefficient matrix, each with its exponent column sum.
// ---------------------------------------------------------------------------

struct MinorInfo {
    std::vector<int> cols;     // column indices into SystemSupport::columns
    std::vector<Int> colsum;   // componentwise exponent sum, length n+1
};

struct SystemSupport {
    std::vector<Exponents> columns;
    std::vector<MinorInfo> minors; // the nonzero ones
};

inline SystemSupport build_support(const LinearSystem& L, long guard = 1000000) {
    SystemSupport s;
    s.columns = L.support_columns();
    int m = static_cast<int>(s.columns.size());
    int r = L.k() + 1;

    double count = 1;
    for (int i = 0; i < r; ++i) count = count * (m - i) / (i + 1);
    if (count > static_cast<double>(guard))
        throw guard_error("minor enumeration guard exceeded");

    RatMat coeff(r, RatVec(m));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < m; ++j) coeff[i][j] = L.generators()[i].coeff(s.columns[j]);

    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    int nv = L.num_vars();
    for (;;) {
        RatMat sub(r, RatVec(r));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) sub[i][j] = coeff[i][idx[j]];
        if (det(std::move(sub)) != 0) {
            MinorInfo mi;
            mi.cols = idx;
            mi.colsum.assign(nv, Int(0));
            for (int j : idx)
                for (int v = 0; v < nv; ++v) mi.colsum[v] += s.columns[j][v];
            s.minors.push_back(std::move(mi));
        }
        // next combination
        int i = r - 1;
        while (i >= 0 && idx[i] == m - r + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (s.minors.empty()) throw input_error("no nonzero Pluecker coordinate");
    return s;
}

inline WeightReport report_from(const LinearSystem& L, const OneParamSubgroup& lambda,
                                const Int& omega) {
    WeightReport r;
    r.omega = omega;
    r.a_lambda = lambda.a_lambda();
    r.ratio = Rat(omega) / Rat(r.a_lambda);
    r.threshold = L.threshold();
    r.status = status_of(r.ratio, r.threshold);
    return r;
}

inline Int monomial_weight_sum(const std::vector<Int>& colsum, const std::vector<Int>& w) {
    Int s = 0;
    for (std::size_t i = 0; i < colsum.size(); ++i) s += colsum[i] * w[i];
    return s;
}

// Brute-force oracle: exact minimum of the shifted weight over all nonzero
// Pluecker coordinates, with every minimizing tuple listed.
inline WeightReport omega_system_oracle(const LinearSystem& L, const OneParamSubgroup& lambda,
                                        const SystemSupport* pre = nullptr) {
    if (lambda.dim() != L.num_vars()) throw input_error("1-PS dimension mismatch");
    SystemSupport local;
    const SystemSupport* s = pre;
    if (!s) {
        local = build_support(L);
        s = &local;
    }
    std::vector<Int> w = lambda.shifted();
    bool first = true;
    Int best = 0;
    std::vector<const MinorInfo*> argmin;
    for (const auto& mi : s->minors) {
        Int t = monomial_weight_sum(mi.colsum, w);
        if (first || t < best) {
            best = t;
            argmin.clear();
            argmin.push_back(&mi);
            first = false;
        } else if (t == best) {
            argmin.push_back(&mi);
        }
    }
    WeightReport r = report_from(L, lambda, best);
    for (const MinorInfo* mi : argmin) {
        std::vector<Exponents> tuple;
        for (int j : mi->cols) tuple.push_back(s->columns[j]);
        r.achieving.push_back(std::move(tuple));
    }
    return r;
}

struct GreedyResult {
    WeightReport report;
    std::vector<Poly> witnesses; // k+1 distinct members realizing omega
};

// Triangularization: pick the minimal-weight monomial of the current
// generator (lex-smallest among ties), eliminate that column from the
// remaining generators, recurse. The witness sum equals the oracle value.
inline GreedyResult omega_system_greedy(const LinearSystem& L, const OneParamSubgroup& lambda,
                                        int first = 0) {
    if (lambda.dim() != L.num_vars()) throw input_error("1-PS dimension mismatch");
    int r = L.k() + 1;
    if (first < 0 || first >= r) throw input_error("witness start index out of range");
    std::vector<Poly> cur;
    cur.push_back(L.generators()[first]);
    for (int i = 0; i < r; ++i)
        if (i != first) cur.push_back(L.generators()[i]);

    std::vector<Int> w = lambda.shifted();
    std::vector<Poly> witnesses;
    std::vector<Exponents> tuple;
    Int total = 0;
    for (int j = 0; j < r; ++j) {
        const Poly& f = cur[j];
        bool first_term = true;
        Int best = 0;
        const Exponents* pick = nullptr;
        for (const auto& [e, c] : f.terms()) {
            Int t = monomial_weight(e, w);
            if (first_term || t < best) {
                best = t;
                pick = &e;
                first_term = false;
            }
        }
        total += best;
        Exponents I = *pick;
        tuple.push_back(I);
        witnesses.push_back(f);
        Rat fI = f.coeff(I);
        for (int l = j + 1; l < r; ++l) {
            Rat cI = cur[l].coeff(I);
            if (cI == 0) continue;
            auto repl = linear_combination(Rat(1), cur[l], -cI / fI, f);
            if (!repl) throw input_error("generators collapsed during elimination");
            cur[l] = *std::move(repl);
        }
    }
    for (std::size_t i = 0; i < witnesses.size(); ++i)
        for (std::size_t j = i + 1; j < witnesses.size(); ++j)
            if (witnesses[i].proportional_to(witnesses[j]))
                throw input_error("witnesses failed distinctness check");

    GreedyResult out{report_from(L, lambda, total), std::move(witnesses)};
    out.report.achieving.push_back(std::move(tuple));
    return out;
}

// Per-lambda verdict for the system, computed through the greedy weight.
inline WeightReport verdict_at_lambda(const LinearSystem& L, const OneParamSubgroup& lambda) {
    return omega_system_greedy(L, lambda).report;
}

} // namespace gitstab

#endif

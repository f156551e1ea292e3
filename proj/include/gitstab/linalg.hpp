#ifndef GITSTAB_LINALG_HPP
#define GITSTAB_LINALG_HPP

#include <optional>
#include <vector>

#include "gitstab/poly.hpp"

namespace gitstab {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

inline RatMat identity_mat(int n) {
    RatMat m(n, RatVec(n, Rat(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline Rat det(RatMat m) {
    int n = static_cast<int>(m.size());
    Rat d(1);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (m[r][c] != 0) {
                p = r;
                break;
            }
        if (p < 0) return Rat(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (int r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rat f = m[r][c] / m[c][c];
            for (int j = c; j < n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    return d;
}

inline int rank(RatMat m) {
    int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(m[p], m[r]);
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

inline std::optional<RatMat> inverse(RatMat m) {
    int n = static_cast<int>(m.size());
    RatMat inv = identity_mat(n);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (m[r][c] != 0) {
                p = r;
                break;
            }
        if (p < 0) return std::nullopt;
        std::swap(m[p], m[c]);
        std::swap(inv[p], inv[c]);
        Rat piv = m[c][c];
        for (int j = 0; j < n; ++j) {
            m[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rat f = m[r][c];
            for (int j = 0; j < n; ++j) {
                m[r][j] -= f * m[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

inline RatMat mat_mul(const RatMat& a, const RatMat& b) {
    int n = static_cast<int>(a.size());
    int k = static_cast<int>(b.size());
    int m = static_cast<int>(b[0].size());
    RatMat out(n, RatVec(m, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (int j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

inline RatVec mat_apply(const RatMat& a, const RatVec& v) {
    RatVec out(a.size(), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
    return out;
}

// One nonzero kernel vector of a square matrix, if the matrix is singular.
inline std::optional<RatVec> kernel_vector(RatMat m) {
    int n = static_cast<int>(m.size());
    std::vector<int> pivot_col(n, -1);
    int r = 0;
    for (int c = 0; c < n && r < n; ++c) {
        int p = -1;
        for (int i = r; i < n; ++i)
            if (m[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(m[p], m[r]);
        Rat piv = m[r][c];
        for (int j = 0; j < n; ++j) m[r][j] /= piv;
        for (int i = 0; i < n; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (int j = 0; j < n; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col[r] = c;
        ++r;
    }
    if (r == n) return std::nullopt;
    std::vector<bool> is_pivot(n, false);
    for (int i = 0; i < r; ++i) is_pivot[pivot_col[i]] = true;
    int free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    RatVec v(n, Rat(0));
    v[free_col] = 1;
    for (int i = 0; i < r; ++i) v[pivot_col[i]] = -m[i][free_col];
    return v;
}

// Invertible linear change of projective coordinates. apply_change(f, g)
// substitutes x_i -> sum_j g[i][j] x_j, i.e. computes f(Mx).
class ProjChange {
public:
    explicit ProjChange(RatMat m) : m_(std::move(m)) {
        int n = static_cast<int>(m_.size());
        for (const auto& row : m_)
            if (static_cast<int>(row.size()) != n) throw input_error("non-square change matrix");
        if (det(m_) == 0) throw input_error("singular change of coordinates");
    }

    static ProjChange identity(int n) { return ProjChange(identity_mat(n)); }

    // Permutation sign convention: row i of the matrix is e_{perm[i]},
    // i.e. x_i -> x_{perm[i]}.
    static ProjChange permutation(const std::vector<int>& perm) {
        int n = static_cast<int>(perm.size());
        RatMat m(n, RatVec(n, Rat(0)));
        for (int i = 0; i < n; ++i) m[i][perm.at(i)] = 1;
        return ProjChange(std::move(m));
    }

    const RatMat& matrix() const { return m_; }
    int dim() const { return static_cast<int>(m_.size()); }

    ProjChange inverse_change() const { return ProjChange(*inverse(m_)); }

    // apply_change(f, a.compose(b)) == apply_change(apply_change(f, a), b)
    ProjChange compose(const ProjChange& then) const {
        return ProjChange(mat_mul(m_, then.m_));
    }

    bool is_identity() const {
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < dim(); ++j)
                if (m_[i][j] != Rat(i == j ? 1 : 0)) return false;
        return true;
    }

    bool operator==(const ProjChange& o) const { return m_ == o.m_; }

private:
    RatMat m_;
};

// Substitution x_i -> sum_j g[i][j] x_j. Degree is preserved and the result
// cannot vanish since the change is invertible.
inline Poly apply_change(const Poly& f, const ProjChange& g) {
    int n = f.num_vars();
    if (g.dim() != n) throw input_error("change of coordinates dimension mismatch");
    // Linear forms replacing each variable, as polynomials.
    std::vector<std::optional<Poly>> forms(n);
    for (int i = 0; i < n; ++i) {
        Poly::TermMap t;
        for (int j = 0; j < n; ++j)
            if (g.matrix()[i][j] != 0) {
                Exponents e(n, 0);
                e[j] = 1;
                t[e] = g.matrix()[i][j];
            }
        if (!t.empty()) forms[i] = Poly(n, std::move(t));
    }
    std::optional<Poly> acc;
    for (const auto& [e, c] : f.terms()) {
        std::optional<Poly> t = Poly::constant(n, c);
        for (int i = 0; i < n && t; ++i) {
            for (int k = 0; k < e[i] && t; ++k) {
                if (!forms[i]) {
                    t.reset();
                } else {
                    t = *t * *forms[i];
                }
            }
        }
        if (!t) continue;
        acc = acc ? Poly::add(*acc, *t) : t;
    }
    if (!acc) throw input_error("change of coordinates annihilated the polynomial");
    return *acc;
}

} // namespace gitstab

#endif

#ifndef GITSTAB_SIMPLEX_HPP
#define GITSTAB_SIMPLEX_HPP

#include <vector>

#include "gitstab/linalg.hpp"

namespace gitstab {

struct SimplexSolution {
    Rat value;
    RatVec x;
};

// Primal simplex with Bland's rule on
//     max c.x   s.t.  A x <= b,  x >= 0,
// requiring b >= 0 so the slack basis starts feasible. Exact rational
// pivots; Bland's rule guarantees termination.
inline SimplexSolution simplex_maximize(const RatMat& A, const RatVec& b, const RatVec& c) {
    int m = static_cast<int>(A.size());
    int n = static_cast<int>(c.size());
    for (const auto& bi : b)
        if (bi < 0) throw input_error("simplex needs nonnegative right-hand sides");

    int width = n + m + 1;
    RatMat T(m, RatVec(width, Rat(0)));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) T[i][j] = A[i][j];
        T[i][n + i] = 1;
        T[i][width - 1] = b[i];
    }
    RatVec z(width, Rat(0));
    for (int j = 0; j < n; ++j) z[j] = c[j];
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = n + i;

    for (;;) {
        int e = -1;
        for (int j = 0; j < n + m; ++j)
            if (z[j] > 0) {
                e = j;
                break;
            }
        if (e < 0) break;
        int r = -1;
        Rat best;
        for (int i = 0; i < m; ++i) {
            if (T[i][e] <= 0) continue;
            Rat ratio = T[i][width - 1] / T[i][e];
            if (r < 0 || ratio < best || (ratio == best && basis[i] < basis[r])) {
                best = ratio;
                r = i;
            }
        }
        if (r < 0) throw input_error("unbounded linear program");
        Rat piv = T[r][e];
        for (int j = 0; j < width; ++j) T[r][j] /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == r || T[i][e] == 0) continue;
            Rat f = T[i][e];
            for (int j = 0; j < width; ++j) T[i][j] -= f * T[r][j];
        }
        if (z[e] != 0) {
            Rat f = z[e];
            for (int j = 0; j < width; ++j) z[j] -= f * T[r][j];
        }
        basis[r] = e;
    }

    SimplexSolution out;
    out.value = -z[width - 1];
    out.x.assign(n, Rat(0));
    for (int i = 0; i < m; ++i)
        if (basis[i] < n) out.x[basis[i]] = T[i][width - 1];
    return out;
}

} // namespace gitstab

#endif

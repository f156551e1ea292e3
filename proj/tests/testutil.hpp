#ifndef GITSTAB_TESTUTIL_HPP
#define GITSTAB_TESTUTIL_HPP

#include <cstdint>
#include <vector>

#include "gitstab/linalg.hpp"
#include "gitstab/weights.hpp"

namespace gitstab::testutil {

// Deterministic generator independent of std::uniform_* implementations.
struct Rng {
    explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    // uniform in [lo, hi]
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    std::uint64_t state;
};

inline std::vector<Exponents> monomials_of_degree(int nvars, int d) {
    std::vector<Exponents> out;
    Exponents e(nvars, 0);
    // lexicographic enumeration of compositions of d into nvars parts
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == nvars - 1) {
            e[pos] = rem;
            out.push_back(e);
            return;
        }
        for (int i = rem; i >= 0; --i) {
            e[pos] = i;
            self(self, pos + 1, rem - i);
        }
    };
    rec(rec, 0, d);
    return out;
}

// Random nonzero polynomial, integer coefficients in [-bound, bound].
inline Poly random_poly(Rng& rng, int nvars, int d, long bound = 5, int density_pct = 60) {
    auto mons = monomials_of_degree(nvars, d);
    for (;;) {
        Poly::TermMap t;
        for (const auto& e : mons) {
            if (rng.range(0, 99) >= density_pct) continue;
            long c = rng.range(-bound, bound);
            if (c != 0) t[e] = Rat(c);
        }
        if (!t.empty()) return Poly(nvars, std::move(t));
    }
}

inline LinearSystem random_system(Rng& rng, int nvars, int d, int k, long bound = 5) {
    for (;;) {
        std::vector<Poly> gens;
        for (int i = 0; i <= k; ++i) gens.push_back(random_poly(rng, nvars, d, bound));
        try {
            return LinearSystem(std::move(gens));
        } catch (const input_error&) {
            // dependent sample, draw again
        }
    }
}

inline OneParamSubgroup random_lambda(Rng& rng, int nvars, long bound = 4) {
    for (;;) {
        std::vector<Int> a;
        Int sum = 0;
        for (int i = 0; i + 1 < nvars; ++i) {
            long v = rng.range(-bound, bound);
            a.push_back(Int(v));
            sum += v;
        }
        a.push_back(Int(-sum));
        try {
            return OneParamSubgroup::normalize(a);
        } catch (const input_error&) {
            // trivial or unbalanced draw, retry
        }
    }
}

inline ProjChange random_change(Rng& rng, int nvars, long bound = 3) {
    for (;;) {
        RatMat m(nvars, RatVec(nvars));
        for (int i = 0; i < nvars; ++i)
            for (int j = 0; j < nvars; ++j) m[i][j] = Rat(rng.range(-bound, bound));
        if (det(m) != 0) return ProjChange(std::move(m));
    }
}

} // namespace gitstab::testutil

#endif

#ifndef GITSTAB_POLY_HPP
#define GITSTAB_POLY_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gitstab/rational.hpp"

namespace gitstab {

// Exponent tuple (i_0,...,i_n); map keys compare lexicographically which
// fixes the canonical term order.
using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

// Sparse homogeneous polynomial with exact rational coefficients.
// Invariants: at least one term, no zero coefficients, every exponent
// tuple has length num_vars() and sums to degree().
class Poly {
public:
    using TermMap = std::map<Exponents, Rat>;

    Poly(int num_vars, TermMap terms) : nvars_(num_vars), terms_(std::move(terms)) {
        if (nvars_ <= 0) throw input_error("polynomial needs at least one variable");
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->second == 0) it = terms_.erase(it);
            else ++it;
        }
        if (terms_.empty()) throw input_error("zero polynomial is not representable");
        degree_ = total_degree(terms_.begin()->first);
        for (const auto& [e, c] : terms_) {
            if (static_cast<int>(e.size()) != nvars_)
                throw input_error("exponent tuple length mismatch");
            for (int x : e)
                if (x < 0) throw input_error("negative exponent");
            if (total_degree(e) != degree_)
                throw input_error("inhomogeneous polynomial");
        }
    }

    static Poly monomial(int num_vars, Exponents e, Rat c = Rat(1)) {
        TermMap m;
        m.emplace(std::move(e), std::move(c));
        return Poly(num_vars, std::move(m));
    }

    static Poly constant(int num_vars, const Rat& c) {
        return monomial(num_vars, Exponents(num_vars, 0), c);
    }

    static Poly variable(int num_vars, int i) {
        Exponents e(num_vars, 0);
        e.at(i) = 1;
        return monomial(num_vars, std::move(e));
    }

    int num_vars() const { return nvars_; }
    int degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_constant() const { return degree_ == 0; }

    Rat coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    Rat leading_coeff() const { return terms_.rbegin()->second; }
    const Exponents& leading_exponents() const { return terms_.rbegin()->first; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_same_ring(b);
        TermMap out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(ea);
                for (int i = 0; i < a.nvars_; ++i) e[i] += eb[i];
                out[e] += ca * cb;
            }
        return Poly(a.nvars_, std::move(out));
    }

    friend Poly operator*(const Poly& a, const Rat& c) {
        if (c == 0) throw input_error("scaling a polynomial to zero");
        TermMap out(a.terms_);
        for (auto& [e, v] : out) v *= c;
        return Poly(a.nvars_, std::move(out));
    }

    friend Poly operator*(const Rat& c, const Poly& a) { return a * c; }
    Poly operator-() const { return *this * Rat(-1); }

    // Addition and subtraction can cancel to zero, hence the optional.
    static std::optional<Poly> add(const Poly& a, const Poly& b) {
        return combine(a, b, Rat(1));
    }
    static std::optional<Poly> sub(const Poly& a, const Poly& b) {
        return combine(a, b, Rat(-1));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        auto r = add(a, b);
        if (!r) throw input_error("sum cancelled to zero");
        return *std::move(r);
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        auto r = sub(a, b);
        if (!r) throw input_error("difference cancelled to zero");
        return *std::move(r);
    }

    Poly pow(int k) const {
        if (k < 0) throw input_error("negative power");
        Poly r = constant(nvars_, Rat(1));
        for (int i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    std::optional<Poly> diff(int var) const {
        TermMap out;
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponents d(e);
            d[var] -= 1;
            out[d] += c * Rat(e[var]);
        }
        if (out.empty()) return std::nullopt;
        return Poly(nvars_, std::move(out));
    }

    // Evaluation over any commutative ring element type constructible from Rat.
    template <class F>
    F eval(const std::vector<F>& point) const {
        if (static_cast<int>(point.size()) != nvars_)
            throw input_error("evaluation point dimension mismatch");
        F acc = F(Rat(0));
        for (const auto& [e, c] : terms_) {
            F t = F(c);
            for (int i = 0; i < nvars_; ++i)
                for (int k = 0; k < e[i]; ++k) t = t * point[i];
            acc = acc + t;
        }
        return acc;
    }

    Rat eval_rat(const std::vector<Rat>& point) const { return eval<Rat>(point); }

    bool operator==(const Poly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    bool operator<(const Poly& o) const {
        if (nvars_ != o.nvars_) return nvars_ < o.nvars_;
        return terms_ < o.terms_;
    }

    // Equal up to a nonzero scalar.
    bool proportional_to(const Poly& o) const {
        if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
        Rat ratio = terms_.begin()->second;
        auto it = o.terms_.find(terms_.begin()->first);
        if (it == o.terms_.end()) return false;
        ratio /= it->second;
        for (const auto& [e, c] : terms_) {
            auto jt = o.terms_.find(e);
            if (jt == o.terms_.end() || c != jt->second * ratio) return false;
        }
        return true;
    }

    // Divides by the content and makes the leading coefficient positive.
    Poly primitive() const {
        Int num_gcd = 0, den_lcm = 1;
        for (const auto& [e, c] : terms_) {
            num_gcd = int_gcd(num_gcd, c.get_num());
            den_lcm = int_lcm(den_lcm, c.get_den());
        }
        Rat scale(den_lcm, num_gcd);
        scale.canonicalize();
        if (leading_coeff() < 0) scale = -scale;
        return *this * scale;
    }

    void check_same_ring(const Poly& o) const {
        if (nvars_ != o.nvars_) throw input_error("variable count mismatch");
    }

private:
    static std::optional<Poly> combine(const Poly& a, const Poly& b, const Rat& s) {
        a.check_same_ring(b);
        TermMap out(a.terms_);
        for (const auto& [e, c] : b.terms_) out[e] += s * c;
        for (auto it = out.begin(); it != out.end();) {
            if (it->second == 0) it = out.erase(it);
            else ++it;
        }
        if (out.empty()) return std::nullopt;
        return Poly(a.nvars_, std::move(out));
    }

    int nvars_;
    int degree_ = 0;
    TermMap terms_;
};

// c1*a + c2*b, nullopt when everything cancels.
inline std::optional<Poly> linear_combination(const Rat& c1, const Poly& a,
                                              const Rat& c2, const Poly& b) {
    if (c1 == 0 && c2 == 0) return std::nullopt;
    if (c1 == 0) return b * c2;
    if (c2 == 0) return a * c1;
    return Poly::add(a * c1, b * c2);
}

} // namespace gitstab

#endif

#ifndef GITSTAB_NUMBERFIELD_HPP
#define GITSTAB_NUMBERFIELD_HPP

#include <optional>
#include <string>

#include "gitstab/rational.hpp"

namespace gitstab {

// Removes the square part of an integer: D = s^2 * d, with the square
// factors of d below 10^10 exhausted by trial division and a final
// perfect-square check. Sign stays on d.
inline void split_square(const Int& D, Int& s, Int& d) {
    s = 1;
    d = D;
    if (d == 0) return;
    int sg = sgn(d);
    d = abs(d);
    for (Int p = 2; p <= 100000 && p * p <= d; ++p) {
        while (d % (p * p) == 0) {
            d /= p * p;
            s *= p;
        }
    }
    if (mpz_perfect_square_p(d.get_mpz_t())) {
        Int r;
        mpz_sqrt(r.get_mpz_t(), d.get_mpz_t());
        s *= r;
        d = 1;
    }
    d *= sg;
}

// sqrt(|r|-adjusted): sqrt(r) = coef * sqrt(disc), disc squarefree; disc == 1
// means the root is rational (requires r >= 0 for that reading).
struct SqrtDecomp {
    Rat coef;
    Int disc;
};

inline SqrtDecomp sqrt_decompose(const Rat& r) {
    Int pq = r.get_num() * r.get_den();
    Int s, d;
    split_square(pq, s, d);
    if (d == 0) return {Rat(0), Int(1)};
    Rat coef(s, r.get_den());
    coef.canonicalize();
    return {coef, d};
}

inline bool is_rational_square(const Rat& r, Rat& root) {
    if (r < 0) return false;
    if (r == 0) {
        root = 0;
        return true;
    }
    auto dec = sqrt_decompose(r);
    if (dec.disc != 1) return false;
    root = dec.coef;
    return true;
}

// Element a + b*sqrt(disc) of Q or of a quadratic extension Q(sqrt(disc)).
// disc is 0 for rational values and a squarefree non-square integer
// otherwise; mixing two different extensions throws.
class Quad {
public:
    Quad() : a_(0), b_(0), d_(0) {}
    explicit Quad(const Rat& a) : a_(a), b_(0), d_(0) {}
    Quad(Rat a, Rat b, Int d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
        if (b_ == 0) d_ = 0;
        if (b_ != 0 && d_ == 0) throw input_error("irrational part needs a discriminant");
    }

    const Rat& rational_part() const { return a_; }
    const Rat& sqrt_part() const { return b_; }
    const Int& disc() const { return d_; }
    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    Quad conj() const { return Quad(a_, -b_, d_); }
    Rat norm() const { return a_ * a_ - Rat(d_) * b_ * b_; }

    friend Quad operator+(const Quad& x, const Quad& y) {
        Int d = join(x, y);
        return Quad(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend Quad operator-(const Quad& x, const Quad& y) {
        Int d = join(x, y);
        return Quad(x.a_ - y.a_, x.b_ - y.b_, d);
    }
    Quad operator-() const { return Quad(-a_, -b_, d_); }
    friend Quad operator*(const Quad& x, const Quad& y) {
        Int d = join(x, y);
        return Quad(x.a_ * y.a_ + Rat(d) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    Quad inv() const {
        Rat n = norm();
        if (n == 0) throw input_error("division by zero in quadratic field");
        return Quad(a_ / n, -b_ / n, d_);
    }
    friend Quad operator/(const Quad& x, const Quad& y) { return x * y.inv(); }

    bool operator==(const Quad& o) const { return a_ == o.a_ && b_ == o.b_ && d_ == o.d_; }
    bool operator!=(const Quad& o) const { return !(*this == o); }
    bool operator<(const Quad& o) const {
        if (d_ != o.d_) return d_ < o.d_;
        if (a_ != o.a_) return a_ < o.a_;
        return b_ < o.b_;
    }

    std::string str() const {
        if (is_rational()) return rat_str(a_);
        std::string s;
        if (a_ != 0) s += rat_str(a_) + (b_ > 0 ? " + " : " - ");
        else if (b_ < 0) s += "-";
        Rat ab = abs(b_);
        if (ab != 1) s += rat_str(ab) + "*";
        s += "sqrt(" + int_str(d_) + ")";
        return s;
    }

private:
    static Int join(const Quad& x, const Quad& y) {
        if (x.d_ == 0) return y.d_;
        if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
        throw input_error("mixed quadratic extensions");
    }

    Rat a_, b_;
    Int d_;
};

// Square root of v inside Q(sqrt(field_disc)) when one exists there;
// field_disc == 0 restricts to rational square roots.
inline std::optional<Quad> sqrt_in_field(const Quad& v, const Int& field_disc) {
    if (v.is_zero()) return Quad(Rat(0));
    if (v.is_rational()) {
        const Rat& r = v.rational_part();
        Rat root;
        if (is_rational_square(r, root)) return Quad(root);
        if (field_disc != 0) {
            Rat q2 = r / Rat(field_disc);
            if (is_rational_square(q2, root) && root != 0)
                return Quad(Rat(0), root, field_disc);
        }
        return std::nullopt;
    }
    if (v.disc() != field_disc) return std::nullopt;
    // (p + q*sqrt(d))^2 = a + b*sqrt(d) with p, q rational.
    const Rat& a = v.rational_part();
    const Rat& b = v.sqrt_part();
    Rat n2 = v.norm();
    Rat ns;
    if (!is_rational_square(n2, ns)) return std::nullopt;
    for (int s : {1, -1}) {
        Rat p2 = (a + Rat(s) * ns) / 2;
        Rat p;
        if (!is_rational_square(p2, p) || p == 0) continue;
        Quad cand(p, b / (2 * p), field_disc);
        if (cand * cand == v) return cand;
    }
    return std::nullopt;
}

} // namespace gitstab

#endif

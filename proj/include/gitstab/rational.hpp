#ifndef GITSTAB_RATIONAL_HPP
#define GITSTAB_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace gitstab {

// Exact arithmetic everywhere: Int is an arbitrary-precision integer,
// Rat a rational kept in lowest terms with positive denominator
// (gmp maintains that canonical form for all arithmetic results).
using Int = mpz_class;
using Rat = mpq_class;

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rat rat_of(long n, long d = 1) {
    if (d == 0) throw input_error("rational with zero denominator");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

// Accepts "p" or "p/q" with optional sign on p.
inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw input_error("bad rational literal: '" + s + "'");
    if (r.get_den() == 0) throw input_error("rational with zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }
inline std::string int_str(const Int& z) { return z.get_str(); }

inline Int int_gcd(const Int& a, const Int& b) { return Int(gcd(a, b)); }
inline Int int_lcm(const Int& a, const Int& b) { return Int(lcm(a, b)); }

inline int sign(const Rat& r) { return sgn(r); }
inline int sign(const Int& z) { return sgn(z); }

// lcm of denominators, used to rescale rational vectors to integer ones
inline Int common_denominator(const std::vector<Rat>& v) {
    Int l = 1;
    for (const auto& r : v) l = int_lcm(l, r.get_den());
    return l;
}

inline Int gcd_of(const std::vector<Int>& v) {
    Int g = 0;
    for (const auto& z : v) g = int_gcd(g, z);
    return g;
}

} // namespace gitstab

#endif

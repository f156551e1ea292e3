#ifndef GITSTAB_PARSE_HPP
#define GITSTAB_PARSE_HPP

#include <cctype>
#include <map>
#include <string>

#include "gitstab/poly.hpp"

namespace gitstab {

struct parse_error : input_error {
    parse_error(const std::string& msg, std::size_t pos)
        : input_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

namespace detail {

// Intermediate sum that may be zero or inhomogeneous while parsing.
using RawTerms = std::map<Exponents, Rat>;

class PolyParser {
public:
    PolyParser(const std::string& text, int num_vars) : s_(text), nvars_(num_vars) {}

    RawTerms run() {
        RawTerms r = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    RawTerms expr() {
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        RawTerms acc = term();
        if (neg) negate(acc);
        for (;;) {
            if (eat('+')) add_into(acc, term(), Rat(1));
            else if (eat('-')) add_into(acc, term(), Rat(-1));
            else break;
        }
        return acc;
    }

    RawTerms term() {
        RawTerms acc = factor();
        while (eat('*')) acc = multiply(acc, factor());
        return acc;
    }

    RawTerms factor() {
        RawTerms base = atom();
        if (eat('^')) {
            int k = read_uint("exponent");
            RawTerms r;
            r[Exponents(nvars_, 0)] = 1;
            for (int i = 0; i < k; ++i) r = multiply(r, base);
            return r;
        }
        return base;
    }

    RawTerms atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            RawTerms inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (c == 'x' || c == 'y' || c == 'z' || c == 'w') return variable();
        fail("expected '(', a coefficient, or a variable");
    }

    RawTerms number() {
        Int num = read_int_digits("coefficient");
        Rat val(num);
        if (eat('/')) {
            Int den = read_int_digits("denominator");
            if (den == 0) fail("zero denominator");
            val = Rat(num, den);
            val.canonicalize();
        }
        RawTerms r;
        r[Exponents(nvars_, 0)] = val;
        return r;
    }

    RawTerms variable() {
        std::size_t at = pos_;
        char c = s_[pos_++];
        int idx = -1;
        if (c == 'x') {
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                idx = s_[pos_++] - '0';
            else
                idx = 0;
        } else if (c == 'y') idx = 1;
        else if (c == 'z') idx = 2;
        else if (c == 'w') idx = 3;
        if (idx >= nvars_) {
            pos_ = at;
            fail("variable index out of range for " + std::to_string(nvars_) + " variables");
        }
        Exponents e(nvars_, 0);
        e[idx] = 1;
        RawTerms r;
        r[e] = 1;
        return r;
    }

    int read_uint(const char* what) {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail(std::string("expected ") + what);
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_++] - '0');
            if (v > 1000000) fail("exponent too large");
        }
        return static_cast<int>(v);
    }

    Int read_int_digits(const char* what) {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail(std::string("expected ") + what);
        return Int(s_.substr(start, pos_ - start));
    }

    static void negate(RawTerms& t) {
        for (auto& [e, c] : t) c = -c;
    }

    static void add_into(RawTerms& acc, const RawTerms& t, const Rat& s) {
        for (const auto& [e, c] : t) {
            auto& slot = acc[e];
            slot += s * c;
            if (slot == 0) acc.erase(e);
        }
    }

    RawTerms multiply(const RawTerms& a, const RawTerms& b) {
        RawTerms out;
        for (const auto& [ea, ca] : a)
            for (const auto& [eb, cb] : b) {
                Exponents e(ea);
                for (int i = 0; i < nvars_; ++i) e[i] += eb[i];
                auto& slot = out[e];
                slot += ca * cb;
                if (slot == 0) out.erase(e);
            }
        return out;
    }

    const std::string& s_;
    int nvars_;
    std::size_t pos_ = 0;
};

} // namespace detail

// Grammar: variables x0..x9 or aliases x,y,z,w (alias order = index order);
// integer or p/q coefficients; operators + - * ^; parentheses; whitespace
// insignificant. The result must be homogeneous and nonzero.
inline Poly parse_poly(const std::string& text, int num_vars) {
    detail::RawTerms raw = detail::PolyParser(text, num_vars).run();
    if (raw.empty()) throw input_error("zero polynomial rejected: '" + text + "'");
    int deg = total_degree(raw.begin()->first);
    for (const auto& [e, c] : raw)
        if (total_degree(e) != deg)
            throw input_error("inhomogeneous input: '" + text + "'");
    return Poly(num_vars, Poly::TermMap(raw.begin(), raw.end()));
}

inline std::string var_name(int i, int num_vars) {
    static const char* alias[4] = {"x", "y", "z", "w"};
    if (num_vars <= 4) return alias[i];
    return "x" + std::to_string(i);
}

// Canonical renderer: terms in descending lexicographic order, explicit '*'
// between factors; round-trips through parse_poly.
inline std::string render_poly(const Poly& f) {
    std::string out;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        Rat a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        std::string vars;
        for (int i = 0; i < f.num_vars(); ++i) {
            if (e[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += var_name(i, f.num_vars());
            if (e[i] > 1) vars += "^" + std::to_string(e[i]);
        }
        if (vars.empty()) {
            out += rat_str(a);
        } else {
            if (a != 1) out += rat_str(a) + "*";
            out += vars;
        }
    }
    return out;
}

} // namespace gitstab

#endif

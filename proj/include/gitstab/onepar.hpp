#ifndef GITSTAB_ONEPAR_HPP
#define GITSTAB_ONEPAR_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "gitstab/rational.hpp"

namespace gitstab {

// Normalized one-parameter subgroup of SL(n+1): integer weights
// a_0 >= a_1 >= ... >= a_n with a_0 > 0, sum zero, gcd one.
class OneParamSubgroup {
public:
    static OneParamSubgroup normalize(std::vector<Int> raw) {
        if (raw.size() < 2) throw input_error("a 1-PS needs at least two weights");
        Int sum = 0;
        for (const auto& a : raw) sum += a;
        if (sum != 0) throw input_error("1-PS weights must sum to zero (got sum " +
                                        int_str(sum) + ")");
        std::sort(raw.begin(), raw.end(), [](const Int& x, const Int& y) { return x > y; });
        if (raw.front() == 0) throw input_error("trivial 1-PS rejected");
        Int g = gcd_of(raw);
        for (auto& a : raw) a /= g;
        return OneParamSubgroup(std::move(raw));
    }

    int dim() const { return static_cast<int>(a_.size()); } // n+1
    const std::vector<Int>& weights() const { return a_; }
    const Int& weight(int i) const { return a_.at(i); }

    // Shifted weights (a_i - a_n), one per variable; the last entry is 0.
    std::vector<Int> shifted() const {
        std::vector<Int> w(a_.size());
        for (std::size_t i = 0; i < a_.size(); ++i) w[i] = a_[i] - a_.back();
        return w;
    }

    // A_lambda = sum of shifted weights = -a_n (n+1)
    Int a_lambda() const {
        Int s = 0;
        for (const auto& w : shifted()) s += w;
        return s;
    }

    bool operator==(const OneParamSubgroup& o) const { return a_ == o.a_; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < a_.size(); ++i) {
            if (i) s += ",";
            s += int_str(a_[i]);
        }
        return s + ")";
    }

private:
    explicit OneParamSubgroup(std::vector<Int> a) : a_(std::move(a)) {}
    std::vector<Int> a_;
};

} // namespace gitstab

#endif

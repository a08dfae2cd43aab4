#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "hopffill/errors.hpp"
#include "hopffill/numeric.hpp"

namespace hopffill {

// Negative continued fraction [a_1,...,a_n] with every a_i >= 2, evaluating
// under the minus-sign convention
//
//   p/q = a_1 - 1/(a_2 - 1/(... - 1/a_n)).
//
// With all terms >= 2 every tail value is > 1, so the evaluation never
// divides by zero and p > q >= 1 with gcd(p,q) = 1.
class ContinuedFraction {
public:
    explicit ContinuedFraction(std::vector<long long> terms) : terms_(std::move(terms)) {
        if (terms_.empty()) throw InvalidInput("continued fraction needs at least one term");
        for (long long a : terms_)
            if (a < 2) throw InvalidInput("continued fraction terms must be >= 2");
    }

    const std::vector<long long>& terms() const { return terms_; }
    std::size_t length() const { return terms_.size(); }

    bool operator==(const ContinuedFraction& o) const { return terms_ == o.terms_; }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(terms_[i]);
        }
        return s + "]";
    }

private:
    std::vector<long long> terms_;
};

// Expansion of p/q, p > q >= 1 coprime: a_i = ceil(p/q) at each step, then
// recurse on q / (a_i*q - p). Each a_i >= 2 because p > q.
inline ContinuedFraction cf_expand(Int p, Int q) {
    if (q < 1 || p <= q) throw InvalidInput("cf_expand requires p > q >= 1");
    if (gcd(p, q) != 1) throw InvalidInput("cf_expand requires gcd(p, q) = 1");

    std::vector<long long> terms;
    while (q != 0) {
        Int a = (p + q - 1) / q; // ceil(p/q), both positive
        terms.push_back(to_int64(a));
        Int next_q = a * q - p;
        p = q;
        q = next_q;
    }
    return ContinuedFraction(std::move(terms));
}

inline std::pair<Int, Int> cf_value(const ContinuedFraction& cf) {
    // Evaluate right to left as an exact fraction num/den.
    Int num = cf.terms().back(), den = 1;
    for (std::size_t i = cf.length() - 1; i-- > 0;) {
        // a - den/num = (a*num - den)/num
        Int new_num = Int(cf.terms()[i]) * num - den;
        den = num;
        num = new_num;
    }
    return {num, den};
}

} // namespace hopffill

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "hopffill/errors.hpp"

namespace hopffill {

// Every computation in this library is exact. Integers are arbitrary
// precision; rationals are kept reduced with a positive denominator
// (the rational backend maintains exactly that canonical form). No floating
// point appears anywhere.
//
// Expression templates are disabled so every arithmetic expression is a
// plain value; a deduced return type can otherwise hand back an expression
// node referencing dead stack locals.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline std::string to_string(const Int& n) { return n.str(); }

// "p/q" with the "/q" omitted for integers, e.g. "-3/11", "5".
inline std::string to_string(const Rational& r) { return r.str(); }

inline Int parse_int(const std::string& s) {
    try {
        if (s.empty()) throw std::runtime_error("empty");
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) throw std::runtime_error("sign only");
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') throw std::runtime_error("bad digit");
        return Int(s);
    } catch (const std::exception&) {
        throw InvalidInput("not an integer: '" + s + "'");
    }
}

inline long long to_int64(const Int& n) {
    if (n > std::numeric_limits<long long>::max() || n < std::numeric_limits<long long>::min())
        throw InvalidInput("integer out of 64-bit range: " + n.str());
    return static_cast<long long>(n);
}

} // namespace hopffill

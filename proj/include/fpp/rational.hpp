#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fpp {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& n) { return n.str(); }

// "n" when integral, "n/d" otherwise; denominator always positive.
inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// binomial() result narrowed to size_t; the graded pieces handled here all fit.
inline std::size_t binomial_index(unsigned n, unsigned k) {
    Int b = binomial(n, k);
    if (b > std::numeric_limits<std::size_t>::max())
        throw std::overflow_error("binomial too large for an index");
    return static_cast<std::size_t>(b);
}

}  // namespace fpp

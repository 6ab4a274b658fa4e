#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "dpcolor/errors.hpp"

namespace dpc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt ipow(BigInt base, unsigned exp) {
    BigInt result = 1;
    while (exp != 0) {
        if (exp & 1U) result *= base;
        base *= base;
        exp >>= 1U;
    }
    return result;
}

inline Rational rpow(Rational base, unsigned exp) {
    Rational result = 1;
    while (exp != 0) {
        if (exp & 1U) result *= base;
        base *= base;
        exp >>= 1U;
    }
    return result;
}

inline BigInt factorial(unsigned n) {
    BigInt result = 1;
    for (unsigned i = 2; i <= n; ++i) result *= i;
    return result;
}

/// m (m-1) ... (m-count+1); zero as soon as a factor hits zero.
inline BigInt falling_factorial(const BigInt& m, unsigned count) {
    BigInt result = 1;
    for (unsigned i = 0; i < count; ++i) result *= (m - i);
    return result;
}

/// Exact quotient; throws DivisibilityError when `den` does not divide `num`.
inline BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
    if (den == 0) throw DivisibilityError(std::string(what) + ": division by zero");
    BigInt q;
    BigInt r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) {
        throw DivisibilityError(std::string(what) + ": " + num.str() + " is not divisible by " +
                                den.str());
    }
    return q;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string to_string(const Rational& v) {
    const BigInt num = boost::multiprecision::numerator(v);
    const BigInt den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace dpc

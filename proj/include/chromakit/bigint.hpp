#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace chromakit {

/// Exact arbitrary-precision integer used for all counts and coefficients.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(const BigInt& base, unsigned long exponent) {
    BigInt result = 1;
    BigInt b = base;
    while (exponent > 0) {
        if (exponent & 1) result *= b;
        exponent >>= 1;
        if (exponent > 0) b *= b;
    }
    return result;
}

}  // namespace chromakit

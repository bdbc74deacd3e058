#pragma once

// Exact integer and rational arithmetic used throughout the library.
// Everything is backed by GMP's C++ interface.

#include <gmpxx.h>

#include <string>

namespace vfcomb {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& value) { return value.get_str(); }

inline std::string to_string(const Rational& value) {
    Rational copy(value);
    copy.canonicalize();
    return copy.get_str();
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt out;
    if (k > n) return out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

/// True when a canonical rational has denominator one.
inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace vfcomb

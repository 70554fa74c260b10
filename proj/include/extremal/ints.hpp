#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace extremal {

using Int = mpz_class;
using Rat = mpq_class;

inline int sgn(const Int& a) { return mpz_sgn(a.get_mpz_t()); }

inline Int gcd3(const Int& a, const Int& b, const Int& c) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

/// Number of bits in |a|; 0 for a == 0.
inline long bitLength(const Int& a) {
    if (sgn(a) == 0) return 0;
    return static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2));
}

/// log2(|a|) with double accuracy, valid for arbitrarily large a.
inline double log2Approx(const Int& a) {
    if (sgn(a) == 0) throw std::domain_error("log2Approx: zero");
    long e = 0;
    double d = mpz_get_d_2exp(&e, a.get_mpz_t());
    return std::abs(d) == 0.0 ? 0.0 : std::log2(std::abs(d)) + static_cast<double>(e);
}

/// Fibonacci with F(0) = 0, F(1) = 1.
inline Int fibonacci(unsigned long n) {
    Int f;
    mpz_fib_ui(f.get_mpz_t(), n);
    return f;
}

inline std::string toDecimal(const Int& a) { return a.get_str(10); }

}  // namespace extremal

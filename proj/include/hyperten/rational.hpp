#pragma once

#include <gmpxx.h>

#include <string>

namespace hyperten {

// Exact rational scalar. Canonical (lowest terms, positive denominator)
// whenever produced through the helpers below or GMP arithmetic.
using Rational = mpq_class;

inline Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// "p/q" in lowest terms, plain "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
    return r.get_str();
}

inline double to_double(const Rational& r) {
    return r.get_d();
}

// Integer power; exponent may be negative for nonzero base. 0^0 = 1.
inline Rational rational_pow(const Rational& base, long exp) {
    bool invert = exp < 0;
    unsigned long e = invert ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
    Rational acc(1);
    Rational b = base;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return invert ? Rational(1) / acc : acc;
}

inline mpz_class factorial(unsigned long k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return f;
}

}  // namespace hyperten

#pragma once

#include <gmpxx.h>

#include <string>

#include "qfrob/errors.hpp"

namespace qfrob {

// Exact rational scalar. GMP keeps the canonical form: gcd(|num|, den) = 1,
// den > 0, zero stored as 0/1. Construction from a raw num/den pair must go
// through make_rational so the canonical form is restored.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational pow(const Rational& base, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return r;
}

}  // namespace qfrob

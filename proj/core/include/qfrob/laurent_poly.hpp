#pragma once

#include <string>
#include <vector>

#include "qfrob/rational.hpp"

namespace qfrob {

// Laurent polynomial in one formal variable q with exact rational
// coefficients. Stored densely from the lowest exponent; both ends of the
// coefficient vector are nonzero unless the polynomial is zero.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rational& c);
    LaurentPoly(long c) : LaurentPoly(Rational(c)) {}

    static LaurentPoly monomial(const Rational& c, int exp);
    static LaurentPoly variable(int exp = 1);  // q^exp

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    bool is_monomial() const;

    // Exponent range; both require a nonzero polynomial.
    int low_exp() const;
    int high_exp() const;

    Rational coeff(int exp) const;
    Rational leading_coeff() const;  // coefficient at high_exp()

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const Rational& c) const;
    LaurentPoly shifted(int k) const;  // multiply by q^k

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // Exact evaluation at q0 != 0.
    Rational eval(const Rational& q0) const;

    // Positive gcd of coefficient numerators divided by lcm of denominators;
    // zero for the zero polynomial.
    Rational content() const;

    // Division with remainder against the ordinary-polynomial part of d
    // (Laurent units q^k are divided out first): *this = quot * d + rem.
    static void div_mod(const LaurentPoly& a, const LaurentPoly& d, LaurentPoly& quot,
                        LaurentPoly& rem);
    // Exact division; throws DivisionByZero if d == 0, Error if not exact.
    LaurentPoly divided_exact(const LaurentPoly& d) const;

    std::string to_string(const std::string& var = "q") const;

private:
    void normalize_();

    int low_ = 0;
    std::vector<Rational> coeffs_;
};

// Primitive gcd with positive leading coefficient (as ordinary polynomials,
// i.e. up to monomial units); gcd(0, b) = primitive part of b.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace qfrob

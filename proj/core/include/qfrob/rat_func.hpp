#pragma once

#include <string>
#include <string_view>

#include "qfrob/laurent_poly.hpp"

namespace qfrob {

// Element of the field of rational functions in q over the rationals.
// Canonical form: the denominator is an ordinary polynomial with lowest
// exponent 0 and leading coefficient 1, and gcd(num, den) is a unit.
// Equality is therefore syntactic.
class RatFunc {
public:
    RatFunc() : den_(Rational(1)) {}
    RatFunc(long c) : num_(Rational(c)), den_(Rational(1)) {}
    RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}
    RatFunc(const LaurentPoly& p) : num_(p), den_(Rational(1)) {}
    RatFunc(LaurentPoly num, LaurentPoly den);

    static RatFunc q(int exp = 1) { return RatFunc(LaurentPoly::variable(exp)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc inverse() const;
    RatFunc pow(int e) const;

    // Exact value at q0; q0 must be nonzero and off the poles.
    Rational specialize(const Rational& q0) const;

    std::string to_string(const std::string& var = "q") const;

private:
    void reduce_();

    LaurentPoly num_;
    LaurentPoly den_;
};

// (q^k - q^-k)/(q - q^-1); always a Laurent polynomial.
RatFunc q_int(int k);

// Parses the scalar expression grammar (see the CLI docs):
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-'? base ('^' signed-integer)?
//   base   := 'q' | unsigned-integer | '(' expr ')'
RatFunc parse_scalar(std::string_view text);

inline Rational specialize(const RatFunc& f, const Rational& q0) { return f.specialize(q0); }

}  // namespace qfrob

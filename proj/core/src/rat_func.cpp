#include "qfrob/rat_func.hpp"

#include "qfrob/errors.hpp"

namespace qfrob {

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("division by the zero polynomial");
    reduce_();
}

void RatFunc::reduce_() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(Rational(1));
        return;
    }
    // Pull the Laurent units out of both parts; the net power of q moves to
    // the numerator at the end. After the shift both parts have a nonzero
    // constant term, so the gcd does too and the quotients keep lowest
    // exponent 0.
    int shift = num_.low_exp() - den_.low_exp();
    num_ = num_.shifted(-num_.low_exp());
    den_ = den_.shifted(-den_.low_exp());
    if (!den_.is_one()) {
        LaurentPoly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = num_.divided_exact(g);
            den_ = den_.divided_exact(g);
        }
    }
    Rational lead = den_.leading_coeff();
    if (lead != 1) {
        Rational inv = Rational(1) / lead;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
    num_ = num_.shifted(shift);
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_.is_one() && o.den_.is_one()) {
        num_ += o.num_;
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    if (num_.is_zero()) {
        den_ = LaurentPoly(Rational(1));
        return *this;
    }
    reduce_();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = -o;
    if (den_.is_one() && o.den_.is_one()) {
        num_ -= o.num_;
        return *this;
    }
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    if (num_.is_zero()) {
        den_ = LaurentPoly(Rational(1));
        return *this;
    }
    reduce_();
    return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) {
        num_ = LaurentPoly();
        den_ = LaurentPoly(Rational(1));
        return *this;
    }
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    if (!den_.is_one()) reduce_();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero rational function");
    if (is_zero()) return *this;
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    reduce_();
    return *this;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
    if (e == 0) return RatFunc(1);
    RatFunc base = (e > 0) ? *this : inverse();
    int n = (e > 0) ? e : -e;
    RatFunc acc(1);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

Rational RatFunc::specialize(const Rational& q0) const {
    if (q0 == 0) throw ZeroBase("specialization at q = 0");
    Rational d = den_.eval(q0);
    if (d == 0) throw PoleAtPoint("pole at q = " + qfrob::to_string(q0));
    return num_.eval(q0) / d;
}

std::string RatFunc::to_string(const std::string& var) const {
    if (den_.is_one()) return num_.to_string(var);
    std::string n = num_.to_string(var);
    std::string d = den_.to_string(var);
    if (!num_.is_zero() && !num_.is_monomial()) n = "(" + n + ")";
    if (!den_.is_monomial()) d = "(" + d + ")";
    return n + "/" + d;
}

RatFunc q_int(int k) {
    LaurentPoly num = LaurentPoly::variable(k) - LaurentPoly::variable(-k);
    LaurentPoly den = LaurentPoly::variable(1) - LaurentPoly::variable(-1);
    return RatFunc(num, den);
}

}  // namespace qfrob

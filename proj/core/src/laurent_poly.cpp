#include "qfrob/laurent_poly.hpp"

#include <algorithm>

#include "qfrob/errors.hpp"

namespace qfrob {

LaurentPoly::LaurentPoly(const Rational& c) {
    if (c != 0) {
        low_ = 0;
        coeffs_.push_back(c);
    }
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exp) {
    LaurentPoly p;
    if (c != 0) {
        p.low_ = exp;
        p.coeffs_.push_back(c);
    }
    return p;
}

LaurentPoly LaurentPoly::variable(int exp) { return monomial(Rational(1), exp); }

bool LaurentPoly::is_one() const { return coeffs_.size() == 1 && low_ == 0 && coeffs_[0] == 1; }

bool LaurentPoly::is_constant() const {
    return coeffs_.empty() || (coeffs_.size() == 1 && low_ == 0);
}

bool LaurentPoly::is_monomial() const { return coeffs_.size() == 1; }

int LaurentPoly::low_exp() const {
    if (is_zero()) throw Error("low_exp of zero polynomial");
    return low_;
}

int LaurentPoly::high_exp() const {
    if (is_zero()) throw Error("high_exp of zero polynomial");
    return low_ + static_cast<int>(coeffs_.size()) - 1;
}

Rational LaurentPoly::coeff(int exp) const {
    if (is_zero()) return Rational(0);
    int idx = exp - low_;
    if (idx < 0 || idx >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[idx];
}

Rational LaurentPoly::leading_coeff() const {
    if (is_zero()) return Rational(0);
    return coeffs_.back();
}

void LaurentPoly::normalize_() {
    std::size_t front = 0;
    while (front < coeffs_.size() && coeffs_[front] == 0) ++front;
    if (front == coeffs_.size()) {
        coeffs_.clear();
        low_ = 0;
        return;
    }
    std::size_t back = coeffs_.size();
    while (back > front && coeffs_[back - 1] == 0) --back;
    if (front > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(front));
        low_ += static_cast<int>(front);
    }
    coeffs_.resize(back - front);
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    int new_low = std::min(low_, o.low_);
    int new_high = std::max(high_exp(), o.high_exp());
    std::vector<Rational> out(static_cast<std::size_t>(new_high - new_low + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[low_ - new_low + i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[o.low_ - new_low + i] += o.coeffs_[i];
    low_ = new_low;
    coeffs_ = std::move(out);
    normalize_();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = -o;
    int new_low = std::min(low_, o.low_);
    int new_high = std::max(high_exp(), o.high_exp());
    std::vector<Rational> out(static_cast<std::size_t>(new_high - new_low + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[low_ - new_low + i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[o.low_ - new_low + i] -= o.coeffs_[i];
    low_ = new_low;
    coeffs_ = std::move(out);
    normalize_();
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    LaurentPoly r;
    r.low_ = a.low_ + b.low_;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    r.normalize_();
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    if (c == 0) return {};
    LaurentPoly r(*this);
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r(*this);
    if (!r.is_zero()) r.low_ += k;
    return r;
}

Rational LaurentPoly::eval(const Rational& q0) const {
    if (q0 == 0) throw ZeroBase("evaluation at q = 0");
    // Horner on the ordinary part, then restore the q^low_ unit.
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q0 + *it;
    if (is_zero()) return acc;
    if (low_ >= 0) return acc * qfrob::pow(q0, static_cast<unsigned long>(low_));
    return acc / qfrob::pow(q0, static_cast<unsigned long>(-low_));
}

Rational LaurentPoly::content() const {
    if (is_zero()) return Rational(0);
    Integer num_gcd(0), den_lcm(1);
    for (const auto& c : coeffs_) {
        if (c == 0) continue;
        num_gcd = gcd(num_gcd, c.get_num());
        den_lcm = lcm(den_lcm, c.get_den());
    }
    return make_rational(abs(num_gcd), den_lcm);
}

void LaurentPoly::div_mod(const LaurentPoly& a, const LaurentPoly& d, LaurentPoly& quot,
                          LaurentPoly& rem) {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    quot = LaurentPoly();
    rem = a;
    if (a.is_zero()) return;
    const int dd = d.high_exp() - d.low_exp();
    const Rational dl = d.leading_coeff();
    while (!rem.is_zero() && rem.high_exp() - rem.low_exp() >= dd) {
        Rational c = rem.leading_coeff() / dl;
        int shift = rem.high_exp() - d.high_exp();
        LaurentPoly t = LaurentPoly::monomial(c, shift);
        quot += t;
        rem -= t * d;
    }
}

LaurentPoly LaurentPoly::divided_exact(const LaurentPoly& d) const {
    LaurentPoly q, r;
    div_mod(*this, d, q, r);
    if (!r.is_zero()) throw Error("inexact polynomial division");
    return q;
}

namespace {

// Primitive integer-coefficient image of p as an ordinary polynomial
// (low exponent shifted to 0, content removed).
std::vector<Integer> primitive_int(const LaurentPoly& p) {
    Rational c = p.content();
    LaurentPoly prim = p.scaled(Rational(1) / c);
    std::vector<Integer> out;
    out.reserve(static_cast<std::size_t>(prim.high_exp() - prim.low_exp() + 1));
    for (int e = prim.low_exp(); e <= prim.high_exp(); ++e) {
        Rational x = prim.coeff(e);
        out.push_back(x.get_num());  // denominators are 1 after content removal
    }
    return out;
}

void strip_content(std::vector<Integer>& v) {
    Integer g(0);
    for (const auto& x : v) g = gcd(g, x);
    if (g > 1)
        for (auto& x : v) x /= g;
}

int degree(const std::vector<Integer>& v) { return static_cast<int>(v.size()) - 1; }

// Pseudo-remainder of a by b over Z (primitive PRS step).
std::vector<Integer> pseudo_rem(std::vector<Integer> a, const std::vector<Integer>& b) {
    const Integer lb = b.back();
    while (degree(a) >= degree(b) && !a.empty()) {
        const Integer la = a.back();
        const int shift = degree(a) - degree(b);
        for (auto& x : a) x *= lb;
        for (int i = 0; i <= degree(b); ++i) a[static_cast<std::size_t>(i + shift)] -= la * b[static_cast<std::size_t>(i)];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    auto to_poly = [](const std::vector<Integer>& v) {
        LaurentPoly p;
        for (std::size_t i = 0; i < v.size(); ++i)
            p += LaurentPoly::monomial(Rational(v[i]), static_cast<int>(i));
        return p;
    };
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero() || b.is_zero()) {
        auto v = primitive_int(a.is_zero() ? b : a);
        if (v.back() < 0)
            for (auto& x : v) x = -x;
        return to_poly(v);
    }
    std::vector<Integer> u = primitive_int(a), v = primitive_int(b);
    if (degree(u) < degree(v)) std::swap(u, v);
    while (!v.empty()) {
        auto r = pseudo_rem(u, v);
        strip_content(r);
        u = std::move(v);
        v = std::move(r);
    }
    if (u.back() < 0)
        for (auto& x : u) x = -x;
    return to_poly(u);
}

std::string LaurentPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const int e = low_ + i;
        Rational ac = abs(c);
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        const bool unit_coeff = (ac == 1);
        if (e == 0) {
            out += qfrob::to_string(ac);
        } else {
            if (!unit_coeff) {
                out += qfrob::to_string(ac);
                out += "*";
            }
            out += var;
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

}  // namespace qfrob

#include <cctype>

#include "qfrob/errors.hpp"
#include "qfrob/rat_func.hpp"

namespace qfrob {

namespace {

class ScalarParser {
public:
    explicit ScalarParser(std::string_view text) : text_(text) {}

    RatFunc run() {
        RatFunc v = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError(pos_, "unexpected trailing input");
        return v;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    RatFunc expr() {
        RatFunc v = term();
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }

    RatFunc term() {
        RatFunc v = factor();
        for (;;) {
            if (eat('*')) {
                v *= factor();
            } else if (eat('/')) {
                std::size_t at = pos_;
                RatFunc d = factor();
                if (d.is_zero()) throw ParseError(at, "division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }

    RatFunc factor() {
        bool neg = eat('-');
        RatFunc v = base();
        if (eat('^')) {
            std::size_t at = pos_;
            long e = signed_integer();
            if (e < 0 && v.is_zero()) throw ParseError(at, "negative power of zero");
            v = v.pow(static_cast<int>(e));
        }
        return neg ? -v : v;
    }

    RatFunc base() {
        char c = peek();
        if (c == 'q') {
            ++pos_;
            return RatFunc::q();
        }
        if (c == '(') {
            ++pos_;
            RatFunc v = expr();
            if (!eat(')')) throw ParseError(pos_, "expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return RatFunc(Rational(unsigned_integer()));
        throw ParseError(pos_, "expected 'q', a number, or '('");
    }

    Integer unsigned_integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError(pos_, "expected an integer");
        return Integer(std::string(text_.substr(start, pos_ - start)), 10);
    }

    long signed_integer() {
        skip_ws();
        bool neg = eat('-');
        if (!neg) eat('+');
        Integer mag = unsigned_integer();
        if (!mag.fits_slong_p()) throw ParseError(pos_, "exponent out of range");
        long v = mag.get_si();
        return neg ? -v : v;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_scalar(std::string_view text) { return ScalarParser(text).run(); }

}  // namespace qfrob

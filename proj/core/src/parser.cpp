#include "curves/polynomial.hpp"

#include <cctype>

namespace curves {
namespace {

class Parser {
public:
    Parser(const std::string& text, const std::string& alphabet)
        : text_(text), alphabet_(alphabet) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    const std::string& text_;
    const std::string& alphabet_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    bool juxtaposed() {
        skip_ws();
        if (pos_ >= text_.size()) return false;
        char c = text_[pos_];
        return c == '(' || (std::isalpha(static_cast<unsigned char>(c)) &&
                            alphabet_.find(c) != std::string::npos);
    }

    Polynomial expr() {
        bool neg = false;
        skip_ws();
        if (accept('-'))
            neg = true;
        else
            accept('+');
        Polynomial p = term();
        if (neg) p = -p;
        for (;;) {
            if (accept('+'))
                p += term();
            else if (accept('-'))
                p -= term();
            else
                return p;
        }
    }

    Polynomial term() {
        Polynomial p = factor();
        for (;;) {
            if (accept('*')) {
                p = p * factor();
            } else if (accept('/')) {
                std::size_t at = pos_;
                Polynomial d = factor();
                if (!d.is_constant()) {
                    pos_ = at;
                    fail("divisor must be a nonzero constant");
                }
                if (d.is_zero()) {
                    pos_ = at;
                    fail("zero denominator");
                }
                p = p * (1 / d.coeff(Monomial::one()));
            } else if (juxtaposed()) {
                // Implicit multiplication: a variable or parenthesis directly
                // following a factor, as in 19/3x^3y^2z^5 or 2(x+y).
                p = p * factor();
            } else {
                return p;
            }
        }
    }

    Polynomial factor() {
        Polynomial base = primary();
        if (accept('^')) {
            skip_ws();
            std::size_t at = pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("expected non-negative integer exponent");
            unsigned long n = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                n = n * 10 + unsigned(text_[pos_] - '0');
                if (n > 10000) {
                    pos_ = at;
                    fail("exponent too large");
                }
                ++pos_;
            }
            base = base.pow(unsigned(n));
        }
        return base;
    }

    Polynomial primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer n = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                n = n * 10 + (text_[pos_] - '0');
                ++pos_;
            }
            return Polynomial::constant(Rational(n));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            if (alphabet_.find(c) == std::string::npos)
                fail("unknown variable '" + std::string(1, c) + "'");
            int v = var_index(c);
            if (v < 0) fail("variable outside supported alphabet");
            ++pos_;
            return Polynomial::variable(v);
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }
};

} // namespace

Polynomial parse(const std::string& text, const std::string& alphabet) {
    return Parser(text, alphabet).run();
}

} // namespace curves

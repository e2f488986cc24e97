#pragma once

#include <mtp/mtp_expr.hpp>

#include <cctype>
#include <stdexcept>
#include <string>

namespace mtp {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// Grammar:
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := primary ('^' nat)*
//   primary  := rational | 'x' | 'sin' '(' coef 'x' ')' | 'cos' '(' coef 'x' ')' | '(' expr ')'
//   coef     := rational '*' | rational | empty
//   rational := ['-'] nat ['/' nat]
// Whitespace is insignificant.
class Parser {
  public:
    explicit Parser(std::string text) : text_(std::move(text)) {}

    MTPExpr parse() {
        MTPExpr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

  private:
    std::string text_;
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
    void expect(char c, const char* what) {
        if (!accept(c)) fail(std::string("expected '") + c + "' (" + what + ")");
    }
    bool digit_ahead() {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }
    bool word_ahead(const char* w) {
        skip_ws();
        std::size_t n = std::char_traits<char>::length(w);
        return text_.compare(pos_, n, w) == 0;
    }

    Integer parse_nat() {
        skip_ws();
        if (!digit_ahead()) fail("expected a number");
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return Integer(text_.substr(start, pos_ - start));
    }

    Rational parse_rational(bool allow_sign) {
        skip_ws();
        bool neg = false;
        if (allow_sign && accept('-')) neg = true;
        Integer num = parse_nat();
        Integer den = 1;
        if (accept('/')) {
            den = parse_nat();
            if (den == 0) fail("zero denominator");
        }
        Rational q = rat(num, den);
        return neg ? Rational(-q) : q;
    }

    unsigned parse_exponent() {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '-') fail("negative power");
        Integer n = parse_nat();
        if (accept('/')) fail("fractional power");
        if (!n.fits_uint_p()) fail("power out of range");
        return static_cast<unsigned>(n.get_ui());
    }

    MTPExpr parse_trig(bool is_sin) {
        pos_ += 3;  // past 'sin' / 'cos'
        expect('(', "after sin/cos");
        Rational coef(1);
        skip_ws();
        if (digit_ahead() || peek('-')) {
            coef = parse_rational(true);
            accept('*');  // "sin(2*x)" and "sin(2x)" both accepted
        }
        skip_ws();
        if (!accept('x')) fail("expected 'x' inside sin/cos");
        expect(')', "closing sin/cos");
        MTPExpr e;
        if (is_sin)
            e.push(Rational(1), 0, 1, 0, coef);
        else
            e.push(Rational(1), 0, 0, 1, coef);
        return e;
    }

    MTPExpr parse_primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        if (accept('(')) {
            MTPExpr e = parse_expr();
            expect(')', "closing parenthesis");
            return e;
        }
        if (word_ahead("sin")) return parse_trig(true);
        if (word_ahead("cos")) return parse_trig(false);
        if (accept('x')) {
            MTPExpr e;
            e.push(Rational(1), 1, 0, 0, Rational(1));
            return e;
        }
        if (digit_ahead()) return MTPExpr::constant(parse_rational(false));
        fail("expected a factor");
    }

    MTPExpr parse_factor() {
        MTPExpr e = parse_primary();
        while (peek('^')) {
            ++pos_;
            e = e.pow(parse_exponent());
        }
        return e;
    }

    MTPExpr parse_term() {
        MTPExpr e = parse_factor();
        while (peek('*')) {
            ++pos_;
            e = e * parse_factor();
        }
        return e;
    }

    MTPExpr parse_expr() {
        skip_ws();
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        MTPExpr e = parse_term();
        if (neg) e = -e;
        for (;;) {
            if (accept('+'))
                e = e + parse_term();
            else if (accept('-'))
                e = e - parse_term();
            else
                break;
        }
        return e;
    }
};

inline MTPExpr parse_mtp(const std::string& text) { return Parser(text).parse(); }

}  // namespace mtp

#include "plbranch/parser.hpp"

#include <cctype>

namespace plbranch {

ParseError::ParseError(const std::string& message, std::size_t pos)
    : std::runtime_error(message + " at position " + std::to_string(pos)), position(pos) {}

namespace {

// Exponents above this would only exhaust memory; reject early.
constexpr unsigned long kMaxExponent = 1u << 20;

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    Poly run() {
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek_is(c)) return false;
        ++pos_;
        return true;
    }

    mpz_class nat() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected a natural number");
        return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
    }

    Poly expr() {
        skip_ws();
        bool negate = accept('-');
        Poly p = term();
        if (negate) p = -p;
        while (true) {
            if (accept('+')) {
                p += term();
            } else if (accept('-')) {
                p -= term();
            } else {
                return p;
            }
        }
    }

    Poly term() {
        Poly p = factor();
        while (accept('*')) p *= factor();
        return p;
    }

    Poly factor() {
        Poly b = base();
        if (accept('^')) {
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                fail("exponent must be a natural number");
            }
            std::size_t at = pos_;
            mpz_class e = nat();
            if (e > kMaxExponent) throw ParseError("exponent too large", at);
            return pow(b, static_cast<std::uint32_t>(e.get_ui()));
        }
        return b;
    }

    Poly base() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (c == 'x' || c == 'y') {
            ++pos_;
            return Poly::variable(c == 'x' ? Var::x : Var::y);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = nat();
            if (accept('/')) {
                skip_ws();
                std::size_t at = pos_;
                mpz_class den = nat();
                if (den == 0) throw ParseError("zero denominator", at);
                Rational q(num, den);
                q.canonicalize();
                return Poly(q);
            }
            return Poly(Rational(num));
        }
        fail("expected a rational, 'x', 'y' or '('");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) {
    return Parser(text).run();
}

}  // namespace plbranch

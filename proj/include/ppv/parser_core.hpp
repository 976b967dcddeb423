#pragma once

// Precedence-climbing parser shared by the rational-function and operator
// front ends. An Algebra supplies the value type and its operations.

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ppv {

/// Syntax or semantic error in textual input. position() is a 0-based byte
/// offset into the source.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message)
        : std::runtime_error(message + " at position " + std::to_string(position)),
          position_(position), detail_(message) {}
    std::size_t position() const { return position_; }
    const std::string& detail() const { return detail_; }

private:
    std::size_t position_;
    std::string detail_;
};

namespace detail {

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::size_t pos;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }
    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= src_.size()) {
            cur_ = {Tok::End, start, ""};
            return;
        }
        char c = src_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) ++i_;
            if (i_ < src_.size() && (src_[i_] == '.' || src_[i_] == 'e' || src_[i_] == 'E'))
                throw ParseError(i_, "floating-point literals are not supported");
            cur_ = {Tok::Int, start, std::string(src_.substr(start, i_ - start))};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_'))
                ++i_;
            cur_ = {Tok::Ident, start, std::string(src_.substr(start, i_ - start))};
            return;
        }
        ++i_;
        switch (c) {
        case '+': cur_ = {Tok::Plus, start, "+"}; return;
        case '-': cur_ = {Tok::Minus, start, "-"}; return;
        case '*': cur_ = {Tok::Star, start, "*"}; return;
        case '/': cur_ = {Tok::Slash, start, "/"}; return;
        case '^': cur_ = {Tok::Caret, start, "^"}; return;
        case '(': cur_ = {Tok::LParen, start, "("}; return;
        case ')': cur_ = {Tok::RParen, start, ")"}; return;
        default: throw ParseError(start, std::string("unexpected character '") + c + "'");
        }
    }

    std::string_view src_;
    std::size_t i_ = 0;
    Token cur_{Tok::End, 0, ""};
};

template <class Algebra>
class Parser {
public:
    using Value = typename Algebra::Value;

    Parser(std::string_view src, const Algebra& alg) : lex_(src), alg_(alg) {}

    Value parse() {
        Value v = sum();
        if (lex_.peek().kind != Tok::End) throw ParseError(lex_.peek().pos, "unexpected '" + lex_.peek().text + "'");
        return v;
    }

private:
    Value sum() {
        Value acc = product();
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            Token op = lex_.take();
            Value rhs = product();
            acc = op.kind == Tok::Plus ? alg_.add(acc, rhs) : alg_.sub(acc, rhs);
        }
        return acc;
    }

    Value product() {
        Value acc = unary();
        while (lex_.peek().kind == Tok::Star || lex_.peek().kind == Tok::Slash) {
            Token op = lex_.take();
            Value rhs = unary();
            acc = op.kind == Tok::Star ? alg_.mul(acc, rhs) : alg_.div(acc, rhs, op.pos);
        }
        return acc;
    }

    Value unary() {
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            return alg_.neg(unary());
        }
        if (lex_.peek().kind == Tok::Plus) {
            lex_.take();
            return unary();
        }
        return power();
    }

    Value power() {
        Value base = atom();
        if (lex_.peek().kind != Tok::Caret) return base;
        Token caret = lex_.take();
        long e = exponent();
        return alg_.pow(base, e, caret.pos);
    }

    // Right-associative chain of integer literals: 2^3^2 = 2^9.
    long exponent() {
        bool paren = false;
        if (lex_.peek().kind == Tok::LParen) {
            lex_.take();
            paren = true;
        }
        bool negative = false;
        if (lex_.peek().kind == Tok::Minus || lex_.peek().kind == Tok::Plus) negative = lex_.take().kind == Tok::Minus;
        const Token& t = lex_.peek();
        if (t.kind != Tok::Int) throw ParseError(t.pos, "exponent must be an integer literal");
        Token num = lex_.take();
        if (num.text.size() > 6) throw ParseError(num.pos, "exponent too large");
        long e = std::stol(num.text);
        if (paren) {
            if (lex_.peek().kind != Tok::RParen) throw ParseError(lex_.peek().pos, "exponent must be an integer literal");
            lex_.take();
        }
        if (negative) e = -e;
        if (lex_.peek().kind == Tok::Caret) {
            Token caret = lex_.take();
            long rhs = exponent();
            if (rhs < 0) throw ParseError(caret.pos, "non-integer exponent");
            long r = 1;
            for (long k = 0; k < rhs; ++k) {
                r *= e;
                if (r > 1000000 || r < -1000000) throw ParseError(caret.pos, "exponent too large");
            }
            e = r;
        }
        return e;
    }

    Value atom() {
        Token t = lex_.take();
        switch (t.kind) {
        case Tok::Int: return alg_.integer(mpz_class(t.text));
        case Tok::Ident: return alg_.identifier(t.text, t.pos);
        case Tok::LParen: {
            Value v = sum();
            if (lex_.peek().kind != Tok::RParen) throw ParseError(lex_.peek().pos, "expected ')'");
            lex_.take();
            return v;
        }
        case Tok::End: throw ParseError(t.pos, "unexpected end of input");
        default: throw ParseError(t.pos, "unexpected '" + t.text + "'");
        }
    }

    Lexer lex_;
    const Algebra& alg_;
};

} // namespace detail
} // namespace ppv

#pragma once

#include <cctype>
#include <functional>
#include <string>

#include "secant/errors.hpp"
#include "secant/rat.hpp"

namespace secant {

/// Recursive-descent evaluator for arithmetic expressions over any value
/// type V supporting +, -, *, /. Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := ('+'|'-')* base ('^' UINT)?
///   base   := UINT | SYMBOL | '(' expr ')'
/// Symbols resolve through `resolve`; integer literals are embedded
/// through `literal`, so V never needs a constructor of its own.
template <class V>
class ExprParser {
public:
    using Resolver = std::function<V(const std::string&)>;
    using Literal = std::function<V(const Rat&)>;

    ExprParser(std::string text, Resolver resolve, Literal literal)
        : text_(std::move(text)), resolve_(std::move(resolve)), literal_(std::move(literal)) {}

    V parse() {
        V v = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw InvalidArgument("expression: trailing input at '" + text_.substr(pos_) + "'");
        return v;
    }

private:
    V expr() {
        V v = term();
        for (;;) {
            skip_ws();
            if (accept('+')) v = v + term();
            else if (accept('-')) v = v - term();
            else return v;
        }
    }

    V term() {
        V v = factor();
        for (;;) {
            skip_ws();
            if (accept('*')) v = v * factor();
            else if (accept('/')) v = v / factor();
            else return v;
        }
    }

    V factor() {
        skip_ws();
        bool neg = false;
        while (peek() == '+' || peek() == '-') neg ^= (text_[pos_++] == '-');
        V v = base();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) throw InvalidArgument("expression: exponent must be an unsigned integer");
            unsigned e = static_cast<unsigned>(std::stoul(text_.substr(start, pos_ - start)));
            V p = literal_(Rat(1));
            for (unsigned i = 0; i < e; ++i) p = p * v;
            v = p;
        }
        return neg ? literal_(Rat(-1)) * v : v;
    }

    V base() {
        skip_ws();
        if (accept('(')) {
            V v = expr();
            skip_ws();
            if (!accept(')')) throw InvalidArgument("expression: missing ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return literal_(Rat(BigInt(text_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            return resolve_(text_.substr(start, pos_ - start));
        }
        throw InvalidArgument("expression: unexpected character at '" + text_.substr(pos_) + "'");
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string text_;
    Resolver resolve_;
    Literal literal_;
    std::size_t pos_ = 0;
};

/// Scalar-valued parse: V is constructible from Rat.
template <class V>
V parse_expression(const std::string& text, typename ExprParser<V>::Resolver resolve) {
    return ExprParser<V>(text, std::move(resolve), [](const Rat& r) { return V(r); }).parse();
}

template <class V>
V parse_expression(const std::string& text, typename ExprParser<V>::Resolver resolve,
                   typename ExprParser<V>::Literal literal) {
    return ExprParser<V>(text, std::move(resolve), std::move(literal)).parse();
}

} // namespace secant

#ifndef QES_EXPR_HPP
#define QES_EXPR_HPP

#include "qes/numeric.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace qes {

// Evaluator for the exact-expression fixture language: integers, + - * /,
// parentheses, unary minus and sqrt(...).  Golden table values are stored as
// expressions like "sqrt(2+sqrt(2))" and evaluated at run time, so fixtures
// never bake in decimal approximations.
class ExprParser {
public:
    static BigFloat eval(const std::string& text) {
        ExprParser p(text);
        BigFloat v = p.parse_expr();
        p.skip_ws();
        if (p.pos_ != p.s_.size())
            throw std::invalid_argument("expr: trailing input in '" + text + "'");
        return v;
    }

private:
    explicit ExprParser(const std::string& s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool consume(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    BigFloat parse_expr() {
        BigFloat v = parse_term();
        while (true) {
            if (consume('+')) v += parse_term();
            else if (consume('-')) v -= parse_term();
            else return v;
        }
    }
    BigFloat parse_term() {
        BigFloat v = parse_factor();
        while (true) {
            if (consume('*')) v *= parse_factor();
            else if (consume('/')) v /= parse_factor();
            else return v;
        }
    }
    BigFloat parse_factor() {
        skip_ws();
        if (consume('-')) return -parse_factor();
        if (consume('(')) {
            BigFloat v = parse_expr();
            if (!consume(')')) throw std::invalid_argument("expr: missing ')'");
            return v;
        }
        if (pos_ + 4 <= s_.size() && s_.compare(pos_, 4, "sqrt") == 0) {
            pos_ += 4;
            if (!consume('(')) throw std::invalid_argument("expr: sqrt needs '('");
            BigFloat v = parse_expr();
            if (!consume(')')) throw std::invalid_argument("expr: missing ')'");
            if (v < 0) throw std::invalid_argument("expr: sqrt of negative value");
            return boost::multiprecision::sqrt(v);
        }
        skip_ws();
        const size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw std::invalid_argument("expr: expected number at '" + s_.substr(start) + "'");
        return BigFloat(Integer(s_.substr(start, pos_ - start)));
    }

    const std::string& s_;
    size_t pos_ = 0;
};

inline BigFloat eval_expr(const std::string& text) { return ExprParser::eval(text); }

} // namespace qes

#endif // QES_EXPR_HPP

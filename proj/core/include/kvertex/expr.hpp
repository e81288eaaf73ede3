#pragma once

#include "kvertex/localized.hpp"
#include "kvertex/rational_function.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kvertex {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t column, const std::string& what);
    std::size_t column() const { return column_; }  // 1-based

private:
    std::size_t column_;
};

struct ExprNode {
    enum class Kind { Number, Variable, Neg, Add, Sub, Mul, Div, Pow };
    Kind kind = Kind::Number;
    Rational number;      // Number
    std::string name;     // Variable
    Frac exponent;        // Pow
    std::unique_ptr<ExprNode> lhs, rhs;
    std::size_t column = 0;
};
using Expr = std::unique_ptr<ExprNode>;

// Grammar: sum := product (('+'|'-') product)*
//          product := unary (('*'|'/') unary)*
//          unary := '-' unary | power
//          power := atom ('^' exponent)?
//          exponent := ['-'|'+'] integer | '(' rational expression ')'
Expr parse_expr(std::string_view text);

// num * prod (1 - chi)^e with e of either sign.
struct Factored {
    LaurentPoly num;
    std::map<Character, int> factors;
};

Factored evaluate(const ExprNode& e);

// Throws std::domain_error when a factor free of var sits in a denominator.
RationalFunction to_rational_function(const Factored& v, const std::string& var = "z");
LocalizedPoly to_localized(const Factored& v);
LaurentPoly to_laurent(const Factored& v);

RationalFunction parse_rational_function(std::string_view text, const std::string& var = "z");
LocalizedPoly parse_localized(std::string_view text);
LaurentPoly parse_laurent(std::string_view text);

}  // namespace kvertex

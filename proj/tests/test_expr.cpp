#include "kvertex/expr.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace kvertex;

namespace {

std::size_t error_column(const std::string& text) {
    try {
        parse_expr(text);
    } catch (const ParseError& e) {
        return e.column();
    }
    return 0;
}

}  // namespace

TEST(ParseExpr, Precedence) {
    const Expr e = parse_expr("1+2*x^3");
    ASSERT_EQ(e->kind, ExprNode::Kind::Add);
    EXPECT_EQ(e->rhs->kind, ExprNode::Kind::Mul);
    EXPECT_EQ(e->rhs->rhs->kind, ExprNode::Kind::Pow);
    EXPECT_EQ(e->rhs->rhs->exponent, Frac(3));
    const Expr n = parse_expr("-x^2");
    ASSERT_EQ(n->kind, ExprNode::Kind::Neg);
    EXPECT_EQ(n->lhs->kind, ExprNode::Kind::Pow);
    EXPECT_EQ(parse_laurent("-x^2"), -parse_laurent("x^2"));
    EXPECT_EQ(parse_laurent("2-3-4"), LaurentPoly(-5L));
    EXPECT_EQ(parse_laurent("12/3/2"), LaurentPoly(2L));
}

TEST(ParseExpr, VariablesAndExponents) {
    EXPECT_EQ(parse_laurent("s_{1,2}^-1"), LaurentPoly::var("s_{1,2}", -1));
    EXPECT_EQ(parse_laurent("t^(1/2)"), LaurentPoly::var("t", Frac(1, 2)));
    EXPECT_EQ(parse_laurent("t^(-3/2)"), LaurentPoly::var("t", Frac(-3, 2)));
    EXPECT_EQ(parse_laurent("x2y"), LaurentPoly::var("x2y"));
    EXPECT_EQ(parse_laurent("zeta4^2"), LaurentPoly(-1L));
    EXPECT_EQ(parse_laurent("3/4"), LaurentPoly(CycloScalar(ratio(3, 4))));
}

TEST(ParseExpr, RationalFunctionFactors) {
    const RationalFunction f = parse_rational_function("1/((1-z)*(1-t*z))");
    EXPECT_EQ(f.denominator().size(), 2u);
    EXPECT_EQ(f.total_multiplicity(), 2);
    const RationalFunction g = parse_rational_function("z^2/(1-z)^3");
    EXPECT_EQ(g.prefactor(), LaurentPoly::var("z", 2));
    ASSERT_EQ(g.denominator().size(), 1u);
    EXPECT_EQ(g.denominator().begin()->second, 3);
}

TEST(ParseExpr, InvertedFactorNormalizes) {
    EXPECT_EQ(parse_rational_function("1/(1-z^-1)"), parse_rational_function("-z/(1-z)"));
    EXPECT_EQ(parse_rational_function("1/(z-1)"), parse_rational_function("-1/(1-z)"));
    EXPECT_EQ(parse_rational_function("1/(1+z)"), RationalFunction::factor("z", Character(Monomial(), Frac(1, 2)), 1));
}

TEST(ParseExpr, CoefficientDenominators) {
    const LocalizedPoly c = parse_localized("1/(1-x)");
    EXPECT_EQ(c.denominator().size(), 1u);
    EXPECT_THROW(parse_rational_function("1/(1-x)"), std::domain_error);
    EXPECT_THROW(parse_rational_function("1/((1-x)*(1-z))"), std::domain_error);
    EXPECT_EQ(parse_rational_function("1/(1-x*z)").denominator().size(), 1u);
}

TEST(ParseExpr, LaurentRejectsDenominators) {
    EXPECT_THROW(parse_laurent("1/(1-x)"), std::domain_error);
    EXPECT_THROW(parse_laurent("1/(1+x+x^2)"), std::domain_error);
}

TEST(ParseExpr, ErrorColumns) {
    EXPECT_EQ(error_column("1+*2"), 3u);
    EXPECT_EQ(error_column("2x"), 2u);
    EXPECT_EQ(error_column("(1-z"), 5u);
    EXPECT_EQ(error_column("1.5"), 2u);
    EXPECT_EQ(error_column("x^y"), 3u);
    EXPECT_EQ(error_column(""), 1u);
    EXPECT_EQ(error_column("z)"), 2u);
}

TEST(ParseExpr, ErrorMessage) {
    try {
        parse_expr("1+*2");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(std::string(e.what()).rfind("parse error at column 3: ", 0), 0u) << e.what();
    }
}

TEST(ParseExpr, PrintParseRoundTripLaurent) {
    std::mt19937_64 rng(41);
    const char* names[] = {"s", "t", "z", "s_{1,2}"};
    for (int i = 0; i < 100; ++i) {
        LaurentPoly p;
        for (int j = 0, n = 1 + static_cast<int>(rng() % 4); j < n; ++j) {
            Monomial m;
            for (const char* v : names) {
                if (rng() % 2) m *= Monomial::var(v, Frac(static_cast<std::int64_t>(rng() % 7) - 3, 1 + static_cast<std::int64_t>(rng() % 2)));
            }
            CycloScalar c = ratio(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 4));
            if (rng() % 4 == 0) c *= root_of_unity(3 + static_cast<unsigned>(rng() % 4), 1);
            p.add_term(m, c);
        }
        EXPECT_EQ(parse_laurent(p.to_string()), p) << p.to_string();
    }
}

TEST(ParseExpr, PrintParseRoundTripRational) {
    std::mt19937_64 rng(42);
    const char* chars[] = {"1", "t", "t^2", "s/t", "zeta3", "-1"};
    for (int i = 0; i < 60; ++i) {
        std::string text = "(z^" + std::to_string(static_cast<int>(rng() % 5) - 2) + "-t)";
        for (int j = 0, n = static_cast<int>(rng() % 4); j < n; ++j) {
            text += "/(1-" + std::string(chars[rng() % 6]) + "*z";
            if (rng() % 3 == 0) text += "^2";
            text += ")^" + std::to_string(1 + rng() % 3);
        }
        const RationalFunction f = parse_rational_function(text);
        EXPECT_EQ(parse_rational_function(f.to_string()), f) << text << " printed " << f.to_string();
        EXPECT_EQ(parse_rational_function(f.to_string()).to_string(), f.to_string());
    }
}

TEST(ParseExpr, PrintParseRoundTripLocalized) {
    for (const char* text : {"1/(1-t)", "-t/(1-t)", "(1+s)/((1-t)^2*(1-s/t))", "s^(1/2)/(1-zeta3*t)"}) {
        const LocalizedPoly c = parse_localized(text);
        EXPECT_EQ(parse_localized(c.to_string()), c) << text << " printed " << c.to_string();
    }
}

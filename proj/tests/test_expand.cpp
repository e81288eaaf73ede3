#include "kvertex/expand.hpp"
#include "kvertex/expr.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace kvertex;

namespace {

RationalFunction rf(const char* text) { return parse_rational_function(text); }
LaurentPoly lp(const char* text) { return parse_laurent(text); }

LaurentPoly truncate_below(const LaurentPoly& p, const std::string& var, long below) {
    LaurentPoly out;
    for (const auto& [m, c] : p.terms()) {
        if (m.exponent(var) < Frac(below)) out.add_term(m, c);
    }
    return out;
}

// Sum of c_k z^k over the stored coefficients.
LaurentPoly resum(const Series<LaurentPoly>& s, const std::string& var, int sign) {
    LaurentPoly out;
    for (const auto& [k, c] : s.coefficients()) out += c * LaurentPoly::var(var, sign * k);
    return out;
}

RationalFunction random_rf(std::mt19937_64& rng) {
    const char* chars[] = {"1", "t", "t^2", "s/t", "zeta3"};
    std::string text = "z^" + std::to_string(static_cast<int>(rng() % 5) - 2);
    const int nf = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < nf; ++i) {
        text += "/(1-" + std::string(chars[rng() % 5]) + "*z";
        if (rng() % 3 == 0) text += "^2";
        text += ")";
        if (rng() % 3 == 0) text += "^2";
    }
    return rf(text.c_str());
}

}  // namespace

TEST(ExpandAt, InverseAtOne) {
    const FormalSeries s = expand_at(rf("z^-1"), Point::One, 3);
    EXPECT_EQ(s.to_string(), "1 + (1-z) + (1-z)^2 + O((1-z)^3)");
    for (int k = 0; k < 3; ++k) EXPECT_EQ(s.coefficient(k), LocalizedPoly(1L));
}

TEST(ExpandAt, GeometricAtZero) {
    const FormalSeries s = expand_at(rf("1/(1-z)"), Point::Zero, 3);
    EXPECT_EQ(s.to_string(), "1 + z + z^2 + O(z^3)");
    EXPECT_EQ(s.truncation(), 3);
}

TEST(ExpandAt, GeometricAtInfinity) {
    const FormalSeries s = expand_at(rf("1/(1-z)"), Point::Infinity, 3);
    EXPECT_EQ(s.to_string(), "-z^-1 - z^-2 - z^-3 + O(z^-4)");
    EXPECT_THROW(s.coefficient(4), std::out_of_range);
}

TEST(ExpandAt, MultiplyBackAtZero) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 30; ++i) {
        const RationalFunction f = random_rf(rng);
        const int prec = 12;
        const Series<LaurentPoly> s = expand_laurent(f, Point::Zero, prec);
        const LaurentPoly back = truncate_below(resum(s, "z", 1) * f.denominator_poly(), "z", prec - 6);
        EXPECT_EQ(back, truncate_below(f.prefactor(), "z", prec - 6)) << f.to_string();
    }
}

TEST(ExpandAt, MultiplyBackAtInfinity) {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 30; ++i) {
        const RationalFunction f = random_rf(rng);
        const int prec = 12;
        const LaurentPoly den = f.denominator_poly();
        Frac top = 0;
        for (const auto& [m, c] : den.terms()) top = std::max(top, m.exponent("z"));
        const long keep = top.to_int() - prec + 1;
        const LaurentPoly back = resum(expand_laurent(f, Point::Infinity, prec), "z", -1) * den;
        EXPECT_EQ(back - truncate_below(back, "z", keep), f.prefactor() - truncate_below(f.prefactor(), "z", keep)) << f.to_string();
    }
}

TEST(ExpandAt, CommutesWithCharacterScaling) {
    std::mt19937_64 rng(9);
    const Character t(Monomial::var("t"));
    for (int i = 0; i < 20; ++i) {
        const RationalFunction f = random_rf(rng);
        const Series<LaurentPoly> a = expand_laurent(f.scale_variable(t), Point::Zero, 10);
        const Series<LaurentPoly> b = expand_laurent(f, Point::Zero, 10);
        for (const auto& [k, c] : b.coefficients()) EXPECT_EQ(a.coeff(k), c * LaurentPoly::var("t", k)) << f.to_string();
    }
}

TEST(ExpandEquivariant, OrderOneTrivialCharacter) {
    const EquivariantExpansion e = expand_equivariant(Monomial(), Monomial(), 1);
    ASSERT_EQ(e.terms.size(), 1u);
    EXPECT_EQ(e.sum(), rf("1/(1-z)"));
}

TEST(ExpandEquivariant, PivotEqualToCharacter) {
    const Monomial t = Monomial::var("t");
    const EquivariantExpansion e = expand_equivariant(t, t, 2);
    ASSERT_EQ(e.terms.size(), 2u);
    EXPECT_EQ(e.terms[0], rf("1/(1-t*z)"));
    EXPECT_EQ(e.terms[1], parse_rational_function("-t*z*(1-w)/(1-t*z)^2"));
}

TEST(ExpandEquivariant, DefectIsHighOrder) {
    const Monomial t = Monomial::var("t"), s = Monomial::var("s");
    for (int order = 1; order <= 4; ++order) {
        const EquivariantExpansion e = expand_equivariant(t, s, order);
        std::string a = "(-s*z/(1-s*z))^" + std::to_string(order);
        std::string b = "(1-t*w/s)^" + std::to_string(order);
        EXPECT_EQ(e.defect(), -parse_rational_function(a + "*" + b)) << order;
    }
}

TEST(PartialFractions, TwoSimplePoles) {
    const RationalFunction f = rf("1/((1-z)*(1-t*z))");
    const PartialFractions pf = partial_fractions(f);
    EXPECT_EQ(pf.to_string(), "(1/(1-t))/(1-z)+(-t/(1-t))/(1-t*z)");
    ASSERT_EQ(pf.poles.size(), 2u);
    EXPECT_EQ(pf.poles[0].coefficient, parse_localized("1/(1-t)"));
    EXPECT_EQ(pf.poles[1].coefficient, parse_localized("-t/(1-t)"));
    EXPECT_TRUE(recombines_to(pf, f));
}

TEST(PartialFractions, CyclotomicSplit) {
    const RationalFunction f = rf("1/(1-z^2)");
    const PartialFractions pf = partial_fractions(f);
    ASSERT_EQ(pf.poles.size(), 2u);
    for (const auto& p : pf.poles) {
        EXPECT_EQ(p.m, 1);
        EXPECT_EQ(p.coefficient, LocalizedPoly(CycloScalar(ratio(1, 2))));
        EXPECT_TRUE(p.a.is_root_of_unity());
    }
    EXPECT_EQ(pf.poles[0].a, Character(Monomial()));
    EXPECT_EQ(pf.poles[1].a, Character(Monomial(), Frac(1, 2)));
    EXPECT_TRUE(recombines_to(pf, f));
}

TEST(PartialFractions, PolynomialOnly) {
    const PartialFractions pf = partial_fractions(rf("z^3"));
    EXPECT_TRUE(pf.poles.empty());
    EXPECT_EQ(pf.polynomial, lp("z^3"));
}

TEST(PartialFractions, RandomRoundTrip) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 40; ++i) {
        const RationalFunction f = random_rf(rng);
        EXPECT_TRUE(recombines_to(partial_fractions(f), f)) << f.to_string();
    }
}

TEST(PartialFractions, ExpansionsAgreeTermwise) {
    std::mt19937_64 rng(12);
    const char* roots[] = {"1", "-1", "zeta3", "zeta3^2", "zeta4"};
    for (int i = 0; i < 15; ++i) {
        std::string text = "z^" + std::to_string(static_cast<int>(rng() % 5) - 2) + "*(1+t)";
        for (int j = 0, n = 1 + static_cast<int>(rng() % 3); j < n; ++j) {
            text += "/(1-" + std::string(roots[rng() % 5]) + "*z)";
            if (rng() % 2 == 0) text += "^2";
        }
        const RationalFunction f = rf(text.c_str());
        const PartialFractions pf = partial_fractions(f);
        for (Point pt : {Point::Zero, Point::Infinity}) {
            Series<LaurentPoly> sum = expand_laurent(RationalFunction("z", pf.polynomial), pt, 12);
            for (const auto& p : pf.poles) {
                RationalFunction term = RationalFunction::factor("z", p.a, 1, p.m).times(p.coefficient.to_laurent());
                sum = sum + expand_laurent(term, pt, 12);
            }
            const Series<LaurentPoly> direct = expand_laurent(f, pt, 12);
            for (int k = -12; k < 12; ++k) EXPECT_EQ(sum.coeff(k), direct.coeff(k)) << f.to_string() << " k=" << k;
        }
    }
}

TEST(SplitDenominator, SquaresSplitIntoRoots) {
    const auto lin = split_denominator(rf("1/(1-t*z^2)^2"));
    ASSERT_EQ(lin.size(), 2u);
    for (const auto& [a, m] : lin) EXPECT_EQ(m, 2);
}

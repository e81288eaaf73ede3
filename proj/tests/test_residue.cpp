#include "kvertex/expr.hpp"
#include "kvertex/residue.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace kvertex;

namespace {

RationalFunction rf(const std::string& text) { return parse_rational_function(text); }
LaurentPoly lp(const char* text) { return parse_laurent(text); }

RationalFunction random_rf(std::mt19937_64& rng) {
    const char* chars[] = {"1", "t", "t^2", "s/t", "s", "zeta3", "-1"};
    std::string text = "z^" + std::to_string(static_cast<int>(rng() % 7) - 3);
    const int nf = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < nf; ++i) {
        text += "/(1-" + std::string(chars[rng() % 7]) + "*z";
        if (rng() % 4 == 0) text += "^2";
        text += ")^" + std::to_string(1 + rng() % 3);
    }
    return rf(text);
}

int oracle_order(const RationalFunction& f) { return 4 * f.total_multiplicity() + 16; }

}  // namespace

TEST(ResidueK, SimplePole) { EXPECT_EQ(residue_k(rf("1/(1-z)")), LaurentPoly(1L)); }

TEST(ResidueK, ConstraintVanishes) { EXPECT_TRUE(residue_k(rf("z^2/(1-z)^3")).is_zero()); }

TEST(ResidueK, LaurentPolynomialsVanish) {
    EXPECT_TRUE(residue_k(rf("z^3-2*z+5+t*z^-4")).is_zero());
    EXPECT_TRUE(residue_k(rf("1")).is_zero());
}

TEST(ResidueK, TwoCharacters) {
    const RationalFunction f = rf("1/((1-z)*(1-t*z))");
    EXPECT_EQ(residue_k(f), LaurentPoly(1L));
    EXPECT_EQ(residue_k_oracle(f, 10), LaurentPoly(1L));
}

// Values computed independently as Res_0 + Res_inf of f dz/z.
TEST(ResidueK, FrozenValues) {
    EXPECT_TRUE(residue_k(rf("z^2/((1-t*z)^2*(1-s*z))")).is_zero());
    EXPECT_EQ(residue_k(rf("z^-1/((1-t*z)*(1-s*z)^2)")), lp("2*s+t"));
    EXPECT_EQ(residue_k(rf("z^3/(1-t*z)^3")), lp("t^-3"));
    EXPECT_EQ(residue_k(rf("1/((1-t*z)*(1-z/s))")), LaurentPoly(1L));
    EXPECT_EQ(residue_k(rf("z^-2/(1-t*z^2)")), lp("t"));
}

TEST(ResidueKOracle, RootOfUnityDoublePole) {
    EXPECT_EQ(residue_k_oracle(rf("1/(1-zeta3*z)^2"), 8), LaurentPoly(1L));
    EXPECT_EQ(residue_k(rf("1/(1-zeta3*z)^2")), LaurentPoly(1L));
}

TEST(ResidueKOracle, ShiftedNumerator) {
    EXPECT_EQ(residue_k_oracle(rf("z/(1-z)"), 6), LaurentPoly(1L));
    EXPECT_EQ(residue_k(rf("z/(1-z)")), LaurentPoly(1L));
}

TEST(ResidueKOracle, InvertedArgument) {
    const RationalFunction f = rf("1/(1-z)").invert_variable();
    EXPECT_EQ(residue_k_oracle(f, 6), LaurentPoly(-1L));
    EXPECT_EQ(residue_k(f), LaurentPoly(-1L));
}

TEST(ResidueNaive, Examples) {
    EXPECT_EQ(residue_naive(rf("1/(1-z)")), LocalizedPoly(1L));
    EXPECT_TRUE(residue_naive(rf("1/(1-zeta4*z)")).is_zero());
    EXPECT_TRUE(residue_naive(rf("1/(1-t*z)")).is_zero());
    EXPECT_EQ(residue_naive(rf("1/((1-z)*(1-t*z))")), parse_localized("1/(1-t)"));
}

TEST(ResidueCoh, Examples) {
    EXPECT_EQ(residue_coh(lp("u^-1")), LaurentPoly(1L));
    EXPECT_TRUE(residue_coh(lp("u^-2")).is_zero());
    EXPECT_TRUE(residue_coh(lp("u^3")).is_zero());
    EXPECT_EQ(residue_coh(lp("3*t*u^-1+u^-2+1")), lp("3*t"));
}

TEST(Constraints, KTheoryAllPass) {
    const auto cases = constraint_suite(ResidueKind::KTheory, 4, 4);
    ASSERT_FALSE(cases.empty());
    for (const auto& c : cases) EXPECT_TRUE(c.pass) << c.n << "," << c.k << "," << c.a << " " << c.value;
}

TEST(Constraints, KTheorySpecificValues) {
    EXPECT_EQ(residue_k(rf("1/(1-z^3)")), LaurentPoly(1L));
    EXPECT_TRUE(residue_k(rf("z^5/(1-z^3)^2")).is_zero());
}

TEST(Constraints, NaiveFailsAtSecondRoots) {
    EXPECT_EQ(residue_naive(rf("1/(1-z^2)")), LocalizedPoly(CycloScalar(ratio(1, 2))));
    const auto cases = constraint_suite(ResidueKind::Naive, 3, 2);
    bool some_n2_fails = false;
    for (const auto& c : cases) some_n2_fails |= c.n == 2 && !c.pass;
    EXPECT_TRUE(some_n2_fails);
}

TEST(Constraints, CohomologicalHasNoMultiplicativeFamily) {
    EXPECT_THROW(constraint_suite(ResidueKind::Cohomological, 3, 3), std::invalid_argument);
}

TEST(ResidueProperties, ClosedFormMatchesOracle) {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 60; ++i) {
        const RationalFunction f = random_rf(rng);
        EXPECT_EQ(residue_k(f), residue_k_oracle(f, oracle_order(f))) << f.to_string();
    }
}

TEST(ResidueProperties, CharacterScalingInvariance) {
    std::mt19937_64 rng(22);
    const Character q(Monomial::var("q"));
    for (int i = 0; i < 40; ++i) {
        const RationalFunction f = random_rf(rng);
        EXPECT_EQ(residue_k(f.scale_variable(q)), residue_k(f)) << f.to_string();
    }
}

TEST(ResidueProperties, InversionAntisymmetry) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 40; ++i) {
        const RationalFunction f = random_rf(rng);
        EXPECT_EQ(residue_k(f.invert_variable()), -residue_k(f)) << f.to_string();
    }
}

TEST(ResidueProperties, RootsOfUnityPoles) {
    for (unsigned n = 1; n <= 6; ++n) {
        for (unsigned j = 0; j < n; ++j) {
            const Character g(Monomial(), Frac(j, n));
            for (int m = 1; m <= 4; ++m) {
                const RationalFunction f = RationalFunction::factor("z", g, 1, m);
                EXPECT_EQ(residue_k(f), LaurentPoly(1L)) << n << " " << j << " " << m;
                const LocalizedPoly expect = g.is_one() ? LocalizedPoly(1L) : LocalizedPoly();
                EXPECT_EQ(residue_naive(f), expect) << n << " " << j << " " << m;
            }
        }
    }
}

TEST(ResidueProperties, ResidueTheoremDecomposition) {
    std::mt19937_64 rng(24);
    const char* roots[] = {"1", "-1", "zeta3", "zeta4", "zeta5^2", "zeta6"};
    for (int i = 0; i < 30; ++i) {
        std::string text = "z^" + std::to_string(static_cast<int>(rng() % 5) - 2);
        for (int j = 0, n = 1 + static_cast<int>(rng() % 3); j < n; ++j) {
            text += "/(1-" + std::string(roots[rng() % 6]) + "*z)^" + std::to_string(1 + rng() % 2);
        }
        const RationalFunction f = rf(text);
        LaurentPoly others;
        for (const auto& g : root_poles(f)) {
            if (!g.is_one()) others += residue_at_root(f, g);
        }
        EXPECT_EQ(LocalizedPoly(residue_k(f)), residue_naive(f) - LocalizedPoly(others)) << text;
    }
}

TEST(ResiduePole, MatchesGeneralResidue) {
    const Character t(Monomial::var("t"));
    for (long b = -3; b <= 3; ++b) {
        for (int m = 1; m <= 3; ++m) {
            const RationalFunction f = RationalFunction::factor("z", t, 1, m).times(LaurentPoly::var("z", b));
            EXPECT_EQ(residue_k_pole(t, b, m), residue_k_oracle(f, 20)) << b << " " << m;
        }
    }
}

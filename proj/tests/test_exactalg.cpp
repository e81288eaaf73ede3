#include "kvertex/laurent.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace kvertex;

namespace {

LaurentPoly v(const std::string& n, Frac e = 1) { return LaurentPoly::var(n, e); }

// Falling factorial, evaluated independently of generalized_binomial.
Rational falling_over_factorial(long n, long k) {
    Rational num = 1, den = 1;
    for (long i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

LaurentPoly random_poly(std::mt19937_64& rng) {
    const char* names[] = {"s", "t", "z"};
    LaurentPoly p;
    const int nterms = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < nterms; ++i) {
        Monomial m;
        for (const char* n : names) m *= Monomial::var(n, static_cast<std::int64_t>(rng() % 5) - 2);
        CycloScalar c = ratio(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
        if (rng() % 3 == 0) c *= root_of_unity(3 + static_cast<unsigned>(rng() % 3), 1);
        p.add_term(m, c);
    }
    return p;
}

}  // namespace

TEST(PolyArith, CancellationLeavesSingleVariable) { EXPECT_EQ((v("s") + v("t")) + (-v("s")), v("t")); }

TEST(PolyArith, DifferenceOfSquares) {
    EXPECT_EQ((LaurentPoly(1L) - v("z")) * (LaurentPoly(1L) + v("z")), LaurentPoly(1L) - v("z", 2));
    EXPECT_EQ(((LaurentPoly(1L) - v("z")) * (LaurentPoly(1L) + v("z"))).to_string(), "1-z^2");
}

TEST(PolyArith, HalfExponentsAdd) {
    const LaurentPoly h = v("s", Frac(1, 2));
    const Frac sum = Frac(1, 2) + Frac(1, 2);
    EXPECT_EQ(sum, Frac(1));
    EXPECT_EQ(h * h, v("s", sum));
    EXPECT_EQ((h * h).to_string(), "s");
}

TEST(GeneralizedBinomial, Examples) {
    EXPECT_EQ(generalized_binomial(5, 2), 10);
    EXPECT_EQ(generalized_binomial(-1, 3), falling_over_factorial(-1, 3));
    EXPECT_EQ(generalized_binomial(-1, 3), -1);
    EXPECT_EQ(generalized_binomial(0, 0), 1);
    EXPECT_THROW(generalized_binomial(3, -1), std::invalid_argument);
}

TEST(GeneralizedBinomial, MatchesFallingFactorial) {
    for (long n = -8; n <= 8; ++n)
        for (long k = 0; k <= 8; ++k) EXPECT_EQ(generalized_binomial(n, k), falling_over_factorial(n, k)) << n << " " << k;
}

TEST(Symmetrize, OrbitSumSingleVariable) {
    EXPECT_EQ(symmetrize(v("s1"), {{"s1", "s2"}}), v("s1") + v("s2"));
}

TEST(Symmetrize, OrbitSumSymmetricProduct) {
    const LaurentPoly p = v("z") * v("s1") * v("s2");
    // S_2 has two elements, both fixing p.
    LaurentPoly oracle = p + p.rename([](const std::string& n) { return n == "s1" ? "s2" : n == "s2" ? "s1" : n; });
    EXPECT_EQ(symmetrize(p, {{"s1", "s2"}}), oracle);
    EXPECT_EQ(oracle, p * LaurentPoly(2L));
}

TEST(Symmetrize, AveragedFixesSymmetric) {
    const LaurentPoly p = v("s1") * v("s2") + v("s1", 2) + v("s2", 2);
    EXPECT_EQ(symmetrize(p, {{"s1", "s2"}}, Normalization::Averaged), p);
}

TEST(Symmetrize, AveragedIdempotent) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        LaurentPoly p = random_poly(rng).rename([](const std::string& n) { return n == "s" ? "a" : n == "t" ? "b" : n; });
        p = p * v("c");
        const std::vector<std::vector<std::string>> blocks{{"a", "b", "c"}};
        const LaurentPoly once = symmetrize(p, blocks, Normalization::Averaged);
        EXPECT_TRUE(is_block_symmetric(once, blocks));
        EXPECT_EQ(symmetrize(once, blocks, Normalization::Averaged), once);
    }
}

TEST(Symmetrize, OverlappingBlocksRejected) {
    EXPECT_THROW(symmetrize(v("a"), {{"a", "b"}, {"b", "c"}}), std::invalid_argument);
}

TEST(RootOfUnity, Examples) {
    EXPECT_EQ(root_of_unity(1, 0), CycloScalar(1L));
    EXPECT_EQ(root_of_unity(2, 1), CycloScalar(-1L));
    EXPECT_EQ(root_of_unity(4, 1) * root_of_unity(4, 1), CycloScalar(-1L));
    EXPECT_EQ(root_of_unity(4, 1).to_string(), "zeta4");
    EXPECT_THROW(root_of_unity(0, 1), std::invalid_argument);
}

TEST(RootOfUnity, CyclotomicRelations) {
    for (unsigned n = 1; n <= 12; ++n) {
        const CycloScalar z = root_of_unity(n, 1);
        EXPECT_EQ(z.pow(n), CycloScalar(1L)) << n;
        CycloScalar phi;
        const auto& c = cyclotomic_polynomial(n);
        for (std::size_t j = 0; j < c.size(); ++j) phi += CycloScalar(c[j]) * z.pow(static_cast<long>(j));
        EXPECT_TRUE(phi.is_zero()) << n;
        for (long j = -n; j <= static_cast<long>(2 * n); ++j) EXPECT_EQ(root_of_unity(n, j), z.pow(j));
    }
}

TEST(CycloScalar, EmbeddingCommutesWithArithmetic) {
    std::mt19937_64 rng(11);
    for (unsigned n = 1; n <= 12; ++n) {
        for (int i = 0; i < 5; ++i) {
            Rational a = ratio(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 5));
            Rational b = ratio(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 5));
            if (b == 0) b = 1;
            std::vector<Rational> pa(n, 0), pb(n, 0);
            pa[0] = a;
            pb[0] = b;
            const CycloScalar ea = CycloScalar::from_powers(n, pa), eb = CycloScalar::from_powers(n, pb);
            EXPECT_EQ(ea + eb, CycloScalar(Rational(a + b)));
            EXPECT_EQ(ea * eb, CycloScalar(Rational(a * b)));
            EXPECT_EQ(ea / eb, CycloScalar(Rational(a / b)));
            EXPECT_TRUE((ea * eb).is_rational());
        }
    }
}

TEST(CycloScalar, InverseAndMixedOrders) {
    const CycloScalar a = CycloScalar(1L) + root_of_unity(5, 2);
    EXPECT_EQ(a * a.inverse(), CycloScalar(1L));
    // zeta3 * zeta4 = zeta12^7
    EXPECT_EQ(root_of_unity(3, 1) * root_of_unity(4, 1), root_of_unity(12, 7));
    // zeta6 lies in Q(zeta3)
    EXPECT_EQ(root_of_unity(6, 1).order(), 3u);
    EXPECT_EQ(root_of_unity(6, 1), -root_of_unity(3, 2));
}

TEST(PolyArith, RingAxiomsOnRandomTriples) {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 100; ++i) {
        const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_TRUE((a - a).is_zero());
    }
}

TEST(Monomial, PrintsCanonically) {
    Monomial m = Monomial::var("s_{1,2}", 2) * Monomial::var("t", Frac(1, 2)) * Monomial::var("z", -1);
    EXPECT_EQ(m.to_string(), "s_{1,2}^2*t^(1/2)*z^-1");
    EXPECT_TRUE((m / m).is_one());
}

TEST(DivideOneMinus, ExactAndInexact) {
    LaurentPoly q;
    const Character t(Monomial::var("t"));
    ASSERT_TRUE(divide_one_minus(LaurentPoly(1L) - v("t", 3), t, q));
    EXPECT_EQ(q, LaurentPoly(1L) + v("t") + v("t", 2));
    EXPECT_FALSE(divide_one_minus(LaurentPoly(1L) + v("t"), t, q));
}

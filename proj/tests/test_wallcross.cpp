#include "kvertex/expr.hpp"
#include "kvertex/wallcross.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace kvertex;

namespace {

using Parts = std::vector<std::vector<DimVector>>;

FreeLie gen(const DimVector& a, const Rational& c = 1) { return FreeLie::generator(generator_name(a), c); }

InvariantTable<FreeLie> generator_table(const std::vector<DimVector>& classes) {
    InvariantTable<FreeLie> t;
    for (const auto& a : classes) t.emplace(a, gen(a));
    return t;
}

StabilityData two_vertex(std::vector<Rational> slope, std::vector<long> rank = {1, 1}) {
    return StabilityData(std::move(rank), std::move(slope), {{1, 2}, {2, 1}});
}

FreeLie random_free(std::mt19937_64& rng, const std::vector<std::string>& gens, int terms) {
    FreeLie out;
    for (int i = 0; i < terms; ++i) {
        FreeLie w = FreeLie::generator(gens[rng() % gens.size()]);
        const int len = 1 + static_cast<int>(rng() % 4);
        for (int j = 1; j < len; ++j) {
            const FreeLie g = FreeLie::generator(gens[rng() % gens.size()]);
            w = rng() % 2 ? bracket(g, w) : bracket(w, g);
        }
        out += w.scaled(ratio(static_cast<long>(rng() % 5) - 2, 1 + static_cast<long>(rng() % 3)));
    }
    return out;
}

}  // namespace

TEST(Stability, Validation) {
    EXPECT_THROW(StabilityData({0}, {1}, {{1}}), std::invalid_argument);
    EXPECT_THROW(StabilityData({1}, {1}, {{0}}), std::invalid_argument);
    const StabilityData s = two_vertex({1, 0});
    EXPECT_EQ(s.tau({1, 1}), ratio(1, 2));
    EXPECT_EQ(s.lambda(1, {1, 3}), 5);
}

TEST(OrderedPartitions, OneVertexTwo) {
    const StabilityData s = StabilityData::uniform(1, {{1}});
    EXPECT_EQ(ordered_partitions({2}, s), (Parts{{{2}}, {{1}, {1}}}));
}

TEST(OrderedPartitions, SlopeFilter) {
    EXPECT_EQ(ordered_partitions({1, 1}, two_vertex({1, 0})), (Parts{{{1, 1}}}));
    EXPECT_EQ(ordered_partitions({1, 1}, two_vertex({0, 0})), (Parts{{{1, 1}}, {{0, 1}, {1, 0}}, {{1, 0}, {0, 1}}}));
}

TEST(OrderedPartitions, SingleClass) {
    EXPECT_EQ(ordered_partitions({1, 0}, two_vertex({1, 0})), (Parts{{{1, 0}}}));
    EXPECT_THROW(ordered_partitions({0, 0}, two_vertex({1, 0})), std::invalid_argument);
}

// Compositions of n number 2^{n-1}.
TEST(OrderedPartitions, CompositionCount) {
    const StabilityData s = StabilityData::uniform(1, {{1}});
    for (int n = 1; n <= 7; ++n) EXPECT_EQ(ordered_partitions({n}, s).size(), std::size_t{1} << (n - 1));
}

TEST(Classes, Enumeration) {
    EXPECT_EQ(classes_up_to({1, 1}), (std::vector<DimVector>{{0, 1}, {1, 0}, {1, 1}}));
    EXPECT_EQ(classes_of_total_at_most(2, 2).size(), 5u);
    EXPECT_EQ(generator_name({2}), "Z2");
    EXPECT_EQ(generator_name({1, 1}), "Z1_1");
}

TEST(ForwardTransform, Indecomposable) {
    const StabilityData s = two_vertex({1, 0});
    const auto z = generator_table({{1, 0}, {0, 1}, {1, 1}});
    EXPECT_EQ(forward_transform(FreeAlgebra{}, z, 0, {1, 1}, s), gen({1, 1}, 3));
}

TEST(ForwardTransform, TwoDistinctParts) {
    const StabilityData s = two_vertex({0, 0});
    const auto z = generator_table({{1, 0}, {0, 1}, {1, 1}});
    const DimVector b1{1, 0}, b2{0, 1};
    const Rational half_diff = Rational(s.lambda(0, b2) - s.lambda(0, b1)) / 2;
    const FreeLie expect = gen({1, 1}, s.lambda(0, {1, 1})) + bracket(gen(b1), gen(b2)).scaled(half_diff);
    EXPECT_EQ(forward_transform(FreeAlgebra{}, z, 0, {1, 1}, s), expect);
}

TEST(ForwardTransform, RepeatedGeneratorCancels) {
    const StabilityData s = StabilityData::uniform(1, {{3}});
    const auto z = generator_table({{1}, {2}});
    EXPECT_EQ(forward_transform(FreeAlgebra{}, z, 0, {2}, s), gen({2}, 6));
}

TEST(ForwardTransform, MissingEntryNamesClass) {
    const StabilityData s = StabilityData::uniform(1, {{1}});
    try {
        forward_transform(FreeAlgebra{}, generator_table({{2}}), 0, {2}, s);
        FAIL() << "expected out_of_range";
    } catch (const std::out_of_range& e) {
        EXPECT_EQ(std::string(e.what()), "missing table entry for class (1)");
    }
}

TEST(InvertTransform, SingleClass) {
    const StabilityData s = two_vertex({1, 0});
    InvariantTable<FreeLie> zt{{{1, 1}, gen({1, 1})}};
    EXPECT_EQ(invert_transform(FreeAlgebra{}, zt, 0, s).at({1, 1}), gen({1, 1}, ratio(1, 3)));
}

TEST(InvertTransform, RoundTripOneVertex) {
    const StabilityData s = StabilityData::uniform(1, {{1}, {2}});
    const auto z = generator_table(classes_of_total_at_most(1, 4));
    for (std::size_t k = 0; k < 2; ++k) EXPECT_EQ(invert_transform(FreeAlgebra{}, forward_table(FreeAlgebra{}, z, k, s), k, s), z);
}

TEST(InvertTransform, RoundTripTwoVertices) {
    const std::vector<StabilityData> stabs = {StabilityData::uniform(2, {{1, 1}, {1, 2}}), two_vertex({1, 0}), two_vertex({0, 0}, {1, 2})};
    const auto z = generator_table(classes_of_total_at_most(2, 3));
    for (const auto& s : stabs) {
        for (std::size_t k = 0; k < 2; ++k) EXPECT_EQ(invert_transform(FreeAlgebra{}, forward_table(FreeAlgebra{}, z, k, s), k, s), z);
    }
}

TEST(ForwardTransform, LinearAndTriangular) {
    const StabilityData s = StabilityData::uniform(2, {{1, 2}});
    const auto classes = classes_of_total_at_most(2, 3);
    auto z = generator_table(classes);
    auto z2 = z;
    z2[{2, 1}] = gen({2, 1}) + gen({1, 0}, 4);
    // changing a top-degree entry changes only that component, linearly
    const auto f1 = forward_table(FreeAlgebra{}, z, 0, s), f2 = forward_table(FreeAlgebra{}, z2, 0, s);
    for (const auto& a : classes) {
        if (a == DimVector{2, 1}) {
            EXPECT_EQ(f2.at(a) - f1.at(a), gen({1, 0}, 4 * s.lambda(0, a)));
        } else {
            EXPECT_EQ(f2.at(a), f1.at(a));
        }
    }
}

TEST(MasterIdentity, CommonTableSingleClass) {
    const StabilityData s = StabilityData::uniform(1, {{2}, {2}});
    const auto z = generator_table({{1}});
    const auto t1 = forward_table(FreeAlgebra{}, z, 0, s), t2 = forward_table(FreeAlgebra{}, z, 1, s);
    EXPECT_TRUE(master_identity_residual(FreeAlgebra{}, t1, t2, 0, 1, {1}, s).is_zero());
}

TEST(MasterIdentity, IndecomposableVanishes) {
    const StabilityData s = two_vertex({1, 0});
    InvariantTable<FreeLie> t1{{{1, 1}, gen({1, 1}, s.lambda(0, {1, 1}))}}, t2{{{1, 1}, gen({1, 1}, s.lambda(1, {1, 1}))}};
    EXPECT_TRUE(master_identity_residual(FreeAlgebra{}, t1, t2, 0, 1, {1, 1}, s).is_zero());
}

TEST(MasterIdentity, ForwardTablesSatisfyIdentity) {
    const StabilityData s = StabilityData::uniform(2, {{1, 2}, {3, 1}});
    const auto z = generator_table(classes_of_total_at_most(2, 3));
    const auto t1 = forward_table(FreeAlgebra{}, z, 0, s), t2 = forward_table(FreeAlgebra{}, z, 1, s);
    for (const auto& [a, v] : z) EXPECT_TRUE(master_identity_residual(FreeAlgebra{}, t1, t2, 0, 1, a, s).is_zero()) << dim_to_string(a);
}

TEST(MasterIdentity, RandomTablesGenericallyNonzero) {
    const StabilityData s = StabilityData::uniform(1, {{1}, {2}});
    auto t1 = generator_table({{1}, {2}});
    auto t2 = t1;
    t2[{2}] = gen({2}, 5) + gen({1}, 1);
    EXPECT_FALSE(master_identity_residual(FreeAlgebra{}, t1, t2, 0, 1, {2}, s).is_zero());
}

TEST(FreeLieNormalForm, AntisymmetryAndJacobi) {
    const FreeLie a = FreeLie::generator("Z1"), b = FreeLie::generator("Z2"), c = FreeLie::generator("Z3");
    EXPECT_TRUE(bracket(a, a).is_zero());
    EXPECT_EQ(bracket(a, b), bracket(b, a).scaled(-1));
    EXPECT_TRUE((bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))).is_zero());
}

TEST(FreeLieNormalForm, LyndonRoundTrip) {
    std::mt19937_64 rng(31);
    const std::vector<std::string> gens = {"Z1", "Z2", "Z1_1"};
    for (int i = 0; i < 40; ++i) {
        const FreeLie x = random_free(rng, gens, 3);
        FreeLie rebuilt;
        for (const auto& [w, c] : x.lyndon_coordinates()) rebuilt += FreeLie::lyndon(w).scaled(c);
        EXPECT_EQ(rebuilt, x);
        EXPECT_EQ(parse_free_lie(x.to_string()), x) << x.to_string();
    }
}

TEST(FreeLieNormalForm, Printing) {
    const FreeLie x = bracket(FreeLie::generator("Z1"), bracket(FreeLie::generator("Z1"), FreeLie::generator("Z2")));
    EXPECT_EQ(x.to_string(), "[Z1,[Z1,Z2]]");
    EXPECT_EQ(parse_free_lie("2*[Z1,[Z1,Z2]]-[Z1,[Z1,Z2]]"), x);
    EXPECT_EQ(parse_free_lie("[Z2,Z1]"), bracket(FreeLie::generator("Z1"), FreeLie::generator("Z2")).scaled(-1));
    EXPECT_TRUE(parse_free_lie("0").is_zero());
}

TEST(QuiverMode, AgreesWithFreeMode) {
    const QuiverAlgebra alg(Quiver::with_edges(2, {{0, 1}}));
    const StabilityData s = StabilityData::uniform(2, {{1, 2}});
    const std::map<std::string, GradedElement> values = {{"Z1_0", {{1, 0}, LaurentPoly(1L)}},
                                                         {"Z0_1", {{0, 1}, LaurentPoly(3L)}},
                                                         {"Z1_1", {{1, 1}, parse_laurent("s_{1,1}/s_{2,1}")}}};
    const auto classes = classes_of_total_at_most(2, 2);
    InvariantTable<FreeLie> zf;
    InvariantTable<GradedElement> zq;
    for (const auto& a : classes) {
        if (!values.count(generator_name(a))) continue;
        zf.emplace(a, gen(a));
        zq.emplace(a, values.at(generator_name(a)));
    }
    const DimVector top{1, 1};
    const FreeLie free_value = forward_transform(FreeAlgebra{}, zf, 0, top, s);
    const GradedElement direct = forward_transform(alg, zq, 0, top, s);
    EXPECT_EQ(evaluate_free(alg, free_value, values, top), direct);
    EXPECT_EQ(invert_transform(alg, forward_table(alg, zq, 0, s), 0, s), zq);
}

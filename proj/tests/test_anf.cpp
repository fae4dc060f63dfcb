#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "tetrad/anf.hpp"
#include "tetrad/invariants.hpp"

using namespace tetrad;
using tetrad::testing::frame;

namespace {

Anf8 random_anf(std::mt19937& rng, int max_degree) {
    Anf8 p;
    std::bernoulli_distribution coin(0.3);
    for (int m = 0; m < 256; ++m)
        if (std::popcount(unsigned(m)) <= max_degree && coin(rng)) p.toggle(std::uint8_t(m));
    return p;
}

/// Direct evaluation: sum over monomials of the product of selected coordinates.
bool eval_oracle(const Anf8& p, Point x) {
    bool v = false;
    for (int m = 0; m < 256; ++m)
        if (p.coefficient(std::uint8_t(m)) && (x.mask & m) == m) v = !v;
    return v;
}

Anf8 indicator_product(std::initializer_list<int> idx) {
    Anf8 r = Anf8::one();
    for (int i : idx) r *= Anf8::one() + Anf8::variable(i);
    return r;
}

}  // namespace

TEST(Anf, EvaluationAgreesWithMobiusOracle) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const Anf8 p = random_anf(rng, 8);
        const TruthTable t = p.truth_table();
        for (int x = 0; x < 256; ++x) {
            ASSERT_EQ(p.evaluate(Point(std::uint8_t(x))), eval_oracle(p, Point(std::uint8_t(x))));
            ASSERT_EQ(t.test(std::size_t(x)), eval_oracle(p, Point(std::uint8_t(x))));
        }
        EXPECT_EQ(Anf8::from_truth_table(t), p);
    }
}

TEST(Anf, ArithmeticBasics) {
    const Anf8 x1 = Anf8::variable(1);
    EXPECT_TRUE((x1 + x1).is_zero());
    EXPECT_EQ(x1 * x1, x1);
    EXPECT_EQ(Anf8::variable(1).evaluate(basis_vector(1)), true);
    for (Point x : all_points()) EXPECT_TRUE(Anf8::one()(x));
    EXPECT_EQ(Anf8::zero().degree(), -1);
}

TEST(Anf, SumAndProductArePointwise) {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const Anf8 p = random_anf(rng, 4), q = random_anf(rng, 4);
        const Anf8 s = p + q, m = p * q;
        for (int x = 0; x < 256; ++x) {
            const Point v{std::uint8_t(x)};
            ASSERT_EQ(s(v), p(v) != q(v));
            ASSERT_EQ(m(v), p(v) && q(v));
        }
    }
}

TEST(Anf, IndexListSerializationRoundTrips) {
    std::mt19937 rng(13);
    const Anf8 p = random_anf(rng, 8);
    const auto lists = p.to_index_lists();
    EXPECT_EQ(Anf8::from_index_lists(lists), p);
    for (std::size_t i = 1; i < lists.size(); ++i) {
        const auto& a = lists[i - 1];
        const auto& b = lists[i];
        EXPECT_TRUE(a.size() < b.size() || (a.size() == b.size() && a < b));
    }
    const Anf8 q = Anf8::one() + Anf8::variable(1) * Anf8::variable(8);
    EXPECT_EQ(q.to_index_lists(), (std::vector<std::vector<int>>{{}, {1, 8}}));
}

TEST(Anf, FlatIndicators) {
    const Flat la = Flat::span(std::vector<Point>(frame().line(0).begin(), frame().line(0).end()));
    const Anf8 ia = flat_indicator(la);
    EXPECT_EQ(ia, indicator_product({2, 3, 4, 5, 6, 7}));
    EXPECT_EQ(ia.degree(), 6);
    EXPECT_EQ(flat_indicator(Flat::whole_space()), Anf8::one());

    const Flat lcd = tetrad_flat(frame(), {2, 3});
    const Anf8 icd = flat_indicator(lcd);
    EXPECT_EQ(icd, indicator_product({1, 2, 7, 8}));
    std::size_t ones = 0;
    for (int x = 0; x < 256; ++x) {
        const Point v{std::uint8_t(x)};
        ASSERT_EQ(icd(v), lcd.member_set().contains(v));
        ones += icd(v);
    }
    EXPECT_EQ(ones, 16U);
}

TEST(Anf, InvariantFlatIndicatorsAreExact) {
    std::vector<std::vector<int>> subsets;
    for (int h = 0; h < 4; ++h) {
        subsets.push_back({h});
        for (int k = h + 1; k < 4; ++k) {
            subsets.push_back({h, k});
            for (int l = k + 1; l < 4; ++l) subsets.push_back({h, k, l});
        }
    }
    for (const auto& s : subsets) {
        std::vector<Point> gens;
        for (int h : s) gens.insert(gens.end(), frame().line(h).begin(), frame().line(h).end());
        const Flat f = Flat::span(gens);
        const Anf8 ind = flat_indicator(f);
        EXPECT_EQ(ind.degree(), 8 - f.vector_dim());
        for (int x = 0; x < 256; ++x) ASSERT_EQ(ind(Point(std::uint8_t(x))), f.member_set().contains(Point(std::uint8_t(x))));
    }
}

TEST(Anf, InvariantValueTable) {
    const Invariants inv = build_invariants(frame());
    const int expected[4][3] = {{1, 1, 1}, {0, 1, 0}, {1, 0, 0}, {0, 0, 0}};
    for (Point p : all_points()) {
        const int r = frame().line_weight(p) - 1;
        ASSERT_EQ(int(inv.q2(p)), expected[r][0]);
        ASSERT_EQ(int(inv.q4(p)), expected[r][1]);
        ASSERT_EQ(int(inv.q6(p)), expected[r][2]);
        ASSERT_EQ(int(inv.q_omega4(p)), r == 3 ? 0 : 1);
    }
}

TEST(Anf, Q2IsTheQuadraticForm) {
    const Invariants inv = build_invariants(frame());
    Anf8 q;
    for (int i = 1; i <= 4; ++i) q += Anf8::variable(i) * Anf8::variable(9 - i);
    q += Anf8::linear_form(unit_point());
    EXPECT_EQ(inv.q2, q);
}

TEST(Anf, SexticExpansionAndTopDegree) {
    const Invariants inv = build_invariants(frame());
    EXPECT_EQ(inv.q_omega4, p_polynomials().sum());
    Anf8 top;
    for (auto [i, j] : {std::pair{1, 8}, {2, 7}, {3, 6}, {4, 5}}) top += Anf8::monomial(std::uint8_t(0xFF & ~(basis_vector(i).mask | basis_vector(j).mask)));
    EXPECT_EQ(inv.q6.homogeneous_part(6), top);
    EXPECT_EQ(inv.q6.degree(), 6);
    EXPECT_EQ(inv.q_omega4.degree(), 6);
}

TEST(Anf, PolarizationAgreesWithTopCoefficients) {
    // For degree <= 6 the sixth finite difference over S is the coefficient of x_S.
    std::mt19937 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const Anf8 p = random_anf(rng, 6);
        std::vector<std::pair<int, int>> oracle;
        for (int j = 1; j <= 8; ++j)
            for (int k = j + 1; k <= 8; ++k)
                if (p.coefficient(std::uint8_t(0xFF & ~(basis_vector(j).mask | basis_vector(k).mask)))) oracle.emplace_back(j, k);
        EXPECT_EQ(polarize6(p).pairs, oracle);
    }
    EXPECT_TRUE(polarize6(random_anf(rng, 5)).pairs.empty());
    EXPECT_THROW(polarize6(Anf8::monomial(0x7F)), std::domain_error);
}

TEST(Anf, WedgeOfTheSextic) {
    const Invariants inv = build_invariants(frame());
    const std::vector<std::pair<int, int>> b{{1, 8}, {2, 7}, {3, 6}, {4, 5}};
    EXPECT_EQ(polarize6(inv.q6).pairs, b);
    EXPECT_EQ(polarize6(inv.q_omega4).pairs, b);
}

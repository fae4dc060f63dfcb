#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "tetrad/frame.hpp"

using namespace tetrad;
using tetrad::testing::frame;
using tetrad::testing::g81;
using tetrad::testing::P;

TEST(Frame, LinesAndZetas) {
    const Frame& f = frame();
    EXPECT_TRUE(frame_violations(f).empty());
    EXPECT_EQ(f.zeta[0](basis_vector(1)), basis_vector(8));
    EXPECT_EQ(f.zeta[0](basis_vector(8)), P("18"));
    const std::array<std::uint8_t, 4> weight_two{0x81, 0x42, 0x24, 0x18};
    for (std::size_t h = 0; h < 4; ++h) {
        EXPECT_EQ(f.labels[h][0].mask, weight_two[h]);
        EXPECT_EQ(f.zeta[h].power(3), LinMap::identity());
        EXPECT_FALSE(f.zeta[h] == LinMap::identity());
    }
    EXPECT_EQ(f.labels[0][0] + f.labels[1][0] + f.labels[2][0] + f.labels[3][0], f.unit);
    EXPECT_EQ(f.unit, unit_point());
}

TEST(Frame, LabelsAreABijection) {
    const Frame& f = frame();
    EXPECT_EQ(f.label({0, 0, 0, 0}), unit_point());
    EXPECT_EQ(f.label({kEmpty, kEmpty, kEmpty, 0}), f.labels[3][0]);
    EXPECT_THROW(f.label({kEmpty, kEmpty, kEmpty, kEmpty}), std::invalid_argument);
    EXPECT_THROW(f.label({3, 0, 0, 0}), std::invalid_argument);
    PointSet seen;
    for (int i = -1; i < 3; ++i)
        for (int j = -1; j < 3; ++j)
            for (int k = -1; k < 3; ++k)
                for (int l = -1; l < 3; ++l) {
                    const Label lab{i, j, k, l};
                    if (lab == Label{kEmpty, kEmpty, kEmpty, kEmpty}) continue;
                    const Point p = f.label(lab);
                    EXPECT_FALSE(seen.contains(p));
                    seen.insert(p);
                    EXPECT_EQ(f.unlabel(p), lab);
                }
    EXPECT_EQ(seen.size(), 255U);
    EXPECT_EQ(label_string({kEmpty, kEmpty, 0, 0}), "U_∅∅00");
}

TEST(Frame, LineWeightOrbitSizes) {
    const auto o = orbits_by_line_weight(frame());
    EXPECT_EQ(o[0].size(), 12U);
    EXPECT_EQ(o[1].size(), 54U);
    EXPECT_EQ(o[2].size(), 108U);
    EXPECT_EQ(o[3].size(), 81U);
    EXPECT_EQ(frame().line_weight(basis_vector(1)), 1);
    EXPECT_EQ(omega(frame(), 1), frame().support());
}

TEST(Frame, AMapIsAHomomorphism) {
    const Frame& f = frame();
    EXPECT_EQ(f.a_map(Trit4()), LinMap::identity());
    EXPECT_EQ(f.a_map(Trit4(1, 1, 1, 1))(f.unit), P("1357"));
    for (Trit4 a : all_trit4()) {
        EXPECT_EQ(f.a_map(a) * f.a_map(a), f.a_map(2 * a));
        for (Trit4 b : all_trit4()) ASSERT_EQ(f.a_map(a) * f.a_map(b), f.a_map(a + b));
    }
}

TEST(Frame, ThetaMatchesLabels) {
    const Frame& f = frame();
    EXPECT_EQ(f.theta_u(Trit4()), f.unit);
    EXPECT_EQ(f.theta_u(Trit4(1, 1, 1, 1)), P("1357"));
    PointSet image;
    for (Trit4 s : all_trit4()) {
        const Point p = f.theta_u(s);
        EXPECT_EQ(p, f.label({s.d[0], s.d[1], s.d[2], s.d[3]}));
        EXPECT_EQ(g81().coords(p), s);
        image.insert(p);
    }
    EXPECT_EQ(image, omega(f, 4));
    EXPECT_THROW(g81().coords(basis_vector(1)), std::invalid_argument);
}

TEST(Frame, FixedPointFreeExactlyWhenAllDigitsNonzero) {
    for (Trit4 s : all_trit4()) {
        const bool all_nonzero = s.d[0] && s.d[1] && s.d[2] && s.d[3];
        EXPECT_EQ(frame().a_map(s).is_fixed_point_free(), all_nonzero) << s.str();
    }
}

TEST(Frame, OrthogonalityMatchesEpsHammingParity) {
    EXPECT_EQ(symplectic_product(unit_point(), P("1357")), 0);
    EXPECT_EQ(hd_eps(Trit4(), Trit4(1, 1, 1, 1)), 4);
    for (Trit4 a : all_trit4())
        for (Trit4 b : all_trit4()) {
            int hd = 0;
            for (std::size_t i = 0; i < 4; ++i) hd += a.d[i] != b.d[i];
            ASSERT_EQ(symplectic_product(g81().point(a), g81().point(b)), hd % 2);
        }
    const auto r = orthogonality_vs_hamming(frame());
    EXPECT_EQ(r.pairs, 6561);
    EXPECT_EQ(r.mismatches, 0);
}

TEST(Frame, PerturbedFrameIsDetected) {
    const auto bad = frame_violations(perturbed_frame());
    ASSERT_FALSE(bad.empty());
    EXPECT_EQ(bad.front(), "L_a is not a projective line");
}

#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "tetrad/group.hpp"
#include "tetrad/quadric.hpp"

using namespace tetrad;
using tetrad::testing::frame;
using tetrad::testing::g81;
using tetrad::testing::group;

TEST(Group, Order) { EXPECT_EQ(group().order(), 31104U); }

TEST(Group, PointOrbitsAreTheLineWeightClasses) {
    const auto orbits = point_orbits(group());
    std::set<std::vector<Point>> a(orbits.begin(), orbits.end());
    const auto lw = orbits_by_line_weight(frame());
    std::set<std::vector<Point>> b(lw.begin(), lw.end());
    EXPECT_EQ(a, b);
}

TEST(Group, PreservesQuadricAndTetrad) {
    const Quadric q = build_h7(frame());
    const PointSet support = frame().support();
    for (const LinMap& g : group().elements())
        for (Point p : all_points()) {
            ASSERT_EQ(q.contains(p), q.contains(g(p)));
            ASSERT_EQ(support.contains(p), support.contains(g(p)));
        }
}

TEST(Group, G81IsNormal) {
    for (const LinMap& g : group().elements()) {
        const LinMap gi = g.inverse();
        for (int r = 1; r <= 4; ++r) ASSERT_TRUE(g81().coordinates(g * g81().at(eps(r)) * gi).has_value());
    }
    for (Trit4 s : all_trit4()) EXPECT_TRUE(group().contains(g81().at(s)));
}

TEST(Group, InducedActionIsLinearSignedPermutations) {
    std::set<Gf3Matrix> mats;
    for (const LinMap& g : group().elements()) {
        const LinMap gi = g.inverse();
        const Gf3Matrix m = induced_action(g81(), g, gi);
        ASSERT_TRUE(induced_action_is_exact(g81(), g, gi, m));
        // Each column is +-eps_r for a distinct r.
        std::set<int> rows;
        for (Trit4 c : m.cols) {
            ASSERT_EQ(wt_eps(c), 1);
            for (int i = 0; i < 4; ++i)
                if (c.d[std::size_t(i)]) rows.insert(i);
        }
        ASSERT_EQ(rows.size(), 4U);
        mats.insert(m);
    }
    EXPECT_EQ(mats.size(), 384U);
}

TEST(Group, SubgroupTaxonomy) {
    const auto c = classify_subgroups(frame(), group());
    EXPECT_TRUE(c.action_linear);
    EXPECT_EQ(c.plane_class_sizes, (std::vector<int>{8, 16, 12, 4}));
    EXPECT_EQ(c.line_class_sizes, (std::vector<int>{6, 24, 16, 12, 16, 48, 8}));
    EXPECT_TRUE(c.planes_match_kinds);
    EXPECT_TRUE(c.lines_match_kinds);
    const Pg33 pg = enumerate_pg33();
    for (const auto& o : c.plane_orbits) {
        if (plane_kind(pg.planes[std::size_t(o.front())]) != 0) continue;
        for (int i : o) {
            const Trit4 n = pg.planes[std::size_t(i)].normal;
            EXPECT_TRUE(n.d[0] && n.d[1] && n.d[2] && n.d[3]) << n.str();
        }
    }
}

TEST(Group, ClosureBoundIsEnforced) { EXPECT_THROW(GroupGL4(gl4_generators(frame()), 1000), std::runtime_error); }

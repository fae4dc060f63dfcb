#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "tetrad/denizens.hpp"

using namespace tetrad;
using tetrad::testing::frame;
using tetrad::testing::g81;
using tetrad::testing::P;

namespace {

Trit4 T(const char* s) { return Trit4::parse(s); }

Denizen bgd() { return make_denizen(g81(), make_plane(T("1111")), 0); }

// S_beta,gamma,delta as three 3x3 slabs (rows: <A_beta>-orbits, columns: <A_gamma>-orbits).
const char* const kSegrePoints[3][3][3] = {
    {{"u", "1256", "3478"}, {"5678", "56u", "78u"}, {"1234", "12u", "34u"}},
    {{"2358", "25u", "38u"}, {"58u", "137u", "246u"}, {"23u", "468u", "157u"}},
    {{"1467", "16u", "47u"}, {"67u", "248u", "135u"}, {"14u", "357u", "268u"}},
};

const char* const kSegreCoords[3][3][3] = {
    {{"0000", "1221", "2112"}, {"2121", "0012", "1200"}, {"1212", "2100", "0021"}},
    {{"2211", "0102", "1020"}, {"1002", "2220", "0111"}, {"0120", "1011", "2202"}},
    {{"1122", "2010", "0201"}, {"0210", "1101", "2022"}, {"2001", "0222", "1110"}},
};

std::vector<Point> sorted(std::vector<Point> v) {
    std::sort(v.begin(), v.end());
    return v;
}

Line line_of(std::initializer_list<Label> labels) {
    Line l{};
    std::size_t i = 0;
    for (const Label& x : labels) l[i++] = frame().label(x);
    std::sort(l.begin(), l.end());
    return l;
}

constexpr int E = kEmpty;

}  // namespace

TEST(Denizens, TripletsPartitionOmega4) {
    const auto ts = all_triplets(g81());
    ASSERT_EQ(ts.size(), 40U);
    std::set<std::vector<Point>> distinct;
    for (const Triplet& t : ts) {
        PointSet u;
        for (const Denizen& d : t.members) {
            EXPECT_EQ(d.points.size(), 27U);
            EXPECT_TRUE(u.disjoint_from(d.set));
            u = u | d.set;
            distinct.insert(d.points);
        }
        EXPECT_EQ(u, omega(frame(), 4));
    }
    EXPECT_EQ(distinct.size(), 120U);
}

TEST(Denizens, SegreDisplayMatches) {
    const Denizen s = bgd();
    std::vector<Point> expected;
    for (const auto& slab : kSegrePoints)
        for (const auto& row : slab)
            for (const char* p : row) expected.push_back(P(p));
    EXPECT_EQ(s.points, sorted(expected));

    const auto slabs = segre_slabs(g81(), s, xi::beta, xi::gamma, xi::delta);
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c) {
                EXPECT_EQ(slabs[k][r][c], P(kSegrePoints[k][r][c])) << k << r << c;
                EXPECT_EQ(g81().coords(slabs[k][r][c]), T(kSegreCoords[k][r][c])) << k << r << c;
            }
    EXPECT_THROW(segre_slabs(g81(), s, xi::beta, xi::gamma, xi::alpha), std::invalid_argument);
}

TEST(Denizens, SegreSlabsAreS22) {
    const Denizen s = bgd();
    for (const Slab& slab : segre_slabs(g81(), s, xi::beta, xi::gamma, xi::delta)) {
        std::vector<Point> pts;
        for (const auto& row : slab) pts.insert(pts.end(), row.begin(), row.end());
        const auto inner = lines_inside(sorted(pts));
        EXPECT_EQ(inner.size(), 6U);
        for (const auto& row : slab) {
            Line l = row;
            std::sort(l.begin(), l.end());
            EXPECT_TRUE(std::binary_search(inner.begin(), inner.end(), l));
        }
    }
}

TEST(Denizens, SegreCertificate) {
    const auto c = classify_denizen(g81(), bgd());
    EXPECT_EQ(c.by_plane, DenizenKind::segre);
    EXPECT_EQ(c.structural, DenizenKind::segre);
    EXPECT_EQ(c.certificate.lines.size(), 27U);
    EXPECT_EQ(c.certificate.min_lines_per_point, 3);
    EXPECT_EQ(c.certificate.max_lines_per_point, 3);
    EXPECT_EQ(c.certificate.span_dim, 7);
    EXPECT_EQ(c.certificate.rulings.size(), 3U);
    EXPECT_TRUE(c.certificate.rulings_partition);
}

TEST(Denizens, C2RogueIjkk) {
    const Denizen r = make_denizen(g81(), make_plane(T("0012")), 0);
    for (Point p : r.points) {
        const Label l = frame().unlabel(p);
        EXPECT_EQ(l[2], l[3]);
    }
    const auto c = classify_denizen(g81(), r);
    EXPECT_EQ(c.structural, DenizenKind::c2);
    EXPECT_EQ(c.certificate.lines.size(), 36U);
    EXPECT_EQ(c.certificate.min_lines_per_point, 4);
    EXPECT_EQ(c.certificate.max_lines_per_point, 4);
    const Line lr = line_of({{E, E, 0, 0}, {E, E, 1, 1}, {E, E, 2, 2}});
    EXPECT_EQ(Flat::span(r.points), perp(std::vector<Point>(lr.begin(), lr.end())));
    EXPECT_EQ(Flat::span(r.points).projective_dim(), 5);

    const C2Structure s = rogue_c2_structure(frame(), g81(), r);
    EXPECT_EQ(s.l_r, lr);
    EXPECT_TRUE(s.l_r_in_omega2);
    EXPECT_TRUE(s.r_is_perp_cap_omega4);
    EXPECT_TRUE(s.reguli_ok);
    EXPECT_TRUE(s.h3_ok);
    EXPECT_EQ(s.tetrad_pair, (std::array<int, 2>{2, 3}));
}

TEST(Denizens, C2SiblingLine) {
    // R' = A_0001 R contains U_0001; its line is {U_..01, U_..12, U_..20}.
    const Pg33Plane plane = make_plane(T("0012"));
    const Point u0001 = frame().label({0, 0, 0, 1});
    for (int k = 0; k < 3; ++k) {
        const Denizen d = make_denizen(g81(), plane, k);
        if (!d.set.contains(u0001)) continue;
        EXPECT_EQ(rogue_c2_structure(frame(), g81(), d).l_r, line_of({{E, E, 0, 1}, {E, E, 1, 2}, {E, E, 2, 0}}));
    }
}

TEST(Denizens, C2RegulusLinesTotal36) {
    std::set<Line> lines;
    int c2 = 0;
    for (const Triplet& t : all_triplets(g81()))
        for (const Denizen& d : t.members) {
            if (plane_kind(d.plane) != 2) continue;
            ++c2;
            const auto s = rogue_c2_structure(frame(), g81(), d);
            EXPECT_TRUE(s.reguli_ok && s.h3_ok && s.l_r_in_omega2);
            lines.insert(s.l_r);
        }
    EXPECT_EQ(c2, 36);
    EXPECT_EQ(lines.size(), 36U);
    EXPECT_THROW(rogue_c2_structure(frame(), g81(), bgd()), std::invalid_argument);
}

TEST(Denizens, C3RogueIjk0) {
    const Denizen r = make_denizen(g81(), make_plane(T("0001")), 0);
    for (Point p : r.points) EXPECT_EQ(frame().unlabel(p)[3], 0);
    const auto c = classify_denizen(g81(), r);
    EXPECT_EQ(c.structural, DenizenKind::c3);
    const Point v = frame().label({E, E, E, 0});
    EXPECT_EQ(Flat::span(r.points), perp(std::vector<Point>{v}));
}

TEST(Denizens, ClassificationCensus) {
    std::array<int, 5> kinds{};
    std::set<int> c1_span, c1_lines, c1_per_point;
    for (const Triplet& t : all_triplets(g81()))
        for (const Denizen& d : t.members) {
            const auto c = classify_denizen(g81(), d);
            EXPECT_TRUE(c.agree()) << t.plane.normal.str();
            ++kinds[std::size_t(c.structural)];
            if (c.structural == DenizenKind::c1) {
                c1_span.insert(c.certificate.span_dim);
                c1_lines.insert(int(c.certificate.lines.size()));
                c1_per_point.insert(c.certificate.min_lines_per_point);
                c1_per_point.insert(c.certificate.max_lines_per_point);
            }
        }
    EXPECT_EQ(kinds, (std::array<int, 5>{24, 48, 36, 12, 0}));
    // C1 profile (computed): 18 lines, 2 through each point, spanning PG(7,2).
    EXPECT_EQ(c1_span, std::set<int>{7});
    EXPECT_EQ(c1_lines, std::set<int>{18});
    EXPECT_EQ(c1_per_point, std::set<int>{2});
}

TEST(Denizens, StructuralKindRejectsArbitrarySets) {
    // A Segre with one point swapped for a point of a sibling denizen.
    const Triplet t = triplet_from_plane(g81(), make_plane(T("1111")));
    std::vector<Point> pts = t.members[0].points;
    pts.back() = t.members[1].points.front();
    EXPECT_EQ(structural_kind(denizen_certificate(g81(), sorted(pts))), DenizenKind::unknown);
}

TEST(Denizens, SegreCensus) {
    const auto s = segre_census(g81());
    EXPECT_EQ(s.size(), 24U);
    std::set<Trit4> planes;
    for (const Denizen& d : s) planes.insert(d.plane.normal);
    EXPECT_EQ(planes.size(), 8U);
}

TEST(Denizens, Enneads) {
    const auto ts = all_triplets(g81());
    int pairs = 0;
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = i + 1; j < ts.size(); ++j) {
            ++pairs;
            PointSet u;
            for (const auto& x : ennead(ts[i], ts[j])) {
                ASSERT_EQ(x.size(), 9U);
                u = u | PointSet(x);
            }
            ASSERT_EQ(u, omega(frame(), 4));
        }
    EXPECT_EQ(pairs, 780);
    EXPECT_THROW(ennead(ts[0], ts[0]), std::invalid_argument);
}

TEST(Denizens, EnneadMembersAreCosetsOfTheIntersection) {
    const auto ts = all_triplets(g81());
    const Triplet& a = ts[0];
    const Triplet& b = ts[1];
    std::vector<Trit4> common;
    for (Trit4 s : a.plane.elements())
        if (b.plane.contains(s)) common.push_back(s);
    ASSERT_EQ(common.size(), 9U);
    for (const auto& x : ennead(a, b)) {
        const Trit4 base = g81().coords(x.front());
        std::vector<Point> coset;
        for (Trit4 s : common) coset.push_back(g81().point(base + s));
        EXPECT_EQ(sorted(coset), x);
    }
}

TEST(Denizens, SectionExamples) {
    const Denizen s = bgd();
    const SegreGeometry geom = segre_geometry(g81(), s);
    EXPECT_EQ(geom.s22_sets.size(), 9U);

    const auto a = section_classify(g81(), s, geom, make_line(xi::beta, xi::gamma));
    EXPECT_EQ(a.line_kind, 4);
    EXPECT_EQ(a.structural, SectionKind::s22);
    std::vector<Point> first;
    for (const auto& row : kSegrePoints[0])
        for (const char* p : row) first.push_back(P(p));
    EXPECT_EQ(a.points, sorted(first));

    const auto b = section_classify(g81(), s, geom, make_line(xi::delta, xi::beta + xi::gamma));
    EXPECT_EQ(b.line_kind, 6);
    EXPECT_EQ(b.structural, SectionKind::three_generator);

    const auto c = section_classify(g81(), s, geom, make_line(xi::beta - xi::gamma, xi::beta - xi::delta));
    EXPECT_EQ(c.line_kind, 3);
    EXPECT_EQ(c.structural, SectionKind::fan);

    EXPECT_THROW(section_classify(g81(), s, geom, make_line(eps(1), eps(2))), std::invalid_argument);
}

TEST(Denizens, SectionTrichotomyForAllSegres) {
    for (const Denizen& s : segre_census(g81())) {
        std::array<int, 4> k{};
        for (const auto& r : section_census(g81(), s)) {
            EXPECT_EQ(r.structural, r.by_line_kind);
            ++k[std::size_t(r.structural)];
        }
        EXPECT_EQ(k, (std::array<int, 4>{3, 6, 4, 0}));
    }
}

TEST(Denizens, TroikaExample) {
    const std::array<Point, 3> t{P("u"), P("246u"), P("357u")};
    EXPECT_TRUE(is_troika(g81(), t));
    const Troika tr{t};
    EXPECT_EQ(tr.centre(), P("18"));
    EXPECT_TRUE(line_contains(frame().line(0), tr.centre()));
    EXPECT_EQ(tr.centre(), frame().label({0, E, E, E}));
}

TEST(Denizens, FanOfXi4ZeroSubspace) {
    const Denizen s = bgd();
    std::vector<Trit4> v2;
    for (Trit4 x : s.plane.points)
        if (x.d[3] == 0) v2.push_back(x);
    ASSERT_EQ(v2.size(), 4U);
    const Pg33Line l = make_line(v2[0], v2[1]);
    const SegreGeometry geom = segre_geometry(g81(), s);
    const auto r = section_classify(g81(), s, geom, l);
    ASSERT_EQ(r.structural, SectionKind::fan);
    const auto d = fan_decompose(frame(), g81(), geom, r.points);
    EXPECT_TRUE(d.common_centre);
    EXPECT_EQ(d.centre, frame().label({E, E, E, 0}));
    EXPECT_EQ(d.tetrad_line, 3);
    for (const Troika& t : d.troikas) EXPECT_TRUE(is_troika(g81(), t.points));
}

TEST(Denizens, FansOfASegre) {
    const Denizen s = bgd();
    const SegreGeometry geom = segre_geometry(g81(), s);
    const auto fans = enumerate_fans(geom);
    EXPECT_EQ(fans.size(), 12U);
    std::map<Point, int> per_point;
    for (const auto& f : fans) {
        for (Point p : f) ++per_point[p];
        const auto d = fan_decompose(frame(), g81(), geom, f);
        EXPECT_TRUE(d.common_centre);
        EXPECT_GE(d.tetrad_line, 0);
        EXPECT_EQ(frame().line_weight(d.centre), 1);
    }
    EXPECT_EQ(per_point.size(), 27U);
    for (const auto& [p, n] : per_point) EXPECT_EQ(n, 4) << to_shorthand(p);
}

TEST(Denizens, FanDecomposeRejectsNonFans) {
    const Denizen s = bgd();
    const SegreGeometry geom = segre_geometry(g81(), s);
    std::vector<Point> slab;
    for (const auto& row : kSegrePoints[0])
        for (const char* p : row) slab.push_back(P(p));
    EXPECT_THROW(fan_decompose(frame(), g81(), geom, sorted(slab)), std::invalid_argument);
    EXPECT_THROW(fan_decompose(frame(), g81(), geom, {P("u")}), std::invalid_argument);
}

TEST(Denizens, TetradRecovery) {
    for (const Denizen& s : segre_census(g81())) {
        const auto r = recover_tetrad(frame(), g81(), s);
        EXPECT_EQ(r.weight3_directions.size(), 4U);
        EXPECT_EQ(r.triplets.size(), 4U);
        EXPECT_TRUE(r.equals_tetrad);
        for (const auto& t : r.triplets) EXPECT_EQ(line_kind(t.subspace), 3);
    }
    const Denizen c3 = make_denizen(g81(), make_plane(T("0001")), 0);
    EXPECT_THROW(recover_tetrad(frame(), g81(), c3), std::invalid_argument);
}

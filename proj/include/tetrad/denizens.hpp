#pragma once

// The 27-set denizens of omega_4: triplets from planes of PG(3,3), Segre and
// rogue classification, enneads, sections of Segre varieties, fans and
// troikas, recovery of the tetrad, and the regulus structure of C2 rogues.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tetrad/frame.hpp"
#include "tetrad/gf2.hpp"
#include "tetrad/gf3.hpp"
#include "tetrad/spreads.hpp"

namespace tetrad {

enum class DenizenKind { segre, c1, c2, c3, unknown };

inline std::string kind_name(DenizenKind k) {
    switch (k) {
        case DenizenKind::segre: return "Segre";
        case DenizenKind::c1: return "C1";
        case DenizenKind::c2: return "C2";
        case DenizenKind::c3: return "C3";
        default: return "unknown";
    }
}

/// P0 -> Segre, P1 -> C1, P2 -> C2, P3 -> C3.
inline DenizenKind kind_of_plane(const Pg33Plane& p) {
    static constexpr std::array<DenizenKind, 4> k{DenizenKind::segre, DenizenKind::c1, DenizenKind::c2, DenizenKind::c3};
    return k[std::size_t(plane_kind(p))];
}

/// theta_u of one coset {xi : normal . xi = coset} of a plane's subspace.
struct Denizen {
    Pg33Plane plane;
    int coset = 0;
    std::vector<Trit4> coords;  // ascending
    std::vector<Point> points;  // ascending
    PointSet set;
};

struct Triplet {
    Pg33Plane plane;
    std::array<Denizen, 3> members;  // coset 0, 1, 2
};

inline Denizen make_denizen(const G81& g, const Pg33Plane& plane, int coset) {
    Denizen d;
    d.plane = plane;
    d.coset = coset;
    for (Trit4 s : all_trit4())
        if (dot(s, plane.normal) == coset) d.coords.push_back(s);
    d.points = g.image(d.coords);
    std::sort(d.points.begin(), d.points.end());
    d.set = PointSet(d.points);
    return d;
}

inline Triplet triplet_from_plane(const G81& g, const Pg33Plane& plane) {
    Triplet t;
    t.plane = plane;
    for (int c = 0; c < 3; ++c) t.members[std::size_t(c)] = make_denizen(g, plane, c);
    return t;
}

/// All 40 triplets in the plane order of enumerate_pg33().
inline std::vector<Triplet> all_triplets(const G81& g) {
    std::vector<Triplet> v;
    for (const auto& p : enumerate_pg33().planes) v.push_back(triplet_from_plane(g, p));
    return v;
}

/// Projective lines whose three points all lie in the set.
inline std::vector<Line> lines_inside(const std::vector<Point>& pts) {
    const PointSet s(pts);
    std::set<Line> out;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (s.contains(pts[i] + pts[j])) out.insert(make_line(pts[i], pts[j]));
    return {out.begin(), out.end()};
}

struct DenizenCertificate {
    std::vector<Line> lines;
    int min_lines_per_point = 0;
    int max_lines_per_point = 0;
    int span_dim = -1;  // projective
    /// Lines grouped by GF(3) direction pair {lambda, -lambda}.
    std::map<Trit4, std::vector<Line>> rulings;
    /// Every ruling consists of pairwise disjoint lines covering the set.
    bool rulings_partition = false;
};

/// Direction pair of a line inside omega_4, as the canonical representative.
inline Trit4 line_direction(const G81& g, const Line& l) {
    const Trit4 a = g.coords(l[0]), b = g.coords(l[1]), c = g.coords(l[2]);
    const Trit4 d = projective_rep(b - a);
    if (projective_rep(c - a) != d || projective_rep(c - b) != d) throw std::logic_error("line_direction: not an affine line in (F3)^4");
    return d;
}

inline DenizenCertificate denizen_certificate(const G81& g, const std::vector<Point>& pts) {
    DenizenCertificate c;
    c.lines = lines_inside(pts);
    std::map<Point, int> per_point;
    for (Point p : pts) per_point[p] = 0;
    for (const Line& l : c.lines)
        for (Point p : l) ++per_point[p];
    c.min_lines_per_point = 1 << 20;
    for (const auto& [p, n] : per_point) {
        c.min_lines_per_point = std::min(c.min_lines_per_point, n);
        c.max_lines_per_point = std::max(c.max_lines_per_point, n);
    }
    c.span_dim = Flat::span(pts).projective_dim();
    for (const Line& l : c.lines) c.rulings[line_direction(g, l)].push_back(l);
    c.rulings_partition = std::all_of(c.rulings.begin(), c.rulings.end(), [&](const auto& kv) {
        PointSet s;
        for (const Line& l : kv.second)
            for (Point p : l) {
                if (s.contains(p)) return false;
                s.insert(p);
            }
        return s.size() == pts.size();
    });
    return c;
}

/// Classification from the incidence structure alone.
///   Segre: (27_3, 27_3), three rulings of 9 disjoint lines, spans PG(7,2)
///   C2:    (27_4, 36_3), spans a 5-flat
///   C3:    no lines, spans a 6-flat
///   C1:    18 lines, 2 per point, spans PG(7,2)
inline DenizenKind structural_kind(const DenizenCertificate& c) {
    const auto n = c.lines.size();
    const bool uniform = c.min_lines_per_point == c.max_lines_per_point;
    if (n == 27 && uniform && c.min_lines_per_point == 3 && c.rulings.size() == 3 && c.rulings_partition && c.span_dim == 7)
        return DenizenKind::segre;
    if (n == 36 && uniform && c.min_lines_per_point == 4 && c.span_dim == 5) return DenizenKind::c2;
    if (n == 0 && c.span_dim == 6) return DenizenKind::c3;
    if (n == 18 && uniform && c.min_lines_per_point == 2 && c.span_dim == 7) return DenizenKind::c1;
    return DenizenKind::unknown;
}

struct DenizenClassification {
    DenizenKind by_plane = DenizenKind::unknown;
    DenizenKind structural = DenizenKind::unknown;
    DenizenCertificate certificate;
    bool agree() const { return by_plane == structural; }
};

inline DenizenClassification classify_denizen(const G81& g, const Denizen& d) {
    DenizenClassification c;
    c.by_plane = kind_of_plane(d.plane);
    c.certificate = denizen_certificate(g, d.points);
    c.structural = structural_kind(c.certificate);
    return c;
}

/// The 24 Segre denizens: all members of the triplets of the 8 P0 planes.
inline std::vector<Denizen> segre_census(const G81& g) {
    std::vector<Denizen> out;
    for (const auto& p : enumerate_pg33().planes)
        if (plane_kind(p) == 0)
            for (int c = 0; c < 3; ++c) out.push_back(make_denizen(g, p, c));
    return out;
}

/// slabs[k][r][c] = theta_u(base + k nu + r mu + c lambda): rows are
/// <A_lambda>-orbits, columns <A_mu>-orbits, slabs related by A_nu.
using Slab = std::array<std::array<Point, 3>, 3>;

inline std::array<Slab, 3> segre_slabs(const G81& g, const Denizen& d, Trit4 lambda, Trit4 mu, Trit4 nu) {
    for (Trit4 v : {lambda, mu, nu})
        if (!d.plane.contains(v)) throw std::invalid_argument("segre_slabs: direction not in the denizen's plane");
    if (subspace_elements({lambda, mu, nu}).size() != 27) throw std::invalid_argument("segre_slabs: directions are dependent");
    const Trit4 base = d.coords.front();
    std::array<Slab, 3> s{};
    for (int k = 0; k < 3; ++k)
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                s[std::size_t(k)][std::size_t(r)][std::size_t(c)] = g.point(base + k * nu + r * mu + c * lambda);
    return s;
}

/// The Xi u Xi* directions (canonical reps) lying on a plane.
inline std::vector<Trit4> xi_directions(const Pg33Plane& p) {
    std::vector<Trit4> v;
    for (Trit4 x : p.points)
        if (xi::in_xi_pm(x)) v.push_back(x);
    return v;
}

/// Nine pairwise intersections R1 n R2 over two distinct triplets.
inline std::vector<std::vector<Point>> ennead(const Triplet& a, const Triplet& b) {
    if (a.plane == b.plane) throw std::invalid_argument("ennead: triplets must be distinct");
    std::vector<std::vector<Point>> out;
    for (const auto& r1 : a.members)
        for (const auto& r2 : b.members) out.push_back((r1.set & r2.set).to_vector());
    return out;
}

// ---------------------------------------------------------------------------
// Sections

enum class SectionKind { s22, three_generator, fan, unknown };

inline std::string section_name(SectionKind k) {
    switch (k) {
        case SectionKind::s22: return "S2(2)";
        case SectionKind::three_generator: return "3-generator";
        case SectionKind::fan: return "fan";
        default: return "unknown";
    }
}

/// Lambda_4 -> S2(2), Lambda_6 -> 3-generator set, Lambda_3 -> fan.
inline SectionKind section_kind_of_line(int kind) {
    switch (kind) {
        case 4: return SectionKind::s22;
        case 6: return SectionKind::three_generator;
        case 3: return SectionKind::fan;
        default: return SectionKind::unknown;
    }
}

/// Generators of a Segre denizen (its 27 inner lines) with a point -> lines index.
struct SegreGeometry {
    std::vector<Point> points;
    std::vector<Line> generators;
    std::vector<std::vector<Point>> s22_sets;  // all 9 S2(2) subvarieties, found structurally

    bool on_common_generator(Point p, Point q) const {
        return std::any_of(generators.begin(), generators.end(), [&](const Line& l) { return line_contains(l, p) && line_contains(l, q); });
    }
};

/// S2(2): 9 points whose inner generators are 3 + 3 lines in two parallel
/// classes, each class covering the set.
inline bool is_s22_set(const SegreGeometry& s, const std::vector<Point>& x, const G81& g) {
    if (x.size() != 9) return false;
    const PointSet xs(x);
    std::map<Trit4, std::vector<Line>> by_dir;
    for (const Line& l : s.generators)
        if (xs.contains(l[0]) && xs.contains(l[1]) && xs.contains(l[2])) by_dir[line_direction(g, l)].push_back(l);
    if (by_dir.size() != 2) return false;
    return std::all_of(by_dir.begin(), by_dir.end(), [](const auto& kv) { return kv.second.size() == 3; });
}

inline SegreGeometry segre_geometry(const G81& g, const Denizen& d) {
    SegreGeometry s;
    s.points = d.points;
    s.generators = lines_inside(d.points);
    // S2(2) candidates: for two generators through a common point, the 9-set
    // swept by translating one along the other.
    std::set<std::vector<Point>> found;
    for (const Line& l1 : s.generators)
        for (const Line& l2 : s.generators) {
            if (!(l1 < l2)) continue;
            Point common{};
            int shared = 0;
            for (Point p : l1)
                if (line_contains(l2, p)) {
                    common = p;
                    ++shared;
                }
            if (shared != 1) continue;
            const Trit4 o = g.coords(common);
            const Trit4 a = line_direction(g, l1), b = line_direction(g, l2);
            std::vector<Point> x;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) x.push_back(g.point(o + i * a + j * b));
            std::sort(x.begin(), x.end());
            if (PointSet(x).is_subset_of(d.set) && is_s22_set(s, x, g)) found.insert(x);
        }
    s.s22_sets.assign(found.begin(), found.end());
    return s;
}

inline SectionKind structural_section_kind(const G81& g, const SegreGeometry& s, const std::vector<Point>& x) {
    if (x.size() != 9) return SectionKind::unknown;
    const PointSet xs(x);
    std::vector<Line> inner;
    for (const Line& l : s.generators)
        if (xs.contains(l[0]) && xs.contains(l[1]) && xs.contains(l[2])) inner.push_back(l);

    if (inner.size() == 6 && is_s22_set(s, x, g)) return SectionKind::s22;

    if (inner.size() == 3) {
        const Trit4 dir = line_direction(g, inner[0]);
        bool parallel = std::all_of(inner.begin(), inner.end(), [&](const Line& l) { return line_direction(g, l) == dir; });
        if (!parallel || !is_partition(inner, 9)) return SectionKind::unknown;
        // A transversal S2(2) meeting each of the three generators once, in three
        // points no two of which share a generator.
        for (const auto& y : s.s22_sets) {
            const auto meet = (xs & PointSet(y)).to_vector();
            if (meet.size() != 3) continue;
            bool one_each = std::all_of(inner.begin(), inner.end(), [&](const Line& l) {
                return std::count_if(meet.begin(), meet.end(), [&](Point p) { return line_contains(l, p); }) == 1;
            });
            bool apart = !s.on_common_generator(meet[0], meet[1]) && !s.on_common_generator(meet[0], meet[2]) &&
                         !s.on_common_generator(meet[1], meet[2]);
            if (one_each && apart) return SectionKind::three_generator;
        }
        return SectionKind::unknown;
    }

    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (s.on_common_generator(x[i], x[j])) return SectionKind::unknown;
    return SectionKind::fan;
}

struct SectionReport {
    Pg33Line subspace;
    int line_kind = 0;
    SectionKind by_line_kind = SectionKind::unknown;
    SectionKind structural = SectionKind::unknown;
    std::vector<Point> points;
};

/// The section theta_u(base + V2) of a Segre denizen, where base is the
/// denizen's smallest coordinate vector.
inline SectionReport section_classify(const G81& g, const Denizen& segre, const SegreGeometry& geom, const Pg33Line& v2) {
    if (!segre.plane.contains(v2.basis[0]) || !segre.plane.contains(v2.basis[1]))
        throw std::invalid_argument("section_classify: subspace is not contained in the Segre's plane");
    SectionReport r;
    r.subspace = v2;
    r.line_kind = line_kind(v2);
    r.by_line_kind = section_kind_of_line(r.line_kind);
    const Trit4 base = segre.coords.front();
    for (Trit4 s : v2.elements()) r.points.push_back(g.point(base + s));
    std::sort(r.points.begin(), r.points.end());
    r.structural = structural_section_kind(g, geom, r.points);
    return r;
}

inline std::vector<SectionReport> section_census(const G81& g, const Denizen& segre) {
    const SegreGeometry geom = segre_geometry(g, segre);
    std::vector<SectionReport> v;
    for (const auto& l : lines_in_plane(segre.plane)) v.push_back(section_classify(g, segre, geom, l));
    return v;
}

// ---------------------------------------------------------------------------
// Fans, troikas, tetrad recovery

/// All 9-subsets with no two points on a common generator (backtracking).
inline std::vector<std::vector<Point>> enumerate_fans(const SegreGeometry& s) {
    const auto& pts = s.points;
    const std::size_t n = pts.size();
    std::vector<std::vector<bool>> clash(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) clash[i][j] = i != j && s.on_common_generator(pts[i], pts[j]);
    std::vector<std::vector<Point>> fans;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t)> grow = [&](std::size_t from) {
        if (chosen.size() == 9) {
            std::vector<Point> f;
            for (std::size_t i : chosen) f.push_back(pts[i]);
            fans.push_back(f);
            return;
        }
        for (std::size_t i = from; i < n; ++i) {
            if (std::any_of(chosen.begin(), chosen.end(), [&](std::size_t j) { return clash[i][j]; })) continue;
            chosen.push_back(i);
            grow(i + 1);
            chosen.pop_back();
        }
    };
    grow(0);
    return fans;
}

struct Troika {
    std::array<Point, 3> points{};
    Point centre() const { return points[0] + points[1] + points[2]; }
};

inline bool is_troika(const G81& g, const std::array<Point, 3>& t) {
    const Trit4 a = g.coords(t[0]), b = g.coords(t[1]), c = g.coords(t[2]);
    return hd_xi(a, b) == 3 && hd_xi(a, c) == 3 && hd_xi(b, c) == 3;
}

struct FanDecomposition {
    std::array<Troika, 3> troikas{};
    Point centre;
    bool common_centre = false;
    int tetrad_line = -1;  // h with centre on L_h
};

inline FanDecomposition fan_decompose(const Frame& f, const G81& g, const SegreGeometry& segre, const std::vector<Point>& fan) {
    const PointSet host(segre.points);
    if (fan.size() != 9 || !PointSet(fan).is_subset_of(host) || PointSet(fan).size() != 9)
        throw std::invalid_argument("fan_decompose: need 9 distinct points of the Segre variety");
    for (std::size_t i = 0; i < fan.size(); ++i)
        for (std::size_t j = i + 1; j < fan.size(); ++j)
            if (segre.on_common_generator(fan[i], fan[j])) throw std::invalid_argument("fan_decompose: two points share a generator");

    std::vector<Troika> found;
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = i + 1; j < 9; ++j)
            for (std::size_t k = j + 1; k < 9; ++k) {
                std::array<Point, 3> t{fan[i], fan[j], fan[k]};
                if (is_troika(g, t)) found.push_back({t});
            }
    PointSet cover;
    for (const Troika& t : found)
        for (Point p : t.points) cover.insert(p);
    if (found.size() != 3 || cover.size() != 9) throw std::logic_error("fan_decompose: fan does not split uniquely into three troikas");

    FanDecomposition d;
    std::copy(found.begin(), found.end(), d.troikas.begin());
    d.centre = d.troikas[0].centre();
    d.common_centre = d.troikas[1].centre() == d.centre && d.troikas[2].centre() == d.centre;
    for (int h = 0; h < 4; ++h)
        if (line_contains(f.line(h), d.centre)) d.tetrad_line = h;
    return d;
}

struct FanTriplet {
    Trit4 lambda;  // weight-3 direction, canonical rep
    Pg33Line subspace;
    std::array<std::vector<Point>, 3> fans;
    std::array<Point, 3> centres{};
    Line centre_line{};
};

struct TetradRecovery {
    std::vector<Trit4> weight3_directions;  // one per sign pair
    std::vector<FanTriplet> triplets;
    std::vector<Line> lines;  // sorted
    bool equals_tetrad = false;
};

inline TetradRecovery recover_tetrad(const Frame& f, const G81& g, const Denizen& segre) {
    if (plane_kind(segre.plane) != 0) throw std::invalid_argument("recover_tetrad: denizen is not a Segre variety");
    const SegreGeometry geom = segre_geometry(g, segre);
    const auto plane_lines = lines_in_plane(segre.plane);
    const auto v3 = segre.plane.elements();
    const Trit4 base = segre.coords.front();

    TetradRecovery r;
    for (Trit4 p : segre.plane.points)
        if (wt_eps(p) == 3) r.weight3_directions.push_back(p);

    for (Trit4 lambda : r.weight3_directions) {
        std::vector<Pg33Line> hosts;
        for (const auto& l : plane_lines)
            if (line_kind(l) == 3 && l.contains(lambda)) hosts.push_back(l);
        if (hosts.size() != 1) throw std::logic_error("recover_tetrad: weight-3 direction is not on a unique Lambda_3 line");
        FanTriplet t;
        t.lambda = lambda;
        t.subspace = hosts.front();
        const auto v2 = t.subspace.elements();
        Trit4 nu;
        for (Trit4 s : v3)
            if (!t.subspace.contains(s)) {
                nu = s;
                break;
            }
        for (int k = 0; k < 3; ++k) {
            auto& fan = t.fans[std::size_t(k)];
            for (Trit4 s : v2) fan.push_back(g.point(base + k * nu + s));
            std::sort(fan.begin(), fan.end());
            const auto dec = fan_decompose(f, g, geom, fan);
            if (!dec.common_centre) throw std::logic_error("recover_tetrad: troikas of a fan do not share a centre");
            t.centres[std::size_t(k)] = dec.centre;
        }
        Line l{t.centres[0], t.centres[1], t.centres[2]};
        std::sort(l.begin(), l.end());
        t.centre_line = l;
        r.lines.push_back(l);
        r.triplets.push_back(std::move(t));
    }
    std::sort(r.lines.begin(), r.lines.end());
    std::vector<Line> tetrad;
    for (int h = 0; h < 4; ++h) {
        Line l = f.line(h);
        std::sort(l.begin(), l.end());
        tetrad.push_back(l);
    }
    std::sort(tetrad.begin(), tetrad.end());
    r.equals_tetrad = r.lines == tetrad && std::all_of(r.lines.begin(), r.lines.end(), is_line);
    return r;
}

// ---------------------------------------------------------------------------
// C2 rogues

struct C2Structure {
    Line l_r{};                 // R^perp as a line
    bool l_r_in_omega2 = false;
    bool r_is_perp_cap_omega4 = false;  // R = L_R^perp n omega_4
    int span_dim = -1;
    std::array<int, 2> tetrad_pair{};  // the two tetrad lines whose join holds the reguli
    std::array<Line, 3> regulus{};      // L of the three members of R's triplet
    std::array<Line, 3> opposite{};     // L of the sibling triplet's members
    bool reguli_ok = false;   // two families of skew lines, each meeting each once, same support
    bool h3_ok = false;       // support = quadric points of <L_h, L_k>; L_h, L_k external
};

namespace detail {
inline Line perp_line(const std::vector<Point>& pts) {
    const Flat orth = perp(pts);
    if (orth.size() != 3) throw std::logic_error("C2 rogue: perp of the denizen is not a line");
    const auto v = orth.points();
    return {v[0], v[1], v[2]};
}

inline bool skew_family(const std::array<Line, 3>& f) {
    std::vector<Line> v(f.begin(), f.end());
    PointSet s;
    for (const Line& l : v)
        for (Point p : l) {
            if (s.contains(p)) return false;
            s.insert(p);
        }
    return true;
}
}  // namespace detail

inline C2Structure rogue_c2_structure(const Frame& f, const G81& g, const Denizen& r) {
    if (plane_kind(r.plane) != 2) throw std::invalid_argument("rogue_c2_structure: denizen is not of kind C2");
    C2Structure c;
    c.l_r = detail::perp_line(r.points);
    c.span_dim = Flat::span(r.points).projective_dim();
    c.l_r_in_omega2 = std::all_of(c.l_r.begin(), c.l_r.end(), [&](Point p) { return f.line_weight(p) == 2; });
    {
        const Flat orth = perp(std::vector<Point>(c.l_r.begin(), c.l_r.end()));
        PointSet cap;
        for (Point p : orth.points())
            if (f.line_weight(p) == 4) cap.insert(p);
        c.r_is_perp_cap_omega4 = cap == r.set;
    }

    int found = 0;
    for (std::size_t i = 0; i < 4; ++i)
        if (r.plane.normal.d[i] != 0 && found < 2) c.tetrad_pair[std::size_t(found++)] = int(i);
    Trit4 sibling = r.plane.normal;
    sibling.d[std::size_t(c.tetrad_pair[1])] = std::uint8_t((3 - sibling.d[std::size_t(c.tetrad_pair[1])]) % 3);
    const Triplet mine = triplet_from_plane(g, r.plane);
    const Triplet other = triplet_from_plane(g, make_plane(sibling));
    for (std::size_t k = 0; k < 3; ++k) {
        c.regulus[k] = detail::perp_line(mine.members[k].points);
        c.opposite[k] = detail::perp_line(other.members[k].points);
    }

    PointSet support_a, support_b;
    for (const Line& l : c.regulus)
        for (Point p : l) support_a.insert(p);
    for (const Line& l : c.opposite)
        for (Point p : l) support_b.insert(p);
    bool transversal = true;
    for (const Line& a : c.regulus)
        for (const Line& b : c.opposite)
            transversal = transversal && std::count_if(a.begin(), a.end(), [&](Point p) { return line_contains(b, p); }) == 1;
    c.reguli_ok = detail::skew_family(c.regulus) && detail::skew_family(c.opposite) && transversal && support_a == support_b &&
                  support_a.size() == 9;

    std::vector<Point> gens;
    for (int h : c.tetrad_pair)
        for (Point p : f.line(h)) gens.push_back(p);
    const Flat ambient = Flat::span(gens);
    PointSet h3;
    for (Point p : ambient.points())
        if (quadric_value(p) == 0) h3.insert(p);
    bool external = true;
    for (int h : c.tetrad_pair)
        for (Point p : f.line(h)) external = external && !support_a.contains(p) && quadric_value(p) == 1;
    c.h3_ok = ambient.projective_dim() == 3 && h3 == support_a && external;
    return c;
}

}  // namespace tetrad

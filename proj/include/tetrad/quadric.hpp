#pragma once

// The hyperbolic quadric H7 of the tetrad: its points, the uniqueness
// certificate, generator solids with their two systems, and 9-caps.

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "tetrad/frame.hpp"
#include "tetrad/gf2.hpp"
#include "tetrad/gf3.hpp"

namespace tetrad {

struct Quadric {
    PointSet points;
    bool contains(Point p) const { return points.contains(p); }
    std::size_t size() const { return points.size(); }
};

inline Quadric build_h7(const Frame& /*frame*/) {
    Quadric q;
    for (Point p : all_points())
        if (quadric_value(p) == 0) q.points.insert(p);
    return q;
}

struct UniqueQuadricCertificate {
    int candidates = 0;
    int survivors = 0;
    Point survivor_linear_part;  // l in Q'(x) = P2(x) + l.x
    bool survivor_matches_q = false;
};

/// Every form polarizing to B with degree-2 part P2 is P2 + l for a linear l;
/// exactly one of the 256 is 1 on the tetrad support.
inline UniqueQuadricCertificate verify_unique_quadric(const Frame& f) {
    UniqueQuadricCertificate c;
    const auto support = f.support().to_vector();
    auto p2 = [](Point x) { return parity(std::uint8_t(x.mask & pair_swap(x.mask) & 0x0F)); };
    for (int l = 0; l < 256; ++l) {
        ++c.candidates;
        auto q = [&](Point x) { return p2(x) ^ parity(std::uint8_t(x.mask & l)); };
        bool external = std::all_of(support.begin(), support.end(), [&](Point p) { return q(p) == 1; });
        if (!external) continue;
        ++c.survivors;
        c.survivor_linear_part = Point(std::uint8_t(l));
        c.survivor_matches_q = std::all_of(all_points().begin(), all_points().end(), [&](Point x) { return q(x) == quadric_value(x); });
    }
    return c;
}

struct GeneratorSolid {
    Flat flat;
    int system = 0;  // 1 or 2
};

struct GeneratorCensus {
    std::vector<GeneratorSolid> solids;  // sorted by canonical basis
    /// same system <=> projective dim of the intersection in {3, 1, -1}, checked
    /// against the tag assignment for every pair.
    bool relation_is_equivalence = false;
    std::array<std::size_t, 2> class_sizes{};

    int system_of(const Flat& f) const {
        for (const auto& s : solids)
            if (s.flat == f) return s.system;
        return 0;
    }
};

inline bool totally_singular(const Flat& f) {
    const auto pts = f.points();
    return std::all_of(pts.begin(), pts.end(), [](Point p) { return quadric_value(p) == 0; });
}

/// Depth-first growth of totally singular subspaces: each level extends a flat by a
/// singular point of its perp; deduplicated by canonical basis at every level.
inline GeneratorCensus enumerate_generator_solids(const Quadric& q) {
    std::set<Flat> level;
    for (Point p : q.points.to_vector()) level.insert(Flat::span(std::vector<Point>{p}));
    for (int dim = 1; dim < 4; ++dim) {
        std::set<Flat> next;
        for (const Flat& f : level) {
            const Flat orth = perp(f);
            for (Point p : orth.points()) {
                if (f.contains(p) || !q.contains(p)) continue;
                std::vector<Point> g = f.basis();
                g.push_back(p);
                next.insert(Flat::span(g));
            }
        }
        level = std::move(next);
    }
    GeneratorCensus c;
    for (const Flat& f : level) c.solids.push_back({f, 0});
    if (c.solids.empty()) return c;

    auto same_system = [](const Flat& a, const Flat& b) {
        const int d = a.intersect(b).projective_dim();
        return d == 3 || d == 1 || d == -1;
    };
    for (auto& s : c.solids) s.system = same_system(c.solids.front().flat, s.flat) ? 1 : 2;
    c.relation_is_equivalence = true;
    for (std::size_t i = 0; i < c.solids.size() && c.relation_is_equivalence; ++i)
        for (std::size_t j = i + 1; j < c.solids.size(); ++j)
            if (same_system(c.solids[i].flat, c.solids[j].flat) != (c.solids[i].system == c.solids[j].system)) {
                c.relation_is_equivalence = false;
                break;
            }
    for (const auto& s : c.solids) ++c.class_sizes[std::size_t(s.system - 1)];
    return c;
}

/// theta_u of a 2-dimensional subspace all of whose nonzero elements have
/// eps-weight 3 (kind Lambda_7).
inline std::vector<Point> nine_cap(const Frame& f, const Pg33Line& v2) {
    if (line_kind(v2) != 7) throw std::invalid_argument("nine_cap: subspace is not of kind Lambda_7");
    const G81 g(f);
    auto pts = g.image(v2.elements());
    std::sort(pts.begin(), pts.end());
    return pts;
}

/// The nine translates A_tau(cap) over tau in (F3)^4, deduplicated.
inline std::vector<std::vector<Point>> cap_ennead(const Frame& f, const Pg33Line& v2) {
    if (line_kind(v2) != 7) throw std::invalid_argument("cap_ennead: subspace is not of kind Lambda_7");
    const G81 g(f);
    const auto base = v2.elements();
    std::set<std::vector<Point>> caps;
    for (Trit4 t : all_trit4()) {
        std::vector<Point> c;
        for (Trit4 s : base) c.push_back(g.point(s + t));
        std::sort(c.begin(), c.end());
        caps.insert(c);
    }
    return {caps.begin(), caps.end()};
}

/// No three points collinear: the sum of any two is outside the set.
inline bool is_cap(const std::vector<Point>& pts) {
    const PointSet s(pts);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (s.contains(pts[i] + pts[j])) return false;
    return true;
}

}  // namespace tetrad

#pragma once

// The eight spreads generated by A_ijk = zeta_a^i + zeta_b^j + zeta_c^k + zeta_d,
// i,j,k in {1,2}, and lines of omega_4.

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "tetrad/frame.hpp"
#include "tetrad/gf2.hpp"

namespace tetrad {

/// A projective line as its sorted point triple; the third point is the sum of the other two.
using Line = std::array<Point, 3>;

inline Line make_line(Point p, Point q) {
    require_projective(p, "make_line");
    require_projective(q, "make_line");
    if (p == q) throw std::invalid_argument("make_line: points coincide");
    Line l{p, q, p + q};
    std::sort(l.begin(), l.end());
    return l;
}

/// Checks sortedness, distinctness and p + q + r = 0.
inline bool is_line(const Line& l) {
    return !l[0].is_zero() && l[0] < l[1] && l[1] < l[2] && (l[0] + l[1] + l[2]).is_zero();
}

inline bool line_contains(const Line& l, Point p) { return std::find(l.begin(), l.end(), p) != l.end(); }

inline std::string line_string(const Line& l) {
    return "{" + to_shorthand(l[0]) + ", " + to_shorthand(l[1]) + ", " + to_shorthand(l[2]) + "}";
}

/// {p, A p, A^2 p}; throws if this is not a line, i.e. (I + A + A^2) p != 0.
inline Line orbit_line(const LinMap& a, Point p) {
    Line l{p, a(p), a(a(p))};
    std::sort(l.begin(), l.end());
    if (!is_line(l)) throw std::logic_error("orbit {p, Ap, A^2p} of " + to_shorthand(p) + " is not a line");
    return l;
}

using SpreadLabel = std::array<int, 3>;  // ijk, entries in {1,2}

inline const std::array<SpreadLabel, 8>& spread_labels() {
    // Z = {111,122,212,221}, Z* = {222,211,121,112}
    static const std::array<SpreadLabel, 8> l{{{1, 1, 1}, {1, 2, 2}, {2, 1, 2}, {2, 2, 1}, {2, 2, 2}, {2, 1, 1}, {1, 2, 1}, {1, 1, 2}}};
    return l;
}

inline std::string spread_label_string(const SpreadLabel& l) { return {char('0' + l[0]), char('0' + l[1]), char('0' + l[2])}; }

inline SpreadLabel parse_spread_label(const std::string& s) {
    if (s.size() != 3 || std::any_of(s.begin(), s.end(), [](char c) { return c != '1' && c != '2'; }))
        throw std::invalid_argument("spread label must be three digits from {1,2}: '" + s + "'");
    return {s[0] - '0', s[1] - '0', s[2] - '0'};
}

inline Trit4 spread_direction(const SpreadLabel& l) { return Trit4(l[0], l[1], l[2], 1); }

struct Spread {
    SpreadLabel label{};
    std::vector<Line> lines;  // 85, sorted
    std::array<int, 256> index{};  // point mask -> line index

    const Line& line_of(Point p) const {
        require_projective(p, "Spread::line_of");
        return lines[std::size_t(index[p.mask])];
    }
};

inline Spread build_spread(const Frame& f, const SpreadLabel& ijk) {
    for (int d : ijk)
        if (d != 1 && d != 2) throw std::invalid_argument("build_spread: indices must be in {1,2}");
    const LinMap a = f.a_map(spread_direction(ijk));
    Spread s;
    s.label = ijk;
    PointSet covered;
    for (Point p : all_points()) {
        if (covered.contains(p)) continue;
        Line l = orbit_line(a, p);
        for (Point q : l) covered.insert(q);
        s.lines.push_back(l);
    }
    std::sort(s.lines.begin(), s.lines.end());
    s.index.fill(-1);
    for (std::size_t i = 0; i < s.lines.size(); ++i)
        for (Point q : s.lines[i]) s.index[q.mask] = int(i);
    return s;
}

inline std::vector<Spread> build_all_spreads(const Frame& f) {
    std::vector<Spread> v;
    for (const auto& l : spread_labels()) v.push_back(build_spread(f, l));
    return v;
}

/// Lines pairwise disjoint and covering all 255 points.
inline bool is_partition(const std::vector<Line>& lines, std::size_t expected_points = 255) {
    PointSet s;
    for (const Line& l : lines)
        for (Point p : l) {
            if (s.contains(p)) return false;
            s.insert(p);
        }
    return s.size() == expected_points;
}

/// Number of distinct lines among L^ijk(p) for the eight labels.
inline int distinct_line_count(const Frame& f, Point p) {
    require_projective(p, "distinct_line_count");
    std::vector<Line> ls;
    for (const auto& l : spread_labels()) ls.push_back(orbit_line(f.a_map(spread_direction(l)), p));
    std::sort(ls.begin(), ls.end());
    return int(std::unique(ls.begin(), ls.end()) - ls.begin());
}

struct PiFlats {
    Flat pi;       // spanned by L^ijk(p), ijk in Z
    Flat pi_star;  // spanned by L^ijk(p), ijk in Z*
};

inline PiFlats pi_flats(const Frame& f, Point p) {
    require_projective(p, "pi_flats");
    if (f.line_weight(p) != 4) throw std::invalid_argument("pi_flats: point " + to_shorthand(p) + " is not in omega_4");
    std::vector<Point> g, gs;
    const auto& labels = spread_labels();
    for (std::size_t k = 0; k < 8; ++k) {
        Line l = orbit_line(f.a_map(spread_direction(labels[k])), p);
        auto& dst = k < 4 ? g : gs;
        dst.insert(dst.end(), l.begin(), l.end());
    }
    return {Flat::span(g), Flat::span(gs)};
}

/// {p, A_lambda p, A_2lambda p} is a projective line lying inside omega_4.
inline bool omega4_line_test(const Frame& f, Point p, Trit4 lambda) {
    if (lambda.is_zero()) throw std::invalid_argument("omega4_line_test: lambda must be nonzero");
    if (f.line_weight(p) != 4) throw std::invalid_argument("omega4_line_test: point is not in omega_4");
    const Point q = f.a_map(lambda)(p), r = f.a_map(2 * lambda)(p);
    if (!(p + q + r).is_zero()) return false;
    return f.line_weight(q) == 4 && f.line_weight(r) == 4;
}

/// Lines {p, A_lambda p, A_2lambda p} over p in omega_4; a parallel class of
/// the partial affine space when +-lambda is in Xi u Xi*.
inline std::vector<Line> omega4_parallel_class(const Frame& f, Trit4 lambda) {
    const LinMap a = f.a_map(lambda);
    std::vector<Line> out;
    PointSet covered;
    for (Point p : all_points()) {
        if (f.line_weight(p) != 4 || covered.contains(p)) continue;
        Line l = orbit_line(a, p);
        for (Point q : l) covered.insert(q);
        out.push_back(l);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace tetrad

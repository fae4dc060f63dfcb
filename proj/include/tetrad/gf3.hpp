#pragma once

// V(4,3) and PG(3,3): digits, the two distinguished bases, subspace
// enumeration and the vertex / weight-pattern taxonomies.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tetrad {

/// Element xi1 xi2 xi3 xi4 of (F3)^4, coordinates in the basis eps_1..eps_4.
struct Trit4 {
    std::array<std::uint8_t, 4> d{};

    constexpr Trit4() = default;
    constexpr Trit4(int a, int b, int c, int e)
        : d{std::uint8_t(((a % 3) + 3) % 3), std::uint8_t(((b % 3) + 3) % 3), std::uint8_t(((c % 3) + 3) % 3),
            std::uint8_t(((e % 3) + 3) % 3)} {}

    /// Base-3 value with xi1 the most significant digit; 0..80.
    constexpr int index() const { return ((d[0] * 3 + d[1]) * 3 + d[2]) * 3 + d[3]; }
    static constexpr Trit4 from_index(int k) { return Trit4(k / 27 % 3, k / 9 % 3, k / 3 % 3, k % 3); }

    static Trit4 parse(std::string_view s) {
        if (s.size() != 4) throw std::invalid_argument("Trit4: expected four digits, got '" + std::string(s) + "'");
        Trit4 t;
        for (std::size_t i = 0; i < 4; ++i) {
            if (s[i] < '0' || s[i] > '2') throw std::invalid_argument("Trit4: digit out of range in '" + std::string(s) + "'");
            t.d[i] = std::uint8_t(s[i] - '0');
        }
        return t;
    }
    std::string str() const {
        std::string s(4, '0');
        for (std::size_t i = 0; i < 4; ++i) s[i] = char('0' + d[i]);
        return s;
    }

    constexpr bool is_zero() const { return d[0] == 0 && d[1] == 0 && d[2] == 0 && d[3] == 0; }

    friend constexpr Trit4 operator+(Trit4 a, Trit4 b) {
        return Trit4(a.d[0] + b.d[0], a.d[1] + b.d[1], a.d[2] + b.d[2], a.d[3] + b.d[3]);
    }
    friend constexpr Trit4 operator-(Trit4 a) { return Trit4(-a.d[0], -a.d[1], -a.d[2], -a.d[3]); }
    friend constexpr Trit4 operator-(Trit4 a, Trit4 b) { return a + (-b); }
    friend constexpr Trit4 operator*(int c, Trit4 a) { return Trit4(c * a.d[0], c * a.d[1], c * a.d[2], c * a.d[3]); }

    friend constexpr auto operator<=>(const Trit4& a, const Trit4& b) { return a.index() <=> b.index(); }
    friend constexpr bool operator==(const Trit4&, const Trit4&) = default;
};

/// Standard dot product mod 3.
constexpr int dot(Trit4 a, Trit4 b) { return (a.d[0] * b.d[0] + a.d[1] * b.d[1] + a.d[2] * b.d[2] + a.d[3] * b.d[3]) % 3; }

inline std::vector<Trit4> all_trit4() {
    std::vector<Trit4> v;
    for (int k = 0; k < 81; ++k) v.push_back(Trit4::from_index(k));
    return v;
}

namespace xi {
inline constexpr Trit4 alpha{1, 1, 1, 1};
inline constexpr Trit4 beta{1, 2, 2, 1};
inline constexpr Trit4 gamma{2, 1, 2, 1};
inline constexpr Trit4 delta{2, 2, 1, 1};
inline constexpr Trit4 alpha_star{2, 2, 2, 1};
inline constexpr Trit4 beta_star{2, 1, 1, 1};
inline constexpr Trit4 gamma_star{1, 2, 1, 1};
inline constexpr Trit4 delta_star{1, 1, 2, 1};

inline constexpr std::array<Trit4, 4> unstarred{alpha, beta, gamma, delta};
inline constexpr std::array<Trit4, 4> starred{alpha_star, beta_star, gamma_star, delta_star};

/// lambda or -lambda lies in Xi u Xi*.
constexpr bool in_xi_pm(Trit4 v) {
    for (const auto& s : {unstarred, starred})
        for (Trit4 r : s)
            if (v == r || v == -r) return true;
    return false;
}
}  // namespace xi

inline constexpr Trit4 eps(int r) { return Trit4(r == 1, r == 2, r == 3, r == 4); }

/// Number of nonzero coordinates in the basis eps_1..eps_4.
constexpr int wt_eps(Trit4 v) { return (v.d[0] != 0) + (v.d[1] != 0) + (v.d[2] != 0) + (v.d[3] != 0); }

enum class Basis { eps, xi };

/// Change of coordinates between B_eps and B_Xi = {beta, gamma, delta, alpha}.
/// The matrix is symmetric and involutory, so the same map serves both directions.
constexpr Trit4 change_basis(Trit4 v, Basis /*to*/) {
    constexpr int M[4][4] = {{1, -1, -1, 1}, {-1, 1, -1, 1}, {-1, -1, 1, 1}, {1, 1, 1, 1}};
    int out[4] = {0, 0, 0, 0};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out[r] += M[r][c] * v.d[std::size_t(c)];
    return Trit4(out[0], out[1], out[2], out[3]);
}

constexpr int wt_xi(Trit4 v) { return wt_eps(change_basis(v, Basis::xi)); }
constexpr int hd_eps(Trit4 a, Trit4 b) { return wt_eps(a - b); }
constexpr int hd_xi(Trit4 a, Trit4 b) { return wt_xi(a - b); }

/// Canonical representative of <v>: first nonzero digit equal to 1.
constexpr Trit4 projective_rep(Trit4 v) {
    for (std::uint8_t x : v.d)
        if (x != 0) return x == 1 ? v : 2 * v;
    return v;
}

/// All vectors of the F3-span of the generators (ascending index).
inline std::vector<Trit4> subspace_elements(const std::vector<Trit4>& gens) {
    std::set<Trit4> s{Trit4{}};
    for (Trit4 g : gens) {
        std::set<Trit4> next;
        for (Trit4 x : s)
            for (int c = 0; c < 3; ++c) next.insert(x + c * g);
        s = std::move(next);
    }
    return {s.begin(), s.end()};
}

/// Canonical projective points of a subspace given by its vectors.
inline std::vector<Trit4> projective_points_of(const std::vector<Trit4>& elems) {
    std::set<Trit4> pts;
    for (Trit4 v : elems)
        if (!v.is_zero()) pts.insert(projective_rep(v));
    return {pts.begin(), pts.end()};
}

struct Pg33Line {
    std::array<Trit4, 4> points;  // canonical reps, ascending
    std::array<Trit4, 2> basis;   // two smallest points
    std::vector<Trit4> elements() const { return subspace_elements({basis[0], basis[1]}); }
    bool contains(Trit4 v) const {
        if (v.is_zero()) return true;
        Trit4 r = projective_rep(v);
        return std::find(points.begin(), points.end(), r) != points.end();
    }
    friend bool operator==(const Pg33Line& a, const Pg33Line& b) { return a.points == b.points; }
    friend bool operator<(const Pg33Line& a, const Pg33Line& b) { return a.points < b.points; }
};

/// Plane xi . normal = 0.
struct Pg33Plane {
    Trit4 normal;                // canonical rep
    std::vector<Trit4> points;   // 13 canonical reps, ascending
    std::vector<Trit4> elements() const {
        std::vector<Trit4> v;
        for (Trit4 x : all_trit4())
            if (dot(x, normal) == 0) v.push_back(x);
        return v;
    }
    bool contains(Trit4 v) const { return dot(v, normal) == 0; }
    friend bool operator==(const Pg33Plane& a, const Pg33Plane& b) { return a.normal == b.normal; }
};

inline Pg33Line make_line(Trit4 a, Trit4 b) {
    auto pts = projective_points_of(subspace_elements({a, b}));
    if (pts.size() != 4) throw std::invalid_argument("make_line: generators are dependent");
    Pg33Line l;
    std::copy(pts.begin(), pts.end(), l.points.begin());
    l.basis = {l.points[0], l.points[1]};
    return l;
}

inline Pg33Plane make_plane(Trit4 normal) {
    if (normal.is_zero()) throw std::invalid_argument("make_plane: zero normal");
    Pg33Plane p;
    p.normal = projective_rep(normal);
    p.points = projective_points_of(p.elements());
    return p;
}

/// Plane spanned by three independent vectors.
inline Pg33Plane plane_through(Trit4 a, Trit4 b, Trit4 c) {
    auto elems = subspace_elements({a, b, c});
    if (elems.size() != 27) throw std::invalid_argument("plane_through: generators are dependent");
    for (Trit4 n : all_trit4()) {
        if (n.is_zero() || projective_rep(n) != n) continue;
        if (std::all_of(elems.begin(), elems.end(), [&](Trit4 x) { return dot(x, n) == 0; })) return make_plane(n);
    }
    throw std::logic_error("plane_through: no normal found");
}

struct Pg33 {
    std::vector<Trit4> points;
    std::vector<Pg33Line> lines;
    std::vector<Pg33Plane> planes;
};

inline Pg33 enumerate_pg33() {
    Pg33 g;
    for (Trit4 v : all_trit4())
        if (!v.is_zero() && projective_rep(v) == v) g.points.push_back(v);
    std::set<Pg33Line> lines;
    for (std::size_t i = 0; i < g.points.size(); ++i)
        for (std::size_t j = i + 1; j < g.points.size(); ++j) lines.insert(make_line(g.points[i], g.points[j]));
    g.lines.assign(lines.begin(), lines.end());
    for (Trit4 n : g.points) g.planes.push_back(make_plane(n));
    return g;
}

/// Plane kinds P0..P3: number of reference vertices <eps_r> on the plane.
inline int plane_kind(const Pg33Plane& p) {
    int r = 0;
    for (int k = 1; k <= 4; ++k)
        if (std::find(p.points.begin(), p.points.end(), eps(k)) != p.points.end()) ++r;
    return r;
}

using WeightPattern = std::array<int, 4>;

inline WeightPattern weight_pattern(const Pg33Line& l) {
    WeightPattern w{};
    for (Trit4 p : l.points) ++w[std::size_t(wt_eps(p) - 1)];
    return w;
}

/// Kinds Lambda_1..Lambda_7 keyed by weight pattern (n1,n2,n3,n4).
inline const std::array<WeightPattern, 7>& line_kind_table() {
    static const std::array<WeightPattern, 7> t{{{2, 2, 0, 0},
                                                 {1, 1, 2, 0},
                                                 {0, 3, 1, 0},
                                                 {0, 2, 0, 2},
                                                 {1, 0, 1, 2},
                                                 {0, 1, 2, 1},
                                                 {0, 0, 4, 0}}};
    return t;
}

/// Returns 1..7; an unlisted pattern is a structural error.
inline int line_kind(const Pg33Line& l) {
    const auto w = weight_pattern(l);
    const auto& t = line_kind_table();
    for (std::size_t k = 0; k < t.size(); ++k)
        if (t[k] == w) return int(k) + 1;
    throw std::logic_error("line_kind: weight pattern not in the kind table");
}

/// Number of points <lambda> with lambda in Xi u Xi* (up to sign) on a plane.
inline int xi_point_count(const Pg33Plane& p) {
    return int(std::count_if(p.points.begin(), p.points.end(), [](Trit4 v) { return xi::in_xi_pm(v); }));
}

/// The 13 lines inside a plane.
inline std::vector<Pg33Line> lines_in_plane(const Pg33Plane& p) {
    std::set<Pg33Line> s;
    for (std::size_t i = 0; i < p.points.size(); ++i)
        for (std::size_t j = i + 1; j < p.points.size(); ++j) s.insert(make_line(p.points[i], p.points[j]));
    return {s.begin(), s.end()};
}

/// 4x4 matrix over F3 acting on column vectors.
struct Gf3Matrix {
    std::array<Trit4, 4> cols{};  // image of eps_r in column r-1
    Trit4 operator()(Trit4 v) const {
        Trit4 r;
        for (std::size_t c = 0; c < 4; ++c) r = r + int(v.d[c]) * cols[c];
        return r;
    }
    friend auto operator<=>(const Gf3Matrix& a, const Gf3Matrix& b) = default;
    friend bool operator==(const Gf3Matrix&, const Gf3Matrix&) = default;
};

}  // namespace tetrad

#pragma once

// The canonical frame of the tetrad: lines L_a..L_d, the labelling U_ijkl,
// line weights, the order-3 maps zeta_h and the elementary abelian group G81
// indexed by (F3)^4.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "tetrad/gf2.hpp"
#include "tetrad/gf3.hpp"

namespace tetrad {

/// Label index for the zero vector u_h(empty).
inline constexpr int kEmpty = -1;
/// (i,j,k,l) with entries in {kEmpty, 0, 1, 2}.
using Label = std::array<int, 4>;

inline constexpr std::array<char, 4> kLineNames{'a', 'b', 'c', 'd'};

inline std::string label_string(const Label& l) {
    std::string s = "U_";
    for (int i : l) s += (i == kEmpty) ? std::string("∅") : std::string(1, char('0' + i));
    return s;
}

struct Frame {
    /// Coordinate support of V_h: {e1,e8}, {e2,e7}, {e3,e6}, {e4,e5}.
    std::array<std::uint8_t, 4> component_mask{0x81, 0x42, 0x24, 0x18};
    /// labels[h][i] = u_h(i), i = 0,1,2.
    std::array<std::array<Point, 3>, 4> labels{};
    std::array<LinMap, 4> zeta{};
    Point unit = unit_point();

    const std::array<Point, 3>& line(int h) const { return labels[std::size_t(h)]; }

    /// The 12 points of L_a u L_b u L_c u L_d.
    PointSet support() const {
        PointSet s;
        for (const auto& l : labels)
            for (Point p : l) s.insert(p);
        return s;
    }

    /// U_ijkl = u_a(i) + u_b(j) + u_c(k) + u_d(l).
    Point label(const Label& l) const {
        if (l == Label{kEmpty, kEmpty, kEmpty, kEmpty}) throw std::invalid_argument("label: all four indices empty");
        Point p;
        for (std::size_t h = 0; h < 4; ++h) {
            if (l[h] == kEmpty) continue;
            if (l[h] < 0 || l[h] > 2) throw std::invalid_argument("label: index out of range");
            p += labels[h][std::size_t(l[h])];
        }
        return p;
    }

    Label unlabel(Point p) const {
        require_projective(p, "unlabel");
        Label l{};
        for (std::size_t h = 0; h < 4; ++h) {
            const Point comp(std::uint8_t(p.mask & component_mask[h]));
            l[h] = kEmpty;
            if (comp.is_zero()) continue;
            for (std::size_t i = 0; i < 3; ++i)
                if (labels[h][i] == comp) l[h] = int(i);
            if (l[h] == kEmpty) throw std::logic_error("unlabel: frame labels do not cover V_" + std::string(1, kLineNames[h]));
        }
        return l;
    }

    /// Number of nonzero components in the 2+2+2+2 decomposition.
    int line_weight(Point p) const {
        require_projective(p, "line_weight");
        int r = 0;
        for (std::uint8_t m : component_mask) r += (p.mask & m) != 0;
        return r;
    }

    /// A_sigma = zeta_a^i + zeta_b^j + zeta_c^k + zeta_d^l (direct sum).
    LinMap a_map(Trit4 sigma) const {
        LinMap m;
        for (std::size_t h = 0; h < 4; ++h) m = compose(zeta[h].power(sigma.d[h]), m);
        return m;
    }

    /// theta_u(sigma) = A_sigma u.
    Point theta_u(Trit4 sigma) const { return a_map(sigma)(unit); }
};

/// zeta_a: e1 -> e8 -> e1+e8, zeta_b: e7 -> e2 -> e2+e7,
/// zeta_c: e3 -> e6 -> e3+e6, zeta_d: e5 -> e4 -> e4+e5.
inline std::array<LinMap, 4> standard_zetas() {
    auto e = basis_vector;
    std::array<LinMap, 4> z{};
    auto with = [](std::initializer_list<std::pair<int, Point>> images) {
        std::array<Point, 8> c{};
        for (int i = 1; i <= 8; ++i) c[std::size_t(i - 1)] = basis_vector(i);
        for (auto [i, img] : images) c[std::size_t(i - 1)] = img;
        return LinMap::unchecked(c);
    };
    z[0] = with({{1, e(8)}, {8, e(1) + e(8)}});
    z[1] = with({{7, e(2)}, {2, e(2) + e(7)}});
    z[2] = with({{3, e(6)}, {6, e(3) + e(6)}});
    z[3] = with({{5, e(4)}, {4, e(4) + e(5)}});
    return z;
}

/// u_h(0) is the weight-2 point of L_h, so the four sum to u; then
/// u_h(1) = zeta_h(u_h(0)) and u_h(2) = zeta_h(u_h(1)).
inline Frame frame_from_zetas(const std::array<LinMap, 4>& zetas) {
    Frame f;
    f.zeta = zetas;
    for (std::size_t h = 0; h < 4; ++h) {
        const Point u0(f.component_mask[h]);
        f.labels[h][0] = u0;
        f.labels[h][1] = zetas[h](u0);
        f.labels[h][2] = zetas[h](f.labels[h][1]);
    }
    return f;
}

inline Frame build_frame() { return frame_from_zetas(standard_zetas()); }

/// Test hook for the verification harness: flips one matrix entry of zeta_a
/// (the e2 coefficient of zeta_a(e1)), which breaks the frame.
inline Frame perturbed_frame() {
    auto z = standard_zetas();
    auto cols = z[0].columns();
    cols[0] += basis_vector(2);
    z[0] = LinMap::unchecked(cols);
    return frame_from_zetas(z);
}

/// Structural invariants of a frame; returns the list of violated ones.
inline std::vector<std::string> frame_violations(const Frame& f) {
    std::vector<std::string> bad;
    std::vector<Point> all;
    PointSet seen;
    for (std::size_t h = 0; h < 4; ++h) {
        const std::string name = std::string("L_") + kLineNames[h];
        const auto& l = f.labels[h];
        if (!(l[0] + l[1] + l[2]).is_zero() || l[0] == l[1] || l[0].is_zero() || l[1].is_zero())
            bad.push_back(name + " is not a projective line");
        for (Point p : l) {
            if ((p.mask & ~f.component_mask[h]) != 0) bad.push_back(name + " leaves V_" + kLineNames[h]);
            if (seen.contains(p)) bad.push_back(name + " meets another tetrad line");
            seen.insert(p);
            all.push_back(p);
        }
        const LinMap& z = f.zeta[h];
        if (rank(z.columns()) != 8) bad.push_back("zeta_" + std::string(1, kLineNames[h]) + " is singular");
        if (!(z.power(3) == LinMap::identity())) bad.push_back("zeta_" + std::string(1, kLineNames[h]) + " does not have order 3");
        if (!(z(l[0]) == l[1] && z(l[1]) == l[2] && z(l[2]) == l[0]))
            bad.push_back("zeta_" + std::string(1, kLineNames[h]) + " does not cycle the labels of " + name);
        for (std::size_t k = 0; k < 4; ++k) {
            if (k == h) continue;
            for (Point p : f.labels[k])
                if (!z.fixes(p)) {
                    bad.push_back("zeta_" + std::string(1, kLineNames[h]) + " moves a point of L_" + kLineNames[k]);
                    break;
                }
        }
    }
    if (rank(all) != 8) bad.push_back("tetrad lines do not span PG(7,2)");
    if (!(f.labels[0][0] + f.labels[1][0] + f.labels[2][0] + f.labels[3][0] == f.unit)) bad.push_back("u_a(0)+u_b(0)+u_c(0)+u_d(0) != u");
    return bad;
}

/// omega_1..omega_4 by line weight, ascending masks.
inline std::array<std::vector<Point>, 4> orbits_by_line_weight(const Frame& f) {
    std::array<std::vector<Point>, 4> o;
    for (Point p : all_points()) o[std::size_t(f.line_weight(p) - 1)].push_back(p);
    return o;
}

inline PointSet omega(const Frame& f, int r) {
    PointSet s;
    for (Point p : all_points())
        if (f.line_weight(p) == r) s.insert(p);
    return s;
}

/// G81 together with coordinates sigma <-> A_sigma and the chart
/// theta_u : (F3)^4 -> omega_4 with its inverse.
class G81 {
public:
    explicit G81(const Frame& f) {
        for (int k = 0; k < 81; ++k) {
            const Trit4 s = Trit4::from_index(k);
            maps_[std::size_t(k)] = f.a_map(s);
            points_[std::size_t(k)] = maps_[std::size_t(k)](f.unit);
            index_.emplace(maps_[std::size_t(k)].key(), k);
        }
        chart_.fill(-1);
        for (int k = 0; k < 81; ++k) {
            auto& slot = chart_[points_[std::size_t(k)].mask];
            if (slot != -1) throw std::logic_error("G81: theta_u is not injective");
            slot = k;
        }
    }

    const LinMap& at(Trit4 s) const { return maps_[std::size_t(s.index())]; }
    Point point(Trit4 s) const { return points_[std::size_t(s.index())]; }

    std::optional<Trit4> coordinates(const LinMap& m) const {
        auto it = index_.find(m.key());
        if (it == index_.end()) return std::nullopt;
        return Trit4::from_index(it->second);
    }
    bool in_image(Point p) const { return chart_[p.mask] != -1; }
    /// theta_u^{-1}; throws for points outside omega_4.
    Trit4 coords(Point p) const {
        if (!in_image(p)) throw std::invalid_argument("theta_u^-1: point " + to_shorthand(p) + " is not in omega_4");
        return Trit4::from_index(chart_[p.mask]);
    }

    std::vector<Point> image(const std::vector<Trit4>& elems) const {
        std::vector<Point> v;
        v.reserve(elems.size());
        for (Trit4 s : elems) v.push_back(point(s));
        return v;
    }

private:
    std::array<LinMap, 81> maps_{};
    std::array<Point, 81> points_{};
    std::unordered_map<std::uint64_t, int> index_;
    std::array<int, 256> chart_{};
};

struct OrthogonalityReport {
    int pairs = 0;
    int mismatches = 0;
};

/// B(p_rho, p_sigma) against hd_eps(rho, sigma) mod 2, over all 81 x 81 pairs.
inline OrthogonalityReport orthogonality_vs_hamming(const Frame& f) {
    const G81 g(f);
    OrthogonalityReport r;
    for (Trit4 a : all_trit4())
        for (Trit4 b : all_trit4()) {
            ++r.pairs;
            if (symplectic_product(g.point(a), g.point(b)) != hd_eps(a, b) % 2) ++r.mismatches;
        }
    return r;
}

}  // namespace tetrad

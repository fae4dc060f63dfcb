#pragma once

// The tetrad stabilizer G(L4) = (GL(V_a) x ... x GL(V_d)) x| Sym(4), enumerated
// by closure, and its conjugation action on G81 read off in (F3)^4.

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "tetrad/frame.hpp"
#include "tetrad/gf3.hpp"

namespace tetrad {

/// zeta_h and the involution swapping u_h(1), u_h(2) for each h (together
/// generating GL(V_h)), plus transpositions (a b), (b c), (c d) sending
/// u_h(i) <-> u_k(i).
inline std::vector<LinMap> gl4_generators(const Frame& f) {
    std::vector<Point> src;
    for (const auto& l : f.labels) {
        src.push_back(l[1]);
        src.push_back(l[2]);
    }
    auto remap = [&](auto&& image_of) {
        std::vector<Point> img;
        for (std::size_t h = 0; h < 4; ++h)
            for (std::size_t i = 1; i <= 2; ++i) img.push_back(image_of(h, i));
        return LinMap::from_images(src, img);
    };
    std::vector<LinMap> gens;
    for (std::size_t h = 0; h < 4; ++h) gens.push_back(f.zeta[h]);
    for (std::size_t h = 0; h < 4; ++h)
        gens.push_back(remap([&](std::size_t k, std::size_t i) { return f.labels[k][k == h ? 3 - i : i]; }));
    for (std::size_t h = 0; h + 1 < 4; ++h)
        gens.push_back(remap([&](std::size_t k, std::size_t i) {
            std::size_t t = k == h ? h + 1 : (k == h + 1 ? h : k);
            return f.labels[t][i];
        }));
    return gens;
}

class GroupGL4 {
public:
    GroupGL4(std::vector<LinMap> generators, std::size_t max_order) : generators_(std::move(generators)) {
        std::unordered_set<std::uint64_t> seen;
        std::deque<LinMap> queue{LinMap::identity()};
        seen.insert(LinMap::identity().key());
        while (!queue.empty()) {
            LinMap g = queue.front();
            queue.pop_front();
            elements_.push_back(g);
            for (const LinMap& s : generators_) {
                LinMap h = compose(s, g);
                if (seen.insert(h.key()).second) {
                    if (seen.size() > max_order) throw std::runtime_error("G(L4) closure exceeded the order bound");
                    queue.push_back(h);
                }
            }
        }
        std::sort(elements_.begin(), elements_.end(), [](const LinMap& a, const LinMap& b) { return a.key() < b.key(); });
    }

    const std::vector<LinMap>& elements() const { return elements_; }
    const std::vector<LinMap>& generators() const { return generators_; }
    std::size_t order() const { return elements_.size(); }
    bool contains(const LinMap& m) const {
        return std::binary_search(elements_.begin(), elements_.end(), m,
                                  [](const LinMap& a, const LinMap& b) { return a.key() < b.key(); });
    }

private:
    std::vector<LinMap> generators_;
    std::vector<LinMap> elements_;
};

inline GroupGL4 build_gl4(const Frame& f, std::size_t max_order = 4 * 31104) { return GroupGL4(gl4_generators(f), max_order); }

/// Orbits of the 255 points under every group element (not just generators).
inline std::vector<std::vector<Point>> point_orbits(const GroupGL4& g) {
    std::array<bool, 256> done{};
    std::vector<std::vector<Point>> orbits;
    for (Point p : all_points()) {
        if (done[p.mask]) continue;
        PointSet orbit;
        for (const LinMap& m : g.elements()) orbit.insert(m(p));
        auto v = orbit.to_vector();
        for (Point q : v) done[q.mask] = true;
        orbits.push_back(std::move(v));
    }
    std::sort(orbits.begin(), orbits.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return orbits;
}

/// The map sigma -> sigma' with g A_sigma g^-1 = A_sigma', read off from the
/// images of the basis eps_1..eps_4. Throws when some conjugate leaves G81.
inline Gf3Matrix induced_action(const G81& g81, const LinMap& g, const LinMap& g_inv) {
    Gf3Matrix m;
    for (int r = 1; r <= 4; ++r) {
        auto c = g81.coordinates(compose(compose(g, g81.at(eps(r))), g_inv));
        if (!c) throw std::logic_error("G81 is not normalized: a conjugate of A_eps leaves G81");
        m.cols[std::size_t(r - 1)] = *c;
    }
    return m;
}

/// Whether g A_sigma g^-1 = A_{M sigma} for all 81 sigma.
inline bool induced_action_is_exact(const G81& g81, const LinMap& g, const LinMap& g_inv, const Gf3Matrix& m) {
    for (Trit4 s : all_trit4())
        if (!(compose(compose(g, g81.at(s)), g_inv) == g81.at(m(s)))) return false;
    return true;
}

struct SubgroupClassification {
    /// Induced action group on (F3)^4 (distinct matrices).
    std::size_t induced_order = 0;
    /// Every element's conjugation agrees with its linear matrix on all of (F3)^4.
    bool action_linear = false;
    /// Orbits of plane / line indices (into enumerate_pg33()), sorted by smallest member.
    std::vector<std::vector<int>> plane_orbits;
    std::vector<std::vector<int>> line_orbits;
    /// Orbit sizes listed by kind: plane kinds P0..P3, line kinds Lambda_1..Lambda_7.
    std::vector<int> plane_class_sizes;
    std::vector<int> line_class_sizes;
    /// Each orbit consists of exactly one kind and each kind is one orbit.
    bool planes_match_kinds = false;
    bool lines_match_kinds = false;
};

namespace detail {
using ElemKey = std::pair<std::uint64_t, std::uint32_t>;  // 81-bit membership over (F3)^4
inline ElemKey key_of(const std::vector<Trit4>& elems) {
    ElemKey k{0, 0};
    for (Trit4 s : elems) {
        int i = s.index();
        if (i < 64) k.first |= std::uint64_t(1) << i;
        else k.second |= std::uint32_t(1) << (i - 64);
    }
    return k;
}

template <class Subspace>
std::vector<std::vector<int>> subspace_orbits(const std::vector<Subspace>& subs, const std::set<Gf3Matrix>& action) {
    std::map<ElemKey, int> where;
    std::vector<std::vector<Trit4>> elems;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        elems.push_back(subs[i].elements());
        where.emplace(key_of(elems.back()), int(i));
    }
    std::vector<int> orbit_of(subs.size(), -1);
    std::vector<std::vector<int>> orbits;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (orbit_of[i] != -1) continue;
        std::set<int> orbit;
        for (const Gf3Matrix& m : action) {
            std::vector<Trit4> img;
            for (Trit4 s : elems[i]) img.push_back(m(s));
            auto it = where.find(key_of(img));
            if (it == where.end()) throw std::logic_error("induced action does not map subspaces to subspaces");
            orbit.insert(it->second);
        }
        for (int j : orbit) orbit_of[std::size_t(j)] = int(orbits.size());
        orbits.emplace_back(orbit.begin(), orbit.end());
    }
    return orbits;
}

template <class Subspace, class KindFn>
bool orbits_match_kinds(const std::vector<Subspace>& subs, const std::vector<std::vector<int>>& orbits, int kinds, KindFn kind,
                        std::vector<int>& sizes_by_kind) {
    sizes_by_kind.assign(std::size_t(kinds), 0);
    std::set<int> kinds_seen;
    for (const auto& o : orbits) {
        int k = kind(subs[std::size_t(o.front())]);
        for (int j : o)
            if (kind(subs[std::size_t(j)]) != k) return false;
        if (!kinds_seen.insert(k).second) return false;
        sizes_by_kind[std::size_t(k)] = int(o.size());
    }
    return int(kinds_seen.size()) == kinds;
}
}  // namespace detail

/// Conjugacy classes of the (Z3)^3 and (Z3)^2 subgroups of G81, computed as
/// orbits of the induced action of every element of G(L4) on PG(3,3).
inline SubgroupClassification classify_subgroups(const Frame& f, const GroupGL4& group) {
    const G81 g81(f);
    std::set<Gf3Matrix> mats;
    SubgroupClassification c;
    c.action_linear = true;
    for (const LinMap& g : group.elements()) {
        const LinMap gi = g.inverse();
        const Gf3Matrix m = induced_action(g81, g, gi);
        mats.insert(m);
        if (c.action_linear && !induced_action_is_exact(g81, g, gi, m)) c.action_linear = false;
    }
    c.induced_order = mats.size();
    const Pg33 pg = enumerate_pg33();
    c.plane_orbits = detail::subspace_orbits(pg.planes, mats);
    c.line_orbits = detail::subspace_orbits(pg.lines, mats);
    c.planes_match_kinds = detail::orbits_match_kinds(pg.planes, c.plane_orbits, 4, [](const Pg33Plane& p) { return plane_kind(p); },
                                                      c.plane_class_sizes);
    c.lines_match_kinds = detail::orbits_match_kinds(pg.lines, c.line_orbits, 7, [](const Pg33Line& l) { return line_kind(l) - 1; },
                                                     c.line_class_sizes);
    return c;
}

}  // namespace tetrad

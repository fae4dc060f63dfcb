#pragma once

// Exhaustive certificates over the canonical frame, with JSON witnesses.

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "tetrad/anf.hpp"
#include "tetrad/denizens.hpp"
#include "tetrad/frame.hpp"
#include "tetrad/gf2.hpp"
#include "tetrad/gf3.hpp"
#include "tetrad/group.hpp"
#include "tetrad/invariants.hpp"
#include "tetrad/quadric.hpp"
#include "tetrad/spreads.hpp"

namespace tetrad {

using nlohmann::json;

struct Certificate {
    std::string name;
    std::string claim;
    bool passed = false;
    json witness = json::object();
    double elapsed_ms = 0.0;
};

inline void to_json(json& j, const Certificate& c) {
    j = json{{"name", c.name}, {"claim", c.claim}, {"status", c.passed ? "pass" : "fail"}, {"witness", c.witness}, {"elapsed_ms", c.elapsed_ms}};
}

inline void from_json(const json& j, Certificate& c) {
    j.at("name").get_to(c.name);
    j.at("claim").get_to(c.claim);
    const std::string s = j.at("status").get<std::string>();
    if (s != "pass" && s != "fail") throw std::invalid_argument("certificate status must be pass or fail");
    c.passed = s == "pass";
    c.witness = j.at("witness");
    j.at("elapsed_ms").get_to(c.elapsed_ms);
}

/// Point in both notations. Label notation falls back to the mask when the
/// frame cannot label the point (e.g. a perturbed frame).
inline json point_json(const Frame& f, Point p) {
    json j{{"mask", to_shorthand(p)}};
    try {
        j["label"] = label_string(f.unlabel(p));
    } catch (const std::exception&) {
        j["label"] = nullptr;
    }
    return j;
}

inline std::string point_text(const Frame& f, Point p) {
    try {
        return to_shorthand(p) + " (" + label_string(f.unlabel(p)) + ")";
    } catch (const std::exception&) {
        return to_shorthand(p);
    }
}

/// Shared, read-only inputs. G81 and G(L4) are built once; construction
/// failures are kept and reported by every certificate that needs them.
class Context {
public:
    explicit Context(Frame f) : frame_(std::move(f)) {
        try {
            g81_.emplace(frame_);
        } catch (const std::exception& e) {
            g81_error_ = e.what();
        }
        try {
            group_.emplace(build_gl4(frame_));
        } catch (const std::exception& e) {
            group_error_ = e.what();
        }
    }

    const Frame& frame() const { return frame_; }
    const G81& g81() const {
        if (!g81_) throw std::runtime_error("G81 unavailable: " + g81_error_);
        return *g81_;
    }
    const GroupGL4& group() const {
        if (!group_) throw std::runtime_error("G(L4) unavailable: " + group_error_);
        return *group_;
    }

private:
    Frame frame_;
    std::optional<G81> g81_;
    std::string g81_error_;
    std::optional<GroupGL4> group_;
    std::string group_error_;
};

struct CertificateCheck {
    std::string name;
    std::string claim;
    /// Fills the witness; returns whether the claim held.
    std::function<bool(const Context&, json&)> check;
};

namespace certs {

inline bool frame(const Context& c, json& w) {
    const auto bad = frame_violations(c.frame());
    w["violations"] = bad;
    return bad.empty();
}

inline bool orbits(const Context& c, json& w) {
    const auto by_weight = orbits_by_line_weight(c.frame());
    std::vector<std::size_t> sizes;
    for (const auto& o : by_weight) sizes.push_back(o.size());
    w["line_weight_sizes"] = sizes;
    const auto group_orbits = point_orbits(c.group());
    std::set<std::vector<Point>> a(by_weight.begin(), by_weight.end()), b(group_orbits.begin(), group_orbits.end());
    std::vector<std::size_t> gsizes;
    for (const auto& o : group_orbits) gsizes.push_back(o.size());
    w["group_orbit_sizes"] = gsizes;
    w["partitions_agree"] = a == b;
    return sizes == std::vector<std::size_t>{12, 54, 108, 81} && a == b;
}

inline bool quadric_h7(const Context& c, json& w) {
    const Quadric q = build_h7(c.frame());
    const PointSet expected = omega(c.frame(), 2) | omega(c.frame(), 4);
    const auto support = c.frame().support();
    const bool external = (q.points & support).empty();
    w["points"] = q.size();
    w["equals_omega2_omega4"] = q.points == expected;
    w["tetrad_points_external"] = external;
    return q.size() == 135 && q.points == expected && external;
}

inline bool unique_quadric(const Context& c, json& w) {
    const auto u = verify_unique_quadric(c.frame());
    w["candidates"] = u.candidates;
    w["survivors"] = u.survivors;
    w["linear_part"] = to_shorthand(u.survivor_linear_part);
    return u.candidates == 256 && u.survivors == 1 && u.survivor_linear_part == unit_point() && u.survivor_matches_q;
}

inline bool group_structure(const Context& c, json& w) {
    const auto& g = c.group();
    const auto& g81 = c.g81();
    const Quadric q = build_h7(c.frame());
    const auto support = c.frame().support();
    std::size_t h7_breaks = 0, support_breaks = 0;
    for (const LinMap& m : g.elements()) {
        bool h7 = true, sup = true;
        for (Point p : all_points()) {
            if (q.contains(p) != q.contains(m(p))) h7 = false;
            if (support.contains(p) != support.contains(m(p))) sup = false;
        }
        h7_breaks += !h7;
        support_breaks += !sup;
    }
    bool normal = true;
    for (const LinMap& gen : g.generators()) {
        const LinMap gi = gen.inverse();
        for (Trit4 s : all_trit4())
            if (!g81.coordinates(compose(compose(gen, g81.at(s)), gi))) normal = false;
    }
    bool homomorphism = true;
    for (Trit4 a : all_trit4())
        for (Trit4 b : all_trit4())
            if (!(compose(g81.at(a), g81.at(b)) == g81.at(a + b))) homomorphism = false;
    w["order"] = g.order();
    w["g81_normal"] = normal;
    w["g81_homomorphism"] = homomorphism;
    w["elements_not_preserving_h7"] = h7_breaks;
    w["elements_not_preserving_support"] = support_breaks;
    return g.order() == 31104 && normal && homomorphism && h7_breaks == 0 && support_breaks == 0;
}

inline bool value_table(const Context& c, json& w) {
    const Invariants inv = build_invariants(c.frame());
    const std::array<std::array<int, 3>, 4> expected{{{1, 1, 1}, {0, 1, 0}, {1, 0, 0}, {0, 0, 0}}};
    bool ok = true;
    json rows = json::array();
    const auto orbs = orbits_by_line_weight(c.frame());
    for (std::size_t r = 0; r < 4; ++r) {
        std::set<std::array<int, 3>> seen;
        for (Point p : orbs[r]) seen.insert({int(inv.q2(p)), int(inv.q4(p)), int(inv.q6(p))});
        const bool row_ok = seen.size() == 1 && *seen.begin() == expected[r];
        ok = ok && row_ok;
        rows.push_back({{"orbit", r + 1}, {"values", std::vector<std::array<int, 3>>(seen.begin(), seen.end())}});
    }
    w["rows"] = rows;
    bool q2_is_q = std::all_of(all_points().begin(), all_points().end(), [&](Point p) { return int(inv.q2(p)) == quadric_value(p); });
    w["q2_equals_quadric"] = q2_is_q;
    return ok && q2_is_q;
}

inline bool sextic(const Context& c, json& w) {
    const Invariants inv = build_invariants(c.frame());
    PointSet zeros;
    for (Point p : all_points())
        if (!inv.q_omega4(p)) zeros.insert(p);
    const bool p_identity = inv.q_omega4 == p_polynomials().sum();
    Anf8 complements;
    for (std::uint8_t m : {0x81, 0x42, 0x24, 0x18}) complements += Anf8::monomial(std::uint8_t(~m));
    const bool top = inv.q6.homogeneous_part(6) == complements && inv.q6.degree() == 6;
    w["zero_set_size"] = zeros.size();
    w["zero_set_is_omega4"] = zeros == omega(c.frame(), 4);
    w["p_expansion_identity"] = p_identity;
    w["q6_top_degree_is_complements"] = top;
    return zeros.size() == 81 && zeros == omega(c.frame(), 4) && p_identity && top;
}

inline bool wedge(const Context& c, json& w) {
    const Invariants inv = build_invariants(c.frame());
    const std::vector<std::pair<int, int>> expected{{1, 8}, {2, 7}, {3, 6}, {4, 5}};
    const auto b6 = polarize6(inv.q6).pairs;
    const auto bw = polarize6(inv.q_omega4).pairs;
    w["q6"] = b6;
    w["q_omega4"] = bw;
    return b6 == expected && bw == expected;
}

inline bool spreads(const Context& c, json& w) {
    bool ok = true;
    json rows = json::array();
    for (const Spread& s : build_all_spreads(c.frame())) {
        bool has_tetrad = true;
        for (int h = 0; h < 4; ++h) {
            Line l = c.frame().line(h);
            std::sort(l.begin(), l.end());
            has_tetrad = has_tetrad && std::binary_search(s.lines.begin(), s.lines.end(), l);
        }
        const LinMap a = c.frame().a_map(spread_direction(s.label));
        bool invariant = std::all_of(s.lines.begin(), s.lines.end(), [&](const Line& l) {
            Line m{a(l[0]), a(l[1]), a(l[2])};
            std::sort(m.begin(), m.end());
            return m == l;
        });
        const bool part = s.lines.size() == 85 && is_partition(s.lines);
        ok = ok && part && has_tetrad && invariant;
        rows.push_back({{"ijk", spread_label_string(s.label)}, {"lines", s.lines.size()}, {"partition", part}, {"contains_tetrad", has_tetrad},
                        {"z3_invariant", invariant}});
    }
    w["spreads"] = rows;
    return ok;
}

inline bool distinct_lines(const Context& c, json& w) {
    const std::array<int, 4> expected{1, 2, 4, 8};
    std::array<std::set<int>, 4> seen;
    for (Point p : all_points()) seen[std::size_t(c.frame().line_weight(p) - 1)].insert(distinct_line_count(c.frame(), p));
    bool ok = true;
    for (std::size_t r = 0; r < 4; ++r) {
        w["omega_" + std::to_string(r + 1)] = std::vector<int>(seen[r].begin(), seen[r].end());
        ok = ok && seen[r] == std::set<int>{expected[r]};
    }
    return ok;
}

inline bool partial_affine(const Context& c, json& w) {
    bool ok = true;
    const auto all = build_all_spreads(c.frame());
    for (const Spread& s : all) {
        const auto cls = omega4_parallel_class(c.frame(), spread_direction(s.label));
        const bool part = cls.size() == 27 && is_partition(cls, 81) &&
                          std::all_of(cls.begin(), cls.end(), [&](const Line& l) {
                              return is_line(l) && std::binary_search(s.lines.begin(), s.lines.end(), l);
                          });
        ok = ok && part;
    }
    w["parallel_classes"] = all.size();
    return ok;
}

inline bool pi_generators(const Context& c, json& w) {
    const Quadric q = build_h7(c.frame());
    const GeneratorCensus census = enumerate_generator_solids(q);
    int good = 0;
    for (Point p : omega(c.frame(), 4).to_vector()) {
        const PiFlats pf = pi_flats(c.frame(), p);
        const Flat meet = pf.pi.intersect(pf.pi_star);
        int lw4 = 0, lw2 = 0, meet_lw2 = 0;
        for (Point x : pf.pi.points()) {
            const int lw = c.frame().line_weight(x);
            lw4 += lw == 4;
            lw2 += lw == 2;
        }
        for (Point x : meet.points()) meet_lw2 += c.frame().line_weight(x) == 2;
        const int s1 = census.system_of(pf.pi), s2 = census.system_of(pf.pi_star);
        good += pf.pi.size() == 15 && pf.pi_star.size() == 15 && totally_singular(pf.pi) && totally_singular(pf.pi_star) && meet.size() == 7 &&
                meet.contains(p) && meet_lw2 == 6 && lw4 == 9 && lw2 == 6 && s1 != 0 && s2 != 0 && s1 != s2;
    }
    w["points_checked"] = 81;
    w["points_ok"] = good;
    return good == 81;
}

inline bool generator_census(const Context& c, json& w) {
    const GeneratorCensus census = enumerate_generator_solids(build_h7(c.frame()));
    const bool solids = std::all_of(census.solids.begin(), census.solids.end(),
                                    [](const GeneratorSolid& s) { return s.flat.size() == 15 && totally_singular(s.flat); });
    w["solids"] = census.solids.size();
    w["class_sizes"] = census.class_sizes;
    w["relation_is_equivalence"] = census.relation_is_equivalence;
    return census.solids.size() == 270 && census.class_sizes == std::array<std::size_t, 2>{135, 135} && census.relation_is_equivalence && solids;
}

inline bool subgroup_taxonomy(const Context& c, json& w) {
    const auto cls = classify_subgroups(c.frame(), c.group());
    const Pg33 pg = enumerate_pg33();
    std::vector<int> plane_kinds(4, 0), line_kinds(7, 0);
    for (const auto& p : pg.planes) ++plane_kinds[std::size_t(plane_kind(p))];
    for (const auto& l : pg.lines) ++line_kinds[std::size_t(line_kind(l) - 1)];
    // Kind-P0 planes are xi_4 = c1 xi_1 + c2 xi_2 + c3 xi_3 with every c_i nonzero.
    bool p0_equations = true;
    for (const auto& p : pg.planes) {
        const bool form = p.normal.d[0] != 0 && p.normal.d[1] != 0 && p.normal.d[2] != 0 && p.normal.d[3] != 0;
        p0_equations = p0_equations && (form == (plane_kind(p) == 0));
    }
    w["pg33_counts"] = {pg.points.size(), pg.lines.size(), pg.planes.size()};
    w["plane_kind_sizes"] = plane_kinds;
    w["plane_orbit_sizes"] = cls.plane_class_sizes;
    w["line_kind_sizes"] = line_kinds;
    w["line_orbit_sizes"] = cls.line_class_sizes;
    w["induced_group_order"] = cls.induced_order;
    w["induced_action_linear"] = cls.action_linear;
    return pg.points.size() == 40 && pg.lines.size() == 130 && pg.planes.size() == 40 && plane_kinds == std::vector<int>{8, 16, 12, 4} &&
           line_kinds == std::vector<int>{6, 24, 16, 12, 16, 48, 8} && cls.plane_class_sizes == plane_kinds && cls.line_class_sizes == line_kinds &&
           cls.planes_match_kinds && cls.lines_match_kinds && cls.action_linear && p0_equations;
}

inline bool denizen_classes(const Context& c, json& w) {
    const auto& g = c.g81();
    const PointSet w4 = omega(c.frame(), 4);
    std::array<int, 4> by_kind{};
    std::array<int, 4> triplets{};
    int disagreements = 0, bad_partitions = 0;
    std::set<std::vector<Point>> distinct;
    for (const Triplet& t : all_triplets(g)) {
        PointSet u;
        std::size_t total = 0;
        for (const Denizen& d : t.members) {
            const auto cl = classify_denizen(g, d);
            if (!cl.agree()) ++disagreements;
            if (cl.structural != DenizenKind::unknown) ++by_kind[std::size_t(cl.structural)];
            u = u | d.set;
            total += d.points.size();
            distinct.insert(d.points);
        }
        if (!(u == w4) || total != 81) ++bad_partitions;
        ++triplets[std::size_t(plane_kind(t.plane))];
    }
    w["denizens_by_kind"] = {{"Segre", by_kind[0]}, {"C1", by_kind[1]}, {"C2", by_kind[2]}, {"C3", by_kind[3]}};
    w["triplets_by_kind"] = {{"Segre", triplets[0]}, {"C1", triplets[1]}, {"C2", triplets[2]}, {"C3", triplets[3]}};
    w["distinct_denizens"] = distinct.size();
    w["tag_disagreements"] = disagreements;
    w["triplets_not_partitioning"] = bad_partitions;
    return by_kind == std::array<int, 4>{24, 48, 36, 12} && triplets == std::array<int, 4>{8, 16, 12, 4} && disagreements == 0 &&
           bad_partitions == 0 && distinct.size() == 120;
}

inline bool segre_structure(const Context& c, json& w) {
    const auto& g = c.g81();
    const auto segres = segre_census(g);
    int ok = 0;
    for (const Denizen& s : segres) {
        const auto cert = denizen_certificate(g, s.points);
        const auto dirs = xi_directions(s.plane);
        bool slabs_ok = dirs.size() == 3;
        if (slabs_ok) {
            for (const Slab& slab : segre_slabs(g, s, dirs[0], dirs[1], dirs[2])) {
                std::vector<Point> pts;
                for (const auto& row : slab) pts.insert(pts.end(), row.begin(), row.end());
                std::sort(pts.begin(), pts.end());
                slabs_ok = slabs_ok && lines_inside(pts).size() == 6;
            }
        }
        // The plane is spanned by three directions all in Xi or all in Xi*.
        bool same_side = true;
        if (dirs.size() == 3) {
            int unstarred = 0;
            for (Trit4 d : dirs)
                for (Trit4 x : xi::unstarred) unstarred += (d == x || d == -x);
            same_side = unstarred == 0 || unstarred == 3;
        }
        ok += structural_kind(cert) == DenizenKind::segre && cert.span_dim == 7 && slabs_ok && same_side;
    }
    w["segres"] = segres.size();
    w["segres_ok"] = ok;
    return segres.size() == 24 && ok == 24;
}

inline bool rogue_spans(const Context& c, json& w) {
    const auto& g = c.g81();
    int c2_ok = 0, c2 = 0, c3_ok = 0, c3 = 0;
    std::set<Line> lines;
    std::set<int> c1_spans;
    std::set<std::size_t> c1_lines;
    for (const Triplet& t : all_triplets(g))
        for (const Denizen& d : t.members) {
            const int k = plane_kind(d.plane);
            if (k == 1) {
                const auto cert = denizen_certificate(g, d.points);
                c1_spans.insert(cert.span_dim);
                c1_lines.insert(cert.lines.size());
            } else if (k == 2) {
                ++c2;
                const auto cert = denizen_certificate(g, d.points);
                const auto s = rogue_c2_structure(c.frame(), g, d);
                lines.insert(s.l_r);
                c2_ok += structural_kind(cert) == DenizenKind::c2 && s.span_dim == 5 && s.l_r_in_omega2 && s.r_is_perp_cap_omega4 && s.reguli_ok && s.h3_ok;
            } else if (k == 3) {
                ++c3;
                c3_ok += Flat::span(d.points).projective_dim() == 6;
            }
        }
    w["c1_span_dims"] = std::vector<int>(c1_spans.begin(), c1_spans.end());
    w["c1_line_counts"] = std::vector<std::size_t>(c1_lines.begin(), c1_lines.end());
    w["c2"] = {{"count", c2}, {"ok", c2_ok}, {"distinct_regulus_lines", lines.size()}};
    w["c3"] = {{"count", c3}, {"ok", c3_ok}};
    return c2 == 36 && c2_ok == 36 && lines.size() == 36 && c3 == 12 && c3_ok == 12;
}

inline bool sections(const Context& c, json& w) {
    const auto& g = c.g81();
    int ok = 0;
    for (const Denizen& s : segre_census(g)) {
        std::array<int, 3> k{};
        bool agree = true;
        for (const auto& r : section_census(g, s)) {
            agree = agree && r.by_line_kind == r.structural;
            if (r.structural != SectionKind::unknown) ++k[std::size_t(r.structural)];
        }
        ok += agree && k == std::array<int, 3>{3, 6, 4};
    }
    w["segres_ok"] = ok;
    return ok == 24;
}

inline bool fans(const Context& c, json& w) {
    const auto& g = c.g81();
    int total = 0, good = 0, segres_ok = 0;
    for (const Denizen& s : segre_census(g)) {
        const auto geom = segre_geometry(g, s);
        const auto fs = enumerate_fans(geom);
        std::map<Point, int> per_point;
        for (const auto& fan : fs) {
            ++total;
            const auto d = fan_decompose(c.frame(), g, geom, fan);
            good += d.common_centre && d.tetrad_line >= 0;
            for (Point p : fan) ++per_point[p];
        }
        segres_ok += fs.size() == 12 && per_point.size() == 27 &&
                     std::all_of(per_point.begin(), per_point.end(), [](const auto& kv) { return kv.second == 4; });
    }
    w["fans"] = total;
    w["fans_decomposed"] = good;
    w["segres_with_12_fans_4_per_point"] = segres_ok;
    return total == 24 * 12 && good == total && segres_ok == 24;
}

inline bool recovery(const Context& c, json& w) {
    const auto& g = c.g81();
    int ok = 0;
    for (const Denizen& s : segre_census(g)) {
        const auto r = recover_tetrad(c.frame(), g, s);
        ok += r.weight3_directions.size() == 4 && r.triplets.size() == 4 && r.equals_tetrad;
    }
    w["segres_recovering_tetrad"] = ok;
    return ok == 24;
}

inline bool caps(const Context& c, json& w) {
    const Pg33 pg = enumerate_pg33();
    const PointSet w4 = omega(c.frame(), 4);
    int n = 0, ok = 0;
    for (const auto& l : pg.lines) {
        if (line_kind(l) != 7) continue;
        ++n;
        const auto cap = nine_cap(c.frame(), l);
        bool pairs = true;
        for (std::size_t i = 0; i < cap.size(); ++i)
            for (std::size_t j = i + 1; j < cap.size(); ++j)
                pairs = pairs && symplectic_product(cap[i], cap[j]) == 1 && quadric_value(cap[i] + cap[j]) == 1;
        const bool on_h7 = std::all_of(cap.begin(), cap.end(), [](Point p) { return quadric_value(p) == 0; });
        const auto en = cap_ennead(c.frame(), l);
        PointSet u;
        bool all_caps = en.size() == 9;
        for (const auto& x : en) {
            all_caps = all_caps && x.size() == 9 && is_cap(x);
            u = u | PointSet(x);
        }
        ok += cap.size() == 9 && pairs && on_h7 && is_cap(cap) && all_caps && u == w4;
    }
    w["lambda7_subspaces"] = n;
    w["caps_ok"] = ok;
    return n == 8 && ok == 8;
}

inline bool enneads(const Context& c, json& w) {
    const auto& g = c.g81();
    const auto ts = all_triplets(g);
    const PointSet w4 = omega(c.frame(), 4);
    int pairs = 0, ok = 0;
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = i + 1; j < ts.size(); ++j) {
            ++pairs;
            PointSet u;
            bool sizes = true;
            for (const auto& x : ennead(ts[i], ts[j])) {
                sizes = sizes && x.size() == 9;
                u = u | PointSet(x);
            }
            ok += sizes && u == w4;
        }
    w["triplet_pairs"] = pairs;
    w["ok"] = ok;
    return pairs == 780 && ok == 780;
}

inline bool orthogonality(const Context& c, json& w) {
    const auto r = orthogonality_vs_hamming(c.frame());
    w["pairs"] = r.pairs;
    w["mismatches"] = r.mismatches;
    return r.pairs == 81 * 81 && r.mismatches == 0;
}

/// Weight 2 and 3 correspond exactly across the two bases. Weight 4 in B_eps
/// splits: +-Xi has wt_Xi = 1, +-Xi* has wt_Xi = 4; so wt_Xi = 1 => wt_eps = 4
/// and wt_eps = 1 => wt_Xi = 4 hold only as implications.
inline bool weights(const Context&, json& w) {
    int mismatches = 0;
    std::map<std::string, int> joint;
    for (Trit4 v : all_trit4()) {
        const int e = wt_eps(v), x = wt_xi(v);
        ++joint[std::to_string(e) + "," + std::to_string(x)];
        bool in_xi = false, in_xi_star = false;
        for (Trit4 r : xi::unstarred) in_xi = in_xi || v == r || v == -r;
        for (Trit4 r : xi::starred) in_xi_star = in_xi_star || v == r || v == -r;
        if ((x == 2) != (e == 2) || (x == 3) != (e == 3)) ++mismatches;
        if ((x == 1) != in_xi || (e == 4 && x == 4) != in_xi_star) ++mismatches;
        if (e == 1 && x != 4) ++mismatches;
        if ((e == 4) != xi::in_xi_pm(v)) ++mismatches;
        if (!(change_basis(change_basis(v, Basis::xi), Basis::eps) == v)) ++mismatches;
    }
    w["vectors"] = 81;
    w["joint_eps_xi"] = joint;
    w["mismatches"] = mismatches;
    return mismatches == 0;
}

inline bool omega4_lines(const Context& c, json& w) {
    const auto w4 = omega(c.frame(), 4).to_vector();
    int directions = 0, mismatches = 0;
    for (Trit4 v : enumerate_pg33().points) {
        ++directions;
        for (Point p : w4)
            if (omega4_line_test(c.frame(), p, v) != xi::in_xi_pm(v)) ++mismatches;
    }
    w["direction_pairs"] = directions;
    w["mismatches"] = mismatches;
    return directions == 40 && mismatches == 0;
}

}  // namespace certs

/// The suite in report order. The frame check comes first so a broken frame
/// is named by the first failure.
inline const std::vector<CertificateCheck>& certificate_checks() {
    static const std::vector<CertificateCheck> checks{
        {"frame", "the tetrad lines are skew and span PG(7,2); each zeta_h cycles L_h and fixes the other lines", certs::frame},
        {"orbits", "omega_1..omega_4 have sizes 12, 54, 108, 81 and are the G(L4)-orbits", certs::orbits},
        {"quadric_h7", "the zero set of Q is omega_2 u omega_4 (135 points), external to the tetrad", certs::quadric_h7},
        {"unique_quadric", "exactly one of the 256 forms P2 + l is 1 on the tetrad, namely l = u", certs::unique_quadric},
        {"group", "|G(L4)| = 31104, G81 is normal, every element preserves H7 and the tetrad", certs::group_structure},
        {"value_table", "(Q2,Q4,Q6) is (1,1,1), (0,1,0), (1,0,0), (0,0,0) on omega_1..omega_4; Q2 = Q", certs::value_table},
        {"sextic_omega4", "Q_omega4 has zero set omega_4, equals P6+P5+P4+P4'+P3+P2+P1 and has the four complement monomials in degree 6",
         certs::sextic},
        {"wedge", "the 6-fold polarization of Q6 and of Q_omega4 is e1^e8 + e2^e7 + e3^e6 + e4^e5", certs::wedge},
        {"spreads", "each of the 8 spreads has 85 lines partitioning the points, contains the tetrad and is Z3-invariant", certs::spreads},
        {"distinct_lines", "the 8 lines L^ijk(p) give 8/4/2/1 distinct lines on omega_4/omega_3/omega_2/omega_1", certs::distinct_lines},
        {"partial_affine", "each Xi direction gives 27 parallel lines partitioning omega_4, all in the matching spread", certs::partial_affine},
        {"pi_generators", "Pi(p), Pi*(p) are generators in opposite systems meeting in a plane through p, for all 81 p", certs::pi_generators},
        {"generators", "H7 has 270 generator solids in two systems of 135; the parity relation is an equivalence", certs::generator_census},
        {"subgroup_taxonomy", "plane and line classes (8,16,12,4) and (6,24,16,12,16,48,8) coincide with conjugacy orbits", certs::subgroup_taxonomy},
        {"denizens", "120 denizens: 24 Segre, 48 C1, 36 C2, 12 C3; structural and plane tags agree; triplets partition omega_4",
         certs::denizen_classes},
        {"segre", "24 Segre denizens with (27_3,27_3) profile, three rulings, span 7 and three S2(2) slabs", certs::segre_structure},
        {"rogues", "C2 rogues span 5-flats with L_R in omega_2 and regulus structure (36 lines); C3 rogues span 6-flats", certs::rogue_spans},
        {"sections", "each Segre has 3 S2(2), 6 three-generator and 4 fan sections, matching the line kinds", certs::sections},
        {"fans", "each Segre has 12 fans, 4 through each point; each fan splits into 3 troikas with a common centre in omega_1", certs::fans},
        {"tetrad_recovery", "every Segre yields 4 fan-triplets whose centre lines are L_a, L_b, L_c, L_d", certs::recovery},
        {"caps", "each of the 8 Lambda_7 subspaces gives a 9-cap on H7 whose G81-translates partition omega_4", certs::caps},
        {"enneads", "every pair of the 40 triplets cuts omega_4 into 9 sets of 9 points", certs::enneads},
        {"orthogonality", "B(p_rho, p_sigma) = hd_eps(rho, sigma) mod 2 for all 81 x 81 pairs", certs::orthogonality},
        {"weights", "wt_Xi = wt_eps for weights 2 and 3; wt_Xi = 1 exactly on +-Xi; wt_eps = 4 exactly on +-(Xi u Xi*); the basis change is involutory", certs::weights},
        {"omega4_lines", "{p, A_l p, A_2l p} is a line in omega_4 exactly when +-l is in Xi u Xi*, over 40 directions", certs::omega4_lines},
    };
    return checks;
}

inline Certificate run_certificate(const CertificateCheck& entry, const Context& ctx) {
    Certificate c;
    c.name = entry.name;
    c.claim = entry.claim;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        c.passed = entry.check(ctx, c.witness);
    } catch (const std::exception& e) {
        c.passed = false;
        c.witness["error"] = e.what();
    }
    c.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return c;
}

/// Runs every certificate on up to `jobs` threads; results keep suite order.
inline std::vector<Certificate> run_all(const Frame& frame, unsigned jobs = 1) {
    const Context ctx(frame);
    const auto& checks = certificate_checks();
    std::vector<Certificate> out(checks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < checks.size(); i = next++) out[i] = run_certificate(checks[i], ctx);
    };
    jobs = std::max(1U, std::min<unsigned>(jobs, unsigned(checks.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace tetrad

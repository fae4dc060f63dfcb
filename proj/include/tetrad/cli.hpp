#pragma once

// Command-line front end: verify-all plus the query subcommands.
// Exit codes: 0 success, 1 certificate failure, 2 usage error.

#include "CLI11.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tetrad/certificates.hpp"

namespace tetrad {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Re-serializes a report with timings zeroed; two reports of the same suite
/// compare equal under this normalization.
inline std::string normalized_report(const json& report) {
    json copy = report;
    for (auto& c : copy) c["elapsed_ms"] = 0;
    return copy.dump(2);
}

inline json report_json(const std::vector<Certificate>& certs) {
    json j = json::array();
    for (const auto& c : certs) j.push_back(c);
    return j;
}

namespace cli_detail {

inline json points_json(const Frame& f, const std::vector<Point>& pts) {
    json a = json::array();
    for (Point p : pts) a.push_back(point_json(f, p));
    return a;
}

inline std::string points_text(const Frame& f, const std::vector<Point>& pts, const char* sep = ", ") {
    std::string s;
    for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? sep : "") + point_text(f, pts[i]);
    return s;
}

inline std::string line_text(const Frame& f, const Line& l) { return "{" + points_text(f, {l.begin(), l.end()}) + "}"; }

inline json line_json(const Frame& f, const Line& l) { return points_json(f, {l.begin(), l.end()}); }

inline Pg33Plane parse_plane(const std::string& text) {
    Trit4 n;
    try {
        n = Trit4::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--plane: ") + e.what());
    }
    if (n.is_zero()) throw UsageError("--plane: the normal vector must be nonzero");
    return make_plane(projective_rep(n));
}

inline int cmd_verify(std::ostream& out, std::ostream& err, bool perturb, unsigned jobs, const std::string& report_path, bool as_json) {
    const auto certs = run_all(perturb ? perturbed_frame() : build_frame(), jobs);
    const json report = report_json(certs);
    if (!report_path.empty()) {
        std::ofstream f(report_path);
        if (!f) {
            err << "cannot write report to " << report_path << "\n";
            return 2;
        }
        f << report.dump(2) << "\n";
    }
    std::size_t passed = 0;
    for (const auto& c : certs) passed += c.passed;
    if (as_json) {
        out << report.dump(2) << "\n";
    } else {
        for (const auto& c : certs) {
            out << (c.passed ? "PASS " : "FAIL ") << c.name << "  [" << std::fixed << std::setprecision(1) << c.elapsed_ms << " ms]\n";
            if (!c.passed) out << "     claim: " << c.claim << "\n     witness: " << c.witness.dump() << "\n";
        }
        out << passed << "/" << certs.size() << " certificates passed\n";
    }
    if (passed != certs.size()) {
        for (const auto& c : certs)
            if (!c.passed) {
                err << "first failing certificate: " << c.name << " " << c.witness.dump() << "\n";
                break;
            }
        return 1;
    }
    return 0;
}

inline int cmd_orbits(std::ostream& out, bool as_json) {
    const Frame f = build_frame();
    const auto orbs = orbits_by_line_weight(f);
    if (as_json) {
        json j = json::array();
        for (std::size_t r = 0; r < 4; ++r) j.push_back({{"orbit", "omega_" + std::to_string(r + 1)}, {"size", orbs[r].size()}, {"points", points_json(f, orbs[r])}});
        out << j.dump(2) << "\n";
        return 0;
    }
    for (std::size_t r = 0; r < 4; ++r) out << "omega_" << r + 1 << "  size " << orbs[r].size() << "\n  " << points_text(f, orbs[r], "\n  ") << "\n";
    return 0;
}

inline int cmd_invariants(std::ostream& out, bool emit_anf, bool as_json) {
    const Frame f = build_frame();
    const Invariants inv = build_invariants(f);
    const std::vector<std::pair<std::string, const Anf8*>> polys{{"Q2", &inv.q2}, {"Q4", &inv.q4}, {"Q6", &inv.q6}, {"Q_omega4", &inv.q_omega4}};
    const auto orbs = orbits_by_line_weight(f);
    if (as_json) {
        json j = json::object();
        for (const auto& [name, p] : polys) {
            json e{{"degree", p->degree()}, {"terms", p->term_count()}};
            json values = json::array();
            for (const auto& o : orbs) values.push_back(int((*p)(o.front())));
            e["orbit_values"] = values;
            if (emit_anf) e["monomials"] = p->to_index_lists();
            j[name] = e;
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "polynomial  degree  terms  values on omega_1..omega_4\n";
    for (const auto& [name, p] : polys) {
        out << std::left << std::setw(12) << name << std::setw(8) << p->degree() << std::setw(7) << p->term_count();
        for (const auto& o : orbs) out << int((*p)(o.front())) << ' ';
        out << "\n";
    }
    if (emit_anf)
        for (const auto& [name, p] : polys) {
            out << name << " =";
            for (const auto& m : p->to_index_lists()) {
                out << ' ';
                if (m.empty()) out << '1';
                for (int i : m) out << 'x' << i;
            }
            out << "\n";
        }
    return 0;
}

inline int cmd_spreads(std::ostream& out, const std::string& ijk, bool as_json) {
    const Frame f = build_frame();
    if (ijk.empty()) {
        json j = json::array();
        for (const Spread& s : build_all_spreads(f)) {
            const Line& lu = s.line_of(f.unit);
            if (as_json) j.push_back({{"ijk", spread_label_string(s.label)}, {"lines", s.lines.size()}, {"line_of_u", line_json(f, lu)}});
            else out << spread_label_string(s.label) << "  " << s.lines.size() << " lines, line of u " << line_text(f, lu) << "\n";
        }
        if (as_json) out << j.dump(2) << "\n";
        return 0;
    }
    SpreadLabel label;
    try {
        label = parse_spread_label(ijk);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--ijk: ") + e.what());
    }
    const Spread s = build_spread(f, label);
    if (as_json) {
        json lines = json::array();
        for (const Line& l : s.lines) lines.push_back(line_json(f, l));
        out << json{{"ijk", ijk}, {"lines", lines}}.dump(2) << "\n";
        return 0;
    }
    out << "spread " << ijk << ": " << s.lines.size() << " lines\n";
    for (const Line& l : s.lines) out << "  " << line_text(f, l) << "\n";
    return 0;
}

inline json certificate_json(const DenizenCertificate& c) {
    return {{"lines", c.lines.size()},
            {"lines_per_point", {c.min_lines_per_point, c.max_lines_per_point}},
            {"span_dim", c.span_dim},
            {"rulings", c.rulings.size()}};
}

inline std::string certificate_text(const DenizenCertificate& c) {
    std::ostringstream s;
    s << c.lines.size() << " lines, ";
    if (c.min_lines_per_point == c.max_lines_per_point) s << c.min_lines_per_point;
    else s << c.min_lines_per_point << ".." << c.max_lines_per_point;
    s << " per point, span " << c.span_dim;
    return s.str();
}

inline int cmd_triplets(std::ostream& out, bool as_json) {
    const Frame f = build_frame();
    const G81 g(f);
    std::array<int, 4> counts{};
    json rows = json::array();
    if (!as_json) out << "plane  kind   R / R' / R''\n";
    for (const Triplet& t : all_triplets(g)) {
        const int k = plane_kind(t.plane);
        ++counts[std::size_t(k)];
        json members = json::array();
        std::string text;
        for (const Denizen& d : t.members) {
            const auto cl = classify_denizen(g, d);
            members.push_back({{"coset", d.coset}, {"structural", kind_name(cl.structural)}, {"certificate", certificate_json(cl.certificate)}});
            text += (text.empty() ? "" : " | ") + kind_name(cl.structural) + " (" + certificate_text(cl.certificate) + ")";
        }
        const std::string kind = "P" + std::to_string(k);
        rows.push_back({{"plane", t.plane.normal.str()}, {"kind", kind}, {"class", kind_name(kind_of_plane(t.plane))}, {"denizens", members}});
        if (!as_json) out << t.plane.normal.str() << "   " << kind << "     " << text << "\n";
    }
    const json summary{{"Segre", counts[0]}, {"C1", counts[1]}, {"C2", counts[2]}, {"C3", counts[3]}};
    if (as_json) {
        out << json{{"triplets", rows}, {"class_counts", summary}}.dump(2) << "\n";
        return 0;
    }
    out << "classes: Segre " << counts[0] << ", C1 " << counts[1] << ", C2 " << counts[2] << ", C3 " << counts[3] << "\n";
    return 0;
}

inline int cmd_denizen(std::ostream& out, const std::string& plane_text, int coset, bool as_json) {
    const Pg33Plane plane = parse_plane(plane_text);
    if (coset < 0 || coset > 2) throw UsageError("--coset must be 0, 1 or 2");
    const Frame f = build_frame();
    const G81 g(f);
    const Denizen d = make_denizen(g, plane, coset);
    const auto cl = classify_denizen(g, d);
    if (as_json) {
        json lines = json::array();
        for (const Line& l : cl.certificate.lines) lines.push_back(line_json(f, l));
        out << json{{"plane", plane.normal.str()},   {"coset", coset},
                    {"kind", kind_name(cl.by_plane)}, {"structural", kind_name(cl.structural)},
                    {"certificate", certificate_json(cl.certificate)}, {"points", points_json(f, d.points)},
                    {"lines", lines}}
                   .dump(2)
            << "\n";
        return 0;
    }
    out << "plane " << plane.normal.str() << " (P" << plane_kind(plane) << "), coset " << coset << "\n"
        << "kind " << kind_name(cl.by_plane) << ", structural " << kind_name(cl.structural) << "\n"
        << "certificate: " << certificate_text(cl.certificate) << ", " << cl.certificate.rulings.size() << " direction classes\n"
        << "points:\n  " << points_text(f, d.points, "\n  ") << "\n";
    return 0;
}

inline int cmd_sections(std::ostream& out, int id, bool as_json) {
    const Frame f = build_frame();
    const G81 g(f);
    const auto segres = segre_census(g);
    if (id < 0 || id >= int(segres.size())) throw UsageError("--segre must be in 0.." + std::to_string(segres.size() - 1));
    const Denizen& s = segres[std::size_t(id)];
    json rows = json::array();
    if (!as_json) out << "Segre " << id << ": plane " << s.plane.normal.str() << ", coset " << s.coset << "\n";
    for (const auto& r : section_census(g, s)) {
        const std::string sub = "<" + r.subspace.basis[0].str() + "," + r.subspace.basis[1].str() + ">";
        if (as_json) {
            rows.push_back({{"subspace", sub}, {"line_kind", "Lambda_" + std::to_string(r.line_kind)}, {"section", section_name(r.structural)},
                            {"points", points_json(f, r.points)}});
        } else {
            out << "  " << sub << "  Lambda_" << r.line_kind << "  " << section_name(r.structural) << "\n    " << points_text(f, r.points) << "\n";
        }
    }
    if (as_json) out << json{{"segre", id}, {"plane", s.plane.normal.str()}, {"coset", s.coset}, {"sections", rows}}.dump(2) << "\n";
    return 0;
}

inline int cmd_caps(std::ostream& out, bool as_json) {
    const Frame f = build_frame();
    json rows = json::array();
    for (const auto& l : enumerate_pg33().lines) {
        if (line_kind(l) != 7) continue;
        const auto cap = nine_cap(f, l);
        const std::string sub = "<" + l.basis[0].str() + "," + l.basis[1].str() + ">";
        if (as_json) rows.push_back({{"subspace", sub}, {"points", points_json(f, cap)}});
        else out << sub << "\n  " << points_text(f, cap) << "\n";
    }
    if (as_json) out << rows.dump(2) << "\n";
    return 0;
}

}  // namespace cli_detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tetrad geometry of PG(7,2): certificates and queries"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "Machine-readable output");

    auto* verify = app.add_subcommand("verify-all", "Run every certificate");
    std::string report;
    unsigned jobs = 1;
    bool perturb = false;
    verify->add_option("--report", report, "Write the JSON report to FILE");
    verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1U, 256U));
    verify->add_flag("--perturb", perturb, "Run on a deliberately broken frame");

    auto* orbits = app.add_subcommand("orbits", "The four point orbits");
    auto* invariants = app.add_subcommand("invariants", "The invariant polynomials");
    bool emit_anf = false;
    invariants->add_flag("--emit-anf", emit_anf, "Print monomial lists");
    auto* spreads = app.add_subcommand("spreads", "The eight spreads");
    std::string ijk;
    spreads->add_option("--ijk", ijk, "Spread label, e.g. 212");
    auto* triplets = app.add_subcommand("triplets", "Classification of the 40 triplets");
    auto* denizen = app.add_subcommand("denizen", "One denizen with its certificate");
    std::string plane;
    int coset = 0;
    denizen->add_option("--plane", plane, "Plane normal as four digits, e.g. 1111")->required();
    denizen->add_option("--coset", coset, "Coset 0, 1 or 2");
    auto* sections = app.add_subcommand("sections", "The 13 sections of a Segre denizen");
    int segre = -1;
    sections->add_option("--segre", segre, "Segre index 0..23")->required();
    auto* caps = app.add_subcommand("caps", "The eight 9-caps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (*verify) return cli_detail::cmd_verify(out, err, perturb, jobs, report, as_json);
        if (*orbits) return cli_detail::cmd_orbits(out, as_json);
        if (*invariants) return cli_detail::cmd_invariants(out, emit_anf, as_json);
        if (*spreads) return cli_detail::cmd_spreads(out, ijk, as_json);
        if (*triplets) return cli_detail::cmd_triplets(out, as_json);
        if (*denizen) return cli_detail::cmd_denizen(out, plane, coset, as_json);
        if (*sections) return cli_detail::cmd_sections(out, segre, as_json);
        if (*caps) return cli_detail::cmd_caps(out, as_json);
    } catch (const UsageError& e) {
        err << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace tetrad

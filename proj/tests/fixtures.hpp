#pragma once

#include <vector>

#include "tetrad/frame.hpp"
#include "tetrad/gf2.hpp"
#include "tetrad/group.hpp"

namespace tetrad::testing {

inline const Frame& frame() {
    static const Frame f = build_frame();
    return f;
}

inline const G81& g81() {
    static const G81 g(frame());
    return g;
}

inline const GroupGL4& group() {
    static const GroupGL4 g = build_gl4(frame());
    return g;
}

inline Point P(const char* s) { return parse_shorthand(s); }

inline std::vector<Point> Ps(std::initializer_list<const char*> s) {
    std::vector<Point> v;
    for (const char* x : s) v.push_back(parse_shorthand(x));
    return v;
}

/// The closure of a set under addition, by repeated pairwise sums.
inline PointSet additive_closure(const std::vector<Point>& gens) {
    std::vector<Point> all{Point{}};
    PointSet seen(all);
    for (Point g : gens) {
        const std::size_t n = all.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point s = all[i] + g;
            if (!seen.contains(s)) {
                seen.insert(s);
                all.push_back(s);
            }
        }
    }
    return seen;
}

}  // namespace tetrad::testing

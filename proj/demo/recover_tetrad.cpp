// Recovers the four tetrad lines from one Segre variety inside omega_4.

#include <iostream>

#include "tetrad/denizens.hpp"

int main() {
    using namespace tetrad;
    const Frame f = build_frame();
    const G81 g(f);
    const Denizen s = segre_census(g).front();
    std::cout << "Segre variety from plane " << s.plane.normal.str() << ", coset " << s.coset << "\n";

    const TetradRecovery r = recover_tetrad(f, g, s);
    for (const FanTriplet& t : r.triplets) {
        std::cout << "direction " << t.lambda.str() << "  centre line " << line_string(t.centre_line) << "\n";
    }
    std::cout << (r.equals_tetrad ? "recovered L_a, L_b, L_c, L_d\n" : "recovery failed\n");
    return r.equals_tetrad ? 0 : 1;
}

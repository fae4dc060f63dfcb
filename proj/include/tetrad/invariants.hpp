#pragma once

// G(L4)-invariant polynomials of the tetrad.
//
// Convention: F_h, F_hk, F_hkl are taken as *indicators* of the flats L_h,
// <L_h,L_k>, <L_h,L_k,L_l> (value 1 on the flat, including 0). With this
// convention the orbit-value table of Q2, Q4, Q6 holds and
// Q6 = prod_{i!=1,8}(1+x_i) + ... as a product formula.

#include <array>
#include <vector>

#include "tetrad/anf.hpp"
#include "tetrad/frame.hpp"

namespace tetrad {

struct Invariants {
    Anf8 q2;  // sum of the four 5-flat indicators
    Anf8 q4;  // sum of the six 3-flat indicators
    Anf8 q6;  // sum of the four line indicators
    Anf8 q_omega4;  // q2 + q4 + q6
};

inline Flat tetrad_flat(const Frame& f, std::initializer_list<int> lines) {
    std::vector<Point> gens;
    for (int h : lines)
        for (Point p : f.line(h)) gens.push_back(p);
    return Flat::span(gens);
}

inline Invariants build_invariants(const Frame& f) {
    Invariants inv;
    for (int h = 0; h < 4; ++h) {
        inv.q6 += flat_indicator(tetrad_flat(f, {h}));
        for (int k = h + 1; k < 4; ++k) {
            inv.q4 += flat_indicator(tetrad_flat(f, {h, k}));
            for (int l = k + 1; l < 4; ++l) inv.q2 += flat_indicator(tetrad_flat(f, {h, k, l}));
        }
    }
    inv.q_omega4 = inv.q2 + inv.q4 + inv.q6;
    return inv;
}

/// P1..P6 and P4' written with 1' = 8, 2' = 7, 3' = 6, 4' = 5.
struct PPolynomials {
    Anf8 p1, p2, p3, p4, p4_prime, p5, p6;
    Anf8 sum() const { return p6 + p5 + p4 + p4_prime + p3 + p2 + p1; }
};

inline PPolynomials p_polynomials() {
    auto x = [](std::initializer_list<int> idx) {
        std::uint8_t m = 0;
        for (int i : idx) m |= basis_vector(i).mask;
        return Anf8::monomial(m);
    };
    auto prime = [](int i) { return 9 - i; };
    PPolynomials P;
    for (int i = 1; i <= 8; ++i) {
        P.p1 += x({i});
        for (int j = i + 1; j <= 8; ++j) {
            P.p2 += x({i, j});
            for (int k = j + 1; k <= 8; ++k) P.p3 += x({i, j, k});
        }
    }
    for (int k = 1; k <= 4; ++k)
        for (int l = k + 1; l <= 4; ++l) {
            P.p4 += x({k, prime(k), l, prime(l)});
            for (int m = 1; m <= 8; ++m)
                if (m != k && m != prime(k) && m != l && m != prime(l)) P.p5 += x({k, prime(k), l, prime(l), m});
            for (int m = l + 1; m <= 4; ++m) P.p6 += x({k, prime(k), l, prime(l), m, prime(m)});
        }
    for (int m = 1; m <= 4; ++m) {
        Anf8 inner;  // P_{mm'}
        for (int k = 1; k <= 8; ++k)
            for (int l = k + 1; l <= 8; ++l) {
                if (l == prime(k)) continue;
                if (k == m || k == prime(m) || l == m || l == prime(m)) continue;
                inner += x({k, l});
            }
        P.p4_prime += x({m, prime(m)}) * inner;
    }
    return P;
}

}  // namespace tetrad

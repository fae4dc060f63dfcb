#pragma once

// Boolean polynomials in x1..x8 in reduced algebraic normal form.
//
// Coefficient m (0..255) is the monomial prod_{i : bit i-1 of m} x_i, so the
// same bit convention as Point applies to monomial masks.

#include <algorithm>
#include <bitset>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tetrad/gf2.hpp"

namespace tetrad {

using TruthTable = std::bitset<256>;

/// In-place butterfly; the transform is its own inverse over GF(2).
inline TruthTable mobius_transform(TruthTable t) {
    for (int i = 0; i < 8; ++i)
        for (int m = 0; m < 256; ++m)
            if (m & (1 << i)) t[std::size_t(m)] = t[std::size_t(m)] ^ t[std::size_t(m ^ (1 << i))];
    return t;
}

class Anf8 {
public:
    Anf8() = default;

    static Anf8 zero() { return {}; }
    static Anf8 one() { return monomial(0); }
    static Anf8 monomial(std::uint8_t mask) {
        Anf8 p;
        p.coeffs_.set(mask);
        return p;
    }
    /// x_i for i in 1..8.
    static Anf8 variable(int i) { return monomial(basis_vector(i).mask); }
    /// sum_{i in y} x_i, i.e. the linear form x -> y.x (standard dot product).
    static Anf8 linear_form(Point y) {
        Anf8 p;
        for (int i = 1; i <= 8; ++i)
            if (y.coord(i)) p.coeffs_.set(basis_vector(i).mask);
        return p;
    }
    static Anf8 from_truth_table(const TruthTable& t) { return Anf8(mobius_transform(t)); }

    bool coefficient(std::uint8_t mask) const { return coeffs_.test(mask); }
    void toggle(std::uint8_t mask) { coeffs_.flip(mask); }
    const std::bitset<256>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.none(); }
    std::size_t term_count() const { return coeffs_.count(); }

    /// Largest monomial degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (int m = 0; m < 256; ++m)
            if (coeffs_.test(std::size_t(m))) d = std::max(d, std::popcount(unsigned(m)));
        return d;
    }

    /// Terms of exactly the given degree.
    Anf8 homogeneous_part(int deg) const {
        Anf8 p;
        for (int m = 0; m < 256; ++m)
            if (coeffs_.test(std::size_t(m)) && std::popcount(unsigned(m)) == deg) p.coeffs_.set(std::size_t(m));
        return p;
    }

    /// Monomial masks in graded-lex order (degree, then lexicographic index tuple).
    std::vector<std::uint8_t> monomials() const {
        std::vector<std::uint8_t> out;
        for (int m = 0; m < 256; ++m)
            if (coeffs_.test(std::size_t(m))) out.push_back(std::uint8_t(m));
        std::sort(out.begin(), out.end(), [](std::uint8_t a, std::uint8_t b) {
            int da = std::popcount(unsigned(a)), db = std::popcount(unsigned(b));
            if (da != db) return da < db;
            return monomial_indices(a) < monomial_indices(b);
        });
        return out;
    }

    static std::vector<int> monomial_indices(std::uint8_t mask) {
        std::vector<int> v;
        for (int i = 1; i <= 8; ++i)
            if (mask & (1U << (i - 1))) v.push_back(i);
        return v;
    }

    /// Serialized form: monomials as sorted variable-index tuples, graded-lex order.
    std::vector<std::vector<int>> to_index_lists() const {
        std::vector<std::vector<int>> out;
        for (std::uint8_t m : monomials()) out.push_back(monomial_indices(m));
        return out;
    }
    static Anf8 from_index_lists(const std::vector<std::vector<int>>& terms) {
        Anf8 p;
        for (const auto& t : terms) {
            std::uint8_t m = 0;
            for (int i : t) {
                if (i < 1 || i > 8) throw std::invalid_argument("Anf8: variable index out of range");
                std::uint8_t bit = basis_vector(i).mask;
                if (m & bit) throw std::invalid_argument("Anf8: repeated variable in monomial");
                m |= bit;
            }
            p.toggle(m);
        }
        return p;
    }

    /// Sum over set monomials m with m contained in x.
    bool evaluate(Point x) const {
        bool v = false;
        for (int m = 0; m < 256; ++m)
            if (coeffs_.test(std::size_t(m)) && (unsigned(m) & ~unsigned(x.mask)) == 0) v = !v;
        return v;
    }
    bool operator()(Point x) const { return evaluate(x); }

    TruthTable truth_table() const { return mobius_transform(coeffs_); }

    friend Anf8 operator+(const Anf8& a, const Anf8& b) { return Anf8(a.coeffs_ ^ b.coeffs_); }
    Anf8& operator+=(const Anf8& o) {
        coeffs_ ^= o.coeffs_;
        return *this;
    }
    friend Anf8 operator*(const Anf8& a, const Anf8& b) {
        std::vector<int> ta, tb;
        for (int m = 0; m < 256; ++m) {
            if (a.coeffs_.test(std::size_t(m))) ta.push_back(m);
            if (b.coeffs_.test(std::size_t(m))) tb.push_back(m);
        }
        Anf8 r;
        for (int x : ta)
            for (int y : tb) r.coeffs_.flip(std::size_t(x | y));
        return r;
    }
    Anf8& operator*=(const Anf8& o) { return *this = *this * o; }

    friend bool operator==(const Anf8&, const Anf8&) = default;

private:
    explicit Anf8(const std::bitset<256>& c) : coeffs_(c) {}
    std::bitset<256> coeffs_;
};

inline Anf8 product(const std::vector<Anf8>& factors) {
    Anf8 r = Anf8::one();
    for (const auto& f : factors) r *= f;
    return r;
}

/// Indicator of a flat: 1 exactly on its vectors (zero included). Built as the
/// product of (1 + l) over a basis of linear forms l vanishing on the flat, so
/// the degree equals the codimension.
inline Anf8 flat_indicator(const Flat& flat) {
    std::vector<Point> annihilator;
    for (int m = 1; m < 256; ++m) {
        Point y(static_cast<std::uint8_t>(m));
        bool vanishes = std::all_of(flat.basis().begin(), flat.basis().end(),
                                    [&](Point b) { return parity(std::uint8_t(y.mask & b.mask)) == 0; });
        if (vanishes) annihilator.push_back(y);
    }
    Anf8 r = Anf8::one();
    for (Point y : reduced_basis(annihilator)) r *= Anf8::one() + Anf8::linear_form(y);
    return r;
}

/// Element of wedge^2 V8 written as a set of index pairs {i<j} (e_i ^ e_j).
struct Wedge2 {
    std::vector<std::pair<int, int>> pairs;  // sorted, i < j
    friend bool operator==(const Wedge2&, const Wedge2&) = default;
};

/// Complete 6-fold polarization. For each 6-subset S of {1..8} the finite
/// difference sum_{T subset S} p(sum_{i in T} e_i) is evaluated; the alternating
/// 6-form is then re-expressed through complementation, pair {j,k} present iff
/// the 6-subset omitting j and k gives 1.
inline Wedge2 polarize6(const Anf8& p) {
    if (p.degree() > 6) throw std::domain_error("polarize6: polynomial degree exceeds 6");
    Wedge2 w;
    for (int j = 1; j <= 8; ++j)
        for (int k = j + 1; k <= 8; ++k) {
            const std::uint8_t s = std::uint8_t(0xFF & ~(basis_vector(j).mask | basis_vector(k).mask));
            bool acc = false;
            for (unsigned t = s;; t = (t - 1) & s) {
                acc ^= p.evaluate(Point(std::uint8_t(t)));
                if (t == 0) break;
            }
            if (acc) w.pairs.emplace_back(j, k);
        }
    return w;
}

}  // namespace tetrad

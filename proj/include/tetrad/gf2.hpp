#pragma once

// Exact linear algebra in V(8,2).
//
// Bit convention: bit i-1 of a mask is the coefficient of e_i (i = 1..8).
// A projective point of PG(7,2) is identified with its unique nonzero vector.

#include <algorithm>
#include <array>
#include <bit>
#include <bitset>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tetrad {

struct Point {
    std::uint8_t mask = 0;

    constexpr Point() = default;
    constexpr explicit Point(std::uint8_t m) : mask(m) {}

    constexpr bool is_zero() const { return mask == 0; }
    constexpr int weight() const { return std::popcount(mask); }
    /// Coefficient of e_i, i in 1..8.
    constexpr bool coord(int i) const { return ((mask >> (i - 1)) & 1U) != 0; }

    friend constexpr Point operator+(Point a, Point b) { return Point(std::uint8_t(a.mask ^ b.mask)); }
    constexpr Point& operator+=(Point o) {
        mask ^= o.mask;
        return *this;
    }
    friend constexpr auto operator<=>(Point, Point) = default;
};

constexpr Point basis_vector(int i) { return Point(std::uint8_t(1U << (i - 1))); }
constexpr Point unit_point() { return Point(0xFF); }

inline void require_projective(Point p, const char* where) {
    if (p.is_zero()) throw std::invalid_argument(std::string(where) + ": zero vector is not a projective point");
}

/// All 255 nonzero vectors in increasing mask order.
inline const std::array<Point, 255>& all_points() {
    static const std::array<Point, 255> pts = [] {
        std::array<Point, 255> a{};
        for (int m = 1; m < 256; ++m) a[std::size_t(m - 1)] = Point(std::uint8_t(m));
        return a;
    }();
    return pts;
}

/// Shorthand used for displays: indices of the set coordinates ("1357"), or, for
/// weight > 4, the complementary indices followed by 'u' ("56u" = u + e5 + e6).
inline std::string to_shorthand(Point p) {
    if (p.is_zero()) return "0";
    std::string s;
    if (p.weight() <= 4) {
        for (int i = 1; i <= 8; ++i)
            if (p.coord(i)) s += char('0' + i);
        return s;
    }
    for (int i = 1; i <= 8; ++i)
        if (!p.coord(i)) s += char('0' + i);
    return s + "u";
}

inline Point parse_shorthand(std::string_view text) {
    if (text == "0") return Point{};
    if (text.empty()) throw std::invalid_argument("empty point shorthand");
    std::uint8_t m = 0;
    bool complement = false;
    for (std::size_t k = 0; k < text.size(); ++k) {
        char c = text[k];
        if (c == 'u' && k + 1 == text.size()) {
            complement = true;
        } else if (c >= '1' && c <= '8') {
            std::uint8_t bit = std::uint8_t(1U << (c - '1'));
            if (m & bit) throw std::invalid_argument("repeated coordinate in shorthand: " + std::string(text));
            m |= bit;
        } else {
            throw std::invalid_argument("bad point shorthand: " + std::string(text));
        }
    }
    if (complement) m = std::uint8_t(~m);
    return Point(m);
}

/// e_i <-> e_{9-i}, which on masks is an 8-bit reversal.
constexpr std::uint8_t pair_swap(std::uint8_t m) {
    std::uint8_t r = 0;
    for (int b = 0; b < 8; ++b)
        if (m & (1U << b)) r |= std::uint8_t(1U << (7 - b));
    return r;
}

constexpr int parity(std::uint8_t m) { return std::popcount(m) & 1; }

/// B(x,y) = (x1y8+x8y1)+(x2y7+x7y2)+(x3y6+x6y3)+(x4y5+x5y4) mod 2.
constexpr int symplectic_product(Point x, Point y) { return parity(std::uint8_t(x.mask & pair_swap(y.mask))); }

/// Q(x) = x1x8 + x2x7 + x3x6 + x4x5 + u.x
constexpr int quadric_value(Point x) {
    const std::uint8_t products = std::uint8_t(x.mask & pair_swap(x.mask) & 0x0F);
    return parity(products) ^ parity(x.mask);
}

/// Reduced row-echelon basis: pivots are leading bits, each pivot bit cleared
/// from every other row, rows sorted by decreasing pivot. Zero inputs ignored.
inline std::vector<Point> reduced_basis(std::span<const Point> vectors) {
    std::array<std::uint8_t, 8> by_pivot{};
    for (Point v : vectors) {
        std::uint8_t x = v.mask;
        for (int b = 7; b >= 0 && x; --b) {
            if (!(x & (1U << b))) continue;
            if (by_pivot[std::size_t(b)] == 0) {
                by_pivot[std::size_t(b)] = x;
                x = 0;
            } else {
                x ^= by_pivot[std::size_t(b)];
            }
        }
    }
    for (int b = 7; b >= 0; --b) {
        if (!by_pivot[std::size_t(b)]) continue;
        for (int other = 7; other >= 0; --other)
            if (other != b && by_pivot[std::size_t(other)] & (1U << b)) by_pivot[std::size_t(other)] ^= by_pivot[std::size_t(b)];
    }
    std::vector<Point> out;
    for (int b = 7; b >= 0; --b)
        if (by_pivot[std::size_t(b)]) out.emplace_back(by_pivot[std::size_t(b)]);
    return out;
}

inline int rank(std::span<const Point> vectors) { return int(reduced_basis(vectors).size()); }

/// Membership set over all 256 vectors (index = mask).
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::span<const Point> pts) {
        for (Point p : pts) insert(p);
    }

    void insert(Point p) { bits_.set(p.mask); }
    void erase(Point p) { bits_.reset(p.mask); }
    bool contains(Point p) const { return bits_.test(p.mask); }
    std::size_t size() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }

    std::vector<Point> to_vector() const {
        std::vector<Point> v;
        v.reserve(size());
        for (int m = 0; m < 256; ++m)
            if (bits_.test(std::size_t(m))) v.emplace_back(std::uint8_t(m));
        return v;
    }

    PointSet operator&(const PointSet& o) const { return PointSet(bits_ & o.bits_); }
    PointSet operator|(const PointSet& o) const { return PointSet(bits_ | o.bits_); }
    bool is_subset_of(const PointSet& o) const { return (bits_ & ~o.bits_).none(); }
    bool disjoint_from(const PointSet& o) const { return (bits_ & o.bits_).none(); }
    const std::bitset<256>& bits() const { return bits_; }

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    explicit PointSet(const std::bitset<256>& b) : bits_(b) {}
    std::bitset<256> bits_;
};

/// Linear subspace of V(8,2), viewed projectively. Canonical form is the
/// reduced echelon basis; membership of all 256 vectors is kept alongside.
class Flat {
public:
    Flat() = default;  // the zero subspace

    static Flat span(std::span<const Point> generators) {
        Flat f;
        f.basis_ = reduced_basis(generators);
        f.members_.assign(std::size_t(1) << f.basis_.size(), 0);
        for (std::size_t s = 0; s < f.members_.size(); ++s) {
            std::uint8_t x = 0;
            for (std::size_t k = 0; k < f.basis_.size(); ++k)
                if (s & (std::size_t(1) << k)) x ^= f.basis_[k].mask;
            f.members_[s] = x;
            f.set_.insert(Point(x));
        }
        std::sort(f.members_.begin(), f.members_.end());
        return f;
    }
    static Flat whole_space() {
        std::vector<Point> e;
        for (int i = 1; i <= 8; ++i) e.push_back(basis_vector(i));
        return span(e);
    }

    int vector_dim() const { return int(basis_.size()); }
    /// Projective dimension; -1 for the zero subspace.
    int projective_dim() const { return vector_dim() - 1; }
    /// Number of projective points, 2^k - 1.
    std::size_t size() const { return members_.size() - 1; }
    const std::vector<Point>& basis() const { return basis_; }
    bool contains(Point p) const { return set_.contains(p); }

    /// Nonzero members in increasing mask order.
    std::vector<Point> points() const {
        std::vector<Point> v;
        v.reserve(size());
        for (std::uint8_t m : members_)
            if (m) v.emplace_back(m);
        return v;
    }
    /// Member set including the zero vector.
    const PointSet& member_set() const { return set_; }

    Flat intersect(const Flat& o) const {
        std::vector<Point> common;
        for (std::uint8_t m : members_)
            if (m && o.contains(Point(m))) common.emplace_back(m);
        return span(common);
    }
    Flat join(const Flat& o) const {
        std::vector<Point> g = basis_;
        g.insert(g.end(), o.basis_.begin(), o.basis_.end());
        return span(g);
    }

    friend bool operator==(const Flat& a, const Flat& b) { return a.basis_ == b.basis_; }
    friend bool operator<(const Flat& a, const Flat& b) { return a.basis_ < b.basis_; }

private:
    std::vector<Point> basis_;
    std::vector<std::uint8_t> members_{0};
    PointSet set_{std::vector<Point>{Point{}}};
};

inline Flat span(std::span<const Point> points) { return Flat::span(points); }

/// {x : B(x,p) = 0 for every p in the input}.
inline Flat perp(std::span<const Point> points) {
    const auto gens = reduced_basis(points);
    std::vector<Point> orth;
    for (int m = 1; m < 256; ++m) {
        Point x(static_cast<std::uint8_t>(m));
        bool ok = std::all_of(gens.begin(), gens.end(), [&](Point g) { return symplectic_product(x, g) == 0; });
        if (ok) orth.push_back(x);
    }
    return Flat::span(orth);
}
inline Flat perp(const Flat& f) { return perp(f.basis()); }

/// Invertible linear map of V(8,2), stored by the images of e_1..e_8.
class LinMap {
public:
    constexpr LinMap() {
        for (int i = 0; i < 8; ++i) cols_[std::size_t(i)] = Point(std::uint8_t(1U << i));
    }
    /// Throws if the columns are dependent.
    explicit LinMap(const std::array<Point, 8>& columns) : cols_(columns) {
        if (rank(cols_) != 8) throw std::invalid_argument("LinMap: columns are linearly dependent");
    }

    static constexpr LinMap identity() { return LinMap(); }

    /// The unique linear map sending sources[k] to images[k]; sources must be a basis.
    static LinMap from_images(std::span<const Point> sources, std::span<const Point> images) {
        if (sources.size() != 8 || images.size() != 8) throw std::invalid_argument("LinMap::from_images: need 8 sources and 8 images");
        std::array<Point, 8> s{}, t{};
        std::copy(sources.begin(), sources.end(), s.begin());
        std::copy(images.begin(), images.end(), t.begin());
        const LinMap src(s);  // throws when sources are not a basis
        const LinMap tgt = unchecked(t);
        LinMap r = compose(tgt, src.inverse());
        if (rank(r.cols_) != 8) throw std::invalid_argument("LinMap::from_images: images are linearly dependent");
        return r;
    }

    constexpr Point operator()(Point x) const {
        std::uint8_t y = 0;
        for (int i = 0; i < 8; ++i)
            if (x.mask & (1U << i)) y ^= cols_[std::size_t(i)].mask;
        return Point(y);
    }

    /// (f * g)(x) = f(g(x))
    friend LinMap compose(const LinMap& f, const LinMap& g) {
        std::array<Point, 8> c{};
        for (std::size_t i = 0; i < 8; ++i) c[i] = f(g.cols_[i]);
        return unchecked(c);
    }
    friend LinMap operator*(const LinMap& f, const LinMap& g) { return compose(f, g); }

    LinMap power(int n) const {
        LinMap r;
        for (int k = 0; k < n; ++k) r = compose(*this, r);
        return r;
    }

    LinMap inverse() const {
        // Gauss-Jordan on the augmented system [cols | id], tracked per image.
        std::array<std::uint8_t, 8> img{}, pre{};
        for (std::size_t i = 0; i < 8; ++i) {
            img[i] = cols_[i].mask;
            pre[i] = std::uint8_t(1U << i);
        }
        for (int b = 0; b < 8; ++b) {
            std::size_t row = 8;
            for (std::size_t r = std::size_t(b); r < 8; ++r)
                if (img[r] & (1U << b)) {
                    row = r;
                    break;
                }
            if (row == 8) throw std::domain_error("LinMap::inverse: singular map");
            std::swap(img[row], img[std::size_t(b)]);
            std::swap(pre[row], pre[std::size_t(b)]);
            for (std::size_t r = 0; r < 8; ++r)
                if (r != std::size_t(b) && (img[r] & (1U << b))) {
                    img[r] ^= img[std::size_t(b)];
                    pre[r] ^= pre[std::size_t(b)];
                }
        }
        // Now img[b] = e_{b+1}; pre[b] is the preimage of e_{b+1}.
        std::array<Point, 8> c{};
        for (std::size_t i = 0; i < 8; ++i) c[i] = Point(pre[i]);
        return unchecked(c);
    }

    const std::array<Point, 8>& columns() const { return cols_; }
    std::uint64_t key() const {
        std::uint64_t k = 0;
        for (std::size_t i = 0; i < 8; ++i) k |= std::uint64_t(cols_[i].mask) << (8 * i);
        return k;
    }
    static LinMap from_key(std::uint64_t k) {
        std::array<Point, 8> c{};
        for (std::size_t i = 0; i < 8; ++i) c[i] = Point(std::uint8_t(k >> (8 * i)));
        return LinMap(c);
    }

    bool fixes(Point p) const { return (*this)(p) == p; }
    bool is_fixed_point_free() const {
        return std::none_of(all_points().begin(), all_points().end(), [&](Point p) { return fixes(p); });
    }

    friend bool operator==(const LinMap& a, const LinMap& b) { return a.cols_ == b.cols_; }

    /// Test hook: build a map without the invertibility check.
    static LinMap unchecked(const std::array<Point, 8>& columns) {
        LinMap m;
        m.cols_ = columns;
        return m;
    }

private:
    std::array<Point, 8> cols_{};
};

struct LinMapHash {
    std::size_t operator()(const LinMap& m) const { return std::hash<std::uint64_t>{}(m.key()); }
};

}  // namespace tetrad

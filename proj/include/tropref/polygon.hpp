#pragma once

// Lattice polygons that are transverse to the horizontal direction, described by
// their number of floors, horizontal side lengths and left/right slope multisets.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropref {

struct SurfaceClass {
    long a = 0;       ///< height (number of floors of any diagram)
    long b_top = 0;   ///< length of the top horizontal side
    long b_bot = 0;   ///< length of the bottom horizontal side
    std::vector<long> b_left;   ///< sorted ascending, one entry per unit of height
    std::vector<long> b_right;  ///< sorted ascending, one entry per unit of height

    friend bool operator==(const SurfaceClass&, const SurfaceClass&) = default;
};

struct LatticeInvariants {
    long g_max = 0;     ///< number of interior lattice points
    long area2 = 0;     ///< twice the area
    long chi = 0;       ///< number of sides
    long k_dot_beta = 0;
    long beta_sq = 0;
    long k_sq = 0;
};

/// Widths of the horizontal slices at heights 1..a-1.
inline std::vector<long> slice_widths(const SurfaceClass& s) {
    std::vector<long> w;
    long width = s.b_bot;
    for (long m = 0; m + 1 < s.a; ++m) {
        width -= s.b_left[m] + s.b_right[m];
        w.push_back(width);
    }
    return w;
}

/// Checks the combinatorial constraints and sorts the slope multisets; throws std::invalid_argument.
inline SurfaceClass make_surface_class(long a, long b_top, long b_bot, std::vector<long> left,
                                       std::vector<long> right) {
    if (a < 1) throw std::invalid_argument("polygon height a must be at least 1");
    if (b_bot < 1) throw std::invalid_argument("bottom side length must be at least 1");
    if (b_top < 0) throw std::invalid_argument("top side length must be non-negative");
    if (static_cast<long>(left.size()) != a || static_cast<long>(right.size()) != a)
        throw std::invalid_argument("left and right slope multisets must each have a entries");
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    long sum = std::accumulate(left.begin(), left.end(), 0L) + std::accumulate(right.begin(), right.end(), 0L);
    if (b_top != b_bot - sum)
        throw std::invalid_argument("polygon does not close: top length " + std::to_string(b_top) + " but bottom - slopes = " +
                                    std::to_string(b_bot - sum));
    SurfaceClass s{a, b_top, b_bot, std::move(left), std::move(right)};
    for (long w : slice_widths(s))
        if (w < 1) throw std::invalid_argument("polygon has a slice of non-positive width");
    return s;
}

/// Hirzebruch surface F_delta with class (a, b): bottom b, top b + delta*a.
inline SurfaceClass hirzebruch_class(long delta, long a, long b) {
    return make_surface_class(a, b + delta * a, b, std::vector<long>(static_cast<std::size_t>(a), 0),
                              std::vector<long>(static_cast<std::size_t>(a), -delta));
}

/// Projective plane, degree d.
inline SurfaceClass p2_class(long d) {
    return make_surface_class(d, 0, d, std::vector<long>(static_cast<std::size_t>(d), 0),
                              std::vector<long>(static_cast<std::size_t>(d), 1));
}

/// The polygon dilated by a positive integer factor.
inline SurfaceClass scaled(const SurfaceClass& s, long k) {
    if (k < 1) throw std::invalid_argument("scale factor must be positive");
    std::vector<long> l, r;
    for (long v : s.b_left) l.insert(l.end(), static_cast<std::size_t>(k), v);
    for (long v : s.b_right) r.insert(r.end(), static_cast<std::size_t>(k), v);
    return make_surface_class(s.a * k, s.b_top * k, s.b_bot * k, l, r);
}

namespace detail {
inline std::map<long, long> multiplicities(const std::vector<long>& v) {
    std::map<long, long> m;
    for (long x : v) ++m[x];
    return m;
}
}  // namespace detail

inline LatticeInvariants lattice_invariants(const SurfaceClass& s) {
    LatticeInvariants inv;
    long sum_w = 0;
    for (long w : slice_widths(s)) {
        inv.g_max += w - 1;
        sum_w += w;
    }
    inv.area2 = s.b_top + s.b_bot + 2 * sum_w;
    inv.chi = (s.b_top > 0) + (s.b_bot > 0) + static_cast<long>(detail::multiplicities(s.b_left).size()) +
              static_cast<long>(detail::multiplicities(s.b_right).size());
    inv.k_dot_beta = -(s.b_top + s.b_bot + 2 * s.a);
    inv.beta_sq = inv.area2;
    inv.k_sq = 12 - inv.chi;
    return inv;
}

/// Lengths of all sides: the horizontal ones that are present, then the lattice
/// lengths of the left and right sides (multiplicities of each slope).
inline std::vector<long> side_lengths(const SurfaceClass& s) {
    std::vector<long> out;
    if (s.b_bot > 0) out.push_back(s.b_bot);
    if (s.b_top > 0) out.push_back(s.b_top);
    for (auto [v, m] : detail::multiplicities(s.b_left)) out.push_back(m);
    for (auto [v, m] : detail::multiplicities(s.b_right)) out.push_back(m);
    return out;
}

/// Every vertex of the polygon is a smooth cone.
inline bool is_nonsingular(const SurfaceClass& s) {
    auto steps_ok = [](const std::vector<long>& v) {
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i] != v[i - 1] && v[i] - v[i - 1] != 1) return false;
        return true;
    };
    if (!steps_ok(s.b_left) || !steps_ok(s.b_right)) return false;
    if (s.b_top == 0 && std::abs(s.b_left.back() + s.b_right.back()) != 1) return false;
    if (s.b_bot == 0 && std::abs(s.b_left.front() + s.b_right.front()) != 1) return false;
    return true;
}

/// Has both horizontal sides.
inline bool is_h_horizontal(const SurfaceClass& s) { return s.b_top > 0 && s.b_bot > 0; }

}  // namespace tropref

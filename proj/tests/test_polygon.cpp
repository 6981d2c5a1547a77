#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tropref/polygon.hpp"

#include <numeric>
#include <utility>

using namespace tropref;

namespace {

using Point = std::pair<long, long>;

// Vertices of the polygon, counterclockwise from the bottom-left corner, with collinear points merged.
std::vector<Point> vertices(const SurfaceClass& s) {
    std::vector<Point> left{{0, 0}}, right{{s.b_bot, 0}};
    for (long m = 0; m < s.a; ++m) {
        left.push_back({left.back().first + s.b_left[m], m + 1});
        right.push_back({right.back().first - s.b_right[m], m + 1});
    }
    std::vector<Point> ring(right.begin(), right.end());
    for (auto it = left.rbegin(); it != left.rend(); ++it) ring.push_back(*it);
    std::vector<Point> out;
    for (const Point& p : ring)
        if (out.empty() || out.back() != p) out.push_back(p);
    if (out.size() > 1 && out.front() == out.back()) out.pop_back();
    bool changed = true;
    while (changed && out.size() > 2) {
        changed = false;
        for (std::size_t i = 0; i < out.size(); ++i) {
            const Point &p = out[(i + out.size() - 1) % out.size()], &q = out[i], &r = out[(i + 1) % out.size()];
            long cross = (q.first - p.first) * (r.second - q.second) - (q.second - p.second) * (r.first - q.first);
            if (cross == 0) {
                out.erase(out.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
        }
    }
    return out;
}

struct Pick {
    long area2, boundary, interior, corners;
};

// Shoelace area, boundary points by gcd, interior points by Pick's theorem.
Pick pick(const SurfaceClass& s) {
    auto v = vertices(s);
    long area2 = 0, boundary = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point &p = v[i], &q = v[(i + 1) % v.size()];
        area2 += p.first * q.second - q.first * p.second;
        boundary += std::gcd(std::labs(q.first - p.first), std::labs(q.second - p.second));
    }
    return {area2, boundary, (area2 - boundary + 2) / 2, static_cast<long>(v.size())};
}

std::vector<SurfaceClass> sample_classes() {
    std::vector<SurfaceClass> out;
    for (long d = 1; d <= 6; ++d) out.push_back(p2_class(d));
    for (long delta = 0; delta <= 3; ++delta)
        for (long a = 1; a <= 5; ++a)
            for (long b = 1; b <= 5; ++b) out.push_back(hirzebruch_class(delta, a, b));
    out.push_back(make_surface_class(3, 1, 3, {-1, 1, 1}, {0, 0, 1}));
    out.push_back(make_surface_class(6, 3, 3, {0, 0, 0, 1, 1, 1}, {-1, -1, -1, 0, 0, 0}));
    out.push_back(make_surface_class(6, 6, 9, {0, 0, 0, 1, 1, 1}, {0, 0, 0, 0, 0, 0}));
    out.push_back(make_surface_class(4, 2, 2, {-1, 0, 1, 2}, {-2, -1, 0, 1}));
    return out;
}

}  // namespace

TEST_CASE("polygon with the horizontal side data of the worked example") {
    SurfaceClass s = make_surface_class(3, 1, 3, {1, -1, 1}, {0, 1, 0});
    CHECK(s.b_left == std::vector<long>{-1, 1, 1});
    CHECK(slice_widths(s) == std::vector<long>{4, 3});
    LatticeInvariants inv = lattice_invariants(s);
    CHECK(inv.g_max == 5);
    CHECK(inv.chi == 6);
    CHECK_FALSE(is_nonsingular(s));
    CHECK(is_h_horizontal(s));
}

TEST_CASE("invariants agree with Pick's theorem and the vertex count") {
    for (const SurfaceClass& s : sample_classes()) {
        CAPTURE(s.a);
        CAPTURE(s.b_bot);
        CAPTURE(s.b_top);
        Pick p = pick(s);
        LatticeInvariants inv = lattice_invariants(s);
        CHECK(inv.area2 == p.area2);
        CHECK(inv.g_max == p.interior);
        CHECK(-inv.k_dot_beta == p.boundary);
        CHECK(inv.chi == p.corners);
        CHECK(inv.k_sq == 12 - inv.chi);
        // adjunction
        CHECK(2 * inv.g_max - 2 == inv.beta_sq + inv.k_dot_beta);
    }
}

TEST_CASE("projective plane") {
    for (long d = 1; d <= 8; ++d) {
        LatticeInvariants inv = lattice_invariants(p2_class(d));
        CHECK(inv.g_max == (d - 1) * (d - 2) / 2);
        CHECK(inv.area2 == d * d);
        CHECK(inv.chi == 3);
        CHECK(inv.k_dot_beta == -3 * d);
    }
    CHECK(is_nonsingular(p2_class(4)));
    CHECK_FALSE(is_h_horizontal(p2_class(4)));
}

TEST_CASE("Hirzebruch surfaces") {
    for (long delta = 0; delta <= 3; ++delta)
        for (long a = 1; a <= 6; ++a)
            for (long b = 1; b <= 6; ++b) {
                SurfaceClass s = hirzebruch_class(delta, a, b);
                LatticeInvariants inv = lattice_invariants(s);
                CHECK(inv.g_max == (a - 1) * (b - 1) + delta * a * (a - 1) / 2);
                CHECK(inv.chi == 4);
                CHECK(is_nonsingular(s));
                CHECK(s.b_top == b + delta * a);
            }
    CHECK(lattice_invariants(hirzebruch_class(0, 5, 5)).g_max == 16);
    std::vector<long> sides = side_lengths(hirzebruch_class(1, 5, 5));
    CHECK(sides == std::vector<long>{5, 10, 5, 5});
}

TEST_CASE("scaling") {
    SurfaceClass s = scaled(make_surface_class(3, 1, 3, {-1, 1, 1}, {0, 0, 1}), 7);
    CHECK(s.a == 21);
    CHECK(s.b_bot == 21);
    CHECK(s.b_top == 7);
    std::vector<long> sides = side_lengths(s);
    CHECK(*std::min_element(sides.begin(), sides.end()) == 7);
    CHECK(lattice_invariants(s).area2 == 49 * lattice_invariants(make_surface_class(3, 1, 3, {-1, 1, 1}, {0, 0, 1})).area2);
    CHECK_THROWS_AS(scaled(s, 0), std::invalid_argument);
}

TEST_CASE("invalid polygons are rejected") {
    CHECK_THROWS_AS(make_surface_class(0, 1, 1, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(make_surface_class(2, 1, 0, {0, 0}, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(make_surface_class(2, 3, 2, {0, 0}, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(make_surface_class(2, 1, 2, {0}, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(make_surface_class(2, -1, 1, {0, 1}, {0, 1}), std::invalid_argument);
}

TEST_CASE("singular corners") {
    CHECK(is_nonsingular(make_surface_class(2, 1, 3, {0, 0}, {1, 1})));
    // a corner on a horizontal side is always smooth
    CHECK(is_nonsingular(make_surface_class(2, 1, 5, {0, 0}, {2, 2})));
    CHECK_FALSE(is_nonsingular(make_surface_class(2, 1, 5, {0, 2}, {1, 1})));
}

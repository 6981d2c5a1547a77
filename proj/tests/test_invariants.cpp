#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tropref/invariants.hpp"

using namespace tropref;

namespace {

// Kontsevich's recursion for rational plane curves of degree d through 3d-1 points.
std::vector<Integer> kontsevich(long dmax) {
    std::vector<Integer> n(static_cast<std::size_t>(dmax) + 1, Integer(0));
    n[1] = 1;
    for (long d = 2; d <= dmax; ++d)
        for (long d1 = 1; d1 < d; ++d1) {
            long d2 = d - d1;
            n[d] += n[d1] * n[d2] *
                    (Integer(d1 * d1 * d2 * d2) * binomial(3 * d - 4, 3 * d1 - 2) -
                     Integer(d1 * d1 * d1 * d2) * binomial(3 * d - 4, 3 * d1 - 1));
        }
    return n;
}

SymLaurent laurent(long half_min, std::vector<long> c) {
    std::vector<Integer> v(c.begin(), c.end());
    return SymLaurent(half_min, v);
}

}  // namespace

TEST_CASE("projective plane, low degrees") {
    CHECK(bg_cleared(p2_class(1), 0) == laurent(-1, {-1, 0, 1}));
    CHECK(bg_cleared(p2_class(2), 0) == laurent(-4, {1, 0, -4, 0, 6, 0, -4, 0, 1}));
    CHECK(bg(p2_class(3), 0) == laurent(-2, {1, 0, 10, 0, 1}));
    SymLaurent c3 = bg_cleared(p2_class(3), 0);
    std::vector<long> top = {1, 3, -48, 168, -294};
    for (std::size_t i = 0; i < top.size(); ++i) CHECK(c3.coeff(9 - 2 * static_cast<long>(i)) == top[i]);
}

TEST_CASE("genus 0 at q = 1 follows Kontsevich's recursion") {
    std::vector<Integer> n = kontsevich(5);
    for (long d = 1; d <= 5; ++d) CHECK(bg(p2_class(d), 0).eval_at_one() == n[d]);
    CHECK(n[4] == 620);
}

TEST_CASE("quartic Severi degrees and Welschinger numbers") {
    // classical counts of quartics of each genus through 11 + g points
    std::vector<long> severi = {620, 225, 27, 1};
    for (long g = 0; g <= 3; ++g) CHECK(bg(p2_class(4), g).eval_at_one() == severi[g]);
    // q = -1 gives the real counts
    CHECK(bg(p2_class(3), 0).eval_at_minus_one() == 8);
    CHECK(bg(p2_class(4), 0).eval_at_minus_one() == 240);
}

TEST_CASE("symmetry and degree of the invariants") {
    std::vector<SurfaceClass> classes = {p2_class(4), hirzebruch_class(0, 3, 3), hirzebruch_class(1, 3, 2),
                                         make_surface_class(3, 1, 3, {-1, 1, 1}, {0, 0, 1})};
    for (const SurfaceClass& s : classes) {
        LatticeInvariants inv = lattice_invariants(s);
        for (long g = 0; g <= inv.g_max; ++g) {
            SymLaurent p = bg(s, g);
            CHECK(p.is_palindromic(1));
            CHECK(p.half_max() == 2 * (inv.g_max - g));
            CHECK(bg_cleared(s, g).half_max() <= inv.area2);
        }
        CHECK(bg(s, inv.g_max) == SymLaurent::constant(1));
        CHECK(bg(s, inv.g_max + 1).is_zero());
    }
}

TEST_CASE("truncated invariant is the expansion of the cleared one") {
    std::vector<SurfaceClass> classes = {p2_class(3), p2_class(4), hirzebruch_class(0, 3, 3), hirzebruch_class(2, 2, 3),
                                         make_surface_class(3, 1, 3, {-1, 1, 1}, {0, 0, 1})};
    for (const SurfaceClass& s : classes) {
        LatticeInvariants inv = lattice_invariants(s);
        for (long g = 0; g <= inv.g_max; ++g)
            for (long pairs = 0; 2 * pairs <= s.b_bot && pairs <= 1; ++pairs) {
                TruncatedInvariant t = bg_truncated(s, g, 4, pairs);
                TruncSeries one = TruncSeries::one(4), x = TruncSeries::monomial(1, 4);
                TruncSeries pair_factor = ((one + x) * (one - x).inverse()).pow(pairs);
                CHECK(t.series == laurent_to_trunc(bg_cleared(s, g, pairs), inv.area2, 4) * pair_factor);
            }
    }
}

TEST_CASE("stable values for Hirzebruch classes") {
    CHECK(bg_truncated(hirzebruch_class(0, 5, 5), 0, 2).series == TruncSeries::from_ints({1, 4, 14}));
    CHECK(bg_truncated(hirzebruch_class(0, 5, 5), 1, 1).series == TruncSeries::from_ints({16, 52}));
    TruncatedInvariant t = bg_truncated(hirzebruch_class(0, 4, 4), 2, 0);
    CHECK(t.series[0] == binomial(9, 2));
}

TEST_CASE("hypothesis warnings") {
    CHECK(hypothesis_warnings(hirzebruch_class(0, 7, 7), 2, 2).empty());
    CHECK(hypothesis_warnings(hirzebruch_class(0, 7, 3), 2, 1).size() == 1);
    CHECK(bg_truncated(hirzebruch_class(0, 3, 3), 0, 3, 1).warnings.size() == 1);
}

TEST_CASE("pairs of conjugate points") {
    // a single pair still counts the line through two points
    CHECK(bg(p2_class(1), 0, 1) == SymLaurent::constant(1));
    CHECK(bg(p2_class(3), 0, 1).eval_at_minus_one() == 6);
    CHECK_THROWS_AS(bg(p2_class(3), 0, -1), std::invalid_argument);
}

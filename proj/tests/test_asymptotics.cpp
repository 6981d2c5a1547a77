#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tropref/asymptotics.hpp"

using namespace tropref;

namespace {

SurfaceClass hexagon(long n) {
    std::vector<long> L, R;
    for (long i = 0; i < n; ++i) {
        L.insert(L.end(), {0, 1});
        R.insert(R.end(), {-1, 0});
    }
    return make_surface_class(2 * n, n, n, L, R);
}

}  // namespace

TEST_CASE("leading coefficient is binomial") {
    TruncSeries c = ar_codeg0(9, 5);
    for (long g = 0; g <= 5; ++g) CHECK(c[g] == binomial(9, g));
}

TEST_CASE("codegree-one series for F0") {
    LatticeInvariants inv = lattice_invariants(hirzebruch_class(0, 7, 7));
    CHECK(ar_codeg1(inv, 2) == TruncSeries::from_ints({4, 132, 2060}));
}

TEST_CASE("the four contributions add up to the codegree-one series") {
    std::vector<SurfaceClass> classes = {hirzebruch_class(0, 5, 5), hirzebruch_class(1, 4, 6), hirzebruch_class(3, 3, 3),
                                         hexagon(3), hexagon(4)};
    for (const SurfaceClass& s : classes) {
        Codeg1Contributions c = ar_codeg1_contributions(s, 10);
        CHECK(c.sum() == ar_codeg1(lattice_invariants(s), 10));
    }
    CHECK_THROWS_AS(ar_codeg1_contributions(hirzebruch_class(0, 2, 4), 3), std::invalid_argument);
}

TEST_CASE("consistency between the closed forms") {
    for (const SurfaceClass& s : {hirzebruch_class(0, 6, 6), hirzebruch_class(2, 5, 7), hexagon(3)}) {
        LatticeInvariants inv = lattice_invariants(s);
        CHECK(ar_genus1(inv.chi, inv.g_max, 3)[0] == inv.g_max);
        CHECK(ar_codeg0(inv.g_max, 3)[1] == inv.g_max);
        CHECK(ar_genus0(inv.chi, 3)[1] == inv.chi);
        CHECK(ar_codeg1(inv, 3)[0] == inv.chi);
        BiTruncSeries conj = conjecture_mod_u2(inv.chi, inv.k_sq, inv.g_max, 4);
        CHECK(conj.u_slice(0) == ar_genus0(inv.chi, 4));
        CHECK(conj.u_slice(1) == ar_genus1(inv.chi, inv.g_max, 4));
    }
    CHECK(ar_genus1(4, 16, 1) == TruncSeries::from_ints({16, 52}));
    CHECK(ar_genus1(4, 36, 1, 1)[1] == ar_genus1(4, 36, 1)[1] + 2);
}

TEST_CASE("verification on large enough classes") {
    VerifyOptions opt;
    opt.order = 2;
    VerifyReport r = verify(hirzebruch_class(1, 5, 5), VerifyMode::Genus0, opt);
    CHECK(r.status == VerifyReport::Status::Pass);
    CHECK(r.rows.size() == 3);
    opt.order = 1;
    CHECK(verify(hirzebruch_class(0, 5, 5), VerifyMode::Genus1, opt).status == VerifyReport::Status::Pass);
    CHECK(verify(hexagon(3), VerifyMode::Genus1, opt).status == VerifyReport::Status::Pass);
    opt.order = 2;
    CHECK(verify(hirzebruch_class(0, 7, 7), VerifyMode::Codeg1, opt).status == VerifyReport::Status::Pass);
    CHECK(verify(hirzebruch_class(0, 4, 4), VerifyMode::Codeg0, opt).status == VerifyReport::Status::Pass);
    opt.order = 1;
    CHECK(verify(hirzebruch_class(0, 5, 5), VerifyMode::Conjecture, opt).status == VerifyReport::Status::Pass);
}

TEST_CASE("small or singular classes are inconclusive unless forced") {
    VerifyOptions opt;
    opt.order = 2;
    VerifyReport r = verify(hirzebruch_class(0, 2, 2), VerifyMode::Genus0, opt);
    CHECK(r.status == VerifyReport::Status::Inconclusive);
    CHECK(r.rows.empty());
    CHECK_FALSE(r.unmet.empty());
    CHECK_FALSE(unmet_conditions(p2_class(9), VerifyMode::Genus0, 1, 0).empty());
    CHECK_FALSE(unmet_conditions(make_surface_class(3, 1, 3, {-1, 1, 1}, {0, 0, 1}), VerifyMode::Genus0, 1, 0).empty());
    opt.force = true;
    r = verify(hirzebruch_class(0, 2, 2), VerifyMode::Genus0, opt);
    CHECK(r.status == VerifyReport::Status::Fail);
    CHECK(r.rows.size() == 3);
}

TEST_CASE("mode names") {
    CHECK(parse_verify_mode("genus1") == VerifyMode::Genus1);
    CHECK_THROWS_AS(parse_verify_mode("genus2"), std::invalid_argument);
    CHECK(std::string(status_name(VerifyReport::Status::Inconclusive)) == "inconclusive");
}

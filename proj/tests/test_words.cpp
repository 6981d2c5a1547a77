#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tropref/invariants.hpp"
#include "tropref/words.hpp"

#include <map>
#include <set>

using namespace tropref;

namespace {

const char* kWord1 = "b0 b0 b1 b0 f e b1 f e f t0 t0";
const char* kWord2 = "b0 b0 f b1 e f e f e f t1 t0 t0";

long inversions(const std::vector<long>& v) {
    long n = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) n += v[i] > v[j];
    return n;
}

}  // namespace

TEST_CASE("word text format") {
    Word w = parse_word(kWord1);
    CHECK(w.size() == 12);
    CHECK(w[0] == Letter::b(0));
    CHECK(w[4] == Letter::f());
    CHECK(w[5] == Letter::e());
    CHECK(w[11] == Letter::t(0));
    CHECK(format_word(w) == kWord1);
    CHECK(parse_letter("f-1,2") == Letter::f(-1, 2));
    CHECK(format_letter(Letter::f(-1, 2)) == "f-1,2");
    CHECK_THROWS_AS(parse_letter("x3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_letter("b"), std::invalid_argument);
}

TEST_CASE("example words decode to marked chain diagrams and back") {
    for (const char* text : {kWord1, kWord2}) {
        Word w = parse_word(text);
        SurfaceClass s = infer_class({w});
        WordDecoding dec = decode_word(w, s);
        REQUIRE(dec.marked);
        const FloorDiagram& d = dec.marked->diagram;
        CHECK(genus(d) == 0);
        CHECK(codegree(d) == word_codegree(w));
        CHECK(encode_word(*dec.marked, false) == w);
    }
    SurfaceClass s1 = infer_class({parse_word(kWord1)});
    CHECK(s1.a == 3);
    CHECK(s1.b_bot == 5);
    CHECK(s1.b_top == 2);
    SurfaceClass s2 = infer_class({parse_word(kWord2)});
    CHECK(s2.a == 4);
    CHECK(s2.b_bot == 3);
    CHECK(s2.b_top == 3);
}

TEST_CASE("invalid words are rejected") {
    SurfaceClass s = hirzebruch_class(0, 2, 2);
    CHECK_NOTHROW(validate_word(parse_word("b0 b0 f e f t0 t0"), s));
    CHECK_THROWS_AS(validate_word(parse_word("b0 f e f t0 t0"), s), std::invalid_argument);    // too few sources
    CHECK_THROWS_AS(validate_word(parse_word("b0 b0 f f e t0 t0"), s), std::invalid_argument);  // broken core
    CHECK_THROWS_AS(validate_word(parse_word("b0 b0 f e f t0 t5"), s), std::invalid_argument);  // index too large
}

TEST_CASE("every word of small codegree encodes a distinct marked diagram") {
    SurfaceClass s = hirzebruch_class(0, 5, 5);
    long count = 0;
    std::set<std::string> seen;
    for_each_word(s, 2, 0, [&](const Word& w, long cost) {
        ++count;
        CHECK(word_codegree(w) == cost);
        CHECK(cost <= 2);
        WordDecoding dec = decode_word(w, s);
        REQUIRE(dec.marked);
        CHECK(encode_word(*dec.marked, false) == w);
        seen.insert(format_word(w));
    });
    CHECK(seen.size() == static_cast<std::size_t>(count));
}

TEST_CASE("word series equals diagram enumeration in genus 0") {
    SurfaceClass s = hirzebruch_class(0, 5, 5);
    WordSum ws = word_series(s, 2);
    CHECK(ws.series == bg_truncated(s, 0, 2).series);
    CHECK(ws.series == TruncSeries::from_ints({1, 4, 14}));
    CHECK(ws.nonpositive == 0);
    SurfaceClass hex = make_surface_class(6, 3, 3, {0, 0, 0, 1, 1, 1}, {-1, -1, -1, 0, 0, 0});
    CHECK(word_series(hex, 1).series == bg_truncated(hex, 0, 1).series);
}

TEST_CASE("sentences") {
    CHECK(sentence_series(5, 3) == TruncSeries::from_ints({1, 2, 5, 10}));
    CHECK(sentence_series(1, 0) == TruncSeries::from_ints({1}));
    TruncSeries p2 = partition_series(4).pow(2);
    for (long n = 5; n <= 7; ++n) CHECK(sentence_series(n, 4) == p2);
    CHECK(sentence_series(6, 2, 1) == partition_series(2).pow(2));
}

TEST_CASE("pearls") {
    Pearl p = parse_pearl("••∘∘•∘••∘•∘∘∘");
    CHECK(p.u == std::vector<long>{0, 1, 2, 1});
    CHECK(p.codegree() == 12);
    CHECK(parse_pearl(format_pearl(p)) == p);
    CHECK(parse_pearl(format_pearl(p, true)) == p);
    CHECK(parse_pearl("**oo").codegree() == 0);
    CHECK(Pearl::from_u({0, 1, 0, 0}).u == std::vector<long>{0, 1});
    CHECK_THROWS_AS(parse_pearl("*x"), std::invalid_argument);
    CHECK(pearl_series(5) == TruncSeries::from_ints({1, 1, 2, 3, 5, 7}));
    CHECK(pearl_weighted_series(3) == TruncSeries::from_ints({0, 1, 4, 9}));
    CHECK(pearl_series(0) == TruncSeries::from_ints({1}));
    CHECK(pearl_weighted_series(0) == TruncSeries::from_ints({0}));
}

TEST_CASE("pearls of a sloping tuple") {
    std::vector<long> L = {0, 1, 0, 1, 1, 0, 1, 1, 1, 2, 1, 2, 2};
    std::vector<CornerPearl> ps = pearls_from_sloping(L);
    REQUIRE(ps.size() == 2);
    CHECK(ps[0].low == 0);
    CHECK(ps[0].pearl == parse_pearl("••∘•∘∘•∘∘"));
    CHECK(ps[0].pearl.codegree() == 4);
    CHECK(ps[1].low == 1);
    CHECK(ps[1].pearl == parse_pearl("••∘•∘∘"));
    CHECK(ps[1].pearl.codegree() == 1);
    CHECK(ps[0].pearl.codegree() + ps[1].pearl.codegree() == inversions(L));

    std::map<long, long> mult;
    for (long v : L) ++mult[v];
    std::vector<long> back = sloping_from_pearls(ps, mult);
    CHECK(back.size() == L.size());
    CHECK(inversions(back) == inversions(L));
    CHECK(pearls_from_sloping(back) == ps);

    for (const CornerPearl& c : pearls_from_sloping({0, 0, 1, 2, 2, 3})) CHECK(c.pearl.codegree() == 0);
    CHECK_THROWS_AS(pearls_from_sloping({2, 0, 1}), std::invalid_argument);
}

#include "doctest.h"

#include <stdexcept>

#include "helpers.hpp"
#include "pdbg/core.hpp"

using namespace pdbg;
using namespace test_helpers;

TEST_CASE("alphabet rejects bad tokens and duplicates") {
    Alphabet a;
    a.add("x");
    a.add("c2_3''");
    CHECK_THROWS_AS(a.add("x"), std::invalid_argument);
    CHECK_THROWS_AS(a.add(""), std::invalid_argument);
    CHECK_THROWS_AS(a.add("-"), std::invalid_argument);
    CHECK_THROWS_AS(a.add("a b"), std::invalid_argument);
    CHECK_THROWS_AS(a.add("a,b"), std::invalid_argument);
    CHECK(a.size() == 2);
    CHECK(*a.find("c2_3''") == 1);
}

TEST_CASE("validate: smallest legal graph") {
    auto g = make_graph(1, "a", {{"v", "a", "a"}}, {{"v", "v"}});
    CHECK(g.validate().ok());
}

TEST_CASE("validate: duplicate vertex bilabel") {
    auto g = make_graph(1, "ab", {{"u", "a", "b"}, {"w", "a", "b"}}, {});
    auto report = g.validate();
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].find("duplicate vertex bilabel") != std::string::npos);
    CHECK(report.violations[0].find("'w'") != std::string::npos);
}

TEST_CASE("validate: k=1 overlap is vacuous, edge bilabel implied") {
    auto g = make_graph(1, "ab", {{"u", "a", "a"}, {"w", "b", "b"}}, {{"u", "w"}});
    CHECK(g.validate().ok());
    Bilabel e = g.edge_label(0);
    CHECK(spelled(g, e.first) == "ab");
    CHECK(spelled(g, e.second) == "ab");
}

TEST_CASE("validate: k=2 overlap mismatch is reported") {
    auto g = make_graph(2, "abcxyz", {{"u", "ab", "xy"}, {"w", "ca", "zy"}}, {{"u", "w"}});
    auto report = g.validate();
    REQUIRE(report.violations.size() == 2);
    CHECK(report.violations[0].find("first-component overlap mismatch") != std::string::npos);
    CHECK(report.violations[1].find("second-component overlap mismatch") != std::string::npos);

    // A consistent k=2 edge passes: ab -> ba overlaps on 'b'.
    auto ok = make_graph(2, "abxy", {{"u", "ab", "xy"}, {"w", "ba", "yx"}}, {{"u", "w"}});
    CHECK(ok.validate().ok());
}

TEST_CASE("validate: duplicate edge bilabel at k=0") {
    auto g = make_k0("xy", {"xy", "xy"});
    auto report = g.validate();
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].find("duplicate edge bilabel") != std::string::npos);
}

TEST_CASE("spell: k=1 linear is label concatenation") {
    auto g = make_graph(1, "abcxyz",
                        {{"u", "a", "x"}, {"v", "b", "y"}, {"w", "c", "z"}},
                        {{"u", "v"}, {"v", "w"}});
    SpelledPair p = spell(g, Walk{{"u", "v", "w"}, {}});
    CHECK(spelled(g, p.first) == "abc");
    CHECK(spelled(g, p.second) == "xyz");
    CHECK_FALSE(p.cyclic);
}

TEST_CASE("spell: k=2 linear overlaps by k-1") {
    auto g = make_graph(2, "abcxyz", {{"u", "ab", "xy"}, {"v", "bc", "yz"}}, {{"u", "v"}});
    REQUIRE(g.validate().ok());
    SpelledPair p = spell(g, Walk{{"u", "v"}, {}});
    CHECK(p.length() == 3);  // n + k - 1
    CHECK(spelled(g, p.first) == "abc");
    CHECK(spelled(g, p.second) == "xyz");
}

TEST_CASE("spell: cyclic length equals walk length") {
    auto g = make_graph(1, "ab", {{"u", "a", "b"}, {"v", "b", "a"}},
                        {{"u", "v"}, {"v", "u"}});
    SpelledPair p = spell(g, CycleWitness{{"u", "v"}, 1, {}});
    CHECK(p.cyclic);
    CHECK(p.length() == 2);
    CHECK(spelled(g, p.first) == "ab");
    CHECK(spelled(g, p.second) == "ba");
}

TEST_CASE("spell: cyclic at k=2 wraps consistently") {
    // ab -> ba -> ab: overlaps hold in both directions.
    auto g = make_graph(2, "abxy", {{"u", "ab", "xy"}, {"v", "ba", "yx"}},
                        {{"u", "v"}, {"v", "u"}});
    REQUIRE(g.validate().ok());
    SpelledPair p = spell(g, CycleWitness{{"u", "v"}, 0, {}});
    CHECK(p.length() == 2);
    CHECK(spelled(g, p.first) == "ab");
    CHECK(spelled(g, p.second) == "xy");
}

TEST_CASE("spell: k=0 uses explicit edge bilabels") {
    auto g = make_k0("xy", {"xy", "yx"});
    CycleWitness w{{"v", "v"}, 1, {bl(g, "x", "y"), bl(g, "y", "x")}};
    SpelledPair p = spell(g, w);
    CHECK(spelled(g, p.first) == "xy");
    CHECK(spelled(g, p.second) == "yx");

    // Without labels the parallel loops make the walk ambiguous.
    CHECK_THROWS_AS(spell(g, CycleWitness{{"v", "v"}, 1, {}}), std::invalid_argument);
    // With a single loop there is nothing to disambiguate.
    auto g1 = make_k0("xy", {"xy"});
    CHECK(spelled(g1, spell(g1, CycleWitness{{"v"}, 0, {}}).first) == "x");
}

TEST_CASE("malformed labels are reported, not undefined behavior") {
    // add_vertex accepts wrong-length bilabels so validate can report them;
    // spelling such a graph fails loudly.
    PairedDbGraph g(1, letters("ab"));
    g.add_vertex("u", Bilabel{});  // empty components in an order-1 graph
    g.add_vertex("w", bl(g, "ab", "ba"));
    auto report = g.validate();
    CHECK(report.violations.size() == 2);
    CHECK_THROWS_AS(spell(g, Walk{{"u"}, {}}), std::invalid_argument);
}

TEST_CASE("spell rejects invalid walks") {
    auto g = make_graph(1, "ab", {{"u", "a", "b"}, {"v", "b", "a"}}, {{"u", "v"}});
    CHECK_THROWS_AS(spell(g, Walk{{"v", "u"}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(spell(g, Walk{{"u", "zz"}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(spell(g, Walk{{}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(spell(g, CycleWitness{{"u", "v"}, 0, {}}), std::invalid_argument);
}

TEST_CASE("matches_with_shift: linear direct definition") {
    Alphabet a = letters("xyzwqr");
    auto sym = [&](char c) { return *a.find(std::string(1, c)); };
    SpelledPair p;
    for (char c : std::string("xyzw")) p.first.push_back(sym(c));
    for (char c : std::string("zwqr")) p.second.push_back(sym(c));
    p.cyclic = false;
    CHECK(matches_with_shift(p, 2));
    CHECK_FALSE(matches_with_shift(p, 1));
    CHECK(matches_with_shift(p, 4));  // d = n is vacuous
    CHECK_THROWS_AS(matches_with_shift(p, 5), std::invalid_argument);
    CHECK_THROWS_AS(matches_with_shift(p, -1), std::invalid_argument);
}

TEST_CASE("matches_with_shift: cyclic period and zero-shift degeneracy") {
    Alphabet a = letters("ab");
    auto sym = [&](char c) { return *a.find(std::string(1, c)); };
    SpelledPair p;
    for (char c : std::string("abab")) {
        p.first.push_back(sym(c));
        p.second.push_back(sym(c));
    }
    p.cyclic = true;
    CHECK(matches_with_shift(p, 2));
    CHECK(matches_with_shift(p, 0));   // equality
    CHECK(matches_with_shift(p, 4));   // d = 0 mod n
    CHECK(matches_with_shift(p, 6));   // reduced mod n
    CHECK_FALSE(matches_with_shift(p, 1));

    p.second[0] = sym('b');
    CHECK_FALSE(matches_with_shift(p, 0));
}

TEST_CASE("is_sound on linear walks") {
    // Chain spelling s = "xyzw", t = "zwqr": sound exactly at shift 2.
    auto chain = make_graph(1, "xyzwqr",
                            {{"1", "x", "z"}, {"2", "y", "w"}, {"3", "z", "q"},
                             {"4", "w", "r"}},
                            {{"1", "2"}, {"2", "3"}, {"3", "4"}});
    Walk w{{"1", "2", "3", "4"}, {}};
    CHECK(is_sound(chain, w, 2));       // t_i = s_{i+2} for i = 1, 2
    CHECK_FALSE(is_sound(chain, w, 1));
    CHECK(is_sound(chain, w, 4));       // d = n is vacuous
    CHECK_THROWS_AS(is_sound(chain, w, 5), std::invalid_argument);
}

TEST_CASE("is_sound: digon at d=1 but not d=0") {
    auto g = make_graph(1, "ab", {{"u", "a", "b"}, {"v", "b", "a"}},
                        {{"u", "v"}, {"v", "u"}});
    CycleWitness w{{"u", "v"}, 1, {}};
    CHECK(is_sound(g, w, 1));
    CHECK_FALSE(is_sound(g, w, 0));
}

TEST_CASE("is_sound equals matches_with_shift of the spelling") {
    auto g = make_graph(1, "ab",
                        {{"u", "a", "b"}, {"v", "b", "a"}, {"w", "b", "b"}},
                        {{"u", "v"}, {"v", "u"}, {"u", "w"}, {"w", "u"}, {"w", "w"}});
    for (long d = 0; d <= 4; ++d) {
        for (const auto& vs :
             {std::vector<std::string>{"u", "v"}, {"u", "w"}, {"u", "w", "w"}, {"w"}}) {
            CycleWitness w{vs, d, {}};
            CHECK(is_sound(g, w, d) == matches_with_shift(spell(g, w), d));
        }
    }
}

TEST_CASE("cyclic soundness is rotation invariant") {
    auto g = make_graph(1, "ab",
                        {{"u", "a", "b"}, {"v", "b", "a"}, {"w", "b", "b"}},
                        {{"u", "v"}, {"v", "u"}, {"u", "w"}, {"w", "u"}, {"w", "w"}});
    std::vector<CycleWitness> cycles = {
        {{"u", "v"}, 0, {}},
        {{"u", "w", "w", "u", "v"}, 0, {}},
        {{"u", "v", "u", "w"}, 0, {}},
    };
    for (const auto& w : cycles) {
        for (long d = 0; d <= 3; ++d) {
            bool base = is_sound(g, w, d);
            for (std::size_t r = 0; r < w.vertices.size(); ++r) {
                CHECK(is_sound(g, rotate(w, r), d) == base);
            }
        }
    }
}

TEST_CASE("is_covering: loop vertex and missed edges") {
    auto loop = make_graph(1, "a", {{"v", "a", "a"}}, {{"v", "v"}});
    CHECK(is_covering(loop, CycleWitness{{"v"}, 1, {}}));

    // Loop plus a digon: the loop alone misses two edges.
    auto g = make_graph(1, "ab", {{"u", "a", "a"}, {"v", "b", "b"}},
                        {{"u", "u"}, {"u", "v"}, {"v", "u"}});
    CHECK_FALSE(is_covering(g, CycleWitness{{"u"}, 0, {}}));
    CHECK(is_covering(g, CycleWitness{{"u", "u", "v"}, 0, {}}));
}

TEST_CASE("is_covering at k=0 tracks edge labels") {
    auto g = make_k0("xy", {"xy", "yx"});
    CycleWitness both{{"v", "v"}, 1, {bl(g, "x", "y"), bl(g, "y", "x")}};
    CycleWitness one{{"v"}, 1, {bl(g, "x", "y")}};
    CHECK(is_covering(g, both));
    CHECK_FALSE(is_covering(g, one));
}

TEST_CASE("rotate keeps edge labels aligned") {
    auto g = make_k0("xy", {"xy", "yx"});
    CycleWitness w{{"v", "v"}, 1, {bl(g, "x", "y"), bl(g, "y", "x")}};
    CycleWitness r = rotate(w, 1);
    CHECK(spelled(g, spell(g, r).first) == "yx");
    CHECK(is_sound(g, r, 1) == is_sound(g, w, 1));
}

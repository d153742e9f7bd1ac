#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "pslrack/fpgroup.hpp"

using namespace pslrack;

TEST_CASE("presentation parsing") {
    auto P = parse_presentation("a, b | a^2, b^3, (ab)^5");
    REQUIRE(P.generators == std::vector<std::string>{"a", "b"});
    REQUIRE(P.relators.size() == 3);
    CHECK(P.relators[0] == Word{1, 1});
    CHECK(P.relators[1] == Word{2, 2, 2});
    CHECK(P.relators[2] == Word{1, 2, 1, 2, 1, 2, 1, 2, 1, 2});
    CHECK(P.str() == "a, b | a^2, b^3, ababababab");
    // canonical text round-trips
    auto P2 = parse_presentation(P.str());
    CHECK(P2.generators == P.generators);
    CHECK(P2.relators == P.relators);
}

TEST_CASE("commutators, inverses, multi-character names") {
    auto P = parse_presentation("g1, g2 | [g1,g2], g1^-3g2");
    REQUIRE(P.relators.size() == 2);
    CHECK(P.relators[0] == Word{-1, -2, 1, 2});
    CHECK(P.relators[1] == Word{-1, -1, -1, 2});

    auto Q = parse_presentation("a | [a,a]");
    REQUIRE(Q.relators.size() == 1);
    CHECK(Q.relators[0].empty()); // reduces to the empty word
}

TEST_CASE("parse errors carry position info") {
    CHECK_THROWS_WITH(parse_presentation("a | a^2, c"),
                      Catch::Matchers::ContainsSubstring("unknown symbol") &&
                          Catch::Matchers::ContainsSubstring("position"));
    CHECK_THROWS_WITH(parse_presentation("a | a^"),
                      Catch::Matchers::ContainsSubstring("malformed exponent"));
    CHECK_THROWS_WITH(parse_presentation("a | (a"),
                      Catch::Matchers::ContainsSubstring("expected ')'"));
    CHECK_THROWS(parse_presentation("a, a | a"));
    CHECK_THROWS(parse_presentation("no bar"));
}

TEST_CASE("coset enumeration on the triangle presentation of A5") {
    auto P = parse_presentation(A5_TRIANGLE);
    auto T = todd_coxeter(P);
    CHECK(T.cosets == 60);
    // index of <a> is 30, of <b> is 20, of <a,b> is 1
    CHECK(todd_coxeter(P, {Word{1}}).cosets == 30);
    CHECK(todd_coxeter(P, {Word{2}}).cosets == 20);
    CHECK(todd_coxeter(P, {Word{1}, Word{2}}).cosets == 1);
    auto A = perm_group_analysis(T);
    CHECK(A.order == 60);
    CHECK(A.center == std::vector<int>{0});
    CHECK(A.class_sizes == std::vector<long>{1, 12, 12, 15, 20});
    CHECK(A.derived_order == 60); // perfect
}

TEST_CASE("coset limit failure is reported") {
    // the free group on one generator never closes
    auto P = parse_presentation("a | ");
    CHECK(P.relators.empty());
    CHECK_THROWS_WITH(todd_coxeter(P, {}, 100),
                      Catch::Matchers::ContainsSubstring("coset limit"));
}

TEST_CASE("dihedral sanity: order 12 from a 2-generator presentation") {
    auto P = parse_presentation("r, s | r^6, s^2, (rs)^2");
    auto T = todd_coxeter(P);
    CHECK(T.cosets == 12);
    auto G = regular_group(T);
    CHECK(G.order() == 12);
    CHECK(G.center().size() == 2);
    CHECK(G.abelian_invariants() == std::vector<long>{2, 2});
}

TEST_CASE("both presentations of the sixfold cover of A6") {
    for (const char* text : {A6_COVER_SCHUR, A6_COVER_ROBERTSON}) {
        auto P = parse_presentation(text);
        auto T = todd_coxeter(P);
        REQUIRE(T.cosets == 2160);
        auto A = perm_group_analysis(T);
        CHECK(A.order == 2160);
        CHECK(A.center.size() == 6);
        CHECK(A.derived_order == 2160); // perfect
        std::map<long, int> mult;
        for (long s : A.class_sizes) ++mult[s];
        CHECK(mult == std::map<long, int>{{1, 6}, {72, 12}, {90, 9}, {120, 4}});
    }
}

TEST_CASE("central quotients of the sixfold cover of A6") {
    auto P = parse_presentation(A6_COVER_ROBERTSON);
    auto G = regular_group(todd_coxeter(P));
    auto Z = G.center();
    REQUIRE(Z.size() == 6);

    SECTION("n = 1 is the group itself") {
        auto cq = central_quotient(G, 1);
        CHECK(cq.Q.order() == 2160);
    }
    SECTION("n = 2 gives the triple cover of order 1080") {
        auto cq = central_quotient(G, 2);
        CHECK(cq.Q.order() == 1080);
        CHECK(cq.Q.center().size() == 3);
    }
    SECTION("n = 6 gives the simple quotient with the A6 class sizes") {
        auto cq = central_quotient(G, 6);
        REQUIRE(cq.Q.order() == 360);
        auto A = analyze_group(cq.Q);
        CHECK(A.class_sizes == std::vector<long>{1, 40, 40, 45, 72, 72, 90});
        CHECK(A.center == std::vector<int>{0});

        // fibration of the 31 cover classes over the 7 quotient classes:
        // 6x1 -> 1; 12x72 -> the two 72s; 6x90 -> the 90; 3x90 -> the 45;
        // 4x120 -> the two 40s
        std::map<std::pair<long, long>, int> fiber;
        for (const auto& c : G.conjugacy_classes()) {
            std::set<int> img;
            for (int x : c) img.insert(cq.projection[x]);
            auto down = cq.Q.conjugacy_class_of(*img.begin());
            CHECK(img == std::set<int>(down.begin(), down.end()));
            ++fiber[{(long)c.size(), (long)down.size()}];
        }
        CHECK(fiber == std::map<std::pair<long, long>, int>{
                           {{1, 1}, 6},
                           {{72, 72}, 12},
                           {{90, 90}, 6},
                           {{90, 45}, 3},
                           {{120, 40}, 4}});
    }
    SECTION("invalid parameters are rejected") {
        CHECK_THROWS(central_quotient(G, 4));
        CHECK_THROWS(central_quotient(G, 12));
    }
}

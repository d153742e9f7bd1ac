#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "pslrack/matrix.hpp"

using namespace pslrack;

static const int kOrders[] = {2, 3, 4, 5, 7, 8, 9};

TEST_CASE("group enumeration matches order formulas") {
    // |PSL(2,q)| for q = 2,3,4,5,7,8,9
    long psl_expected[] = {6, 12, 60, 60, 168, 504, 360};
    int i = 0;
    for (int q : kOrders) {
        const Field& F = Field::of_order(q);
        CAPTURE(q);
        auto psl = enumerate_group(GroupTag::PSL, F);
        CHECK((long)psl.size() == psl_expected[i]);
        CHECK((long)psl.size() == group_order(GroupTag::PSL, q));
        auto sl = enumerate_group(GroupTag::SL, F);
        CHECK((long)sl.size() == (long)(q - 1) * q * (q + 1));
        auto pgl = enumerate_group(GroupTag::PGL, F);
        CHECK((long)pgl.size() == (long)(q - 1) * q * (q + 1));
        std::set<uint64_t> keys;
        for (auto& g : psl) keys.insert(g.key());
        CHECK(keys.size() == psl.size());
        ++i;
    }
}

TEST_CASE("PSL canonicalization identifies M and -M") {
    for (int q : {5, 7, 9}) {
        const Field& F = Field::of_order(q);
        ProjElement g = ProjElement::make(GroupTag::PSL, F, 1, 2, 0, 1);
        ProjElement h = ProjElement::make(GroupTag::PSL, F, F.neg(1), F.neg(2),
                                          0, F.neg(1));
        CHECK(g == h);
    }
}

TEST_CASE("group operations") {
    for (int q : {4, 5, 7}) {
        const Field& F = Field::of_order(q);
        for (GroupTag tag : {GroupTag::SL, GroupTag::PSL, GroupTag::PGL}) {
            auto G = enumerate_group(tag, F);
            ProjElement e = ProjElement::identity(tag, F);
            size_t step = G.size() / 11 + 1;
            for (size_t i = 0; i < G.size(); i += step)
                for (size_t j = 0; j < G.size(); j += step) {
                    CHECK(G[i] * G[i].inverse() == e);
                    CHECK((G[i] * G[j]) * G[i] == G[i] * (G[j] * G[i]));
                }
        }
    }
}

TEST_CASE("projective line action") {
    const Field& F = Field::of_order(7);
    ProjElement g = ProjElement::make(GroupTag::PSL, F, 1, 1, 0, 1); // z -> z+1
    CHECK(g.apply(3) == 4);
    CHECK(g.apply(proj_infinity(F)) == proj_infinity(F));
    ProjElement w =
        ProjElement::make(GroupTag::PSL, F, 0, F.neg(1), 1, 0); // z -> -1/z
    CHECK(w.apply(0) == proj_infinity(F));
    CHECK(w.apply(proj_infinity(F)) == 0);
    CHECK(w.apply(2) == F.neg(F.inv(2)));
    CHECK(fixed_points(ProjElement::identity(GroupTag::PSL, F)) == F.q() + 1);
    // the action is a homomorphism
    auto G = enumerate_group(GroupTag::PSL, F);
    for (size_t i = 0; i < G.size(); i += 17)
        for (size_t j = 0; j < G.size(); j += 13)
            for (int z = 0; z <= F.q(); ++z)
                CHECK((G[i] * G[j]).apply(z) == G[i].apply(G[j].apply(z)));
}

TEST_CASE("element order and powers") {
    const Field& F = Field::of_order(5);
    ProjElement u = ProjElement::make(GroupTag::PSL, F, 1, 1, 0, 1);
    CHECK(element_order(u) == 5);
    CHECK(element_pow(u, 5).is_identity());
    CHECK(element_pow(u, -2) == element_pow(u, 3));
    ProjElement s = ProjElement::make(GroupTag::PSL, F, 2, 0, 0, 3);
    CHECK(element_order(s) == (int)F.element_order(F.div(2, 3)));
}

TEST_CASE("characteristic polynomial class is conjugation invariant") {
    for (int q : {5, 8, 9}) {
        const Field& F = Field::of_order(q);
        auto G = enumerate_group(GroupTag::PSL, F);
        size_t step = G.size() / 23 + 1;
        for (size_t i = 0; i < G.size(); i += step)
            for (size_t j = 0; j < G.size(); j += step)
                CHECK(char_poly(conjugate(G[i], G[j])) == char_poly(G[j]));
    }
}

TEST_CASE("char poly canonical form") {
    const Field& F = Field::of_order(7);
    // (T,D) ~ (lT, l^2 D)
    CHECK(CharPolyClass(F, 3, 2) == CharPolyClass(F, F.mul(3, 4), F.mul(2, F.mul(4, 4))));
    CHECK(CharPolyClass(F, 3, 2).t() == 1);
    CHECK(CharPolyClass(F, 0, 3) != CharPolyClass(F, 1, 3));
    // T=0: D up to squares
    CHECK(CharPolyClass(F, 0, 3) == CharPolyClass(F, 0, F.mul(3, 4)));
    CHECK(CharPolyClass::least_in_square_coset(F, 2) == 1); // 2 = 3^2
    CHECK_THROWS_AS(CharPolyClass(F, 1, 0), Error);
}

TEST_CASE("validation rejects bad matrices") {
    const Field& F = Field::of_order(5);
    CHECK_THROWS_AS(ProjElement::make(GroupTag::SL, F, 1, 0, 0, 2), Error);
    CHECK_THROWS_AS(ProjElement::make(GroupTag::PSL, F, 0, 0, 0, 0), Error);
    // det 2 is not a square mod 5
    CHECK_THROWS_AS(ProjElement::make(GroupTag::PSL, F, 2, 0, 0, 1), Error);
    CHECK_NOTHROW(ProjElement::make(GroupTag::PGL, F, 2, 0, 0, 1));
}

#include <catch2/catch_amalgamated.hpp>

#include "pslrack/rack.hpp"

using namespace pslrack;

TEST_CASE("conjugation racks are quandles") {
    for (int q : {2, 3, 4, 5, 7}) {
        const Field& F = Field::of_order(q);
        for (const auto& cd : all_classes(F)) {
            if (cd.size() > 60) continue;
            auto R = FiniteRack::conjugation(class_elements(cd));
            CAPTURE(q, cd.id());
            CHECK(R.is_quandle());
        }
    }
}

TEST_CASE("dihedral reflection rack") {
    // transpositions of S3 = PSL(2,2)
    auto mg = MatrixGroup::build(GroupTag::PSL, Field::of_order(2));
    std::vector<int> invs;
    for (int i = 1; i < mg.G.order(); ++i)
        if (mg.G.element_order(i) == 2) invs.push_back(i);
    REQUIRE(invs.size() == 3);
    auto R = FiniteRack::conjugation(mg.G, invs);
    CHECK(R.is_quandle());
    CHECK_FALSE(R.is_abelian());
    CHECK(R.is_minimal_nonabelian());
    CHECK(R.subrack_closure({0, 1}) == std::vector<int>{0, 1, 2});
    auto subs = R.enumerate_subracks();
    // empty, three singletons, whole rack
    CHECK(subs.size() == 5);
}

TEST_CASE("abelian rack detection") {
    // the identity class is a one-element rack; a split torus class meets any
    // abelian subgroup in a trivial subrack
    std::vector<std::vector<int>> op(4, std::vector<int>(4));
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) op[x][y] = y;
    FiniteRack T(op);
    CHECK(T.is_quandle());
    CHECK(T.is_abelian());
    CHECK_FALSE(T.is_minimal_nonabelian());
    // every subset of a trivial rack is a subrack
    CHECK(T.enumerate_subracks().size() == 16);
}

TEST_CASE("subrack closure in PSL(2,5) involutions") {
    const Field& F = Field::of_order(5);
    auto cd = ClassDescriptor::from_id(F, "split:a=4");
    auto elems = class_elements(cd);
    REQUIRE(elems.size() == 15);
    auto R = FiniteRack::conjugation(elems);
    CHECK(R.is_quandle());
    // pairs of involutions generate subracks of size 2 (commuting) or 3
    // (dihedral of order 6) or larger
    for (int i = 0; i < R.size(); ++i)
        for (int j = i + 1; j < R.size(); ++j) {
            auto c = R.subrack_closure({i, j});
            CHECK(c.size() >= 2);
            if (R.op(i, j) == j) CHECK(c.size() == 2);
        }
}

TEST_CASE("rack axiom checker rejects non-racks") {
    std::vector<std::vector<int>> op = {{0, 0}, {1, 1}};
    CHECK_THROWS_AS(FiniteRack(op), Error); // translations not bijective
    std::vector<std::vector<int>> op2 = {{1, 0}, {1, 0}};
    FiniteRack R(op2);
    CHECK_FALSE(R.is_quandle()); // 0 |> 0 = 1
}

TEST_CASE("rack embeddings") {
    auto mg = MatrixGroup::build(GroupTag::PSL, Field::of_order(2));
    std::vector<int> invs;
    for (int i = 1; i < mg.G.order(); ++i)
        if (mg.G.element_order(i) == 2) invs.push_back(i);
    auto D3 = FiniteRack::conjugation(mg.G, invs);

    const Field& F5 = Field::of_order(5);
    auto O = class_elements(ClassDescriptor::from_id(F5, "split:a=4"));
    auto R15 = FiniteRack::conjugation(O);

    auto emb = find_rack_embedding(D3, R15);
    REQUIRE(emb.size() == 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(R15.op(emb[i], emb[j]) == emb[D3.op(i, j)]);

    // a trivial 4-element rack does not embed into D3
    std::vector<std::vector<int>> op(4, std::vector<int>(4));
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) op[x][y] = y;
    CHECK(find_rack_embedding(FiniteRack(op), D3).empty());
}

TEST_CASE("seeded subrack enumeration agrees with power set on small racks") {
    const Field& F = Field::of_order(5);
    auto cd = ClassDescriptor::from_id(F, "split:a=4");
    auto R = FiniteRack::conjugation(class_elements(cd));
    REQUIRE(R.size() == 15);
    auto exact = R.enumerate_subracks(); // power-set mode at size 15
    for (const auto& s : exact) CHECK(R.is_closed(s));
    // every subrack of this rack is generated by at most 3 elements: verify
    // the seeded mode (forced via a copy with n=15 treated seeded) finds all
    std::set<std::vector<int>> seeded;
    for (int i = 0; i < R.size(); ++i)
        for (int j = i; j < R.size(); ++j)
            for (int k = j; k < R.size(); ++k)
                seeded.insert(R.subrack_closure({i, j, k}));
    std::set<std::vector<int>> exact_nonempty(exact.begin(), exact.end());
    exact_nonempty.erase(std::vector<int>{});
    for (const auto& s : seeded) CHECK(exact_nonempty.count(s) == 1);
}

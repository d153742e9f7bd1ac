#include <catch2/catch_amalgamated.hpp>

#include "pslrack/group.hpp"

using namespace pslrack;

static FiniteGroup cyclic(int n) {
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mul[i][j] = (i + j) % n;
    return FiniteGroup::from_tables(std::move(mul));
}

static FiniteGroup direct(const FiniteGroup& A, const FiniteGroup& B) {
    int n = A.order() * B.order();
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int ai = i / B.order(), bi = i % B.order();
            int aj = j / B.order(), bj = j % B.order();
            mul[i][j] = A.mult(ai, aj) * B.order() + B.mult(bi, bj);
        }
    return FiniteGroup::from_tables(std::move(mul));
}

TEST_CASE("symmetric group of degree 3 via PSL(2,2)") {
    auto mg = MatrixGroup::build(GroupTag::PSL, Field::of_order(2));
    const FiniteGroup& G = mg.G;
    REQUIRE(G.order() == 6);
    CHECK_FALSE(G.is_abelian());
    CHECK(G.center() == std::vector<int>{0});
    auto classes = G.conjugacy_classes();
    std::multiset<size_t> sizes;
    for (auto& c : classes) sizes.insert(c.size());
    CHECK(sizes == std::multiset<size_t>{1, 2, 3});
    auto D = G.derived_subgroup();
    CHECK(D.size() == 3);
    CHECK(G.abelian_invariants() == std::vector<long>{2});
    auto Q = G.quotient(D);
    CHECK(Q.order() == 2);
}

TEST_CASE("cyclic and elementary abelian invariants") {
    CHECK(cyclic(12).abelian_invariants() == std::vector<long>{12});
    CHECK(cyclic(1).abelian_invariants() == std::vector<long>{});
    auto V4 = direct(cyclic(2), cyclic(2));
    CHECK(V4.abelian_invariants() == std::vector<long>{2, 2});
    auto C6xC2 = direct(cyclic(6), cyclic(2));
    CHECK(C6xC2.abelian_invariants() == std::vector<long>{2, 6});
    auto C4xC2 = direct(cyclic(4), cyclic(2));
    CHECK(C4xC2.abelian_invariants() == std::vector<long>{2, 4});
    auto C2xC2xC4 = direct(direct(cyclic(2), cyclic(2)), cyclic(4));
    CHECK(C2xC2xC4.abelian_invariants() == std::vector<long>{2, 2, 4});
    auto C10 = direct(cyclic(2), cyclic(5));
    CHECK(C10.abelian_invariants() == std::vector<long>{10});
}

TEST_CASE("subgroup closure and quotient in PSL(2,5)") {
    auto mg = MatrixGroup::build(GroupTag::PSL, Field::of_order(5));
    const FiniteGroup& G = mg.G;
    REQUIRE(G.order() == 60);
    // cyclic subgroup from an order-5 element
    const Field& F = Field::of_order(5);
    int u = mg.index_of(ProjElement::make(GroupTag::PSL, F, 1, 1, 0, 1));
    auto H = G.subgroup_closure({u});
    CHECK(H.size() == 5);
    auto sub = G.subgroup(H);
    CHECK(sub.is_abelian());
    CHECK(sub.abelian_invariants() == std::vector<long>{5});
    // PSL(2,5) is simple and perfect
    CHECK(G.derived_subgroup().size() == 60);
    // centralizer of an involution is a Klein four group... in PSL(2,5) the
    // centralizer of an involution has order 4
    int t = -1;
    for (int i = 1; i < G.order(); ++i)
        if (G.element_order(i) == 2) {
            t = i;
            break;
        }
    auto C = G.centralizer_of(t);
    CHECK(C.size() == 4);
    CHECK(G.subgroup(C).abelian_invariants() == std::vector<long>{2, 2});
}

TEST_CASE("conjugacy classes of PSL(2,7)") {
    auto mg = MatrixGroup::build(GroupTag::PSL, Field::of_order(7));
    auto classes = mg.G.conjugacy_classes();
    std::multiset<size_t> sizes;
    for (auto& c : classes) sizes.insert(c.size());
    CHECK(sizes == std::multiset<size_t>{1, 21, 24, 24, 42, 56});
}

TEST_CASE("quotient validates normality") {
    auto mg = MatrixGroup::build(GroupTag::PSL, Field::of_order(5));
    const Field& F = Field::of_order(5);
    int u = mg.index_of(ProjElement::make(GroupTag::PSL, F, 1, 1, 0, 1));
    auto H = mg.G.subgroup_closure({u}); // Sylow 5, not normal
    CHECK_THROWS_AS(mg.G.quotient(H), Error);
}

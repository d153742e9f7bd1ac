#include <catch2/catch_amalgamated.hpp>

#include "pslrack/subgroup_lattice.hpp"

using namespace pslrack;

namespace {

std::map<std::string, long> label_counts(const std::vector<SubgroupRecord>& rs) {
    std::map<std::string, long> out;
    for (const auto& r : rs) ++out[r.label.str()];
    return out;
}

} // namespace

TEST_CASE("subgroup lattice of PSL(2,2)") {
    auto rs = all_subgroups(Field::of_order(2));
    REQUIRE(rs.size() == 6);
    auto counts = label_counts(rs);
    // involutions are unipotent in characteristic 2
    CHECK(counts == std::map<std::string, long>{
                        {"C1", 1}, {"E2", 3}, {"C3", 1}, {"D6", 1}});
}

TEST_CASE("subgroup lattice of PSL(2,3)") {
    auto rs = all_subgroups(Field::of_order(3));
    REQUIRE(rs.size() == 10);
    auto counts = label_counts(rs);
    CHECK(counts == std::map<std::string, long>{
                        {"C1", 1}, {"C2", 3}, {"E3", 4}, {"D4", 1}, {"A4", 1}});
}

TEST_CASE("subgroup lattice of PSL(2,5)") {
    auto rs = all_subgroups(Field::of_order(5));
    REQUIRE(rs.size() == 59);
    auto counts = label_counts(rs);
    CHECK(counts == std::map<std::string, long>{{"C1", 1},
                                                {"C2", 15},
                                                {"C3", 10},
                                                {"D4", 5},
                                                {"E5", 6},
                                                {"D6", 10},
                                                {"E5:C2", 6},
                                                {"A4", 5},
                                                {"A5", 1}});
    // the order-10 subgroups are the Sylow-5 normalizers, elementary abelian
    // by cyclic of order (q-1)/e = 2 rather than dihedral-in-menu
    for (const auto& r : rs)
        if (r.order == 10)
            CHECK(r.label == DicksonLabel{DicksonType::SemidirectAC, 5, 2});
}

TEST_CASE("subgroup lattice of PSL(2,4) matches the alternating group A5") {
    auto rs = all_subgroups(Field::of_order(4));
    REQUIRE(rs.size() == 59);
    auto counts = label_counts(rs);
    CHECK(counts == std::map<std::string, long>{{"C1", 1},
                                                {"E2", 15},
                                                {"C3", 10},
                                                {"E4", 5},
                                                {"C5", 6},
                                                {"D6", 10},
                                                {"D10", 6},
                                                {"A4", 5},
                                                {"A5", 1}});
}

TEST_CASE("every subgroup receives a label and satisfies Lagrange") {
    for (int q : {2, 3, 4, 5, 7}) {
        const Field& F = Field::of_order(q);
        auto mg = MatrixGroup::build(GroupTag::PSL, F);
        auto rs = all_subgroups(mg.G, F);
        for (const auto& r : rs) {
            CAPTURE(q, r.order);
            CHECK(mg.G.order() % r.order == 0);
            CHECK(!r.label.str().empty());
            // generator witness closes to the element set
            CHECK(mg.G.subgroup_closure(r.generators) == r.elements);
        }
    }
}

TEST_CASE("named subgroups of PSL(2,7)") {
    const Field& F = Field::of_order(7);
    auto rs = all_subgroups(F);
    auto counts = label_counts(rs);
    // one involution per C2; 21 involutions
    CHECK(counts["C2"] == 21);
    // 48 elements of order 7 in 8 Sylow subgroups
    CHECK(counts["E7"] == 8);
    // Borel subgroups of order q(q-1)/e = 21
    CHECK(counts["E7:C3"] == 8);
    // 16 | q^2 - 1 = 48, so S4 occurs; two classes of 7
    CHECK(counts["S4"] == 14);
    CHECK(counts["PSL(2,7)"] == 1);
    CHECK(counts.count("C6") == 0); // 6 divides neither 3 nor 4
}

TEST_CASE("named subgroups of PSL(2,8)") {
    const Field& F = Field::of_order(8);
    auto rs = all_subgroups(F);
    auto counts = label_counts(rs);
    CHECK(counts["E2"] == 63); // one per involution
    CHECK(counts["E8"] == 9);  // Sylow 2-subgroups
    CHECK(counts["E8:C7"] == 9); // Borel subgroups of order 56
    CHECK(counts["C9"] == 28);
    CHECK(counts["D14"] == 36);
    CHECK(counts["D18"] == 28);
    CHECK(counts["PSL(2,8)"] == 1);
    CHECK(counts.count("PSL(2,2)") == 0); // D6 takes priority for S3
}

TEST_CASE("lattice respects the configured bound") {
    CHECK_THROWS_AS(all_subgroups(Field::of_order(13)), Error);
}

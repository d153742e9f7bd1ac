#include <catch2/catch_amalgamated.hpp>

#include "pslrack/field.hpp"

using namespace pslrack;

static const int kOrders[] = {2, 3, 4, 5, 7, 8, 9, 11, 13};

TEST_CASE("modulus is the least monic irreducible") {
    // GF(8): x^3 + x + 1; GF(9): x^2 + 1; GF(4): x^2 + x + 1
    CHECK(Field::get(2, 3).modulus() == std::vector<int>{1, 1, 0, 1});
    CHECK(Field::get(3, 2).modulus() == std::vector<int>{1, 0, 1});
    CHECK(Field::get(2, 2).modulus() == std::vector<int>{1, 1, 1});
    CHECK(Field::get(5, 2).modulus() == std::vector<int>{2, 0, 1});
}

TEST_CASE("field axioms") {
    for (int q : kOrders) {
        const Field& F = Field::of_order(q);
        CAPTURE(q);
        REQUIRE(F.q() == q);
        for (int a = 0; a < q; ++a) {
            CHECK(F.add(a, 0) == a);
            CHECK(F.mul(a, 1) == a);
            CHECK(F.mul(a, 0) == 0);
            CHECK(F.add(a, F.neg(a)) == 0);
            if (a != 0) {
                CHECK(F.mul(a, F.inv(a)) == 1);
            }
            for (int b = 0; b < q; ++b) {
                CHECK(F.add(a, b) == F.add(b, a));
                CHECK(F.mul(a, b) == F.mul(b, a));
                for (int c = 0; c < q; ++c) {
                    REQUIRE(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
                    REQUIRE(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
                    REQUIRE(F.mul(a, F.add(b, c)) ==
                            F.add(F.mul(a, b), F.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("characteristic and prime subfield") {
    for (int q : kOrders) {
        const Field& F = Field::of_order(q);
        int s = 0;
        for (int i = 0; i < F.p(); ++i) s = F.add(s, 1);
        CHECK(s == 0);
    }
}

TEST_CASE("pow and element order") {
    for (int q : kOrders) {
        const Field& F = Field::of_order(q);
        int g = F.generator();
        CHECK(F.element_order(g) == q - 1);
        for (int a = 1; a < q; ++a) {
            CHECK(F.pow(a, q - 1) == 1);
            CHECK(F.pow(a, -1) == F.inv(a));
            long o = F.element_order(a);
            CHECK((q - 1) % o == 0);
        }
        CHECK(F.pow(0, 0) == 1);
        CHECK(F.pow(0, 5) == 0);
    }
}

TEST_CASE("squares") {
    for (int q : kOrders) {
        const Field& F = Field::of_order(q);
        int count = 0;
        for (int a = 0; a < q; ++a)
            if (F.is_square(a)) {
                ++count;
                int r = F.sqrt_of(a);
                CHECK(F.mul(r, r) == a);
            } else {
                CHECK(F.sqrt_of(a) == -1);
            }
        CHECK(count == (q % 2 == 0 ? q : (q + 1) / 2));
    }
}

TEST_CASE("frobenius automorphisms") {
    for (int q : {4, 8, 9}) {
        const Field& F = Field::of_order(q);
        for (int k = 0; k < F.n(); ++k)
            for (int a = 0; a < q; ++a) {
                CHECK(F.frobenius(k, a) == F.pow(a, [&] {
                          long e = 1;
                          for (int i = 0; i < k; ++i) e *= F.p();
                          return e;
                      }()));
                for (int b = 0; b < q; ++b) {
                    CHECK(F.frobenius(k, F.add(a, b)) ==
                          F.add(F.frobenius(k, a), F.frobenius(k, b)));
                    CHECK(F.frobenius(k, F.mul(a, b)) ==
                          F.mul(F.frobenius(k, a), F.frobenius(k, b)));
                }
                CHECK(F.frobenius(F.n(), a) == a);
            }
    }
}

TEST_CASE("subfield embedding") {
    const Field& F9 = Field::get(3, 2);
    const Field& F3 = Field::get(3, 1);
    auto img = F9.subfield_embedding(F3);
    REQUIRE(img.size() == 3);
    CHECK(img[0] == 0);
    CHECK(img[1] == 1);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            CHECK(img[F3.add(a, b)] == F9.add(img[a], img[b]));
            CHECK(img[F3.mul(a, b)] == F9.mul(img[a], img[b]));
        }

    const Field& F16 = Field::get(2, 4);
    const Field& F4 = Field::get(2, 2);
    auto img2 = F16.subfield_embedding(F4);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            CHECK(img2[F4.mul(a, b)] == F16.mul(img2[a], img2[b]));
}

TEST_CASE("invalid orders are rejected") {
    CHECK_THROWS_AS(Field::of_order(6), Error);
    CHECK_THROWS_AS(Field::of_order(12), Error);
    CHECK_THROWS_AS(Field::get(4, 1), Error);
}

TEST_CASE("field element value type") {
    const Field& F = Field::of_order(9);
    FieldElement a(F, 5), b(F, 7);
    CHECK((a + b).value() == F.add(5, 7));
    CHECK((a * b).value() == F.mul(5, 7));
    CHECK((-a).value() == F.neg(5));
    CHECK((a / b).value() == F.div(5, 7));
    CHECK(total_order_cmp(a, b) == -1);
    const Field& F2 = Field::of_order(3);
    FieldElement c(F2, 1);
    CHECK_THROWS_AS(a + c, Error);
}

#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "treecode/field.hpp"

using namespace treecode;

TEST_CASE("prime field basics") {
    Field f5 = Field::prime(5);
    CHECK(f5.q() == 5);
    CHECK((f5.element(3) + f5.element(4)).repr() == 2);
    CHECK(f5.element(2).inverse().repr() == 3);  // 2*3 = 6 = 1
    CHECK_FALSE(f5.element(2).is_square());      // squares mod 5 are {1,4}
    CHECK(f5.element(4).is_square());
    CHECK(f5.element(1).is_square());
    CHECK_THROWS_AS(f5.zero().inverse(), Error);
    CHECK_THROWS_AS(f5.zero().discrete_log(), Error);
    CHECK_THROWS_AS(Field::prime(6), Error);
    CHECK_THROWS_AS(Field::prime(2), Error);
}

TEST_CASE("mixing fields is rejected") {
    Field f5 = Field::prime(5), f7 = Field::prime(7);
    CHECK_THROWS_AS(f5.one() + f7.one(), Error);
}

TEST_CASE("GF(9) primitive element") {
    Field gf9 = Field::gf3(2);
    CHECK(gf9.q() == 9);
    FieldElement w = gf9.omega();
    // order exactly 8: w^8 = 1 and no earlier return
    FieldElement acc = gf9.one();
    for (int k = 1; k < 8; ++k) {
        acc = acc * w;
        CHECK_FALSE(acc == gf9.one());
    }
    CHECK(acc * w == gf9.one());
}

TEST_CASE("discrete log table is consistent with multiplication") {
    Field gf9 = Field::gf3(2);
    CHECK(gf9.one().discrete_log() == 0);
    CHECK(gf9.omega().discrete_log() == 1);
    for (int a = 1; a < 9; ++a)
        for (int b = 1; b < 9; ++b) {
            FieldElement ea = gf9.element(a), eb = gf9.element(b);
            CHECK((ea * eb).discrete_log() == (ea.discrete_log() + eb.discrete_log()) % 8);
        }
}

TEST_CASE("field axioms hold on all of GF(9)") {
    Field gf9 = Field::gf3(2);
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b) {
            FieldElement ea = gf9.element(a), eb = gf9.element(b);
            CHECK(ea + eb == eb + ea);
            CHECK(ea * eb == eb * ea);
            CHECK(ea + (-ea) == gf9.zero());
            for (int c = 0; c < 9; ++c) {
                FieldElement ec = gf9.element(c);
                CHECK((ea + eb) * ec == ea * ec + eb * ec);
                CHECK((ea * eb) * ec == ea * (eb * ec));
            }
        }
    for (int a = 1; a < 9; ++a) {
        FieldElement e = gf9.element(a);
        CHECK(e * e.inverse() == gf9.one());
        CHECK(e.pow(8) == gf9.one());
    }
}

TEST_CASE("squares split the nonzero elements in half") {
    Field gf9 = Field::gf3(2);
    int squares = 0;
    for (int a = 1; a < 9; ++a)
        if (gf9.element(a).is_square()) ++squares;
    CHECK(squares == 4);

    // is_square agrees with exhaustive squaring for every shipped field up to 243
    for (int m = 1; m <= 5; ++m) {
        Field f = Field::gf3(m);
        std::set<int> actual_squares;
        for (int a = 1; a < f.q(); ++a) {
            FieldElement e = f.element(a);
            actual_squares.insert((e * e).repr());
        }
        for (int a = 1; a < f.q(); ++a)
            CHECK(f.element(a).is_square() == (actual_squares.count(a) > 0));
    }
}

TEST_CASE("shipped moduli all have a primitive residue") {
    for (int m = 1; m <= 5; ++m) {
        Field f = Field::gf3(m);
        const int q = f.q();
        FieldElement w = f.omega();
        CHECK(w.pow(q - 1) == f.one());
        // order is exactly q-1: check all proper divisors
        for (int k = 1; k < q - 1; ++k)
            if ((q - 1) % k == 0) CHECK_FALSE(w.pow(k) == f.one());
    }
}

TEST_CASE("permutation polynomial check") {
    Field gf9 = Field::gf3(2);
    SECTION("identity is a permutation") {
        CHECK(is_permutation_polynomial(gf9, {gf9.zero(), gf9.one()}));
    }
    SECTION("x^3 - beta x permutes iff beta is a non-square") {
        for (int beta = 1; beta < 9; ++beta) {
            FieldElement b = gf9.element(beta);
            bool pp = is_permutation_polynomial(gf9, {gf9.zero(), -b, gf9.zero(), gf9.one()});
            CHECK(pp == !b.is_square());
        }
    }
    SECTION("Dickson pairs: even dlog numerator over odd dlog denominator") {
        for (int i = 0; i < 8; i += 2)
            for (int j = 1; j < 8; j += 2) {
                FieldElement a = gf9.omega().pow(i), b = gf9.omega().pow(j);
                FieldElement ratio = b / a;
                CHECK_FALSE(ratio.is_square());
                CHECK(is_permutation_polynomial(gf9, {gf9.zero(), -ratio, gf9.zero(), gf9.one()}));
            }
    }
    SECTION("degree must stay below q") {
        std::vector<FieldElement> too_long(10, gf9.one());
        CHECK_THROWS_AS(is_permutation_polynomial(gf9, too_long), Error);
    }
}

TEST_CASE("explicit modulus validation") {
    // x^2 + 1 over F_3 is irreducible but its root has order 4, not 8
    CHECK_THROWS_AS(Field::with_modulus(3, 2, {1, 0, 1}), Error);
    // x^2 + x + 2 is the shipped primitive choice
    Field f = Field::with_modulus(3, 2, {2, 1, 1});
    CHECK(f.q() == 9);
    CHECK(f.to_string() == "GF(3^2)/[2,1,1]");
}

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "rscodec/rng.hpp"

using namespace rscodec;
using rstest::gf16;
using rstest::gf256;
using rstest::gf64;
using rstest::gf7;
using rstest::gf8;
using rstest::gf9;
using rstest::gf929;

namespace {

// Independent oracle: exp table by repeated plain-integer multiplication
// mod p (prime fields only).
std::vector<elem> prime_exp_oracle(unsigned p, unsigned alpha) {
    std::vector<elem> t;
    unsigned c = 1;
    for (unsigned i = 0; i + 1 < p; ++i) {
        t.push_back(static_cast<elem>(c));
        c = (c * alpha) % p;
    }
    return t;
}

// Independent oracle for GF(2^m): shift-and-reduce against the bit mask of
// the construction polynomial.
std::vector<elem> char2_exp_oracle(unsigned m, unsigned poly_mask) {
    std::vector<elem> t;
    unsigned q = 1u << m, c = 1;
    for (unsigned i = 0; i + 1 < q; ++i) {
        t.push_back(static_cast<elem>(c));
        c <<= 1;
        if (c & q) c ^= poly_mask;
    }
    return t;
}

}  // namespace

TEST_CASE("GF(7) tables match repeated multiplication", "[gf]") {
    Field F = gf7();
    REQUIRE(F.exp_table() == prime_exp_oracle(7, 3));
    REQUIRE(F.exp_table() == std::vector<elem>{1, 3, 2, 6, 4, 5});
    REQUIRE(F.q() == 7);
    REQUIRE(F.n() == 6);
}

TEST_CASE("GF(8) tables match shift-and-reduce by 0b1011", "[gf]") {
    Field F = gf8();
    REQUIRE(F.exp_table() == char2_exp_oracle(3, 0b1011));
    REQUIRE(F.exp_table() == std::vector<elem>{1, 2, 4, 3, 6, 7, 5});
    REQUIRE(F.alpha() == 2);
}

TEST_CASE("GF(9) table from repeated residue multiplication by x", "[gf]") {
    // digits base 3, x^2 = -x - 2 = 2x + 1: 1, x, x^2=(1,2)=7, x^3=(2,2)=8, ...
    Field F = gf9();
    REQUIRE(F.exp_table() == std::vector<elem>{1, 3, 7, 8, 2, 6, 5, 4});
    REQUIRE(F.alpha() == 3);
}

TEST_CASE("non-primitive alpha is rejected", "[gf]") {
    // 2^3 = 1 mod 7: order 3 < 6
    REQUIRE_THROWS_AS(Field(7, 2), NotPrimitiveError);
    // x^2 + 1 = (x+1)^2 over GF(2) is reducible
    REQUIRE_THROWS_AS(Field(2, 2, {1, 0, 1}), NotPrimitiveError);
    // x^4 + x^3 + x^2 + x + 1 is irreducible but x has order 5 < 15
    REQUIRE_THROWS_AS(Field(2, 4, {1, 1, 1, 1, 1}), NotPrimitiveError);
}

TEST_CASE("construction rejects bad inputs", "[gf]") {
    REQUIRE_THROWS_AS(Field(6, 5), NotPrimeError);
    REQUIRE_THROWS_AS(Field(2, 3, {1, 1, 1}), BadPolyDegreeError);        // degree 2, want 3
    REQUIRE_THROWS_AS(Field(2, 3, {1, 1, 0, 0}), BadPolyDegreeError);     // not monic
    REQUIRE_THROWS_AS(Field(3, 2, {5, 1, 1}), BadPolyDegreeError);        // coeff >= p
    REQUIRE_THROWS_AS(Field(2, 17, std::vector<unsigned>(18, 1)), UnsupportedFieldError);
    REQUIRE_THROWS_AS(Field(3, 2), UnsupportedFieldError);   // q = 3 < 4
    REQUIRE_THROWS_AS(Field(65537, 3), UnsupportedFieldError);  // prime, but q > 2^16
    REQUIRE_THROWS_AS(make_field(7, 1), NotPrimitiveError);  // alpha missing
}

TEST_CASE("addition is componentwise mod p", "[gf]") {
    Field F7 = gf7();
    REQUIRE(F7.add(5, 4) == 2);
    REQUIRE(F7.sub(2, 4) == 5);
    REQUIRE(F7.neg(3) == 4);

    Field F8 = gf8();
    REQUIRE(F8.add(3, 5) == 6);  // 0b011 ^ 0b101
    for (elem a = 0; a < 8; ++a) REQUIRE(F8.add(a, a) == 0);

    // odd-characteristic extension: digits base 3, (1,1) + (1,2) = (2,0)
    Field F9 = gf9();
    REQUIRE(F9.add(4, 7) == 2);
    REQUIRE(F9.neg(4) == 8);  // (1,1) -> (2,2)
    REQUIRE(F9.add(4, F9.neg(4)) == 0);
}

TEST_CASE("multiplication and inverse", "[gf]") {
    Field F7 = gf7();
    REQUIRE(F7.mul(3, 5) == 1);
    REQUIRE(F7.inv(6) == 6);
    REQUIRE(F7.inv(1) == 1);
    REQUIRE_THROWS_AS(F7.inv(0), DivideByZeroError);

    Field F8 = gf8();
    REQUIRE(F8.mul(F8.mul(2, 2), 2) == 3);  // x^3 = x + 1

    for (const Field& F : {gf7(), gf8(), gf9(), gf16()}) {
        for (elem a = 0; a < F.q(); ++a) {
            REQUIRE(F.mul(a, 0) == 0);
            REQUIRE(F.mul(a, 1) == a);
            if (a) REQUIRE(F.mul(a, F.inv(a)) == 1);
        }
    }
}

TEST_CASE("alpha_pow reduces exponents mod q-1", "[gf]") {
    Field F = gf7();
    REQUIRE(F.alpha_pow(0) == 1);
    REQUIRE(F.alpha_pow(4) == 4);   // 3^4 = 81 = 4 mod 7
    REQUIRE(F.alpha_pow(-1) == 5);  // 3 * 5 = 1 mod 7
    REQUIRE(F.alpha_pow(6) == 1);
    REQUIRE(F.alpha_pow(-7) == F.alpha_pow(5));
}

TEST_CASE("field axioms on random triples", "[gf]") {
    for (const Field& F : {gf256(), gf929(), gf9()}) {
        SplitMix64 rng(42);
        for (int i = 0; i < 10000; ++i) {
            elem a = static_cast<elem>(rng.below(F.q()));
            elem b = static_cast<elem>(rng.below(F.q()));
            elem c = static_cast<elem>(rng.below(F.q()));
            REQUIRE(F.add(a, b) == F.add(b, a));
            REQUIRE(F.mul(a, b) == F.mul(b, a));
            REQUIRE(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
            REQUIRE(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        }
    }
}

TEST_CASE("a^(q-1) = 1 for all nonzero a, exhaustive for q <= 256", "[gf]") {
    for (const Field& F : {gf7(), gf8(), gf9(), gf16(), gf64(), gf256()}) {
        for (elem a = 1; a < F.q(); ++a) REQUIRE(F.pow(a, F.n()) == 1);
    }
}

TEST_CASE("log and exp are mutually inverse bijections", "[gf]") {
    for (const Field& F : {gf7(), gf8(), gf256(), gf929()}) {
        REQUIRE(F.exp_table().size() == F.n());
        REQUIRE(F.exp_table()[0] == 1);
        for (unsigned i = 0; i < F.n(); ++i) REQUIRE(F.log(F.exp_table()[i]) == i);
        REQUIRE_THROWS_AS(F.log(0), DivideByZeroError);
    }
}

TEST_CASE("largest supported field GF(2^16) builds and inverts", "[gf]") {
    // x^16 + x^12 + x^3 + x + 1
    std::vector<unsigned> poly(17, 0);
    poly[0] = poly[1] = poly[3] = poly[12] = poly[16] = 1;
    Field F(2, 16, poly);
    REQUIRE(F.q() == 65536);
    REQUIRE(F.exp_table().size() == 65535);
    SplitMix64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        elem a = static_cast<elem>(1 + rng.below(F.q() - 1));
        REQUIRE(F.mul(a, F.inv(a)) == 1);
    }
}

TEST_CASE("prime field GF(929) with alpha = 3", "[gf]") {
    Field F = gf929();
    REQUIRE(F.n() == 928);
    REQUIRE(F.mul(464, 2) == 928);
    REQUIRE(F.inv(static_cast<elem>(928)) == 928);  // -1 is its own inverse
}

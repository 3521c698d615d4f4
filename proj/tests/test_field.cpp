// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "epmd/field.hpp"

using namespace epmd;

namespace {

// independent reference multiply: Russian-peasant with reduce-as-you-go,
// deliberately shaped differently from the library path
fe ref_mul(fe a, fe b, std::uint64_t poly, unsigned w) {
    const std::uint64_t top = std::uint64_t{1} << w;
    std::uint64_t acc = 0;
    std::uint64_t x = a;
    for (unsigned bit = 0; bit < w; ++bit) {
        if ((b >> bit) & 1u) acc ^= x;
        x <<= 1;
        if (x & top) x ^= poly;
    }
    return static_cast<fe>(acc);
}

}  // namespace

TEST_SUITE("field") {
    TEST_CASE("defaults and polynomial normalization") {
        CHECK(Field(8).poly() == 0x11b);
        CHECK(Field(16).poly() == 0x1002d);
        CHECK(Field(32).poly() == 0x100400007);
        CHECK(Field(8, 0x1b).poly() == 0x11b);  // implicit x^8 term accepted
        CHECK(Field(8).order() == 256);
        CHECK(Field(16).order() == 65536);
        CHECK(Field(32).order() == 0x100000000ull);
        CHECK(Field(8).symbol_bytes() == 1);
        CHECK(Field(16).symbol_bytes() == 2);
        CHECK(Field(32).symbol_bytes() == 4);
    }

    TEST_CASE("rejects unsupported widths and reducible polynomials") {
        CHECK_THROWS_AS(Field(12), InvalidParams);
        CHECK_THROWS_AS(Field(0), InvalidParams);
        CHECK_THROWS_AS(Field(8, 0x11c), InvalidParams);    // divisible by x
        CHECK_THROWS_AS(Field(8, 0x100), InvalidParams);    // x^8
        CHECK_THROWS_AS(Field(8, 0x111b), InvalidParams);   // degree 12, not 8
        CHECK_THROWS_AS(Field(16, 0x10001), InvalidParams); // (x^8+..)^2 style reducible
        CHECK_THROWS_AS(Field(32, 0x1000000af), InvalidParams);  // not on the w=32 list
        CHECK_NOTHROW(Field(8, 0x11d));
        CHECK_NOTHROW(Field(32, 0x104c11db7));
        CHECK_NOTHROW(Field(32, 0x10000008d));
    }

    TEST_CASE("trial division agrees with hand-checked small polynomials") {
        CHECK(Field::trial_division_irreducible(0x7, 2));    // x^2+x+1
        CHECK_FALSE(Field::trial_division_irreducible(0x5, 2));  // x^2+1 = (x+1)^2
        CHECK(Field::trial_division_irreducible(0xb, 3));    // x^3+x+1
        CHECK(Field::trial_division_irreducible(0xd, 3));    // x^3+x^2+1
        CHECK_FALSE(Field::trial_division_irreducible(0xf, 3));  // (x+1)(x^2+x+1)
        CHECK(Field::trial_division_irreducible(0x11b, 8));
        CHECK(Field::trial_division_irreducible(0x11d, 8));
        CHECK_FALSE(Field::trial_division_irreducible(0x11f, 8));
    }

    TEST_CASE("frozen arithmetic values in GF(256)") {
        Field f(8);
        CHECK(f.add(0x57, 0x83) == 0xd4);
        CHECK(f.sub(0x57, 0x83) == 0xd4);  // same thing in characteristic 2
        CHECK(f.mul(0x53, 0xca) == 0x01);
        CHECK(f.inv(0x53) == 0xca);
        CHECK(f.inv(0xca) == 0x53);
        CHECK(f.pow(2, 8) == 0x1b);  // x^8 reduced by x^8+x^4+x^3+x+1
        CHECK(f.mul(0, 0x53) == 0);
        CHECK(f.mul(1, 0x53) == 0x53);
    }

    TEST_CASE("generator is searched, not assumed") {
        // x has order 51 under 0x11b, so the generator cannot be 2
        CHECK(Field(8, 0x11b).generator() == 3);
        CHECK(Field(8, 0x11d).generator() == 2);
        CHECK(Field(16).generator() == 2);
        CHECK(Field(32).generator() == 2);
    }

    TEST_CASE("generator has full multiplicative order") {
        for (unsigned w : {8u, 16u}) {
            Field f(w);
            const std::uint64_t m = f.order() - 1;
            CHECK(f.pow(f.generator(), m) == 1);
            // proper divisors (q-1)/p for each prime p | q-1
            for (std::uint64_t p : {3ull, 5ull, 17ull, 257ull}) {
                if (m % p != 0) continue;
                CHECK(f.pow(f.generator(), m / p) != 1);
            }
        }
    }

    TEST_CASE("every product in GF(256) matches the reference multiply") {
        Field f(8);
        for (unsigned a = 0; a < 256; ++a)
            for (unsigned b = 0; b < 256; ++b)
                REQUIRE(f.mul(a, b) == ref_mul(a, b, f.poly(), 8));
    }

    TEST_CASE("every non-zero element of GF(256) has the inverse found by search") {
        Field f(8);
        for (fe a = 1; a < 256; ++a) {
            fe found = 0;
            for (fe b = 1; b < 256; ++b) {
                if (f.mul(a, b) == 1) {
                    found = b;
                    break;
                }
            }
            REQUIRE(found != 0);
            REQUIRE(f.inv(a) == found);
            REQUIRE(f.pow(a, 255) == 1);
        }
    }

    TEST_CASE("wide fields match the reference multiply on random inputs") {
        std::mt19937_64 rng(7);
        for (unsigned w : {16u, 32u}) {
            Field f(w);
            const std::uint64_t mask = f.order() - 1;
            for (int i = 0; i < 10000; ++i) {
                const fe a = static_cast<fe>(rng() & mask);
                const fe b = static_cast<fe>(rng() & mask);
                REQUIRE(f.mul(a, b) == ref_mul(a, b, f.poly(), w));
            }
        }
    }

    TEST_CASE("field axioms hold on random triples") {
        std::mt19937_64 rng(11);
        for (unsigned w : {8u, 16u, 32u}) {
            Field f(w);
            const std::uint64_t mask = f.order() - 1;
            for (int i = 0; i < 10000; ++i) {
                const fe a = static_cast<fe>(rng() & mask);
                const fe b = static_cast<fe>(rng() & mask);
                const fe c = static_cast<fe>(rng() & mask);
                REQUIRE(f.mul(a, b) == f.mul(b, a));
                REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                REQUIRE(f.add(a, a) == 0);
                if (a != 0) REQUIRE(f.mul(a, f.inv(a)) == 1);
            }
        }
    }

    TEST_CASE("inverse of zero throws") {
        CHECK_THROWS_AS(Field(8).inv(0), ZeroInverse);
        CHECK_THROWS_AS(Field(32).inv(0), ZeroInverse);
    }

    TEST_CASE("pow edge cases") {
        Field f(16);
        CHECK(f.pow(0, 0) == 1);
        CHECK(f.pow(0, 5) == 0);
        CHECK(f.pow(1, 123456789) == 1);
        CHECK(f.pow(7, 1) == 7);
        // a^(e1+e2) == a^e1 * a^e2
        std::mt19937_64 rng(13);
        for (int i = 0; i < 1000; ++i) {
            const fe a = static_cast<fe>(1 + rng() % (f.order() - 1));
            const std::uint64_t e1 = rng() % 1000, e2 = rng() % 1000;
            REQUIRE(f.pow(a, e1 + e2) == f.mul(f.pow(a, e1), f.pow(a, e2)));
        }
    }

    TEST_CASE("frozen value in GF(2^32)") {
        Field f(32);
        // x^32 reduces to the low bits of the default polynomial
        CHECK(f.pow(2, 32) == 0x400007);
        CHECK(f.mul(0x80000000u, 2) == 0x400007);
    }

    TEST_CASE("symbol serialization is little-endian and round-trips") {
        unsigned char buf[4] = {0, 0, 0, 0};
        Field f16(16);
        f16.write_symbol(0x1234, buf);
        CHECK(buf[0] == 0x34);
        CHECK(buf[1] == 0x12);
        CHECK(f16.read_symbol(buf) == 0x1234);

        Field f32(32);
        f32.write_symbol(0xdeadbeef, buf);
        CHECK(buf[0] == 0xef);
        CHECK(buf[1] == 0xbe);
        CHECK(buf[2] == 0xad);
        CHECK(buf[3] == 0xde);
        CHECK(f32.read_symbol(buf) == 0xdeadbeef);

        std::mt19937_64 rng(17);
        for (unsigned w : {8u, 16u, 32u}) {
            Field f(w);
            for (int i = 0; i < 1000; ++i) {
                const fe v = static_cast<fe>(rng() & (f.order() - 1));
                f.write_symbol(v, buf);
                REQUIRE(f.read_symbol(buf) == v);
            }
        }
    }
}

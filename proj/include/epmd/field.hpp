// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "epmd/errors.hpp"

namespace epmd {

// A field element value.  Canonical values live in [0, 2^w); the Field that
// produced a value is needed to interpret it.
using fe = std::uint32_t;

// GF(2^w) for w in {8, 16, 32}, as polynomials over GF(2) modulo an
// irreducible reduction polynomial of degree w.
//
// For w <= 16 arithmetic goes through log/antilog tables built on a
// multiplicative generator found at construction time (the reduction
// polynomial need not be primitive, so the generator is searched, not
// assumed to be x).  For w = 32 multiplication is carry-less shift-and-add
// with reduction, and inversion uses a^(2^w - 2).
class Field {
public:
    // `poly` is the full reduction polynomial; bit w may be given explicitly
    // (0x11b) or left implicit (0x1b) -- both name x^8+x^4+x^3+x+1.
    // Passing poly == 0 selects the built-in default for that width.
    // Throws InvalidParams for unsupported widths, wrong degree, or a
    // reducible polynomial.
    explicit Field(unsigned w, std::uint64_t poly = 0);

    unsigned w() const { return w_; }
    std::uint64_t poly() const { return poly_; }
    std::uint64_t order() const { return std::uint64_t{1} << w_; }  // q = 2^w
    fe generator() const { return gen_; }
    unsigned symbol_bytes() const { return w_ / 8; }

    static std::uint64_t default_poly(unsigned w);

    // addition == subtraction == XOR in characteristic 2
    fe add(fe a, fe b) const { return a ^ b; }
    fe sub(fe a, fe b) const { return a ^ b; }

    fe mul(fe a, fe b) const {
        if (a == 0 || b == 0) return 0;
        if (w_ <= 16) {
            std::uint32_t s = log_[a] + log_[b];
            std::uint32_t m = static_cast<std::uint32_t>(order() - 1);
            if (s >= m) s -= m;
            return exp_[s];
        }
        return clmul_mod(a, b, poly_, w_);
    }

    // multiplicative inverse; throws ZeroInverse on 0
    fe inv(fe a) const;

    // a^e with a^0 == 1 for every a (including 0)
    fe pow(fe a, std::uint64_t e) const;

    // symbols on the wire / on disk: little-endian, w/8 bytes
    void write_symbol(fe v, unsigned char* out) const;
    fe read_symbol(const unsigned char* in) const;

    // Carry-less multiply of two degree-<w polynomials followed by reduction
    // modulo `poly`.  Exposed as the table-free reference path.
    static fe clmul_mod(fe a, fe b, std::uint64_t poly, unsigned w);

    // True iff `poly` (full form, degree w) is irreducible over GF(2).
    // Exhaustive trial division: intended for w <= 16.
    static bool trial_division_irreducible(std::uint64_t poly, unsigned w);

private:
    void build_tables();
    fe find_generator() const;

    unsigned w_ = 0;
    std::uint64_t poly_ = 0;
    fe gen_ = 0;
    std::vector<std::uint32_t> log_;  // index: element, value: discrete log base gen_
    std::vector<fe> exp_;             // index: exponent in [0, q-1), value: gen_^index
};

}  // namespace epmd

// SPDX-License-Identifier: Apache-2.0

#include "epmd/field.hpp"

#include <array>
#include <sstream>

namespace epmd {

namespace {

// prime factorizations of 2^w - 1 for the supported widths
constexpr std::array<std::uint64_t, 3> kFactors8 = {3, 5, 17};
constexpr std::array<std::uint64_t, 4> kFactors16 = {3, 5, 17, 257};
constexpr std::array<std::uint64_t, 5> kFactors32 = {3, 5, 17, 257, 65537};

// degree-32 polynomials known irreducible over GF(2); trial division up to
// degree 16 is too slow to run at every construction, so w = 32 is limited
// to this audited list.
constexpr std::array<std::uint64_t, 3> kIrreducible32 = {
    0x100400007,  // x^32 + x^22 + x^2 + x + 1
    0x104c11db7,  // x^32 + x^26 + x^23 + ... + 1 (the CRC-32 polynomial)
    0x10000008d,  // x^32 + x^7 + x^3 + x^2 + 1
};

unsigned degree(std::uint64_t p) {
    unsigned d = 0;
    while (p > 1) {
        p >>= 1;
        ++d;
    }
    return d;
}

}  // namespace

std::uint64_t Field::default_poly(unsigned w) {
    switch (w) {
        case 8:
            return 0x11b;  // x^8+x^4+x^3+x+1
        case 16:
            return 0x1002d;  // x^16+x^5+x^3+x^2+1
        case 32:
            return 0x100400007;
        default:
            throw InvalidParams("field: unsupported width");
    }
}

fe Field::clmul_mod(fe a, fe b, std::uint64_t poly, unsigned w) {
    // product of two degree-<w inputs has degree < 2w <= 64 only for w <= 32;
    // for w == 32 the high bit never reaches bit 63, so uint64 suffices
    std::uint64_t acc = 0;
    std::uint64_t x = a;
    std::uint32_t y = b;
    while (y != 0) {
        if (y & 1u) acc ^= x;
        x <<= 1;
        y >>= 1;
    }
    for (unsigned bit = 2 * w - 2; bit >= w; --bit) {
        if ((acc >> bit) & 1u) acc ^= poly << (bit - w);
    }
    return static_cast<fe>(acc);
}

bool Field::trial_division_irreducible(std::uint64_t poly, unsigned w) {
    if (w < 2) return false;
    if ((poly & 1u) == 0) return false;  // divisible by x
    // divide by every polynomial of degree 1..w/2
    for (unsigned d = 1; d <= w / 2; ++d) {
        for (std::uint64_t div = (std::uint64_t{1} << d) | 1u; div < (std::uint64_t{2} << d);
             div += 2) {
            if (degree(div) != d) continue;
            // polynomial remainder of poly by div
            std::uint64_t rem = poly;
            while (degree(rem) >= d && rem != 0) {
                rem ^= div << (degree(rem) - d);
            }
            if (rem == 0) return false;
        }
    }
    return true;
}

Field::Field(unsigned w, std::uint64_t poly) : w_(w) {
    if (w != 8 && w != 16 && w != 32) throw InvalidParams("field: width must be 8, 16 or 32");
    if (poly == 0) poly = default_poly(w);
    if ((poly >> w) == 0) poly |= std::uint64_t{1} << w;  // make the x^w term explicit
    if (degree(poly) != w) {
        std::ostringstream os;
        os << "field: reduction polynomial 0x" << std::hex << poly << " does not have degree "
           << std::dec << w;
        throw InvalidParams(os.str());
    }
    poly_ = poly;

    if (w <= 16) {
        if (!trial_division_irreducible(poly_, w_)) {
            std::ostringstream os;
            os << "field: reduction polynomial 0x" << std::hex << poly_ << " is reducible";
            throw InvalidParams(os.str());
        }
    } else {
        bool known = false;
        for (std::uint64_t p : kIrreducible32) known = known || (p == poly_);
        if (!known)
            throw InvalidParams(
                "field: w=32 supports only the built-in reduction polynomials "
                "0x100400007, 0x104c11db7, 0x10000008d");
    }

    gen_ = find_generator();
    if (w_ <= 16) build_tables();
}

fe Field::find_generator() const {
    // g generates the multiplicative group iff g^((q-1)/p) != 1 for every
    // prime p dividing q - 1.  Runs before the log tables exist, so it uses
    // the table-free multiply.
    const std::uint64_t m = order() - 1;
    auto raw_pow = [&](fe a, std::uint64_t e) {
        fe acc = 1;
        while (e != 0) {
            if (e & 1u) acc = clmul_mod(acc, a, poly_, w_);
            a = clmul_mod(a, a, poly_, w_);
            e >>= 1;
        }
        return acc;
    };
    auto is_gen = [&](fe g) {
        auto check = [&](std::uint64_t p) { return raw_pow(g, m / p) != 1; };
        if (w_ == 8) {
            for (auto p : kFactors8)
                if (!check(p)) return false;
        } else if (w_ == 16) {
            for (auto p : kFactors16)
                if (!check(p)) return false;
        } else {
            for (auto p : kFactors32)
                if (!check(p)) return false;
        }
        return true;
    };
    for (fe g = 2;; ++g) {
        if (is_gen(g)) return g;
    }
}

void Field::build_tables() {
    const std::uint32_t m = static_cast<std::uint32_t>(order() - 1);
    exp_.assign(m, 0);
    log_.assign(order(), 0);
    fe v = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        exp_[i] = v;
        log_[v] = i;
        v = clmul_mod(v, gen_, poly_, w_);
    }
}

fe Field::inv(fe a) const {
    if (a == 0) throw ZeroInverse("field: inverse of zero");
    if (w_ <= 16) {
        const std::uint32_t m = static_cast<std::uint32_t>(order() - 1);
        std::uint32_t e = m - log_[a];
        if (e == m) e = 0;  // a == 1
        return exp_[e];
    }
    return pow(a, order() - 2);
}

fe Field::pow(fe a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    fe base = a;
    fe acc = 1;
    while (e != 0) {
        if (e & 1u) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

void Field::write_symbol(fe v, unsigned char* out) const {
    for (unsigned i = 0; i < symbol_bytes(); ++i) out[i] = static_cast<unsigned char>(v >> (8 * i));
}

fe Field::read_symbol(const unsigned char* in) const {
    fe v = 0;
    for (unsigned i = 0; i < symbol_bytes(); ++i) v |= static_cast<fe>(in[i]) << (8 * i);
    return v;
}

}  // namespace epmd

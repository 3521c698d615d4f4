// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>

#include "epmd/errors.hpp"

namespace epmd {

// Exact ratio of two machine integers, always stored normalized with a
// positive denominator.  Bandwidth bounds are small fractions (e.g. 7/5),
// so int64 components are more than enough; comparisons cross-multiply in
// 128-bit to stay exact.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational of(std::int64_t n, std::int64_t d) {
        if (d == 0) throw InvalidParams("rational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        std::int64_t g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        return Rational{n, d};
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    bool is_integer() const { return den == 1; }

    // "7/5", or just "7" when the denominator is 1
    std::string str() const {
        std::ostringstream os;
        os << num;
        if (den != 1) os << '/' << den;
        return os.str();
    }

    // "1.4" -- default stream precision on the double value
    std::string decimal() const {
        std::ostringstream os;
        os << value();
        return os.str();
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }
};

}  // namespace epmd

#pragma once

#include <compare>
#include <string>

#include "exlat/checked.hpp"

namespace exlat {

// Exact rational with checked 64-bit numerator/denominator, always in
// lowest terms with positive denominator.
struct rat {
    i64 num = 0;
    i64 den = 1;

    rat() = default;
    rat(i64 n) : num(n), den(1) { chk(n); }
    rat(i64 n, i64 d) {
        if (d == 0) fail(errc::zero_input, "rational with zero denominator");
        if (d < 0) { n = neg(n); d = neg(d); }
        i64 g = gcd_nonneg(n, d);
        if (g > 1) { n /= g; d /= g; }
        num = chk(n);
        den = chk(d);
    }

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }
    int sign() const { return num > 0 ? 1 : num < 0 ? -1 : 0; }

    friend rat operator+(const rat& a, const rat& b) {
        i64 g = gcd_nonneg(a.den, b.den);
        i64 da = a.den / g;
        i64 db = b.den / g;
        return rat(add(mul(a.num, db), mul(b.num, da)), mul(a.den, db));
    }
    friend rat operator-(const rat& a, const rat& b) { return a + rat(neg(b.num), b.den); }
    friend rat operator-(const rat& a) { return rat(neg(a.num), a.den); }
    friend rat operator*(const rat& a, const rat& b) {
        i64 g1 = gcd_nonneg(a.num, b.den);
        i64 g2 = gcd_nonneg(b.num, a.den);
        return rat(mul(a.num / g1, b.num / g2), mul(a.den / g2, b.den / g1));
    }
    friend rat operator/(const rat& a, const rat& b) {
        if (b.num == 0) fail(errc::zero_input, "division by zero rational");
        return a * rat(b.den, b.num);
    }
    rat& operator+=(const rat& o) { return *this = *this + o; }
    rat& operator-=(const rat& o) { return *this = *this - o; }
    rat& operator*=(const rat& o) { return *this = *this * o; }
    rat& operator/=(const rat& o) { return *this = *this / o; }

    friend bool operator==(const rat& a, const rat& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend std::strong_ordering operator<=>(const rat& a, const rat& b) {
        return mul(a.num, b.den) <=> mul(b.num, a.den);
    }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

inline i64 floor_rat(const rat& r) { return fdiv(r.num, r.den); }
inline i64 ceil_rat(const rat& r) { return -fdiv(-r.num, r.den); }

// Parses "p" or "p/q"; throws bad_input on malformed text.
rat parse_rat(const std::string& s);

} // namespace exlat

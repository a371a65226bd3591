#include "mw/numeric.hpp"

#include <algorithm>

#include "mw/errors.hpp"

namespace mw {

std::string dec_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

std::string dec_string(i128 v) {
    if (v < 0) return "-" + dec_string(static_cast<u128>(-v));
    return dec_string(static_cast<u128>(v));
}

Frac Frac::of(long long n, long long d) {
    if (d == 0) throw ParamError("fraction with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Frac{n, d};
}

namespace {

Frac reduce128(i128 n, i128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 a = n < 0 ? -n : n;
    i128 b = d;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        n /= a;
        d /= a;
    }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
        throw CapacityError("fraction overflow");
    return Frac{static_cast<long long>(n), static_cast<long long>(d)};
}

}  // namespace

Frac Frac::operator+(const Frac& o) const {
    return reduce128(static_cast<i128>(num) * o.den + static_cast<i128>(o.num) * den,
                     static_cast<i128>(den) * o.den);
}

Frac Frac::operator-(const Frac& o) const {
    return reduce128(static_cast<i128>(num) * o.den - static_cast<i128>(o.num) * den,
                     static_cast<i128>(den) * o.den);
}

Frac Frac::operator*(const Frac& o) const {
    return reduce128(static_cast<i128>(num) * o.num, static_cast<i128>(den) * o.den);
}

bool Frac::operator<(const Frac& o) const {
    return static_cast<i128>(num) * o.den < static_cast<i128>(o.num) * den;
}

}  // namespace mw

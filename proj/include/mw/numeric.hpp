#pragma once

#include <cstdint>
#include <numeric>
#include <string>

namespace mw {

using u128 = unsigned __int128;
using i128 = __int128;

std::string dec_string(u128 v);
std::string dec_string(i128 v);

// Exact nonnegative mass num/den, typically den = N^2. Numerators of level
// masses fit u128 comfortably for every supported table size.
struct MassRatio {
    u128 num = 0;
    u128 den = 1;

    double value() const {
        return static_cast<double>(num) / static_cast<double>(den);
    }
    std::string num_str() const { return dec_string(num); }
    std::string den_str() const { return dec_string(den); }
};

// Small exact fraction (arc centers, arc widths, arc measures). Normalized,
// den > 0; intermediates go through 128 bits.
struct Frac {
    long long num = 0;
    long long den = 1;

    static Frac of(long long n, long long d);
    Frac operator+(const Frac& o) const;
    Frac operator-(const Frac& o) const;
    Frac operator*(const Frac& o) const;
    bool operator<(const Frac& o) const;
    bool operator==(const Frac& o) const { return num == o.num && den == o.den; }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

}  // namespace mw

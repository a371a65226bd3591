#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "mw/arith.hpp"
#include "mw/numeric.hpp"

namespace mw {

// Unnormalized integer Walsh coefficients: coeffs[A] = sum_x f(x) * w_A(x)
// = N * fhat(A). Mask bit j set <=> j in A, matching the binary expansion
// of the point index, so w_A(x) is a popcount parity.
struct WalshSpectrum {
    std::uint32_t n = 0;
    std::vector<std::int64_t> coeffs;

    std::uint64_t size() const { return std::uint64_t(1) << n; }
    u128 total_square_sum() const;  // sum_A coeffs[A]^2, exact
};

inline int walsh_eval(std::uint64_t mask, std::uint64_t x) {
    return (std::popcount(mask & x) & 1) ? -1 : 1;
}

// In-place unnormalized butterfly; applying it twice multiplies by N.
void fwht_inplace(std::span<std::int64_t> data);
void fwht_inplace(std::span<double> data);

WalshSpectrum fwht(std::vector<std::int64_t> table);
WalshSpectrum spectrum_of_mu(const MoebiusTable& t);

std::int64_t naive_coefficient(std::span<const std::int64_t> table, std::uint64_t mask);

// Per-level masses W_k = (1/N^2) sum_{|A|=k} coeffs[A]^2, exact numerators
// over N^2.
struct LevelProfile {
    std::uint32_t n = 0;
    std::vector<u128> level_num;  // index k = 0..n, denominator N^2

    MassRatio mass(std::uint32_t k) const;
    MassRatio total() const;
};

LevelProfile level_profile(const WalshSpectrum& s);
MassRatio low_level_mass(const WalshSpectrum& s, std::uint32_t n0);
std::int64_t max_abs_coeff(const WalshSpectrum& s);

// Inverse transform with all coefficients above the level cutoff removed;
// output is scaled by 1/N (actual function values).
std::vector<double> low_degree_truncate(const WalshSpectrum& s, std::uint32_t cutoff);

struct IntervalCapResult {
    std::vector<double> table;   // g = inverse transform of the kept masks
    MassRatio discarded_mass;    // sum over capped masks of fhat(A)^2
    std::uint64_t kept_masks = 0;
    std::uint64_t capped_masks = 0;
};

// Keeps masks with |A intersect J| < K0, J = [j_lo, j_hi).
IntervalCapResult interval_cap(const WalshSpectrum& s, std::uint32_t j_lo, std::uint32_t j_hi,
                               std::uint32_t K0);

struct IntervalCandidate {
    std::uint32_t alpha = 0;
    std::uint32_t j_lo = 0;
    std::uint32_t j_hi = 0;
    double capped_mass = 0.0;  // (1/N) sum over capped masks of coeffs[A]^2
};

struct GoodIntervalReport {
    IntervalCandidate chosen;
    std::vector<IntervalCandidate> candidates;
    double bound = 0.0;  // e^{-2K} * N
    bool bound_met = false;
    double theory_K0 = 0.0;  // (1 + n0*m/n) * e^{3K}
};

// Partitions the index range into intervals of length m and picks, among the
// admissible interval indices, the one whose capped spectral mass at cap K0
// is smallest.
GoodIntervalReport select_good_interval(const WalshSpectrum& s, std::uint32_t m, std::uint32_t K0,
                                        double K, std::uint32_t n0);

}  // namespace mw

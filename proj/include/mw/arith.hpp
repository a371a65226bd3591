#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace mw {

// Moebius values on [0, 2^n), one signed byte per entry. mu(0) := 0 so the
// table length stays a power of two; mu(1) = 1.
struct MoebiusTable {
    std::uint32_t n = 0;
    std::vector<std::int8_t> values;

    std::uint64_t size() const { return std::uint64_t(1) << n; }
    int mu(std::uint64_t x) const { return values[x]; }

    std::uint64_t squarefree_count() const;
    long long mertens() const;  // sum of all entries
};

inline constexpr std::uint32_t kMaxSieveExponent = 30;
inline constexpr std::uint32_t kLinearSieveExponent = 24;  // one block up to here
inline constexpr std::uint64_t kSieveSegmentSize = std::uint64_t(1) << 22;

MoebiusTable sieve_moebius(std::uint32_t n, std::uint32_t max_exponent = kMaxSieveExponent);

// Trial-division oracle for the sieve. x >= 1.
int mu_point(std::uint64_t x);

struct FactorSummary {
    std::uint64_t x = 1;
    std::vector<std::pair<std::uint64_t, std::uint32_t>> prime_powers;
    std::uint64_t phi = 1;
    std::uint32_t omega = 0;
    bool squarefree = true;
};

FactorSummary factor_toolkit(std::uint64_t x);
std::uint64_t euler_phi(std::uint64_t x);

namespace detail {
// Segmented path, exposed so tests can force small segments.
void sieve_segment(std::uint64_t lo, std::uint64_t hi,
                   const std::vector<std::uint32_t>& primes, std::int8_t* out);
MoebiusTable sieve_moebius_segmented(std::uint32_t n, std::uint64_t segment_size);
}  // namespace detail

}  // namespace mw

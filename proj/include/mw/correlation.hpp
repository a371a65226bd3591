#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mw/numeric.hpp"
#include "mw/walsh.hpp"

namespace mw {

// +-1 truth tables with the convention TRUE -> -1, FALSE -> +1, so the
// dictator on bit j is exactly the Walsh character of {j}.
struct BooleanFunction {
    std::uint32_t n = 0;
    std::vector<std::int8_t> table;
    bool monotone = false;  // verified by neighbor comparisons, never assumed

    std::uint64_t size() const { return std::uint64_t(1) << n; }
};

enum class MonotoneKind { Majority, Dictator, And, Or, Tribes };

MonotoneKind monotone_kind_from_name(const std::string& name);

// param: dictator index j, or tribe width w (must divide n); ignored otherwise.
BooleanFunction monotone_generate(MonotoneKind kind, std::uint32_t n, std::uint32_t param = 0);

// Setting an input bit may never increase the +-1 output under the sign
// convention above.
bool verify_monotone(std::uint32_t n, std::span<const std::int8_t> table);

struct Correlation {
    long long num = 0;   // sum f*g
    std::uint64_t den = 1;  // N
    double value = 0.0;
    double plancherel_value = 0.0;  // same number through the spectra
};

Correlation correlate(std::span<const std::int8_t> f, std::span<const std::int8_t> g);

// Tail mass above the level: sum_{|A|>k} ghat(A)^2, exact over N^2.
MassRatio spectral_tail(const WalshSpectrum& g, std::uint32_t level);

// Correlation split at a level cutoff: correlation = low_part + tail with
// |tail| <= sqrt(tail mass of g) * sqrt(total mass of f), checked exactly
// on the integer spectra.
struct CorrelationSplit {
    std::uint32_t level = 0;
    double correlation = 0.0;
    double low_part = 0.0;
    double tail = 0.0;
    double tail_bound = 0.0;
    MassRatio g_tail_mass;
    MassRatio f_total_mass;
    bool inequality_holds = false;
};

CorrelationSplit correlation_split(const WalshSpectrum& f, const WalshSpectrum& g,
                                   std::uint32_t level);

}  // namespace mw

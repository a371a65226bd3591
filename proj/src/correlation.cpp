#include "mw/correlation.hpp"

#include <bit>
#include <cmath>

#include "mw/errors.hpp"

namespace mw {

MonotoneKind monotone_kind_from_name(const std::string& name) {
    if (name == "majority") return MonotoneKind::Majority;
    if (name == "dictator") return MonotoneKind::Dictator;
    if (name == "and") return MonotoneKind::And;
    if (name == "or") return MonotoneKind::Or;
    if (name == "tribes") return MonotoneKind::Tribes;
    throw ParamError("unknown Boolean function kind: " + name);
}

bool verify_monotone(std::uint32_t n, std::span<const std::int8_t> table) {
    std::uint64_t N = std::uint64_t(1) << n;
    for (std::uint64_t x = 0; x < N; ++x) {
        for (std::uint32_t j = 0; j < n; ++j) {
            std::uint64_t bit = std::uint64_t(1) << j;
            if (x & bit) continue;
            if (table[x | bit] > table[x]) return false;
        }
    }
    return true;
}

BooleanFunction monotone_generate(MonotoneKind kind, std::uint32_t n, std::uint32_t param) {
    if (n == 0 || n > 24) throw CapacityError("monotone_generate: n must be in [1, 24]");
    std::uint64_t N = std::uint64_t(1) << n;
    BooleanFunction f;
    f.n = n;
    f.table.resize(N);
    switch (kind) {
        case MonotoneKind::Majority: {
            if (n % 2 == 0) throw ParamError("majority requires odd arity");
            for (std::uint64_t x = 0; x < N; ++x)
                f.table[x] = std::popcount(x) > static_cast<int>(n / 2) ? -1 : 1;
            break;
        }
        case MonotoneKind::Dictator: {
            if (param >= n) throw ParamError("dictator index out of range");
            for (std::uint64_t x = 0; x < N; ++x)
                f.table[x] = (x >> param) & 1 ? -1 : 1;
            break;
        }
        case MonotoneKind::And: {
            for (std::uint64_t x = 0; x < N; ++x) f.table[x] = x == N - 1 ? -1 : 1;
            break;
        }
        case MonotoneKind::Or: {
            for (std::uint64_t x = 0; x < N; ++x) f.table[x] = x == 0 ? 1 : -1;
            break;
        }
        case MonotoneKind::Tribes: {
            std::uint32_t w = param;
            if (w == 0 || w > n || n % w != 0)
                throw ParamError("tribes width must divide the arity");
            std::uint64_t tribe_mask = (std::uint64_t(1) << w) - 1;
            for (std::uint64_t x = 0; x < N; ++x) {
                bool any = false;
                for (std::uint32_t t = 0; t < n / w; ++t) {
                    std::uint64_t chunk = (x >> (t * w)) & tribe_mask;
                    if (chunk == tribe_mask) {
                        any = true;
                        break;
                    }
                }
                f.table[x] = any ? -1 : 1;
            }
            break;
        }
    }
    f.monotone = n <= 20 ? verify_monotone(n, f.table) : false;
    return f;
}

Correlation correlate(std::span<const std::int8_t> f, std::span<const std::int8_t> g) {
    if (f.size() != g.size()) throw ParamError("correlate: length mismatch");
    if (f.empty() || (f.size() & (f.size() - 1)) != 0)
        throw ParamError("correlate: length must be a power of two");
    Correlation c;
    c.den = f.size();
    for (std::size_t x = 0; x < f.size(); ++x) c.num += static_cast<int>(f[x]) * g[x];
    c.value = static_cast<double>(c.num) / static_cast<double>(c.den);

    WalshSpectrum F = fwht(std::vector<std::int64_t>(f.begin(), f.end()));
    WalshSpectrum G = fwht(std::vector<std::int64_t>(g.begin(), g.end()));
    i128 dot = 0;
    for (std::uint64_t a = 0; a < F.size(); ++a)
        dot += static_cast<i128>(F.coeffs[a]) * G.coeffs[a];
    // sum_A Fhat Ghat = (1/N^2) sum coeffs products; correlation = that * N / N
    c.plancherel_value = static_cast<double>(dot) /
                         (static_cast<double>(c.den) * static_cast<double>(c.den));
    return c;
}

MassRatio spectral_tail(const WalshSpectrum& g, std::uint32_t level) {
    u128 acc = 0;
    for (std::uint64_t a = 0; a < g.size(); ++a) {
        if (std::popcount(a) <= static_cast<int>(level)) continue;
        std::int64_t c = g.coeffs[a];
        acc += static_cast<u128>(static_cast<i128>(c) * c);
    }
    u128 N = u128(1) << g.n;
    return MassRatio{acc, N * N};
}

CorrelationSplit correlation_split(const WalshSpectrum& f, const WalshSpectrum& g,
                                   std::uint32_t level) {
    if (f.n != g.n) throw ParamError("correlation_split: size mismatch");
    CorrelationSplit r;
    r.level = level;
    i128 low = 0, high = 0;
    u128 g_tail = 0, f_total = 0;
    for (std::uint64_t a = 0; a < f.size(); ++a) {
        i128 prod = static_cast<i128>(f.coeffs[a]) * g.coeffs[a];
        f_total += static_cast<u128>(static_cast<i128>(f.coeffs[a]) * f.coeffs[a]);
        if (std::popcount(a) <= static_cast<int>(level)) {
            low += prod;
        } else {
            high += prod;
            g_tail += static_cast<u128>(static_cast<i128>(g.coeffs[a]) * g.coeffs[a]);
        }
    }
    double N2 = static_cast<double>(f.size()) * static_cast<double>(f.size());
    r.low_part = static_cast<double>(low) / N2;
    r.tail = static_cast<double>(high) / N2;
    r.correlation = r.low_part + r.tail;
    u128 N = u128(1) << f.n;
    r.g_tail_mass = MassRatio{g_tail, N * N};
    r.f_total_mass = MassRatio{f_total, N * N};
    r.tail_bound = std::sqrt(r.g_tail_mass.value()) * std::sqrt(r.f_total_mass.value());
    // exact Cauchy-Schwarz check: (sum_{tail} FG)^2 <= (sum_{tail} G^2)(sum_all F^2);
    // all three fit well below 2^63 at supported sizes, so the squares stay
    // inside 128 bits.
    u128 lhs = static_cast<u128>(high < 0 ? -high : high);
    u128 cap = u128(1) << 63;
    if (lhs < cap && g_tail < cap && f_total < cap) {
        r.inequality_holds = lhs * lhs <= g_tail * f_total;
    } else {
        r.inequality_holds = static_cast<long double>(lhs) * static_cast<long double>(lhs) <=
                             static_cast<long double>(g_tail) * static_cast<long double>(f_total) *
                                 (1.0L + 1e-15L);
    }
    return r;
}

}  // namespace mw

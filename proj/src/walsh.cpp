#include "mw/walsh.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>

#include "mw/errors.hpp"
#include "mw/threads.hpp"

namespace mw {

u128 WalshSpectrum::total_square_sum() const {
    u128 acc = 0;
    for (std::int64_t c : coeffs) acc += static_cast<u128>(static_cast<i128>(c) * c);
    return acc;
}

namespace {

template <typename T>
void butterfly(std::span<T> data) {
    std::size_t n = data.size();
    for (std::size_t h = 1; h < n; h <<= 1) {
        std::size_t stride = h << 1;
        parallel_for(0, n / stride, 1 << 14, [&](std::size_t b0, std::size_t b1) {
            for (std::size_t b = b0; b < b1; ++b) {
                std::size_t i = b * stride;
                for (std::size_t j = i; j < i + h; ++j) {
                    T x = data[j];
                    T y = data[j + h];
                    data[j] = x + y;
                    data[j + h] = x - y;
                }
            }
        });
    }
}

std::uint32_t log2_size(std::size_t len, const char* who) {
    if (len == 0 || (len & (len - 1)) != 0)
        throw ParamError(std::string(who) + ": table length must be a power of two");
    return static_cast<std::uint32_t>(std::countr_zero(len));
}

}  // namespace

void fwht_inplace(std::span<std::int64_t> data) { butterfly(data); }
void fwht_inplace(std::span<double> data) { butterfly(data); }

WalshSpectrum fwht(std::vector<std::int64_t> table) {
    std::uint32_t n = log2_size(table.size(), "fwht");
    std::int64_t maxabs = 0;
    for (std::int64_t v : table) maxabs = std::max<std::int64_t>(maxabs, std::llabs(v));
    // Stage-k partial sums are bounded by max|f| * 2^k; keep them inside i64.
    if (n > 62 || (maxabs != 0 && maxabs > (std::int64_t(1) << (62 - n))))
        throw CapacityError("fwht: entries too large for a length-2^" + std::to_string(n) +
                            " exact transform");
    butterfly(std::span<std::int64_t>(table));
    return WalshSpectrum{n, std::move(table)};
}

WalshSpectrum spectrum_of_mu(const MoebiusTable& t) {
    std::vector<std::int64_t> wide(t.values.begin(), t.values.end());
    return fwht(std::move(wide));
}

std::int64_t naive_coefficient(std::span<const std::int64_t> table, std::uint64_t mask) {
    std::uint32_t n = log2_size(table.size(), "naive_coefficient");
    (void)n;
    std::int64_t acc = 0;
    for (std::uint64_t x = 0; x < table.size(); ++x)
        acc += (std::popcount(mask & x) & 1) ? -table[x] : table[x];
    return acc;
}

MassRatio LevelProfile::mass(std::uint32_t k) const {
    u128 N = u128(1) << n;
    return MassRatio{level_num[k], N * N};
}

MassRatio LevelProfile::total() const {
    u128 acc = 0;
    for (u128 v : level_num) acc += v;
    u128 N = u128(1) << n;
    return MassRatio{acc, N * N};
}

LevelProfile level_profile(const WalshSpectrum& s) {
    LevelProfile p;
    p.n = s.n;
    p.level_num.assign(s.n + 1, 0);
    for (std::uint64_t a = 0; a < s.size(); ++a) {
        std::int64_t c = s.coeffs[a];
        p.level_num[std::popcount(a)] += static_cast<u128>(static_cast<i128>(c) * c);
    }
    return p;
}

MassRatio low_level_mass(const WalshSpectrum& s, std::uint32_t n0) {
    if (n0 > s.n) throw ParamError("low_level_mass: n0 exceeds n");
    LevelProfile p = level_profile(s);
    u128 acc = 0;
    for (std::uint32_t k = 0; k <= n0; ++k) acc += p.level_num[k];
    u128 N = u128(1) << s.n;
    return MassRatio{acc, N * N};
}

std::int64_t max_abs_coeff(const WalshSpectrum& s) {
    std::int64_t m = 0;
    for (std::int64_t c : s.coeffs) m = std::max<std::int64_t>(m, std::llabs(c));
    return m;
}

std::vector<double> low_degree_truncate(const WalshSpectrum& s, std::uint32_t cutoff) {
    if (cutoff > s.n) throw ParamError("low_degree_truncate: cutoff exceeds n");
    std::vector<double> work(s.size());
    for (std::uint64_t a = 0; a < s.size(); ++a)
        work[a] = std::popcount(a) <= static_cast<int>(cutoff) ? static_cast<double>(s.coeffs[a]) : 0.0;
    fwht_inplace(std::span<double>(work));
    double inv = 1.0 / static_cast<double>(s.size());
    for (double& v : work) v *= inv;
    return work;
}

IntervalCapResult interval_cap(const WalshSpectrum& s, std::uint32_t j_lo, std::uint32_t j_hi,
                               std::uint32_t K0) {
    if (j_lo >= j_hi || j_hi > s.n) throw ParamError("interval_cap: bad interval");
    if (K0 < 1) throw ParamError("interval_cap: K0 must be >= 1");
    std::uint64_t jmask = ((std::uint64_t(1) << (j_hi - j_lo)) - 1) << j_lo;
    IntervalCapResult r;
    r.table.resize(s.size());
    u128 discarded = 0;
    for (std::uint64_t a = 0; a < s.size(); ++a) {
        if (std::popcount(a & jmask) < static_cast<int>(K0)) {
            r.table[a] = static_cast<double>(s.coeffs[a]);
            ++r.kept_masks;
        } else {
            r.table[a] = 0.0;
            ++r.capped_masks;
            std::int64_t c = s.coeffs[a];
            discarded += static_cast<u128>(static_cast<i128>(c) * c);
        }
    }
    fwht_inplace(std::span<double>(r.table));
    double inv = 1.0 / static_cast<double>(s.size());
    for (double& v : r.table) v *= inv;
    u128 N = u128(1) << s.n;
    r.discarded_mass = MassRatio{discarded, N * N};
    return r;
}

GoodIntervalReport select_good_interval(const WalshSpectrum& s, std::uint32_t m, std::uint32_t K0,
                                        double K, std::uint32_t n0) {
    if (m == 0 || m > s.n) throw ParamError("select_good_interval: bad interval length");
    std::uint32_t n_intervals = s.n / m;
    // Admissible interval indices around n/(4m)..n/(2m). The open range
    // contains no integer at small n, so both endpoints are floor(.)+1.
    std::uint32_t alpha_lo = s.n / (4 * m) + 1;
    std::uint32_t alpha_hi = std::min(s.n / (2 * m) + 1, n_intervals == 0 ? 0 : n_intervals - 1);
    if (n_intervals == 0 || alpha_lo > alpha_hi)
        throw ParamError("select_good_interval: no admissible interval (m too large)");

    GoodIntervalReport rep;
    double N = static_cast<double>(s.size());
    rep.bound = std::exp(-2.0 * K) * N;
    rep.theory_K0 = (1.0 + static_cast<double>(n0) * m / s.n) * std::exp(3.0 * K);
    for (std::uint32_t alpha = alpha_lo; alpha <= alpha_hi; ++alpha) {
        IntervalCandidate c;
        c.alpha = alpha;
        c.j_lo = alpha * m;
        c.j_hi = std::min(c.j_lo + m, s.n);
        std::uint64_t jmask = ((std::uint64_t(1) << (c.j_hi - c.j_lo)) - 1) << c.j_lo;
        u128 capped = 0;
        for (std::uint64_t a = 0; a < s.size(); ++a) {
            if (std::popcount(a & jmask) >= static_cast<int>(K0)) {
                std::int64_t v = s.coeffs[a];
                capped += static_cast<u128>(static_cast<i128>(v) * v);
            }
        }
        c.capped_mass = static_cast<double>(capped) / N;
        rep.candidates.push_back(c);
    }
    rep.chosen = rep.candidates.front();
    for (const auto& c : rep.candidates)
        if (c.capped_mass < rep.chosen.capped_mass) rep.chosen = c;
    rep.bound_met = rep.chosen.capped_mass <= rep.bound;
    return rep;
}

}  // namespace mw

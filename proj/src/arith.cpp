#include "mw/arith.hpp"

#include <cmath>

#include "mw/errors.hpp"
#include "mw/threads.hpp"

namespace mw {

std::uint64_t MoebiusTable::squarefree_count() const {
    std::uint64_t c = 0;
    for (std::int8_t v : values) c += (v != 0);
    return c;
}

long long MoebiusTable::mertens() const {
    long long s = 0;
    for (std::int8_t v : values) s += v;
    return s;
}

namespace {

// Linear sieve: every composite is crossed off exactly once via its smallest
// prime factor, so mu comes out in O(N).
void sieve_block(std::uint64_t limit, std::vector<std::int8_t>& mu,
                 std::vector<std::uint32_t>* primes_out) {
    mu.assign(limit, 0);
    if (limit > 1) mu[1] = 1;
    std::vector<std::uint32_t> primes;
    std::vector<bool> composite(limit, false);
    for (std::uint64_t i = 2; i < limit; ++i) {
        if (!composite[i]) {
            primes.push_back(static_cast<std::uint32_t>(i));
            mu[i] = -1;
        }
        for (std::uint32_t p : primes) {
            std::uint64_t ip = i * p;
            if (ip >= limit) break;
            composite[ip] = true;
            if (i % p == 0) {
                mu[ip] = 0;
                break;
            }
            mu[ip] = static_cast<std::int8_t>(-mu[i]);
        }
    }
    if (primes_out) *primes_out = std::move(primes);
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint32_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

}  // namespace

namespace detail {

void sieve_segment(std::uint64_t lo, std::uint64_t hi,
                   const std::vector<std::uint32_t>& primes, std::int8_t* out) {
    std::uint64_t len = hi - lo;
    std::vector<std::uint64_t> rest(len);
    for (std::uint64_t i = 0; i < len; ++i) {
        rest[i] = lo + i;
        out[i] = 1;
    }
    for (std::uint32_t p : primes) {
        std::uint64_t start = std::max<std::uint64_t>(((lo + p - 1) / p) * p, p);
        for (std::uint64_t m = start; m < hi; m += p) {
            std::uint64_t i = m - lo;
            rest[i] /= p;
            if (rest[i] % p == 0) {
                out[i] = 0;
                do rest[i] /= p;
                while (rest[i] % p == 0);
            } else {
                out[i] = static_cast<std::int8_t>(-out[i]);
            }
        }
    }
    // Any cofactor left is a single prime above the sieving bound.
    for (std::uint64_t i = 0; i < len; ++i) {
        if (out[i] != 0 && rest[i] > 1) out[i] = static_cast<std::int8_t>(-out[i]);
    }
    if (lo == 0) {
        out[0] = 0;
        if (len > 1) out[1] = 1;
    }
}

MoebiusTable sieve_moebius_segmented(std::uint32_t n, std::uint64_t segment_size) {
    std::uint64_t N = std::uint64_t(1) << n;
    std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(N))) + 2;
    auto primes = primes_up_to(root);
    MoebiusTable t;
    t.n = n;
    t.values.resize(N);
    std::uint64_t nseg = (N + segment_size - 1) / segment_size;
    parallel_for(0, nseg, 1, [&](std::uint64_t s0, std::uint64_t s1) {
        for (std::uint64_t s = s0; s < s1; ++s) {
            std::uint64_t lo = s * segment_size;
            std::uint64_t hi = std::min(N, lo + segment_size);
            sieve_segment(lo, hi, primes, t.values.data() + lo);
        }
    });
    return t;
}

}  // namespace detail

MoebiusTable sieve_moebius(std::uint32_t n, std::uint32_t max_exponent) {
    if (n < 1 || n > max_exponent)
        throw CapacityError("sieve_moebius: n must be in [1, " + std::to_string(max_exponent) +
                            "], got " + std::to_string(n));
    if (n > kLinearSieveExponent) return detail::sieve_moebius_segmented(n, kSieveSegmentSize);
    MoebiusTable t;
    t.n = n;
    sieve_block(std::uint64_t(1) << n, t.values, nullptr);
    return t;
}

int mu_point(std::uint64_t x) {
    if (x == 0) throw ParamError("mu_point: x must be >= 1");
    int sign = 1;
    for (std::uint64_t p = 2; p * p <= x; p += (p == 2 ? 1 : 2)) {
        if (x % p != 0) continue;
        x /= p;
        if (x % p == 0) return 0;
        sign = -sign;
    }
    if (x > 1) sign = -sign;
    return sign;
}

FactorSummary factor_toolkit(std::uint64_t x) {
    if (x == 0) throw ParamError("factor_toolkit: x must be >= 1");
    FactorSummary s;
    s.x = x;
    std::uint64_t m = x;
    for (std::uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p != 0) continue;
        std::uint32_t e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        s.prime_powers.emplace_back(p, e);
    }
    if (m > 1) s.prime_powers.emplace_back(m, 1);
    s.omega = static_cast<std::uint32_t>(s.prime_powers.size());
    s.squarefree = true;
    s.phi = 1;
    for (auto [p, e] : s.prime_powers) {
        if (e > 1) s.squarefree = false;
        std::uint64_t pe1 = 1;
        for (std::uint32_t i = 0; i + 1 < e; ++i) pe1 *= p;
        s.phi *= pe1 * (p - 1);
    }
    return s;
}

std::uint64_t euler_phi(std::uint64_t x) { return factor_toolkit(x).phi; }

}  // namespace mw

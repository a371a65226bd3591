#include "mw/noise.hpp"

#include <bit>
#include <cmath>

#include "mw/errors.hpp"

namespace mw {

namespace {

std::uint32_t log2_size(std::size_t len, const char* who) {
    if (len == 0 || (len & (len - 1)) != 0)
        throw ParamError(std::string(who) + ": table length must be a power of two");
    return static_cast<std::uint32_t>(std::countr_zero(len));
}

std::vector<double> rho_powers(double rho, std::uint32_t n) {
    std::vector<double> p(n + 1);
    p[0] = 1.0;
    for (std::uint32_t k = 1; k <= n; ++k) p[k] = p[k - 1] * rho;
    return p;
}

void check_rho(double rho) {
    if (!(rho >= 0.0 && rho <= 1.0)) throw ParamError("rho must lie in [0, 1]");
}

}  // namespace

RealSpectrum analyze(std::span<const double> f) {
    std::uint32_t n = log2_size(f.size(), "analyze");
    RealSpectrum s;
    s.n = n;
    s.coeffs.assign(f.begin(), f.end());
    fwht_inplace(std::span<double>(s.coeffs));
    return s;
}

std::vector<double> synthesize(const RealSpectrum& s) {
    std::vector<double> out = s.coeffs;
    fwht_inplace(std::span<double>(out));
    double inv = 1.0 / static_cast<double>(out.size());
    for (double& v : out) v *= inv;
    return out;
}

std::vector<double> kernel_K(double rho, std::uint32_t n) {
    check_rho(rho);
    if (n > 20) throw CapacityError("kernel_K: dense kernel limited to n <= 20");
    std::uint64_t N = std::uint64_t(1) << n;
    std::vector<double> plus(n + 1), minus(n + 1);
    plus[0] = minus[0] = 1.0;
    for (std::uint32_t k = 1; k <= n; ++k) {
        plus[k] = plus[k - 1] * (1.0 + rho);
        minus[k] = minus[k - 1] * (1.0 - rho);
    }
    std::vector<double> K(N);
    for (std::uint64_t x = 0; x < N; ++x) {
        int ones = std::popcount(x);
        K[x] = plus[n - ones] * minus[ones];
    }
    return K;
}

RealSpectrum noise_multiplier(const RealSpectrum& s, double rho) {
    check_rho(rho);
    auto pw = rho_powers(rho, s.n);
    RealSpectrum out;
    out.n = s.n;
    out.coeffs.resize(s.size());
    for (std::uint64_t a = 0; a < s.size(); ++a) out.coeffs[a] = s.coeffs[a] * pw[std::popcount(a)];
    return out;
}

RealSpectrum noise_multiplier(const WalshSpectrum& s, double rho) {
    check_rho(rho);
    auto pw = rho_powers(rho, s.n);
    RealSpectrum out;
    out.n = s.n;
    out.coeffs.resize(s.size());
    for (std::uint64_t a = 0; a < s.size(); ++a)
        out.coeffs[a] = static_cast<double>(s.coeffs[a]) * pw[std::popcount(a)];
    return out;
}

std::vector<double> noise_convolution(std::span<const double> f, double rho) {
    std::uint32_t n = log2_size(f.size(), "noise_convolution");
    if (n > 14) throw CapacityError("noise_convolution: quadratic oracle limited to n <= 14");
    auto K = kernel_K(rho, n);
    std::uint64_t N = f.size();
    std::vector<double> out(N, 0.0);
    double inv = 1.0 / static_cast<double>(N);
    for (std::uint64_t x = 0; x < N; ++x) {
        double acc = 0.0;
        // x + y - 2xy on bits is exactly XOR
        for (std::uint64_t y = 0; y < N; ++y) acc += f[x ^ y] * K[y];
        out[x] = acc * inv;
    }
    return out;
}

double noise_quadratic_form(const RealSpectrum& s, double rho) {
    check_rho(rho);
    auto pw = rho_powers(rho, s.n);
    double acc = 0.0;
    for (std::uint64_t a = 0; a < s.size(); ++a) {
        double c = s.coeffs[a];
        acc += c * c * pw[std::popcount(a)];
    }
    double N = static_cast<double>(s.size());
    return acc / (N * N);
}

namespace {

NoiseTailSplit decompose_spectrum(RealSpectrum spec, std::uint32_t n, std::uint32_t n0,
                                       double K) {
    if (n0 == 0) throw ParamError("noise_tail_split: n0 must be positive");
    if (!(K > 1.0)) throw ParamError("noise_tail_split: K must exceed 1");
    double rho = 1.0 - 1.0 / static_cast<double>(n0);
    std::uint32_t cutoff = static_cast<std::uint32_t>(std::floor(K * n0));
    if (cutoff > n) cutoff = n;

    NoiseTailSplit d;
    d.rho = rho;
    d.cutoff = cutoff;
    d.range_ok = K > 1.0 && K < static_cast<double>(n) / (2.0 * n0);
    d.quad_form = noise_quadratic_form(spec, rho);

    RealSpectrum noisy = noise_multiplier(spec, rho);
    RealSpectrum low = noisy, high = noisy;
    double tail_sq = 0.0;
    for (std::uint64_t a = 0; a < noisy.size(); ++a) {
        if (std::popcount(a) <= static_cast<int>(cutoff)) {
            high.coeffs[a] = 0.0;
        } else {
            low.coeffs[a] = 0.0;
            tail_sq += noisy.coeffs[a] * noisy.coeffs[a];
        }
    }
    double N = static_cast<double>(noisy.size());
    // ||f2||_2^2 = N * sum (fhat)^2 = (1/N) * sum coeffs^2, so
    // ||f2||_2 / sqrt(N) = sqrt(sum coeffs^2) / N.
    d.tail_l2_over_sqrt_n = std::sqrt(tail_sq) / N;
    d.bound_rho_pow = std::pow(rho, static_cast<double>(cutoff));
    d.bound_exp = std::exp(-K);
    d.bound_holds = d.tail_l2_over_sqrt_n <= d.bound_rho_pow;
    d.f1 = synthesize(low);
    d.f2 = synthesize(high);
    return d;
}

}  // namespace

NoiseTailSplit noise_tail_split(std::span<const double> f, std::uint32_t n0, double K) {
    std::uint32_t n = log2_size(f.size(), "noise_tail_split");
    double sup = 0.0;
    for (double v : f) sup = std::max(sup, std::abs(v));
    if (sup > 1.0 + 1e-12) throw ParamError("noise_tail_split: ||f||_inf must be <= 1");
    return decompose_spectrum(analyze(f), n, n0, K);
}

NoiseTailSplit noise_tail_split(const WalshSpectrum& s, std::uint32_t n0, double K) {
    RealSpectrum spec;
    spec.n = s.n;
    spec.coeffs.assign(s.coeffs.begin(), s.coeffs.end());
    return decompose_spectrum(std::move(spec), s.n, n0, K);
}

}  // namespace mw

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mw/walsh.hpp"

namespace mw {

// Real-valued Walsh spectrum, same unnormalized convention as WalshSpectrum:
// coeffs[A] = sum_x f(x) w_A(x).
struct RealSpectrum {
    std::uint32_t n = 0;
    std::vector<double> coeffs;

    std::uint64_t size() const { return std::uint64_t(1) << n; }
};

RealSpectrum analyze(std::span<const double> f);
std::vector<double> synthesize(const RealSpectrum& s);

// Product kernel (1+rho-2*rho*x_j) over the bits of x; nonnegative, mean 1.
std::vector<double> kernel_K(double rho, std::uint32_t n);

// Noise operator as the spectral multiplier rho^{|A|}.
RealSpectrum noise_multiplier(const RealSpectrum& s, double rho);
RealSpectrum noise_multiplier(const WalshSpectrum& s, double rho);

// Oracle route: convolution against kernel_K over XOR shifts, O(N^2).
std::vector<double> noise_convolution(std::span<const double> f, double rho);

// <f, T_rho f> under the normalized inner product (1/N) sum f * T_rho f.
double noise_quadratic_form(const RealSpectrum& s, double rho);

struct NoiseTailSplit {
    std::vector<double> f1;  // band-limited part, spectrum vanishes above cutoff
    std::vector<double> f2;  // tail, f1 + f2 = T_rho f pointwise
    std::uint32_t cutoff = 0;
    double rho = 0.0;
    double tail_l2_over_sqrt_n = 0.0;  // ||f2||_2 / sqrt(N), counting norm
    double bound_rho_pow = 0.0;        // (1 - 1/n0)^cutoff
    double bound_exp = 0.0;            // e^{-K}
    bool bound_holds = false;
    bool range_ok = false;  // 1 < K < n/(2*n0)
    double quad_form = 0.0;  // <f, T_rho f>, normalized
};

// Splits T_rho f (rho = 1 - 1/n0) at level floor(K*n0). The stated K-range
// 1 < K < n/(2*n0) is reported, not enforced; only K > 1 is required.
NoiseTailSplit noise_tail_split(std::span<const double> f, std::uint32_t n0, double K);
NoiseTailSplit noise_tail_split(const WalshSpectrum& s, std::uint32_t n0, double K);

}  // namespace mw

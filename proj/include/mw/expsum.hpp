#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mw/numeric.hpp"

namespace mw {

using cplx = std::complex<double>;

// e(t) = exp(2*pi*i*t)
cplx unit_phase(double t);

// S_f(alpha) = sum_{x<N} f(x) e(alpha x)
cplx generating_sum(std::span<const double> f, double alpha);

// S_f on the grid {j/M}, M a power of two >= N (zero-padded transform).
std::vector<cplx> grid_sums(std::span<const double> f, std::size_t M);

struct WalshFourierExpansion {
    std::uint64_t mask = 0;
    std::uint32_t n = 0;
    std::vector<cplx> coeffs;  // a_r, r = 0..2^n-1, w_A(x) = sum_r a_r e(r x / 2^n)
    double l1 = 0.0;           // sum |a_r|
    double resynth_error = 0.0;
    double c_calibrated = 0.0;  // smallest C with l1 <= (C*n)^{|A|}
};

WalshFourierExpansion walsh_fourier_expansion(std::uint64_t mask, std::uint32_t n);

struct SWalshL1Report {
    double value = 0.0;      // integral of |S_{w_A}| over the circle
    double bound_c1 = 0.0;   // log(N) * n^{|A|}  (unit-constant reference shape)
    double ratio = 0.0;
    std::size_t grid = 0;    // final grid after refinement
    int doublings = 0;
};

SWalshL1Report s_walsh_l1_report(std::uint64_t mask, std::uint32_t n, std::size_t grid);

struct MajorArc {
    std::uint64_t q = 1;
    std::uint64_t a = 0;
    Frac center;      // a/q
    Frac half_width;  // B/(qN)
};

struct MajorArcSystem {
    std::uint64_t B = 0;
    std::uint64_t N = 0;
    std::vector<MajorArc> arcs;  // sorted by center
    Frac total_measure;          // sum over q of phi(q) * 2B/(qN)
    bool disjoint = true;
    std::vector<std::pair<std::size_t, std::size_t>> overlaps;
};

MajorArcSystem major_arcs(std::uint64_t B, std::uint64_t N);

struct MinorArcScan {
    double sup_off_arcs = 0.0;
    double argmax_alpha = 0.0;
    double vinogradov_rhs = 0.0;  // N (log N)^4 B^{-1/4}, unit constant
    double ratio = 0.0;
    std::size_t grid = 0;
    std::size_t nodes_off_arcs = 0;
};

MinorArcScan minor_arc_scan(std::span<const double> f, std::uint64_t B, std::size_t grid);

struct ArcInnerReport {
    cplx over_arcs;           // quadrature of S_f conj(S_g) over the arc union
    cplx full_circle_grid;    // (1/N) sum_j S_f(j/N) conj(S_g(j/N))
    cplx full_circle_exact;   // sum_x f(x) conj(g(x))
    double major_share = 0.0; // |over_arcs| / |full_circle_exact|
    std::size_t quad_points = 0;
    bool union_quadrature = false;  // arcs overlapped; indicator grid used
};

// Disjoint arcs: composite trapezoid with quad_points nodes per arc.
// Overlapping arcs: the integral runs over the union, via a dense grid
// restricted to nodes inside some arc.
ArcInnerReport arc_inner_product(std::span<const double> f, std::span<const double> g,
                                 const MajorArcSystem& arcs, std::size_t quad_points);

// Band-limited stand-in for the 1-periodic square wave h (+1 on [0,1/2),
// -1 on [1/2,1)). Built as a linear ramp of width 2^{-ell-1} placed just
// before each jump, then passed through a nonnegative-kernel (Fejer-weighted)
// truncation to frequencies [-2^ell, 2^ell]. The smoothing kernel is
// nonnegative, so |h0| <= 1 exactly.
struct BandlimitedStep {
    std::uint32_t ell = 0;
    std::vector<cplx> coeffs_odd_pos;  // coefficient at b = 2i+1; even ones vanish
    double coeff_l1 = 0.0;             // sum over all b of |h0hat(b)|
    double sup_abs = 0.0;              // max |h0| on the verification grid
    double plateau_max_err = 0.0;      // max |h0 - h| at distance >= 2^-ell inside plateaus
    double c0 = 0.0;                   // plateau_max_err / 2^-ell
    double plateau_err_margin64 = 0.0; // same error at the fixed margin 2^-6 (diagnostic)
    double l2_err_vs_h = 0.0;          // ||h0 - h||_{L^2} on the verification grid
    std::string transition_note;

    cplx coeff(long long b) const;     // h0hat(b) for any |b| <= 2^ell
    double eval(double x) const;       // direct summation
    std::vector<double> eval_dyadic(std::uint32_t g) const;  // values at k/2^g
};

BandlimitedStep bandlimited_step(std::uint32_t ell);

// Square wave itself, for reference comparisons.
inline int step_h(double x) {
    double frac = x - std::floor(x);
    return frac < 0.5 ? 1 : -1;
}

struct WalshApprox {
    std::vector<double> table;          // product of dilated h0 factors on [0, 2^m)
    double l2_error_normalized = 0.0;   // 2^{-m/2} ||w_A - wtilde_A||_2
    double bound_shape = 0.0;           // |A| * 2^{-ell/2}
    double c_measured = 0.0;            // error / bound_shape (0 when |A| = 0)
    double coeff_l1_pow = 0.0;          // ||h0hat||_1 ^ |A|
};

WalshApprox walsh_approx(const BandlimitedStep& h0, std::uint64_t mask, std::uint32_t m);

}  // namespace mw

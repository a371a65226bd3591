// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Expected values are either exact identities, independently derived
// constants, or thresholds frozen from measured runs noted inline.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numbers>
#include <random>
#include <vector>

#include "mw/arith.hpp"
#include "mw/correlation.hpp"
#include "mw/dirichlet.hpp"
#include "mw/errors.hpp"
#include "mw/expsum.hpp"
#include "mw/noise.hpp"
#include "mw/walsh.hpp"

namespace {

int g_failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
    std::printf("[%s] %2d %-28s %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
    if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, ...) {
    va_list args;
    va_start(args, f);
    char buf[512];
    std::vsnprintf(buf, sizeof buf, f, args);
    va_end(args);
    return buf;
}

// 1. exact Parseval against the squarefree count
void criterion_parseval() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (std::uint32_t n : {8u, 12u, 16u, 20u}) {
        mw::MoebiusTable t = mw::sieve_moebius(n);
        mw::WalshSpectrum s = mw::spectrum_of_mu(t);
        mw::u128 lhs = s.total_square_sum();
        mw::u128 rhs = static_cast<mw::u128>(t.squarefree_count()) << n;
        if (lhs != rhs) ok = false;
        if (n == 20)
            detail = fmt("n=20: sum c^2 = %s = N*%llu, %.2fs", mw::dec_string(lhs).c_str(),
                         static_cast<unsigned long long>(t.squarefree_count()),
                         seconds_since(t0));
    }
    double el = seconds_since(t0);
    ok = ok && el <= 5.0;
    report(1, "exact-parseval", ok, detail + fmt(" total %.2fs (limit 5)", el));
}

// 2. transform equals the naive oracle
void criterion_transform_oracle() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (std::uint32_t n = 1; n <= 8; ++n) {
        mw::MoebiusTable t = mw::sieve_moebius(n);
        std::vector<std::int64_t> table(t.values.begin(), t.values.end());
        mw::WalshSpectrum s = mw::fwht(table);
        for (std::uint64_t mask = 0; mask < s.size() && ok; ++mask)
            if (s.coeffs[mask] != mw::naive_coefficient(table, mask)) ok = false;
    }
    mw::MoebiusTable t16 = mw::sieve_moebius(16);
    std::vector<std::int64_t> table16(t16.values.begin(), t16.values.end());
    mw::WalshSpectrum s16 = mw::fwht(table16);
    std::mt19937_64 rng(1601);
    std::uniform_int_distribution<std::uint64_t> dist(0, s16.size() - 1);
    for (int i = 0; i < 500 && ok; ++i) {
        std::uint64_t mask = dist(rng);
        if (s16.coeffs[mask] != mw::naive_coefficient(table16, mask)) ok = false;
    }
    double el = seconds_since(t0);
    ok = ok && el <= 30.0;
    report(2, "transform-oracle", ok,
           fmt("all masks n<=8, 500 random masks n=16, %.2fs (limit 30)", el));
}

// 3. multiplier route equals convolution route
void criterion_noise_equivalence() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(310);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    double rhos[] = {0.0, 0.25, 0.5, 0.75, 1.0};
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> f(1 << 10);
        for (auto& v : f) v = dist(rng);
        double rho = rhos[trial % 5];
        auto via_mult = mw::synthesize(mw::noise_multiplier(mw::analyze(f), rho));
        auto via_conv = mw::noise_convolution(f, rho);
        for (std::size_t i = 0; i < f.size(); ++i)
            worst = std::max(worst, std::abs(via_mult[i] - via_conv[i]));
    }
    double el = seconds_since(t0);
    bool ok = worst < 1e-12 && el <= 10.0;
    report(3, "noise-equivalence", ok,
           fmt("max entry gap %.3e (limit 1e-12), %.2fs (limit 10)", worst, el));
}

// 4. noise tail bound on the exact mu spectrum
void criterion_tail_bound() {
    auto t0 = std::chrono::steady_clock::now();
    mw::WalshSpectrum s = mw::spectrum_of_mu(mw::sieve_moebius(16));
    bool ok = true;
    std::string detail;
    for (std::uint32_t n0 : {3u, 4u, 6u}) {
        auto d = mw::noise_tail_split(s, n0, 2.0);
        if (!(d.tail_l2_over_sqrt_n <= d.bound_rho_pow)) ok = false;
        detail += fmt("n0=%u: %.4f<=%.4f ", n0, d.tail_l2_over_sqrt_n, d.bound_rho_pow);
    }
    double el = seconds_since(t0);
    ok = ok && el <= 5.0;
    report(4, "noise-tail-bound", ok, detail + fmt("%.2fs (limit 5)", el));
}

// 5. closed coefficient form and the expansion identity
void criterion_c_identity() {
    auto t0 = std::chrono::steady_clock::now();
    double worst_c = 0.0;
    for (std::uint64_t q = 1; q <= 60; ++q) {
        for (const auto& chi : mw::characters_mod(q)) {
            for (std::uint64_t k = 0; k < q; ++k) {
                double gap =
                    std::abs(mw::c_coefficient_direct(chi, k) - mw::c_coefficient_closed(chi, k));
                worst_c = std::max(worst_c, gap);
            }
        }
    }
    double worst_e = 0.0;
    for (std::uint64_t q = 1; q <= 60; ++q)
        worst_e = std::max(worst_e, mw::expansion_identity_check(q));
    double el = seconds_since(t0);
    bool ok = worst_c < 1e-9 && worst_e < 1e-9 && el <= 60.0;
    report(5, "c-coefficient-identity", ok,
           fmt("closed-vs-direct %.2e, reconstruction %.2e (limits 1e-9), %.2fs (limit 60)",
               worst_c, worst_e, el));
}

// 6. gauss sum magnitudes
void criterion_gauss() {
    auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    std::uint64_t count = 0;
    for (std::uint64_t q = 1; q <= 500; ++q) {
        for (const auto& chi : mw::characters_mod(q)) {
            if (!chi.primitive()) continue;
            ++count;
            double gap =
                std::abs(std::abs(mw::gauss_sum(chi)) - std::sqrt(static_cast<double>(q)));
            worst = std::max(worst, gap);
        }
    }
    double el = seconds_since(t0);
    bool ok = worst < 1e-9 && el <= 60.0;
    report(6, "gauss-sum-magnitude", ok,
           fmt("%llu primitive characters, worst | |tau| - sqrt q | = %.2e (limit 1e-9), "
               "%.2fs (limit 60)",
               static_cast<unsigned long long>(count), worst, el));
}

// 7. L-values at s = 1; the two reference constants are pi/4 and
// pi/(3 sqrt 3), confirmed by the series oracles in the unit suite.
void criterion_l_values() {
    auto t0 = std::chrono::steady_clock::now();
    const mw::DirichletCharacter* chi4 = nullptr;
    auto c4 = mw::characters_mod(4);
    for (const auto& c : c4)
        if (!c.principal()) chi4 = &c;
    auto c3 = mw::characters_mod(3);
    const mw::DirichletCharacter* chi3 = nullptr;
    for (const auto& c : c3)
        if (!c.principal()) chi3 = &c;

    double v4 = mw::l_value_real(*chi4, 1.0);
    double v3 = mw::l_value_real(*chi3, 1.0);
    double target4 = std::numbers::pi / 4.0;                    // 0.78539816339744831
    double target3 = std::numbers::pi / (3.0 * std::sqrt(3.0));  // 0.60459978807807262
    bool ok4 = std::abs(v4 - target4) <= 1e-8;
    bool ok3 = std::abs(v3 - target3) <= 1e-7;

    bool positive = true;
    std::uint64_t scanned = 0;
    double min_l = 1e300;
    std::uint64_t min_q = 0;
    for (std::uint64_t q = 3; q <= 1000; ++q) {
        for (const auto& chi : mw::characters_mod(q)) {
            if (!chi.real() || chi.principal() || !chi.primitive()) continue;
            double v = mw::l_value_real(chi, 1.0);
            ++scanned;
            if (v <= 0.0) positive = false;
            if (v < min_l) {
                min_l = v;
                min_q = q;
            }
        }
    }
    double el = seconds_since(t0);
    bool ok = ok4 && ok3 && positive && el <= 120.0;
    report(7, "l-values", ok,
           fmt("L(1,chi_-4)=%.10f (pi/4 +- 1e-8), L(1,chi_-3)=%.10f (pi/(3sqrt3) +- 1e-7), "
               "%llu real primitive q<=1000 all positive, min %.6f at q=%llu, %.2fs (limit 120)",
               v4, v3, static_cast<unsigned long long>(scanned), min_l,
               static_cast<unsigned long long>(min_q), el));
}

// 8. no real primitive character lives at 16, 32, 64, 128
void criterion_two_power() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (std::uint64_t m : {16ull, 32ull, 64ull, 128ull}) {
        for (const auto& chi : mw::characters_mod(m))
            if (chi.real() && chi.primitive() && !chi.principal()) ok = false;
    }
    double el = seconds_since(t0);
    ok = ok && el <= 1.0;
    report(8, "two-power-moduli", ok, fmt("moduli 16..128 carry none, %.3fs (limit 1)", el));
}

// 9. low-level mass fraction trend; threshold 0.25 at n = 24 (measured
// fraction is ~0.16, tracking the binomial level-count share).
void criterion_trend() {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    double frac24 = 1.0;
    for (std::uint32_t n : {12u, 16u, 20u, 24u}) {
        std::uint32_t n0 = static_cast<std::uint32_t>(
            std::ceil(std::pow(static_cast<double>(n), 2.0 / 3.0)));
        mw::WalshSpectrum s = mw::spectrum_of_mu(mw::sieve_moebius(n));
        double low = mw::low_level_mass(s, n0).value();
        double total = mw::level_profile(s).total().value();
        double frac = low / total;
        if (n == 24) frac24 = frac;
        detail += fmt("n=%u,n0=%u:%.4f ", n, n0, frac);
    }
    double el = seconds_since(t0);
    bool ok = frac24 < 0.25 && el <= 60.0;
    report(9, "low-mass-trend", ok, detail + fmt("(n=24 limit 0.25), %.2fs (limit 60)", el));
}

// 10. grid Parseval for the exponential sums
void criterion_grid_parseval() {
    auto t0 = std::chrono::steady_clock::now();
    mw::MoebiusTable t = mw::sieve_moebius(16);
    std::vector<double> f(t.values.begin(), t.values.end());
    auto grid = mw::grid_sums(f, t.size());
    double lhs = 0.0;
    for (const auto& v : grid) lhs += std::norm(v);
    lhs /= static_cast<double>(t.size());
    double rhs = static_cast<double>(t.squarefree_count());
    double rel = std::abs(lhs - rhs) / rhs;
    double el = seconds_since(t0);
    bool ok = rel <= 1e-9 && el <= 10.0;
    report(10, "grid-parseval", ok,
           fmt("(1/N) sum |S|^2 = %.6f vs %.0f, rel %.2e (limit 1e-9), %.2fs (limit 10)", lhs,
               rhs, rel, el));
}

// 11. band-limited step contract. Support and boundedness hold by
// construction and are re-measured; the stability clause asks the recorded
// plateau constant c0 = 2^ell * max plateau error (error taken at distance
// >= 2^-ell inside each plateau) to stay within a factor two across
// ell = 6, 8, 10. The fixed-margin error (distance >= 2^-6) is printed as a
// diagnostic: it scales like 2^-ell while the proportional-margin error is
// a constant of the construction, so c0 grows ~4x per step.
void criterion_step_contract() {
    auto t0 = std::chrono::steady_clock::now();
    bool support_ok = true, bound_ok = true;
    double c0_min = 1e300, c0_max = 0.0;
    std::string detail;
    for (std::uint32_t ell : {6u, 8u, 10u}) {
        auto h0 = mw::bandlimited_step(ell);
        if (h0.coeffs_odd_pos.size() != (std::size_t(1) << (ell - 1))) support_ok = false;
        if (h0.coeff(0) != mw::cplx(0.0, 0.0)) support_ok = false;
        if (h0.sup_abs > 1.0 + 1e-9) bound_ok = false;
        c0_min = std::min(c0_min, h0.c0);
        c0_max = std::max(c0_max, h0.c0);
        detail += fmt("ell=%u: sup=%.9f C0=%.2f err@2^-6=%.4f | ", ell, h0.sup_abs, h0.c0,
                      h0.plateau_err_margin64);
    }
    bool stable = c0_max <= 2.0 * c0_min;
    double el = seconds_since(t0);
    bool ok = support_ok && bound_ok && stable && el <= 30.0;
    report(11, "bandlimited-step-contract", ok,
           detail + fmt("stability ratio %.2f (limit 2), %.2fs (limit 30)", c0_max / c0_min, el));
}

// 12. walsh approximant error shape with one module-wide constant.
// C frozen from measured runs: the worst ratio over the sampled masks at
// ell in {6, 8}, m = 12 is 4.47 (masks containing bit 0 dominate); 6.0
// leaves headroom without hiding regressions.
void criterion_walsh_approx() {
    auto t0 = std::chrono::steady_clock::now();
    const double kFrozenC = 6.0;
    std::mt19937_64 rng(1201);
    std::uniform_int_distribution<std::uint64_t> dist(1, (1 << 12) - 1);
    std::vector<std::uint64_t> masks;
    for (int i = 0; i < 50; ++i) masks.push_back(dist(rng));
    bool ok = true;
    double worst_ratio = 0.0;
    for (std::uint32_t ell : {6u, 8u}) {
        auto h0 = mw::bandlimited_step(ell);
        for (std::uint64_t mask : masks) {
            auto wa = mw::walsh_approx(h0, mask, 12);
            double limit = kFrozenC * wa.bound_shape;
            worst_ratio = std::max(worst_ratio, wa.l2_error_normalized / wa.bound_shape);
            if (wa.l2_error_normalized > limit) ok = false;
        }
    }
    double el = seconds_since(t0);
    ok = ok && el <= 60.0;
    report(12, "walsh-approximant", ok,
           fmt("worst error / (|A| 2^{-ell/2}) = %.2f (frozen C = %.1f), %.2fs (limit 60)",
               worst_ratio, kFrozenC, el));
}

}  // namespace

int main() {
    criterion_parseval();
    criterion_transform_oracle();
    criterion_noise_equivalence();
    criterion_tail_bound();
    criterion_c_identity();
    criterion_gauss();
    criterion_l_values();
    criterion_two_power();
    criterion_trend();
    criterion_grid_parseval();
    criterion_step_contract();
    criterion_walsh_approx();
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}

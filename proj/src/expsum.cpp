#include "mw/expsum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>

#include "mw/arith.hpp"
#include "mw/errors.hpp"
#include "mw/threads.hpp"
#include "mw/walsh.hpp"

namespace mw {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::uint32_t log2_size(std::size_t len, const char* who) {
    if (len == 0 || (len & (len - 1)) != 0)
        throw ParamError(std::string(who) + ": length must be a power of two");
    return static_cast<std::uint32_t>(std::countr_zero(len));
}

// Iterative radix-2 transform computing sum_x a[x] e(sign * jx / M).
// Twiddles come from a direct exp table, so accuracy stays near machine eps.
void fft_pow2(std::vector<cplx>& a, int sign) {
    std::size_t n = a.size();
    if (n <= 1) return;
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    std::vector<cplx> roots(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
        double ang = sign * kTwoPi * static_cast<double>(k) / static_cast<double>(n);
        roots[k] = cplx(std::cos(ang), std::sin(ang));
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        std::size_t step = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                cplx u = a[i + k];
                cplx v = a[i + k + len / 2] * roots[k * step];
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
            }
        }
    }
}

}  // namespace

cplx unit_phase(double t) {
    double ang = kTwoPi * t;
    return cplx(std::cos(ang), std::sin(ang));
}

cplx generating_sum(std::span<const double> f, double alpha) {
    // Phase ladder with periodic resync so rounding does not accumulate.
    constexpr std::size_t kResync = 256;
    cplx step = unit_phase(alpha);
    cplx acc = 0.0;
    cplx phase = 1.0;
    for (std::size_t x = 0; x < f.size(); ++x) {
        if (x % kResync == 0) phase = unit_phase(alpha * static_cast<double>(x));
        acc += f[x] * phase;
        phase *= step;
    }
    return acc;
}

std::vector<cplx> grid_sums(std::span<const double> f, std::size_t M) {
    if (M < f.size()) throw ParamError("grid_sums: grid must be at least the table length");
    log2_size(M, "grid_sums");
    std::vector<cplx> a(M, cplx(0.0, 0.0));
    for (std::size_t x = 0; x < f.size(); ++x) a[x] = f[x];
    fft_pow2(a, +1);
    return a;
}

WalshFourierExpansion walsh_fourier_expansion(std::uint64_t mask, std::uint32_t n) {
    if (n > 20) throw CapacityError("walsh_fourier_expansion: n <= 20");
    std::uint64_t N = std::uint64_t(1) << n;
    if (mask >= N) throw ParamError("walsh_fourier_expansion: mask out of range");
    WalshFourierExpansion e;
    e.mask = mask;
    e.n = n;
    std::vector<cplx> a(N);
    for (std::uint64_t x = 0; x < N; ++x)
        a[x] = static_cast<double>(walsh_eval(mask, x));
    // a_r = (1/N) sum_x w_A(x) e(-rx/N)
    fft_pow2(a, -1);
    double inv = 1.0 / static_cast<double>(N);
    for (auto& c : a) c *= inv;
    e.coeffs = std::move(a);
    for (const cplx& c : e.coeffs) e.l1 += std::abs(c);
    // resynthesis check at a deterministic sample of points
    double worst = 0.0;
    std::uint64_t stride = std::max<std::uint64_t>(1, N / 64);
    for (std::uint64_t x = 0; x < N; x += stride) {
        cplx acc = 0.0;
        for (std::uint64_t r = 0; r < N; ++r)
            acc += e.coeffs[r] * unit_phase(static_cast<double>(r) * static_cast<double>(x) /
                                            static_cast<double>(N));
        worst = std::max(worst, std::abs(acc - cplx(static_cast<double>(walsh_eval(mask, x)), 0.0)));
    }
    e.resynth_error = worst;
    int w = std::popcount(mask);
    e.c_calibrated = w == 0 ? 0.0 : std::pow(e.l1, 1.0 / w) / static_cast<double>(n);
    return e;
}

SWalshL1Report s_walsh_l1_report(std::uint64_t mask, std::uint32_t n, std::size_t grid) {
    std::uint64_t N = std::uint64_t(1) << n;
    if (grid < 8 * N) throw ParamError("s_walsh_l1_report: grid must be >= 8N");
    std::size_t G = std::bit_ceil(grid);

    std::vector<double> table(N);
    for (std::uint64_t x = 0; x < N; ++x) table[x] = static_cast<double>(walsh_eval(mask, x));

    // |S| is smooth between grid nodes; refine until the quadrature settles.
    auto quadrature = [&](std::size_t g) {
        auto vals = grid_sums(table, g);
        double acc = 0.0;
        for (const cplx& v : vals) acc += std::abs(v);
        return acc / static_cast<double>(g);
    };
    SWalshL1Report rep;
    double prev = quadrature(G);
    int doublings = 0;
    for (; doublings < 6; ++doublings) {
        double next = quadrature(G << 1);
        G <<= 1;
        double change = std::abs(next - prev) / std::max(1e-300, std::abs(next));
        prev = next;
        if (change < 0.005) break;
    }
    rep.value = prev;
    rep.grid = G;
    rep.doublings = doublings + 1;
    rep.bound_c1 = std::log(static_cast<double>(N)) *
                   std::pow(static_cast<double>(n), std::popcount(mask));
    rep.ratio = rep.value / rep.bound_c1;
    return rep;
}

MajorArcSystem major_arcs(std::uint64_t B, std::uint64_t N) {
    if (B < 2) throw ParamError("major_arcs: B must be >= 2");
    if (N == 0) throw ParamError("major_arcs: N must be positive");
    MajorArcSystem sys;
    sys.B = B;
    sys.N = N;
    Frac measure = Frac::of(0, 1);
    for (std::uint64_t q = 1; q < B; ++q) {
        Frac hw = Frac::of(static_cast<long long>(B), static_cast<long long>(q * N));
        std::uint64_t count = 0;
        for (std::uint64_t a = 0; a < q; ++a) {
            if (std::gcd(a, q) != 1) continue;
            MajorArc arc;
            arc.q = q;
            arc.a = a;
            arc.center = Frac::of(static_cast<long long>(a), static_cast<long long>(q));
            arc.half_width = hw;
            sys.arcs.push_back(arc);
            ++count;
        }
        Frac width = Frac::of(2 * static_cast<long long>(B), static_cast<long long>(q * N));
        measure = measure + Frac::of(static_cast<long long>(count), 1) * width;
    }
    sys.total_measure = measure;
    std::sort(sys.arcs.begin(), sys.arcs.end(),
              [](const MajorArc& x, const MajorArc& y) { return x.center < y.center; });
    for (std::size_t i = 0; i + 1 < sys.arcs.size(); ++i) {
        Frac right = sys.arcs[i].center + sys.arcs[i].half_width;
        Frac left = sys.arcs[i + 1].center - sys.arcs[i + 1].half_width;
        if (left < right) sys.overlaps.emplace_back(i, i + 1);
    }
    if (sys.arcs.size() > 1) {
        // wraparound: last arc vs the arc at 0 shifted by 1
        Frac right = sys.arcs.back().center + sys.arcs.back().half_width;
        Frac left = sys.arcs.front().center - sys.arcs.front().half_width + Frac::of(1, 1);
        if (left < right) sys.overlaps.emplace_back(sys.arcs.size() - 1, 0);
    }
    sys.disjoint = sys.overlaps.empty();
    return sys;
}

namespace {

// Marks grid nodes j/G lying strictly inside some arc. Exact rational
// comparisons: j/G is inside (a/q - w, a/q + w) with w = B/(qN) iff
// |j q N - G a N| < G B q w-denominator-free form.
std::vector<bool> arc_mask(const MajorArcSystem& sys, std::size_t G) {
    std::vector<bool> inside(G, false);
    for (const MajorArc& arc : sys.arcs) {
        // j/G in (c - w, c + w) with c = a/q, w = B/(qN):
        // j*q*N in (G*(a*N - B), G*(a*N + B))
        i128 lo = static_cast<i128>(G) * (static_cast<i128>(arc.a) * sys.N - static_cast<i128>(sys.B));
        i128 hi = static_cast<i128>(G) * (static_cast<i128>(arc.a) * sys.N + static_cast<i128>(sys.B));
        i128 denom = static_cast<i128>(arc.q) * sys.N;
        // iterate over j in [ceil(lo/denom), floor(hi/denom)] with wraparound
        auto mark = [&](long long j) {
            long long jm = j % static_cast<long long>(G);
            if (jm < 0) jm += static_cast<long long>(G);
            inside[static_cast<std::size_t>(jm)] = true;
        };
        long long jlo = static_cast<long long>(lo / denom) - 2;
        long long jhi = static_cast<long long>(hi / denom) + 2;
        for (long long j = jlo; j <= jhi; ++j) {
            i128 v = static_cast<i128>(j) * denom;
            if (v > lo && v < hi) mark(j);
        }
    }
    return inside;
}

}  // namespace

MinorArcScan minor_arc_scan(std::span<const double> f, std::uint64_t B, std::size_t grid) {
    std::uint64_t N = f.size();
    if (grid < 8 * N) throw ParamError("minor_arc_scan: grid must be >= 8N");
    std::size_t G = std::bit_ceil(grid);
    auto sys = major_arcs(B, N);
    auto vals = grid_sums(f, G);
    auto inside = arc_mask(sys, G);
    MinorArcScan scan;
    scan.grid = G;
    for (std::size_t j = 0; j < G; ++j) {
        if (inside[j]) continue;
        ++scan.nodes_off_arcs;
        double m = std::abs(vals[j]);
        if (m > scan.sup_off_arcs) {
            scan.sup_off_arcs = m;
            scan.argmax_alpha = static_cast<double>(j) / static_cast<double>(G);
        }
    }
    double logN = std::log(static_cast<double>(N));
    scan.vinogradov_rhs = static_cast<double>(N) * std::pow(logN, 4.0) *
                          std::pow(static_cast<double>(B), -0.25);
    scan.ratio = scan.sup_off_arcs / scan.vinogradov_rhs;
    return scan;
}

ArcInnerReport arc_inner_product(std::span<const double> f, std::span<const double> g,
                                 const MajorArcSystem& arcs, std::size_t quad_points) {
    if (f.size() != g.size()) throw ParamError("arc_inner_product: length mismatch");
    if (quad_points < 16) throw ParamError("arc_inner_product: need >= 16 quadrature points per arc");
    ArcInnerReport rep;
    rep.quad_points = quad_points;

    if (arcs.disjoint) {
        // composite trapezoid per arc
        cplx acc = 0.0;
        for (const MajorArc& arc : arcs.arcs) {
            double c = arc.center.value();
            double w = arc.half_width.value();
            double h = 2.0 * w / static_cast<double>(quad_points - 1);
            cplx arc_acc = 0.0;
            for (std::size_t k = 0; k < quad_points; ++k) {
                double alpha = c - w + h * static_cast<double>(k);
                double weight = (k == 0 || k + 1 == quad_points) ? 0.5 : 1.0;
                arc_acc += weight * generating_sum(f, alpha) * std::conj(generating_sum(g, alpha));
            }
            acc += arc_acc * h;
        }
        rep.over_arcs = acc;
    } else {
        // overlapping arcs: integrate over the union on an indicator grid
        rep.union_quadrature = true;
        std::size_t G = std::bit_ceil(std::max<std::size_t>(
            8 * f.size(), quad_points * std::max<std::size_t>(arcs.arcs.size(), 1) * 8));
        auto Sf = grid_sums(f, G);
        auto Sg = grid_sums(g, G);
        auto inside = arc_mask(arcs, G);
        cplx acc = 0.0;
        for (std::size_t j = 0; j < G; ++j)
            if (inside[j]) acc += Sf[j] * std::conj(Sg[j]);
        rep.over_arcs = acc / static_cast<double>(G);
    }

    std::size_t N = f.size();
    auto Sf = grid_sums(f, N);
    auto Sg = grid_sums(g, N);
    cplx grid_acc = 0.0;
    for (std::size_t j = 0; j < N; ++j) grid_acc += Sf[j] * std::conj(Sg[j]);
    rep.full_circle_grid = grid_acc / static_cast<double>(N);
    cplx exact = 0.0;
    for (std::size_t x = 0; x < N; ++x) exact += f[x] * g[x];
    rep.full_circle_exact = exact;
    double denom = std::abs(rep.full_circle_exact);
    rep.major_share = denom > 0 ? std::abs(rep.over_arcs) / denom : 0.0;
    return rep;
}

// ---------------------------------------------------------------------------
// band-limited step

cplx BandlimitedStep::coeff(long long b) const {
    long long cap = 1LL << ell;
    if (b < -cap || b > cap) return 0.0;
    if (b == 0 || (b & 1LL) == 0) return 0.0;
    long long abs_b = b < 0 ? -b : b;
    cplx c = coeffs_odd_pos[static_cast<std::size_t>((abs_b - 1) / 2)];
    return b > 0 ? c : std::conj(c);
}

double BandlimitedStep::eval(double x) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < coeffs_odd_pos.size(); ++i) {
        long long b = 2 * static_cast<long long>(i) + 1;
        acc += 2.0 * std::real(coeffs_odd_pos[i] * unit_phase(static_cast<double>(b) * x));
    }
    return acc;
}

std::vector<double> BandlimitedStep::eval_dyadic(std::uint32_t g) const {
    std::size_t G = std::size_t(1) << g;
    // Frequencies alias exactly on the dyadic grid: e(bk/G) = e((b mod G)k/G).
    std::vector<cplx> bins(G, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < coeffs_odd_pos.size(); ++i) {
        long long b = 2 * static_cast<long long>(i) + 1;
        cplx c = coeffs_odd_pos[i];
        bins[static_cast<std::size_t>(b % static_cast<long long>(G))] += c;
        std::size_t neg = static_cast<std::size_t>((G - (b % static_cast<long long>(G))) % G);
        bins[neg] += std::conj(c);
    }
    fft_pow2(bins, +1);
    std::vector<double> out(G);
    for (std::size_t k = 0; k < G; ++k) out[k] = std::real(bins[k]);
    return out;
}

namespace {

BandlimitedStep build_step(std::uint32_t ell) {
    std::uint64_t cap = std::uint64_t(1) << ell;
    double w = std::pow(2.0, -static_cast<double>(ell) - 1.0);  // ramp width

    BandlimitedStep h0;
    h0.ell = ell;
    h0.transition_note =
        "linear ramps of width 2^-(ell+1) placed just before each jump (both jumps treated "
        "symmetrically); Fejer-weighted truncation keeps |h0| <= 1";
    h0.coeffs_odd_pos.resize(cap / 2);
    double L = static_cast<double>(cap) + 1.0;  // Fejer order
    for (std::uint64_t i = 0; i < cap / 2; ++i) {
        double b = static_cast<double>(2 * i + 1);
        // square wave: hat(b) = 2/(i pi b) at odd b
        cplx step_hat = cplx(0.0, -2.0 / (std::numbers::pi * b));
        // averaging window over (x, x+w): factor e(b w / 2) sinc(b w)
        double z = b * w;
        double sinc = std::sin(std::numbers::pi * z) / (std::numbers::pi * z);
        cplx ramp_hat = step_hat * unit_phase(z / 2.0) * sinc;
        double fejer = 1.0 - b / L;
        h0.coeffs_odd_pos[i] = ramp_hat * fejer;
    }
    for (const cplx& c : h0.coeffs_odd_pos) h0.coeff_l1 += 2.0 * std::abs(c);

    // verification on a 2^16 grid
    const std::uint32_t g = std::max<std::uint32_t>(16, ell + 2);
    auto vals = h0.eval_dyadic(g);
    std::size_t G = vals.size();
    double margin = std::pow(2.0, -static_cast<double>(ell));
    double l2 = 0.0;
    for (std::size_t k = 0; k < G; ++k) {
        double x = static_cast<double>(k) / static_cast<double>(G);
        double hx = step_h(x);
        double err = std::abs(vals[k] - hx);
        h0.sup_abs = std::max(h0.sup_abs, std::abs(vals[k]));
        l2 += (vals[k] - hx) * (vals[k] - hx);
        // distance to the plateau boundary set {0, 1/2, 1}
        double d = std::min({x, std::abs(x - 0.5), 1.0 - x});
        if (d >= margin) h0.plateau_max_err = std::max(h0.plateau_max_err, err);
        if (d >= 1.0 / 64.0) h0.plateau_err_margin64 = std::max(h0.plateau_err_margin64, err);
    }
    h0.l2_err_vs_h = std::sqrt(l2 / static_cast<double>(G));
    h0.c0 = h0.plateau_max_err / margin;
    if (h0.sup_abs > 1.0 + 1e-9)
        throw InternalError("bandlimited_step: |h0| exceeds 1 + 1e-9 (sup = " +
                            std::to_string(h0.sup_abs) + ")");
    return h0;
}

}  // namespace

BandlimitedStep bandlimited_step(std::uint32_t ell) {
    if (ell < 2 || ell > 24) throw ParamError("bandlimited_step: ell must be in [2, 24]");
    return build_step(ell);
}

WalshApprox walsh_approx(const BandlimitedStep& h0, std::uint64_t mask, std::uint32_t m) {
    if (m > 24) throw CapacityError("walsh_approx: m <= 24");
    std::uint64_t M = std::uint64_t(1) << m;
    if (mask >= M) throw ParamError("walsh_approx: mask out of range for m");
    WalshApprox wa;
    wa.table.assign(M, 1.0);
    int weight = std::popcount(mask);
    // per-factor value tables: h0 at phase (y mod 2^{j+1}) / 2^{j+1}
    for (std::uint32_t j = 0; j < m; ++j) {
        if (!(mask & (std::uint64_t(1) << j))) continue;
        auto phase_vals = h0.eval_dyadic(j + 1);
        std::uint64_t period = std::uint64_t(1) << (j + 1);
        for (std::uint64_t y = 0; y < M; ++y) wa.table[y] *= phase_vals[y & (period - 1)];
    }
    double sq = 0.0;
    for (std::uint64_t y = 0; y < M; ++y) {
        double diff = wa.table[y] - static_cast<double>(walsh_eval(mask, y));
        sq += diff * diff;
    }
    wa.l2_error_normalized = std::sqrt(sq / static_cast<double>(M));
    wa.bound_shape = static_cast<double>(weight) * std::pow(2.0, -static_cast<double>(h0.ell) / 2.0);
    wa.c_measured = weight == 0 ? 0.0 : wa.l2_error_normalized / wa.bound_shape;
    wa.coeff_l1_pow = std::pow(h0.coeff_l1, weight);
    return wa;
}

}  // namespace mw

#include "mw/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

#include "mw/errors.hpp"
#include "mw/numeric.hpp"

namespace mw {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

cplx root_of_unity(std::uint64_t num, std::uint64_t den) {
    double ang = kTwoPi * static_cast<double>(num % den) / static_cast<double>(den);
    return cplx(std::cos(ang), std::sin(ang));
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    u128 acc = 1;
    u128 base = b % m;
    while (e) {
        if (e & 1) acc = acc * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(acc);
}

// Primitive root mod p (p an odd prime), then lifted to p^e.
std::uint64_t primitive_root_mod_pe(std::uint64_t p, std::uint32_t e) {
    std::uint64_t phi_p = p - 1;
    auto fs = factor_toolkit(phi_p);
    std::uint64_t g = 0;
    for (std::uint64_t cand = 2; cand < p; ++cand) {
        bool ok = true;
        for (auto [f, mult] : fs.prime_powers) {
            (void)mult;
            if (pow_mod(cand, phi_p / f, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            g = cand;
            break;
        }
    }
    if (g == 0) throw InternalError("no primitive root found mod " + std::to_string(p));
    if (e == 1) return g;
    // g works mod p^e unless g^{p-1} = 1 mod p^2, in which case g + p does.
    std::uint64_t p2 = p * p;
    if (pow_mod(g, p - 1, p2) == 1) g += p;
    return g;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

}  // namespace

bool CharacterGroup::is_unit(std::uint64_t a) const { return std::gcd(a % q, q) == 1; }

namespace {
CharGroupPtr build_character_group(std::uint64_t q);
}

CharGroupPtr character_group(std::uint64_t q) {
    if (q == 0) throw ParamError("character_group: modulus must be positive");
    if (q > 1000000) throw CapacityError("character_group: modulus limited to 10^6");
    // Small-modulus groups are requested over and over by the closed-form
    // coefficient path; keep a bounded cache.
    static std::mutex mtx;
    static std::map<std::uint64_t, CharGroupPtr> cache;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(q);
        if (it != cache.end()) return it->second;
    }
    CharGroupPtr g = build_character_group(q);
    {
        std::lock_guard<std::mutex> lock(mtx);
        if (cache.size() < 4096 && q <= 100000) cache.emplace(q, g);
    }
    return g;
}

namespace {

CharGroupPtr build_character_group(std::uint64_t q) {
    auto g = std::make_shared<CharacterGroup>();
    g->q = q;
    g->lambda = 1;
    if (q == 1) return g;
    auto fs = factor_toolkit(q);
    for (auto [p, e] : fs.prime_powers) {
        std::uint64_t pe = 1;
        for (std::uint32_t i = 0; i < e; ++i) pe *= p;
        if (p == 2) {
            if (e == 1) continue;  // trivial unit group
            if (e == 2) {
                CharacterGroup::Component c;
                c.modulus = 4;
                c.prime = 2;
                c.exponent = 2;
                c.generator = 3;
                c.order = 2;
                c.dlog.assign(4, 0);
                c.dlog[1] = 0;
                c.dlog[3] = 1;
                c.two_sign_part = true;
                g->components.push_back(std::move(c));
            } else {
                // (Z/2^e)^* = {+-1} x <5>
                CharacterGroup::Component sign;
                sign.modulus = pe;
                sign.prime = 2;
                sign.exponent = e;
                sign.generator = pe - 1;
                sign.order = 2;
                sign.two_sign_part = true;
                CharacterGroup::Component five;
                five.modulus = pe;
                five.prime = 2;
                five.exponent = e;
                five.generator = 5;
                five.order = pe / 4;  // 2^{e-2}
                sign.dlog.assign(pe, 0);
                five.dlog.assign(pe, 0);
                std::uint64_t v = 1;
                for (std::uint64_t k = 0; k < five.order; ++k) {
                    sign.dlog[v] = 0;
                    five.dlog[v] = static_cast<std::uint32_t>(k);
                    std::uint64_t neg = pe - v;
                    sign.dlog[neg] = 1;
                    five.dlog[neg] = static_cast<std::uint32_t>(k);
                    v = v * 5 % pe;
                }
                g->components.push_back(std::move(sign));
                g->components.push_back(std::move(five));
            }
        } else {
            CharacterGroup::Component c;
            c.modulus = pe;
            c.prime = p;
            c.exponent = e;
            c.generator = primitive_root_mod_pe(p, e);
            c.order = pe / p * (p - 1);
            c.dlog.assign(pe, 0);
            std::uint64_t v = 1;
            for (std::uint64_t k = 0; k < c.order; ++k) {
                c.dlog[v] = static_cast<std::uint32_t>(k);
                v = v * c.generator % pe;
            }
            g->components.push_back(std::move(c));
        }
    }
    for (const auto& c : g->components) g->lambda = lcm_u64(g->lambda, c.order);
    return g;
}

}  // namespace

namespace {

// conductor exponent of the component character of order o at odd prime p
// dividing p^e: smallest f with o | p^{f-1}(p-1).
std::uint32_t odd_conductor_exponent(std::uint64_t p, std::uint32_t e, std::uint64_t o) {
    if (o == 1) return 0;
    std::uint64_t phi_pf = p - 1;
    for (std::uint32_t f = 1; f <= e; ++f) {
        if (phi_pf % o == 0) return f;
        phi_pf *= p;
    }
    throw InternalError("conductor exponent not found");
}

std::uint32_t two_adic_valuation(std::uint64_t v) {
    std::uint32_t r = 0;
    while ((v & 1) == 0) {
        v >>= 1;
        ++r;
    }
    return r;
}

}  // namespace

DirichletCharacter::DirichletCharacter(CharGroupPtr group, std::vector<std::uint64_t> exponents)
    : group_(std::move(group)), t_(std::move(exponents)) {
    if (t_.size() != group_->components.size())
        throw InternalError("character exponent tuple has wrong arity");
    order_ = 1;
    for (std::size_t i = 0; i < t_.size(); ++i) {
        std::uint64_t ord_i = group_->components[i].order;
        std::uint64_t o = ord_i / std::gcd(ord_i, t_[i]);
        order_ = lcm_u64(order_, o);
    }
    // conductor: product of per-component conductors; the two halves of a
    // 2^e component combine.
    conductor_ = 1;
    std::uint64_t two_part = 1;
    for (std::size_t i = 0; i < t_.size(); ++i) {
        const auto& c = group_->components[i];
        std::uint64_t o = c.order / std::gcd(c.order, t_[i]);
        if (c.prime != 2) {
            std::uint32_t f = odd_conductor_exponent(c.prime, c.exponent, o);
            std::uint64_t pf = 1;
            for (std::uint32_t k = 0; k < f; ++k) pf *= c.prime;
            conductor_ *= pf;
        } else if (c.two_sign_part) {
            if (t_[i] % 2 == 1) two_part = std::max<std::uint64_t>(two_part, 4);
        } else {
            if (t_[i] != 0) {
                std::uint32_t v = two_adic_valuation(t_[i]);
                std::uint64_t f = c.exponent - v;  // 5 has order 2^{f-2} mod 2^f
                std::uint64_t m = std::uint64_t(1) << f;
                two_part = std::max(two_part, m);
            }
        }
    }
    conductor_ *= two_part;
}

std::optional<std::uint64_t> DirichletCharacter::exponent_mod_lambda(std::uint64_t a) const {
    std::uint64_t q = group_->q;
    a %= q;
    if (q == 1) return 0;
    if (std::gcd(a, q) != 1) return std::nullopt;
    u128 acc = 0;
    for (std::size_t i = 0; i < t_.size(); ++i) {
        const auto& c = group_->components[i];
        std::uint64_t d = c.dlog[a % c.modulus];
        acc += static_cast<u128>(t_[i]) % c.order * d % c.order * (group_->lambda / c.order);
    }
    return static_cast<std::uint64_t>(acc % group_->lambda);
}

std::uint64_t DirichletCharacter::exponent_of(std::uint64_t a) const {
    auto e = exponent_mod_lambda(a);
    if (!e) throw ParamError("exponent_of: argument shares a factor with the modulus");
    // chi(a)^order = 1, so e * order / lambda is integral
    u128 scaled = static_cast<u128>(*e) * order_;
    if (scaled % group_->lambda != 0) throw InternalError("character exponent not divisible");
    return static_cast<std::uint64_t>(scaled / group_->lambda % order_);
}

cplx DirichletCharacter::value(std::uint64_t a) const {
    auto e = exponent_mod_lambda(a);
    if (!e) return 0.0;
    return root_of_unity(*e, group_->lambda);
}

std::vector<DirichletCharacter> characters_mod(std::uint64_t q) {
    auto g = character_group(q);
    std::vector<DirichletCharacter> out;
    std::size_t arity = g->components.size();
    std::vector<std::uint64_t> t(arity, 0);
    while (true) {
        out.emplace_back(g, t);
        std::size_t i = 0;
        for (; i < arity; ++i) {
            if (++t[i] < g->components[i].order) break;
            t[i] = 0;
        }
        if (i == arity) break;
    }
    return out;
}

DirichletCharacter induced_primitive(const DirichletCharacter& chi) {
    std::uint64_t q1 = chi.conductor();
    auto g1 = character_group(q1);
    std::uint64_t q = chi.q();
    std::vector<std::uint64_t> t1(g1->components.size());
    for (std::size_t i = 0; i < g1->components.size(); ++i) {
        const auto& c = g1->components[i];
        // CRT element equal to the generator in this component, 1 elsewhere
        std::uint64_t u = 1;
        for (std::uint64_t cand = 0; cand < q1; ++cand) {
            if (cand % c.modulus != c.generator % c.modulus) continue;
            bool ones = true;
            for (const auto& other : g1->components) {
                if (&other == &c || other.modulus == c.modulus) continue;
                if (cand % other.modulus != 1) {
                    ones = false;
                    break;
                }
            }
            // the two halves of a 2^e component share a modulus; membership is
            // determined by the dlog tables, so only distinct moduli matter
            if (ones) {
                u = cand;
                break;
            }
        }
        // lift u mod q1 to a residue coprime to q
        std::uint64_t lift = u;
        while (std::gcd(lift, q) != 1) lift += q1;
        auto e = chi.exponent_mod_lambda(lift);
        if (!e) throw InternalError("induced_primitive: lift not coprime");
        // exponent over lambda(q) -> exponent over lambda(q1)
        u128 scaled = static_cast<u128>(*e) * g1->lambda;
        if (scaled % chi.group()->lambda != 0)
            throw InternalError("induced_primitive: value is not a lambda(q1)-th root");
        std::uint64_t e1 = static_cast<std::uint64_t>(scaled / chi.group()->lambda % g1->lambda);
        // exponent on this generator: e1 / (lambda / order)
        std::uint64_t step = g1->lambda / c.order;
        if (e1 % step != 0) throw InternalError("induced_primitive: exponent off-lattice");
        t1[i] = e1 / step % c.order;
    }
    DirichletCharacter chi1(g1, std::move(t1));
    if (chi1.conductor() != q1) throw InternalError("induced_primitive: result not primitive");
    return chi1;
}

cplx gauss_sum(const DirichletCharacter& chi) {
    std::uint64_t q = chi.q();
    cplx acc = 0.0;
    for (std::uint64_t a = 0; a < q; ++a) {
        cplx v = chi.value(a);
        if (v == 0.0) continue;
        acc += v * root_of_unity(a, q);
    }
    return acc;
}

cplx c_coefficient_direct(const DirichletCharacter& chi, std::uint64_t k) {
    std::uint64_t q = chi.q();
    if (q == 1) return 1.0;
    cplx acc = 0.0;
    for (std::uint64_t a = 0; a < q; ++a) {
        cplx v = chi.value(a);
        if (v == 0.0) continue;
        acc += v * root_of_unity(a % q * (k % q) % q, q);
    }
    return acc;
}

cplx c_coefficient_closed(const DirichletCharacter& chi, std::uint64_t k) {
    std::uint64_t q = chi.q();
    if (q == 1) return 1.0;
    std::uint64_t d = std::gcd(k % q, q);  // gcd(0, q) = q
    std::uint64_t q1 = chi.conductor();
    if ((q / d) % q1 != 0) return 0.0;
    std::uint64_t m = q / (q1 * d);
    int mu_m = mu_point(m);
    if (mu_m == 0) return 0.0;
    DirichletCharacter chi1 = induced_primitive(chi);
    cplx chi1_m = chi1.value(m % q1);
    if (chi1_m == 0.0) return 0.0;
    std::uint64_t kd = (k % q) / d;
    cplx chi1_kd = chi1.value(kd % q1);
    double ratio = static_cast<double>(euler_phi(q)) / static_cast<double>(euler_phi(q / d));
    return std::conj(chi1_kd) * ratio * static_cast<double>(mu_m) * chi1_m * gauss_sum(chi1);
}

double expansion_identity_check(std::uint64_t q) {
    if (q > 200) throw CapacityError("expansion_identity_check: q <= 200");
    auto chars = characters_mod(q);
    double phi_q = static_cast<double>(euler_phi(q));
    // c table: per character, per k
    std::vector<std::vector<cplx>> c(chars.size(), std::vector<cplx>(q));
    for (std::size_t i = 0; i < chars.size(); ++i)
        for (std::uint64_t k = 0; k < q; ++k) c[i][k] = c_coefficient_direct(chars[i], k);
    double worst = 0.0;
    for (std::uint64_t a = 0; a < std::max<std::uint64_t>(q, 1); ++a) {
        if (q > 1 && std::gcd(a, q) != 1) continue;
        for (std::uint64_t k = 0; k < q; ++k) {
            cplx acc = 0.0;
            for (std::size_t i = 0; i < chars.size(); ++i)
                acc += std::conj(chars[i].value(a)) * c[i][k];
            acc /= phi_q;
            cplx expect = root_of_unity(a % q * k % q, q);
            worst = std::max(worst, std::abs(acc - expect));
        }
        if (q == 1) break;
    }
    return worst;
}

cplx mu_twisted_sum(const DirichletCharacter& chi, const MoebiusTable& mu, std::uint64_t x0,
                    std::uint64_t x1) {
    if (x1 > mu.size())
        throw CapacityError("mu_twisted_sum: interval extends beyond the sieved range");
    cplx acc = 0.0;
    for (std::uint64_t k = x0; k < x1; ++k) {
        int m = mu.mu(k);
        if (m == 0) continue;
        cplx v = chi.value(k);
        if (v == 0.0) continue;
        acc += static_cast<double>(m) * v;
    }
    return acc;
}

MuTwistReport mu_twisted_report(const DirichletCharacter& chi, const MoebiusTable& mu,
                                std::uint64_t x0, std::uint64_t x1) {
    MuTwistReport rep;
    rep.sum = mu_twisted_sum(chi, mu, x0, x1);
    rep.abs = std::abs(rep.sum);
    rep.interval_length = static_cast<double>(x1 > x0 ? x1 - x0 : 0);
    double logN = std::log(static_cast<double>(mu.size()));
    for (int a = 1; a <= 3; ++a)
        rep.reference[a - 1] = rep.interval_length / std::pow(logN, a);
    return rep;
}

// ---------------------------------------------------------------------------
// Hurwitz zeta / L-values

namespace {

// B_{2j} / (2j)!
constexpr double kBernoulliOverFact[] = {
    1.0,
    8.3333333333333333333e-02,   // j=1
    -1.3888888888888888889e-03,  // j=2
    3.3068783068783068783e-05,   // j=3
    -8.2671957671957671958e-07,  // j=4
    2.0876756987868098979e-08,   // j=5
    -5.2841901386874931848e-10,  // j=6
    1.3382536530684678833e-11,   // j=7
    -3.3896802963225828668e-13,  // j=8
};
constexpr int kBernoulliTerms = 8;
constexpr int kEulerMaclaurinCut = 18;  // tail below 1e-12 for s in (0.5, 1.5]

}  // namespace

double hurwitz_zeta_reg(double s, double x) {
    if (x <= 0.0) throw ParamError("hurwitz_zeta: x must be positive");
    const int M = kEulerMaclaurinCut;
    double acc = 0.0;
    for (int k = 0; k < M; ++k) acc += std::pow(static_cast<double>(k) + x, -s);
    double P = static_cast<double>(M) + x;
    double lnP = std::log(P);
    double d = s - 1.0;
    // (P^{1-s} - 1) / (s - 1), regular through s = 1
    double head;
    if (std::abs(d) < 1e-8)
        head = -lnP + 0.5 * d * lnP * lnP - d * d * lnP * lnP * lnP / 6.0;
    else
        head = std::expm1(-d * lnP) / d;
    acc += head + 0.5 * std::pow(P, -s);
    double scp = s;                     // rising product s(s+1)...(s+2j-2)
    double pcp = std::pow(P, -s - 1.0);
    for (int j = 1; j <= kBernoulliTerms; ++j) {
        acc += kBernoulliOverFact[j] * scp * pcp;
        scp *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
        pcp /= P * P;
    }
    return acc;
}

double hurwitz_zeta(double s, double x) {
    if (s == 1.0) throw ParamError("hurwitz_zeta: pole at s = 1");
    return hurwitz_zeta_reg(s, x) + 1.0 / (s - 1.0);
}

cplx l_value(const DirichletCharacter& chi, double s) {
    if (chi.principal()) throw ParamError("l_value: principal character has a pole at s = 1");
    if (!(s > 0.5 && s <= 1.5)) throw ParamError("l_value: s must lie in (0.5, 1.5]");
    std::uint64_t q = chi.q();
    // L(s, chi) = q^{-s} sum_a chi(a) zeta(s, a/q); the pole terms cancel
    // because sum_a chi(a) = 0, so the regularized zeta can be used directly.
    cplx acc = 0.0;
    for (std::uint64_t a = 1; a <= q; ++a) {
        cplx v = chi.value(a % q);
        if (v == 0.0) continue;
        acc += v * hurwitz_zeta_reg(s, static_cast<double>(a) / static_cast<double>(q));
    }
    return acc * std::pow(static_cast<double>(q), -s);
}

double l_value_real(const DirichletCharacter& chi, double s) {
    cplx v = l_value(chi, s);
    if (std::abs(v.imag()) > 1e-8)
        throw InternalError("l_value_real: non-real value for a real character");
    return v.real();
}

ExceptionalScanReport exceptional_scan(std::uint64_t qmax, double sigma_min,
                                       std::size_t zero_scan_limit) {
    if (qmax < 3) throw ParamError("exceptional_scan: qmax must be >= 3");
    if (qmax > 10000) throw CapacityError("exceptional_scan: qmax limited to 10^4");
    if (!(sigma_min > 0.5 && sigma_min < 1.0))
        throw ParamError("exceptional_scan: sigma_min must lie in (0.5, 1)");

    ExceptionalScanReport rep;
    rep.qmax = qmax;
    rep.sigma_min = sigma_min;
    rep.note =
        "real primitive characters never live at moduli 2^k for k >= 4 (a sometimes-quoted "
        "parenthetical claims such moduli are powers of two; the exhaustive dual-group "
        "enumeration below shows none exists above 8)";

    for (std::uint64_t q = 3; q <= qmax; ++q) {
        auto chars = characters_mod(q);
        // shared Hurwitz values for this modulus at s = 1
        std::vector<double> hz;
        bool hz_ready = false;
        for (std::size_t i = 0; i < chars.size(); ++i) {
            const auto& chi = chars[i];
            if (!chi.real() || chi.principal() || !chi.primitive()) continue;
            if (!hz_ready) {
                hz.resize(q + 1);
                for (std::uint64_t a = 1; a <= q; ++a)
                    hz[a] = hurwitz_zeta_reg(1.0, static_cast<double>(a) / static_cast<double>(q));
                hz_ready = true;
            }
            double acc = 0.0;
            for (std::uint64_t a = 1; a <= q; ++a) {
                cplx v = chi.value(a % q);
                if (v == 0.0) continue;
                acc += v.real() * hz[a];
            }
            ExceptionalCandidate cand;
            cand.q = q;
            cand.character_index = i;
            cand.l_at_1 = acc / static_cast<double>(q);
            rep.candidates.push_back(cand);
        }
    }
    std::sort(rep.candidates.begin(), rep.candidates.end(),
              [](const ExceptionalCandidate& a, const ExceptionalCandidate& b) {
                  return a.l_at_1 < b.l_at_1;
              });

    // zero scan on the most exceptional-looking candidates
    std::size_t scans = std::min(zero_scan_limit, rep.candidates.size());
    for (std::size_t i = 0; i < scans; ++i) {
        auto& cand = rep.candidates[i];
        auto chars = characters_mod(cand.q);
        const auto& chi = chars[cand.character_index];
        cand.scanned_for_zeros = true;
        const double step = 1e-3;
        double prev_s = sigma_min;
        double prev_v = l_value_real(chi, prev_s);
        for (double s = sigma_min + step; s <= 1.0 + 1e-12; s += step) {
            double v = l_value_real(chi, std::min(s, 1.0));
            if ((prev_v < 0.0) != (v < 0.0) && prev_v != 0.0) {
                double lo = prev_s, hi = std::min(s, 1.0);
                double flo = prev_v;
                while (hi - lo > 1e-8) {
                    double mid = 0.5 * (lo + hi);
                    double fm = l_value_real(chi, mid);
                    if ((flo < 0.0) != (fm < 0.0)) {
                        hi = mid;
                    } else {
                        lo = mid;
                        flo = fm;
                    }
                }
                cand.real_zeros.push_back(RealZero{prev_s, 0.5 * (lo + hi)});
            }
            prev_s = std::min(s, 1.0);
            prev_v = v;
        }
    }

    rep.no_real_primitive_at_two_powers = true;
    for (std::uint64_t m = 16; m <= qmax; m <<= 1) {
        rep.power_of_two_moduli_checked.push_back(m);
        for (const auto& chi : characters_mod(m)) {
            if (chi.real() && chi.primitive() && !chi.principal())
                rep.no_real_primitive_at_two_powers = false;
        }
    }

    for (std::uint32_t n : {16u, 24u, 30u}) {
        double logN = static_cast<double>(n) * std::numbers::ln2;
        RCutoffRef r;
        r.n = n;
        r.R = std::exp(logN / std::log(logN));
        r.case_boundary_per_c0 = 1.0 / (2.0 * std::log(r.R));
        rep.r_cutoffs.push_back(r);
    }
    return rep;
}

}  // namespace mw

#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mw/arith.hpp"

namespace mw {

using cplx = std::complex<double>;

// Unit group (Z/q)^* presented as a product of cyclic components:
// a primitive root for each odd prime power, and the {-1} x {5^k}
// presentation for 2^k with k >= 3. Discrete logs are tabulated per
// component so character values are exact exponents.
struct CharacterGroup {
    std::uint64_t q = 1;
    struct Component {
        std::uint64_t modulus = 1;   // p^e
        std::uint64_t prime = 1;
        std::uint32_t exponent = 0;  // e
        std::uint64_t generator = 1;
        std::uint64_t order = 1;     // order of the generator
        std::vector<std::uint32_t> dlog;  // indexed by residue mod p^e; unit entries only
        bool two_sign_part = false;  // the {-1} factor of 2^e, e >= 3
    };
    std::vector<Component> components;
    std::uint64_t lambda = 1;  // lcm of component orders (group exponent)

    bool is_unit(std::uint64_t a) const;
};

using CharGroupPtr = std::shared_ptr<const CharacterGroup>;

CharGroupPtr character_group(std::uint64_t q);

class DirichletCharacter {
public:
    DirichletCharacter(CharGroupPtr group, std::vector<std::uint64_t> exponents);

    std::uint64_t q() const { return group_->q; }
    std::uint64_t order() const { return order_; }
    std::uint64_t conductor() const { return conductor_; }
    bool principal() const { return order_ == 1; }
    bool real() const { return order_ <= 2; }
    bool primitive() const { return conductor_ == group_->q; }
    const std::vector<std::uint64_t>& exponents() const { return t_; }
    const CharGroupPtr& group() const { return group_; }

    // chi(a) = e(exponent / lambda) on units, 0 off units.
    std::optional<std::uint64_t> exponent_mod_lambda(std::uint64_t a) const;
    // exponent over the character order: chi(a) = e(exponent_of(a) / order()).
    std::uint64_t exponent_of(std::uint64_t a) const;
    cplx value(std::uint64_t a) const;

private:
    CharGroupPtr group_;
    std::vector<std::uint64_t> t_;  // exponent per component, t_i in [0, ord_i)
    std::uint64_t order_ = 1;
    std::uint64_t conductor_ = 1;
};

// All phi(q) characters mod q, principal first in enumeration order.
std::vector<DirichletCharacter> characters_mod(std::uint64_t q);

// The primitive character mod conductor(chi) inducing chi.
DirichletCharacter induced_primitive(const DirichletCharacter& chi);

cplx gauss_sum(const DirichletCharacter& chi);

// c_chi(k) = sum over units a of chi(a) e(ak/q); direct sum and the closed
// form through the inducing primitive character and its Gauss sum.
cplx c_coefficient_direct(const DirichletCharacter& chi, std::uint64_t k);
cplx c_coefficient_closed(const DirichletCharacter& chi, std::uint64_t k);

// Max error reconstructing e(ak/q) = (1/phi(q)) sum_chi conj(chi(a)) c_chi(k)
// over all units a and all k mod q.
double expansion_identity_check(std::uint64_t q);

cplx mu_twisted_sum(const DirichletCharacter& chi, const MoebiusTable& mu, std::uint64_t x0,
                    std::uint64_t x1);

// The same sum with |I| / (log N)^A reference scales for A = 1, 2, 3
// (N = the sieved range), reported but never asserted.
struct MuTwistReport {
    cplx sum;
    double abs = 0.0;
    double interval_length = 0.0;
    double reference[3] = {0.0, 0.0, 0.0};
};

MuTwistReport mu_twisted_report(const DirichletCharacter& chi, const MoebiusTable& mu,
                                std::uint64_t x0, std::uint64_t x1);

// Hurwitz zeta via Euler-Maclaurin; the _reg variant is zeta(s,x) - 1/(s-1),
// regular through s = 1 (equals -digamma(x) there).
double hurwitz_zeta(double s, double x);
double hurwitz_zeta_reg(double s, double x);

// L(s, chi) for non-principal chi, s in (0.5, 1.5].
cplx l_value(const DirichletCharacter& chi, double s);
double l_value_real(const DirichletCharacter& chi, double s);

struct RealZero {
    double location = 0.0;
    double refined_to = 0.0;
};

struct ExceptionalCandidate {
    std::uint64_t q = 0;
    std::uint64_t character_index = 0;  // position in characters_mod(q)
    double l_at_1 = 0.0;
    std::vector<RealZero> real_zeros;   // sign changes of L(s, chi) on [sigma_min, 1]
    bool scanned_for_zeros = false;
};

// Zero-free-window reference cutoff R = exp(log N / log log N) with unit
// constant, reported for a few table sizes together with the parametric
// case boundary c0 / (2 log R) (per unit c0).
struct RCutoffRef {
    std::uint32_t n = 0;
    double R = 0.0;
    double case_boundary_per_c0 = 0.0;
};

struct ExceptionalScanReport {
    std::uint64_t qmax = 0;
    double sigma_min = 0.0;
    std::vector<ExceptionalCandidate> candidates;  // sorted by L(1, chi) ascending
    std::vector<std::uint64_t> power_of_two_moduli_checked;
    bool no_real_primitive_at_two_powers = false;  // moduli 16, 32, 64, ... carry none
    std::vector<RCutoffRef> r_cutoffs;
    std::string note;
};

// Enumerates real primitive characters with modulus <= qmax, evaluates
// L(1, chi), and scans the top candidates (smallest L(1, chi)) for real
// zeros on [sigma_min, 1]. zero_scan_limit caps how many characters get the
// expensive zero scan.
ExceptionalScanReport exceptional_scan(std::uint64_t qmax, double sigma_min,
                                       std::size_t zero_scan_limit = 20);

}  // namespace mw

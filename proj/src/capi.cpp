#include "mobiuswalsh.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "mw/arith.hpp"
#include "mw/cache.hpp"
#include "mw/errors.hpp"
#include "mw/noise.hpp"
#include "mw/reports.hpp"
#include "mw/threads.hpp"
#include "mw/walsh.hpp"

struct mw_mu_table {
    mw::MoebiusTable t;
};

struct mw_spectrum {
    mw::WalshSpectrum s;
};

namespace {

thread_local std::string g_last_error;

mw_rc fail(const mw::Error& e) {
    g_last_error = e.what();
    return static_cast<mw_rc>(static_cast<int>(e.code()));
}

mw_rc fail_internal(const std::exception& e) {
    g_last_error = e.what();
    return MW_E_INTERNAL;
}

template <typename Fn>
mw_rc guarded(Fn&& fn) {
    try {
        fn();
        return MW_OK;
    } catch (const mw::Error& e) {
        return fail(e);
    } catch (const std::exception& e) {
        return fail_internal(e);
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

}  // namespace

extern "C" {

const char* mw_last_error(void) { return g_last_error.c_str(); }

void mw_set_threads(uint32_t threads) { mw::set_thread_cap(threads); }

void mw_string_free(char* s) { std::free(s); }

mw_rc mw_mu_sieve(uint32_t n, mw_mu_table** out) {
    return guarded([&] { *out = new mw_mu_table{mw::sieve_moebius(n)}; });
}

void mw_mu_free(mw_mu_table* t) { delete t; }

uint32_t mw_mu_n(const mw_mu_table* t) { return t->t.n; }

mw_rc mw_mu_value(const mw_mu_table* t, uint64_t x, int32_t* out) {
    return guarded([&] {
        if (x >= t->t.size()) throw mw::ParamError("mw_mu_value: index out of range");
        *out = t->t.mu(x);
    });
}

mw_rc mw_mu_save(const mw_mu_table* t, const char* path) {
    return guarded([&] { mw::save_mu(t->t, path); });
}

mw_rc mw_mu_load(const char* path, mw_mu_table** out) {
    return guarded([&] { *out = new mw_mu_table{mw::load_mu(path)}; });
}

mw_rc mw_mu_point(uint64_t x, int32_t* out) {
    return guarded([&] { *out = mw::mu_point(x); });
}

mw_rc mw_factor_summary(uint64_t x, uint64_t* phi, uint32_t* omega, int32_t* squarefree) {
    return guarded([&] {
        mw::FactorSummary s = mw::factor_toolkit(x);
        if (phi) *phi = s.phi;
        if (omega) *omega = s.omega;
        if (squarefree) *squarefree = s.squarefree ? 1 : 0;
    });
}

mw_rc mw_spectrum_from_mu(const mw_mu_table* t, mw_spectrum** out) {
    return guarded([&] { *out = new mw_spectrum{mw::spectrum_of_mu(t->t)}; });
}

mw_rc mw_spectrum_from_table(const int64_t* values, uint64_t length, mw_spectrum** out) {
    return guarded([&] {
        std::vector<std::int64_t> v(values, values + length);
        *out = new mw_spectrum{mw::fwht(std::move(v))};
    });
}

void mw_spectrum_free(mw_spectrum* s) { delete s; }

uint32_t mw_spectrum_n(const mw_spectrum* s) { return s->s.n; }

mw_rc mw_spectrum_coeff(const mw_spectrum* s, uint64_t mask, int64_t* out) {
    return guarded([&] {
        if (mask >= s->s.size()) throw mw::ParamError("mw_spectrum_coeff: mask out of range");
        *out = s->s.coeffs[mask];
    });
}

mw_rc mw_spectrum_save(const mw_spectrum* s, const char* path) {
    return guarded([&] { mw::save_spectrum(s->s, path); });
}

mw_rc mw_spectrum_load(const char* path, mw_spectrum** out) {
    return guarded([&] { *out = new mw_spectrum{mw::load_spectrum(path)}; });
}

int32_t mw_walsh_eval(uint64_t mask, uint64_t x) { return mw::walsh_eval(mask, x); }

mw_rc mw_low_level_mass(const mw_spectrum* s, uint32_t n0, char** num, char** den, double* value) {
    return guarded([&] {
        mw::MassRatio m = mw::low_level_mass(s->s, n0);
        if (num) *num = dup_string(m.num_str());
        if (den) *den = dup_string(m.den_str());
        if (value) *value = m.value();
    });
}

mw_rc mw_level_profile_csv(const mw_spectrum* s, char** csv) {
    return guarded([&] {
        mw::LevelProfile p = mw::level_profile(s->s);
        std::string out = "level,mass_num,mass_den,mass_float\n";
        for (uint32_t k = 0; k <= p.n; ++k) {
            mw::MassRatio m = p.mass(k);
            out += std::to_string(k) + "," + m.num_str() + "," + m.den_str() + "," +
                   std::to_string(m.value()) + "\n";
        }
        *csv = dup_string(out);
    });
}

mw_rc mw_noise_tail(const mw_spectrum* s, uint32_t n0, double K, double* tail_over_sqrt_n,
                    double* bound_rho_pow, int32_t* bound_holds) {
    return guarded([&] {
        mw::NoiseTailSplit d = mw::noise_tail_split(s->s, n0, K);
        if (tail_over_sqrt_n) *tail_over_sqrt_n = d.tail_l2_over_sqrt_n;
        if (bound_rho_pow) *bound_rho_pow = d.bound_rho_pow;
        if (bound_holds) *bound_holds = d.bound_holds ? 1 : 0;
    });
}

mw_rc mw_report_sieve(uint32_t n, const char* cache_dir, const char* table_out, char** json_out) {
    return guarded([&] {
        *json_out = dup_string(
            mw::report_sieve(n, cache_dir ? cache_dir : "", table_out ? table_out : ""));
    });
}

mw_rc mw_report_spectrum(uint32_t n, const char* cache_dir, const char* spectrum_out,
                         char** json_out) {
    return guarded([&] {
        *json_out = dup_string(
            mw::report_spectrum(n, cache_dir ? cache_dir : "", spectrum_out ? spectrum_out : ""));
    });
}

mw_rc mw_profile_csv(uint32_t n, const char* cache_dir, char** csv_out) {
    return guarded(
        [&] { *csv_out = dup_string(mw::profile_csv(n, cache_dir ? cache_dir : "")); });
}

mw_rc mw_report_mass(uint32_t n, uint32_t n0, const char* cache_dir, char** json_out) {
    return guarded(
        [&] { *json_out = dup_string(mw::report_mass(n, n0, cache_dir ? cache_dir : "")); });
}

mw_rc mw_report_noise(uint32_t n, uint32_t n0, double K, double rho_override,
                      const char* cache_dir, char** json_out) {
    return guarded([&] {
        *json_out =
            dup_string(mw::report_noise(n, n0, K, rho_override, cache_dir ? cache_dir : ""));
    });
}

mw_rc mw_arcs_csv(uint32_t n, uint64_t B, char** csv_out) {
    return guarded([&] { *csv_out = dup_string(mw::arcs_csv(n, B)); });
}

mw_rc mw_report_minor_scan(uint32_t n, uint64_t B, uint64_t grid, const char* cache_dir,
                           char** json_out) {
    return guarded([&] {
        *json_out = dup_string(mw::report_minor_scan(n, B, grid, cache_dir ? cache_dir : ""));
    });
}

mw_rc mw_chars_csv(uint64_t q, char** csv_out) {
    return guarded([&] { *csv_out = dup_string(mw::chars_csv(q)); });
}

mw_rc mw_report_exceptional(uint64_t qmax, double sigma_min, size_t zero_scan_limit,
                            char** json_out) {
    return guarded([&] {
        *json_out = dup_string(mw::report_exceptional(qmax, sigma_min, zero_scan_limit));
    });
}

mw_rc mw_report_correlate(uint32_t n, const char* fn_name, uint32_t fn_param, uint32_t level,
                          const char* cache_dir, char** json_out) {
    return guarded([&] {
        *json_out = dup_string(
            mw::report_correlate(n, fn_name, fn_param, level, cache_dir ? cache_dir : ""));
    });
}

mw_rc mw_report_cap(uint32_t n, uint32_t m, uint32_t K0, double K, uint32_t n0,
                    const char* cache_dir, char** json_out) {
    return guarded([&] {
        *json_out = dup_string(mw::report_cap(n, m, K0, K, n0, cache_dir ? cache_dir : ""));
    });
}

}  // extern "C"

#pragma once

#include <cstdint>
#include <string>

namespace mw {

// Pipeline report builders behind the CLI subcommands. Every function is
// deterministic for a given argument list and cache directory: JSON keys
// keep insertion order, floats round-trip exactly, exact rationals travel
// as numerator/denominator strings.
//
// cache_dir may be empty (no caching). Mu tables and spectra are cached as
// mu_n<k>.mwu1 / spec_n<k>.mwsp under the cache directory.

std::string report_sieve(std::uint32_t n, const std::string& cache_dir,
                         const std::string& table_out);
std::string report_spectrum(std::uint32_t n, const std::string& cache_dir,
                            const std::string& spectrum_out);
std::string profile_csv(std::uint32_t n, const std::string& cache_dir);
std::string report_mass(std::uint32_t n, std::uint32_t n0, const std::string& cache_dir);
std::string report_noise(std::uint32_t n, std::uint32_t n0, double K, double rho_override,
                         const std::string& cache_dir);
std::string arcs_csv(std::uint32_t n, std::uint64_t B);
std::string report_minor_scan(std::uint32_t n, std::uint64_t B, std::uint64_t grid,
                              const std::string& cache_dir);
std::string chars_csv(std::uint64_t q);
std::string report_exceptional(std::uint64_t qmax, double sigma_min, std::size_t zero_scan_limit);
std::string report_correlate(std::uint32_t n, const std::string& fn_name, std::uint32_t fn_param,
                             std::uint32_t level, const std::string& cache_dir);
std::string report_cap(std::uint32_t n, std::uint32_t m, std::uint32_t K0, double K,
                       std::uint32_t n0, const std::string& cache_dir);

std::string error_json(int code, const std::string& kind, const std::string& message);

}  // namespace mw

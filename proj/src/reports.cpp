#include "mw/reports.hpp"

#include <cmath>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "mw/arith.hpp"
#include "mw/cache.hpp"
#include "mw/correlation.hpp"
#include "mw/dirichlet.hpp"
#include "mw/errors.hpp"
#include "mw/expsum.hpp"
#include "mw/noise.hpp"
#include "mw/walsh.hpp"

namespace mw {

namespace {

using json = nlohmann::ordered_json;

namespace fs = std::filesystem;

std::string mu_cache_path(const std::string& dir, std::uint32_t n) {
    return (fs::path(dir) / ("mu_n" + std::to_string(n) + ".mwu1")).string();
}

std::string spec_cache_path(const std::string& dir, std::uint32_t n) {
    return (fs::path(dir) / ("spec_n" + std::to_string(n) + ".mwsp")).string();
}

MoebiusTable ensure_mu(std::uint32_t n, const std::string& cache_dir) {
    if (cache_dir.empty()) return sieve_moebius(n);
    fs::create_directories(cache_dir);
    std::string path = mu_cache_path(cache_dir, n);
    if (fs::exists(path)) {
        MoebiusTable t = load_mu(path);
        if (t.n == n) return t;
        throw CacheError("cached table has wrong size: " + path);
    }
    MoebiusTable t = sieve_moebius(n);
    save_mu(t, path);
    return t;
}

WalshSpectrum ensure_spectrum(std::uint32_t n, const std::string& cache_dir) {
    if (cache_dir.empty()) return spectrum_of_mu(sieve_moebius(n));
    fs::create_directories(cache_dir);
    std::string path = spec_cache_path(cache_dir, n);
    if (fs::exists(path)) {
        WalshSpectrum s = load_spectrum(path);
        if (s.n == n) return s;
        throw CacheError("cached spectrum has wrong size: " + path);
    }
    WalshSpectrum s = spectrum_of_mu(ensure_mu(n, cache_dir));
    save_spectrum(s, path);
    return s;
}


json mass_json(const MassRatio& m) {
    return json{{"num", m.num_str()}, {"den", m.den_str()}, {"value", m.value()}};
}

json frac_json(const Frac& f) {
    return json{{"num", f.num}, {"den", f.den}, {"value", f.value()}};
}

}  // namespace

std::string report_sieve(std::uint32_t n, const std::string& cache_dir,
                         const std::string& table_out) {
    MoebiusTable t = ensure_mu(n, cache_dir);
    if (!table_out.empty()) save_mu(t, table_out);
    json j;
    j["command"] = "sieve";
    j["n"] = n;
    j["N"] = t.size();
    j["mertens"] = t.mertens();
    j["squarefree_count"] = t.squarefree_count();
    j["squarefree_density"] =
        static_cast<double>(t.squarefree_count()) / static_cast<double>(t.size());
    if (!cache_dir.empty()) j["cache"] = mu_cache_path(cache_dir, n);
    if (!table_out.empty()) j["table_out"] = table_out;
    return j.dump(2);
}

std::string report_spectrum(std::uint32_t n, const std::string& cache_dir,
                            const std::string& spectrum_out) {
    WalshSpectrum s = ensure_spectrum(n, cache_dir);
    if (!spectrum_out.empty()) save_spectrum(s, spectrum_out);
    LevelProfile p = level_profile(s);
    json j;
    j["command"] = "spectrum";
    j["n"] = n;
    j["total_mass"] = mass_json(p.total());
    j["max_abs_coeff"] = max_abs_coeff(s);
    j["max_abs_coeff_normalized"] =
        static_cast<double>(max_abs_coeff(s)) / static_cast<double>(s.size());
    // reference scale for the max coefficient; reported, never asserted
    j["uniform_bound_reference"] =
        std::pow(2.0, -std::pow(static_cast<double>(n), 0.1));
    if (!spectrum_out.empty()) j["spectrum_out"] = spectrum_out;
    return j.dump(2);
}

std::string profile_csv(std::uint32_t n, const std::string& cache_dir) {
    WalshSpectrum s = ensure_spectrum(n, cache_dir);
    LevelProfile p = level_profile(s);
    std::ostringstream out;
    out << "level,mass_num,mass_den,mass_float\n";
    for (std::uint32_t k = 0; k <= p.n; ++k) {
        MassRatio m = p.mass(k);
        out << k << "," << m.num_str() << "," << m.den_str() << ","
            << json(m.value()).dump() << "\n";
    }
    return out.str();
}

std::string report_mass(std::uint32_t n, std::uint32_t n0, const std::string& cache_dir) {
    WalshSpectrum s = ensure_spectrum(n, cache_dir);
    MassRatio low = low_level_mass(s, n0);
    MassRatio total = level_profile(s).total();
    json j;
    j["command"] = "mass";
    j["n"] = n;
    j["n0"] = n0;
    j["low_mass"] = mass_json(low);
    j["total_mass"] = mass_json(total);
    j["fraction"] = low.value() / total.value();
    j["max_abs_coeff_normalized"] =
        static_cast<double>(max_abs_coeff(s)) / static_cast<double>(s.size());
    return j.dump(2);
}

std::string report_noise(std::uint32_t n, std::uint32_t n0, double K, double rho_override,
                         const std::string& cache_dir) {
    // parameter screen before any sieve/transform work
    if (n0 == 0) throw ParamError("noise: n0 must be positive");
    if (!(K > 1.0)) throw ParamError("noise: K must exceed 1");
    if (rho_override > 1.0) throw ParamError("noise: rho must lie in [0, 1]");
    WalshSpectrum s = ensure_spectrum(n, cache_dir);
    NoiseTailSplit d = noise_tail_split(s, n0, K);
    json j;
    j["command"] = "noise";
    j["n"] = n;
    j["n0"] = n0;
    j["K"] = K;
    j["rho"] = d.rho;
    j["cutoff"] = d.cutoff;
    j["tail_l2_over_sqrt_N"] = d.tail_l2_over_sqrt_n;
    j["bound_rho_pow"] = d.bound_rho_pow;
    j["bound_exp_minus_K"] = d.bound_exp;
    j["bound_holds"] = d.bound_holds;
    j["k_range_ok"] = d.range_ok;
    j["quadratic_form"] = d.quad_form;
    if (rho_override >= 0.0) {
        RealSpectrum rs;
        rs.n = s.n;
        rs.coeffs.assign(s.coeffs.begin(), s.coeffs.end());
        j["quadratic_form_at_rho"] =
            json{{"rho", rho_override}, {"value", noise_quadratic_form(rs, rho_override)}};
    }
    return j.dump(2);
}

std::string arcs_csv(std::uint32_t n, std::uint64_t B) {
    MajorArcSystem sys = major_arcs(B, std::uint64_t(1) << n);
    std::ostringstream out;
    out << "q,a,center_num,center_den,half_width_num,half_width_den\n";
    for (const MajorArc& arc : sys.arcs)
        out << arc.q << "," << arc.a << "," << arc.center.num << "," << arc.center.den << ","
            << arc.half_width.num << "," << arc.half_width.den << "\n";
    return out.str();
}

std::string report_minor_scan(std::uint32_t n, std::uint64_t B, std::uint64_t grid,
                              const std::string& cache_dir) {
    MoebiusTable t = ensure_mu(n, cache_dir);
    std::vector<double> f(t.values.begin(), t.values.end());
    MajorArcSystem sys = major_arcs(B, t.size());
    MinorArcScan scan = minor_arc_scan(f, B, grid);
    json j;
    j["command"] = "expsum";
    j["n"] = n;
    j["B"] = B;
    j["grid"] = scan.grid;
    j["arc_count"] = sys.arcs.size();
    j["arcs_disjoint"] = sys.disjoint;
    j["overlap_count"] = sys.overlaps.size();
    j["total_arc_measure"] = frac_json(sys.total_measure);
    j["sup_off_arcs"] = scan.sup_off_arcs;
    j["argmax_alpha"] = scan.argmax_alpha;
    j["vinogradov_rhs_c1"] = scan.vinogradov_rhs;
    j["ratio"] = scan.ratio;
    j["nodes_off_arcs"] = scan.nodes_off_arcs;
    return j.dump(2);
}

std::string chars_csv(std::uint64_t q) {
    auto chars = characters_mod(q);
    std::ostringstream out;
    out << "index,conductor,order,real,primitive\n";
    for (std::size_t i = 0; i < chars.size(); ++i) {
        const auto& c = chars[i];
        out << i << "," << c.conductor() << "," << c.order() << "," << (c.real() ? 1 : 0) << ","
            << (c.primitive() ? 1 : 0) << "\n";
    }
    return out.str();
}

std::string report_exceptional(std::uint64_t qmax, double sigma_min,
                               std::size_t zero_scan_limit) {
    ExceptionalScanReport rep = exceptional_scan(qmax, sigma_min, zero_scan_limit);
    json j;
    j["command"] = "exceptional";
    j["qmax"] = rep.qmax;
    j["sigma_min"] = rep.sigma_min;
    j["real_primitive_count"] = rep.candidates.size();
    json ranking = json::array();
    for (const auto& c : rep.candidates) {
        json e;
        e["q"] = c.q;
        e["character_index"] = c.character_index;
        e["L1"] = c.l_at_1;
        e["zero_scanned"] = c.scanned_for_zeros;
        json zeros = json::array();
        for (const auto& z : c.real_zeros)
            zeros.push_back(json{{"near", z.location}, {"refined", z.refined_to}});
        e["real_zeros"] = zeros;
        ranking.push_back(e);
    }
    j["ranking"] = ranking;
    j["power_of_two_moduli_checked"] = rep.power_of_two_moduli_checked;
    j["no_real_primitive_at_two_powers"] = rep.no_real_primitive_at_two_powers;
    json cutoffs = json::array();
    for (const auto& r : rep.r_cutoffs)
        cutoffs.push_back(json{{"n", r.n},
                               {"R_c1_equals_1", r.R},
                               {"case_boundary_per_c0", r.case_boundary_per_c0}});
    j["zero_free_reference_cutoffs"] = cutoffs;
    j["note"] = rep.note;
    return j.dump(2);
}

std::string report_correlate(std::uint32_t n, const std::string& fn_name, std::uint32_t fn_param,
                             std::uint32_t level, const std::string& cache_dir) {
    if (level > n) throw ParamError("correlate: level exceeds n");
    // generating the Boolean function first screens the fn parameters
    // before the heavier sieve/transform work
    BooleanFunction g = monotone_generate(monotone_kind_from_name(fn_name), n, fn_param);
    WalshSpectrum mu_spec = ensure_spectrum(n, cache_dir);
    WalshSpectrum g_spec = fwht(std::vector<std::int64_t>(g.table.begin(), g.table.end()));
    CorrelationSplit split = correlation_split(mu_spec, g_spec, level);
    json j;
    j["command"] = "correlate";
    j["n"] = n;
    j["fn"] = fn_name;
    if (fn_name == "dictator" || fn_name == "tribes") j["fn_param"] = fn_param;
    j["monotone_verified"] = g.monotone;
    j["level"] = level;
    j["correlation"] = split.correlation;
    j["low_part"] = split.low_part;
    j["tail"] = split.tail;
    j["tail_bound"] = split.tail_bound;
    j["g_tail_mass"] = mass_json(split.g_tail_mass);
    j["inequality_holds"] = split.inequality_holds;
    return j.dump(2);
}

std::string report_cap(std::uint32_t n, std::uint32_t m, std::uint32_t K0, double K,
                       std::uint32_t n0, const std::string& cache_dir) {
    // admissible range depends only on n and m; screen before computing
    if (m == 0 || m > n) throw ParamError("cap: interval length out of range");
    if (K0 < 1) throw ParamError("cap: K0 must be >= 1");
    std::uint32_t n_intervals = n / m;
    std::uint32_t alpha_lo = n / (4 * m) + 1;
    std::uint32_t alpha_hi = std::min(n / (2 * m) + 1, n_intervals == 0 ? 0 : n_intervals - 1);
    if (n_intervals == 0 || alpha_lo > alpha_hi)
        throw ParamError("cap: no admissible interval (m too large)");
    WalshSpectrum s = ensure_spectrum(n, cache_dir);
    GoodIntervalReport rep = select_good_interval(s, m, K0, K, n0);
    IntervalCapResult cap = interval_cap(s, rep.chosen.j_lo, rep.chosen.j_hi, K0);
    double sup = 0.0;
    for (double v : cap.table) sup = std::max(sup, std::abs(v));
    json j;
    j["command"] = "cap";
    j["n"] = n;
    j["m"] = m;
    j["K0"] = K0;
    j["K"] = K;
    j["n0"] = n0;
    json cands = json::array();
    for (const auto& c : rep.candidates)
        cands.push_back(json{{"alpha", c.alpha},
                             {"j_lo", c.j_lo},
                             {"j_hi", c.j_hi},
                             {"capped_mass", c.capped_mass}});
    j["candidates"] = cands;
    j["chosen_alpha"] = rep.chosen.alpha;
    j["chosen_interval"] = json{{"j_lo", rep.chosen.j_lo}, {"j_hi", rep.chosen.j_hi}};
    j["capped_mass"] = rep.chosen.capped_mass;
    j["bound_exp_minus_2K_times_N"] = rep.bound;
    j["bound_met"] = rep.bound_met;
    j["theory_K0"] = rep.theory_K0;
    j["discarded_mass"] = mass_json(cap.discarded_mass);
    j["kept_masks"] = cap.kept_masks;
    j["capped_masks"] = cap.capped_masks;
    j["g_sup_norm"] = sup;
    return j.dump(2);
}

std::string error_json(int code, const std::string& kind, const std::string& message) {
    json j;
    j["error"] = json{{"code", code}, {"kind", kind}, {"message", message}};
    return j.dump(2);
}

}  // namespace mw

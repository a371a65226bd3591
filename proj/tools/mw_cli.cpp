// mw — command-line front end. Talks to the core exclusively through the
// C API in mobiuswalsh.h; all it adds is argument parsing, cache-directory
// resolution and writing payloads to files or stdout.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "mobiuswalsh.h"

namespace {

struct StringDeleter {
    void operator()(char* s) const { mw_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

int emit_error(mw_rc rc) {
    const char* kind = "internal";
    switch (rc) {
        case MW_E_PARAM: kind = "usage"; break;
        case MW_E_CAPACITY: kind = "capacity"; break;
        case MW_E_CACHE: kind = "corrupt-cache"; break;
        default: break;
    }
    std::cout << "{\n  \"error\": {\n    \"code\": " << static_cast<int>(rc)
              << ",\n    \"kind\": \"" << kind << "\",\n    \"message\": \""
              << json_escape(mw_last_error()) << "\"\n  }\n}\n";
    return static_cast<int>(rc);
}

int write_payload(const char* payload, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << payload;
        if (*payload && payload[std::string(payload).size() - 1] != '\n') std::cout << "\n";
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cout << "{\n  \"error\": {\n    \"code\": 2,\n    \"kind\": \"usage\",\n"
                  << "    \"message\": \"cannot open output file: " << path << "\"\n  }\n}\n";
        return 2;
    }
    out << payload;
    return 0;
}

std::string resolve_cache_dir(const std::string& flag_value, bool no_cache) {
    if (no_cache) return "";
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("MW_CACHE_DIR")) return env;
    return ".mwcache";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fourier-Walsh and exponential-sum experiments on the Moebius function"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string cache_dir_flag;
    bool no_cache = false;
    std::uint32_t threads = 1;
    app.add_option("--cache-dir", cache_dir_flag, "cache directory (env MW_CACHE_DIR, default .mwcache)");
    app.add_flag("--no-cache", no_cache, "disable the on-disk cache");
    app.add_option("--threads", threads, "worker thread cap")->default_val(1);

    // sieve
    auto* sieve = app.add_subcommand("sieve", "sieve Moebius values on [0, 2^n)");
    std::uint32_t n = 12;
    std::string out_path, table_out;
    sieve->add_option("--n", n, "table exponent")->required();
    sieve->add_option("--out", out_path, "report destination (default stdout)");
    sieve->add_option("--table-out", table_out, "also write the binary table here");

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "exact Walsh spectrum and level profile");
    std::uint32_t sp_n = 12;
    std::string profile_out, spectrum_out, sp_report_out;
    spectrum->add_option("--n", sp_n, "table exponent")->required();
    spectrum->add_option("--profile", profile_out, "level-profile CSV destination ('-' = stdout)");
    spectrum->add_option("--spectrum-out", spectrum_out, "also write the binary spectrum here");
    spectrum->add_option("--out", sp_report_out, "report destination (default stdout)");

    // mass
    auto* mass = app.add_subcommand("mass", "low-level spectral mass");
    std::uint32_t ma_n = 12, ma_n0 = 3;
    std::string ma_out;
    mass->add_option("--n", ma_n, "table exponent")->required();
    mass->add_option("--n0", ma_n0, "level cutoff")->required();
    mass->add_option("--out", ma_out, "report destination (default stdout)");

    // noise
    auto* noise = app.add_subcommand("noise", "noise-operator tail split");
    std::uint32_t no_n = 12, no_n0 = 3;
    double no_K = 2.0, no_rho = -1.0;
    std::string no_out;
    noise->add_option("--n", no_n, "table exponent")->required();
    noise->add_option("--n0", no_n0, "noise parameter (rho = 1 - 1/n0)")->required();
    noise->add_option("--K", no_K, "cut parameter")->default_val(2.0);
    noise->add_option("--rho", no_rho, "also report the quadratic form at this rho");
    noise->add_option("--out", no_out, "report destination (default stdout)");

    // expsum
    auto* expsum = app.add_subcommand("expsum", "arc geometry and minor-arc sup scan");
    std::uint32_t ex_n = 10;
    std::uint64_t ex_B = 4, ex_grid = 0;
    std::string arcs_out, scan_out;
    expsum->add_option("--n", ex_n, "table exponent")->required();
    expsum->add_option("--B", ex_B, "arc cutoff")->required();
    expsum->add_option("--grid", ex_grid, "scan grid size (default 8N)");
    expsum->add_option("--arcs-out", arcs_out, "arc CSV destination ('-' = stdout)");
    expsum->add_option("--scan-out", scan_out, "scan report destination ('-' = stdout)");

    // chars
    auto* chars = app.add_subcommand("chars", "character table mod q");
    std::uint64_t ch_q = 3;
    std::string ch_out;
    chars->add_option("--q", ch_q, "modulus")->required();
    chars->add_option("--out", ch_out, "CSV destination (default stdout)");

    // exceptional
    auto* exceptional = app.add_subcommand("exceptional", "real primitive character scan");
    std::uint64_t qmax = 200;
    double sigma_min = 0.8;
    std::size_t zero_scan_limit = 20;
    std::string exc_out;
    exceptional->add_option("--qmax", qmax, "largest modulus")->required();
    exceptional->add_option("--sigma-min", sigma_min, "left end of the real zero scan")
        ->default_val(0.8);
    exceptional->add_option("--zero-scan-limit", zero_scan_limit,
                            "how many lowest-L(1) characters get a zero scan")
        ->default_val(20);
    exceptional->add_option("--out", exc_out, "report destination (default stdout)");

    // correlate
    auto* correlate = app.add_subcommand("correlate", "correlation against a monotone function");
    std::uint32_t co_n = 12, co_param = 0, co_level = 0;
    std::string co_fn = "majority", co_out;
    correlate->add_option("--n", co_n, "table exponent")->required();
    correlate->add_option("--fn", co_fn, "majority | dictator | and | or | tribes")->required();
    correlate->add_option("--fn-param", co_param, "dictator index / tribe width");
    correlate->add_option("--level", co_level, "split level")->required();
    correlate->add_option("--out", co_out, "report destination (default stdout)");

    // cap
    auto* cap = app.add_subcommand("cap", "interval-cap experiment");
    std::uint32_t ca_n = 12, ca_m = 3, ca_K0 = 2, ca_n0 = 3;
    double ca_K = 2.0;
    std::string ca_out;
    cap->add_option("--n", ca_n, "table exponent")->required();
    cap->add_option("--m", ca_m, "interval length")->required();
    cap->add_option("--K0", ca_K0, "intersection cap")->required();
    cap->add_option("--K", ca_K, "cut parameter")->default_val(2.0);
    cap->add_option("--n0", ca_n0, "noise parameter")->default_val(3);
    cap->add_option("--out", ca_out, "report destination (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cout << "{\n  \"error\": {\n    \"code\": 2,\n    \"kind\": \"usage\",\n"
                  << "    \"message\": \"" << json_escape(e.what()) << "\"\n  }\n}\n";
        return 2;
    }

    mw_set_threads(threads);
    std::string cache_dir = resolve_cache_dir(cache_dir_flag, no_cache);

    char* payload = nullptr;
    mw_rc rc = MW_OK;

    if (*sieve) {
        rc = mw_report_sieve(n, cache_dir.c_str(), table_out.c_str(), &payload);
        if (rc != MW_OK) return emit_error(rc);
        OwnedString owned(payload);
        return write_payload(owned.get(), out_path);
    }
    if (*spectrum) {
        rc = mw_report_spectrum(sp_n, cache_dir.c_str(), spectrum_out.c_str(), &payload);
        if (rc != MW_OK) return emit_error(rc);
        OwnedString report(payload);
        if (!profile_out.empty()) {
            char* csv = nullptr;
            rc = mw_profile_csv(sp_n, cache_dir.c_str(), &csv);
            if (rc != MW_OK) return emit_error(rc);
            OwnedString owned_csv(csv);
            int st = write_payload(owned_csv.get(), profile_out);
            if (st != 0) return st;
            if (profile_out == "-") return 0;  // CSV already on stdout; skip the report
        }
        return write_payload(report.get(), sp_report_out);
    }
    if (*mass) {
        rc = mw_report_mass(ma_n, ma_n0, cache_dir.c_str(), &payload);
        if (rc != MW_OK) return emit_error(rc);
        OwnedString owned(payload);
        return write_payload(owned.get(), ma_out);
    }
    if (*noise) {
        rc = mw_report_noise(no_n, no_n0, no_K, no_rho, cache_dir.c_str(), &payload);
        if (rc != MW_OK) return emit_error(rc);
        OwnedString owned(payload);
        return write_payload(owned.get(), no_out);
    }
    if (*expsum) {
        std::uint64_t grid = ex_grid == 0 ? (std::uint64_t(8) << ex_n) : ex_grid;
        if (!arcs_out.empty()) {
            char* csv = nullptr;
            rc = mw_arcs_csv(ex_n, ex_B, &csv);
            if (rc != MW_OK) return emit_error(rc);
            OwnedString owned_csv(csv);
            int st = write_payload(owned_csv.get(), arcs_out);
            if (st != 0) return st;
        }
        rc = mw_report_minor_scan(ex_n, ex_B, grid, cache_dir.c_str(), &payload);
        if (rc != MW_OK) return emit_error(rc);
        OwnedString owned(payload);
        return write_payload(owned.get(), scan_out);
    }
    if (*chars) {
        rc = mw_chars_csv(ch_q, &payload);
        if (rc != MW_OK) return emit_error(rc);
        OwnedString owned(payload);
        return write_payload(owned.get(), ch_out);
    }
    if (*exceptional) {
        rc = mw_report_exceptional(qmax, sigma_min, zero_scan_limit, &payload);
        if (rc != MW_OK) return emit_error(rc);
        OwnedString owned(payload);
        return write_payload(owned.get(), exc_out);
    }
    if (*correlate) {
        rc = mw_report_correlate(co_n, co_fn.c_str(), co_param, co_level, cache_dir.c_str(),
                                 &payload);
        if (rc != MW_OK) return emit_error(rc);
        OwnedString owned(payload);
        return write_payload(owned.get(), co_out);
    }
    if (*cap) {
        rc = mw_report_cap(ca_n, ca_m, ca_K0, ca_K, ca_n0, cache_dir.c_str(), &payload);
        if (rc != MW_OK) return emit_error(rc);
        OwnedString owned(payload);
        return write_payload(owned.get(), ca_out);
    }
    return 2;
}

#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "mobiuswalsh.h"

namespace {

std::string temp_path(const char* name) {
    return std::string("capi_") + name + ".tmp";
}

std::vector<unsigned char> slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::vector<unsigned char>(std::istreambuf_iterator<char>(in),
                                      std::istreambuf_iterator<char>());
}

}  // namespace

TEST_SUITE_BEGIN("capi");

TEST_CASE("sieve handle and values") {
    mw_mu_table* t = nullptr;
    REQUIRE(mw_mu_sieve(4, &t) == MW_OK);
    CHECK(mw_mu_n(t) == 4);
    int32_t v = 0;
    REQUIRE(mw_mu_value(t, 1, &v) == MW_OK);
    CHECK(v == 1);
    REQUIRE(mw_mu_value(t, 4, &v) == MW_OK);
    CHECK(v == 0);
    CHECK(mw_mu_value(t, 16, &v) == MW_E_PARAM);
    mw_mu_free(t);
}

TEST_CASE("point oracle and factor summary") {
    int32_t v = 0;
    REQUIRE(mw_mu_point(30, &v) == MW_OK);
    CHECK(v == -1);
    CHECK(mw_mu_point(0, &v) == MW_E_PARAM);
    CHECK(std::strlen(mw_last_error()) > 0);

    uint64_t phi = 0;
    uint32_t omega = 0;
    int32_t sf = 0;
    REQUIRE(mw_factor_summary(12, &phi, &omega, &sf) == MW_OK);
    CHECK(phi == 4);
    CHECK(omega == 2);
    CHECK(sf == 0);
}

TEST_CASE("capacity error code") {
    mw_mu_table* t = nullptr;
    CHECK(mw_mu_sieve(0, &t) == MW_E_CAPACITY);
    CHECK(mw_mu_sieve(31, &t) == MW_E_CAPACITY);
}

TEST_CASE("table cache roundtrip is bitwise") {
    mw_mu_table* t = nullptr;
    REQUIRE(mw_mu_sieve(4, &t) == MW_OK);
    std::string p1 = temp_path("mu_a"), p2 = temp_path("mu_b");
    REQUIRE(mw_mu_save(t, p1.c_str()) == MW_OK);
    mw_mu_table* back = nullptr;
    REQUIRE(mw_mu_load(p1.c_str(), &back) == MW_OK);
    REQUIRE(mw_mu_save(back, p2.c_str()) == MW_OK);
    CHECK(slurp(p1) == slurp(p2));
    auto bytes = slurp(p1);
    REQUIRE(bytes.size() == 4 + 4 + 16);  // magic, n, payload
    CHECK(bytes[0] == 0x4D);
    CHECK(bytes[1] == 0x57);
    CHECK(bytes[2] == 0x55);
    CHECK(bytes[3] == 0x31);
    mw_mu_free(t);
    mw_mu_free(back);
    std::remove(p1.c_str());
    std::remove(p2.c_str());
}

TEST_CASE("corrupt caches are rejected without partial objects") {
    std::string p = temp_path("bad");
    {
        std::ofstream out(p, std::ios::binary);
        out << "NOPE" << std::string(20, '\0');
    }
    mw_mu_table* t = reinterpret_cast<mw_mu_table*>(0x1);
    mw_mu_table* sentinel = t;
    CHECK(mw_mu_load(p.c_str(), &t) == MW_E_CACHE);
    CHECK(t == sentinel);  // untouched on failure
    std::remove(p.c_str());

    // truncation
    {
        std::ofstream out(p, std::ios::binary);
        unsigned char head[8] = {0x4D, 0x57, 0x55, 0x31, 4, 0, 0, 0};
        out.write(reinterpret_cast<char*>(head), 8);
        out << "abc";
    }
    mw_mu_table* t2 = nullptr;
    CHECK(mw_mu_load(p.c_str(), &t2) == MW_E_CACHE);
    std::remove(p.c_str());
}

TEST_CASE("spectrum handles, coefficients, payload layout") {
    mw_mu_table* t = nullptr;
    REQUIRE(mw_mu_sieve(2, &t) == MW_OK);
    mw_spectrum* s = nullptr;
    REQUIRE(mw_spectrum_from_mu(t, &s) == MW_OK);
    int64_t c = 0;
    int64_t expect[4] = {-1, -1, 3, -1};
    for (uint64_t mask = 0; mask < 4; ++mask) {
        REQUIRE(mw_spectrum_coeff(s, mask, &c) == MW_OK);
        CHECK(c == expect[mask]);
    }
    CHECK(mw_spectrum_coeff(s, 4, &c) == MW_E_PARAM);

    std::string p = temp_path("spec");
    REQUIRE(mw_spectrum_save(s, p.c_str()) == MW_OK);
    auto bytes = slurp(p);
    REQUIRE(bytes.size() == 4 + 4 + 4 * 8);
    CHECK(bytes[0] == 0x4D);
    CHECK(bytes[3] == 0x50);
    // first coefficient -1 little-endian
    for (int i = 0; i < 8; ++i) CHECK(bytes[8 + i] == 0xFF);
    // third coefficient 3
    CHECK(bytes[8 + 16] == 3);

    mw_spectrum* back = nullptr;
    REQUIRE(mw_spectrum_load(p.c_str(), &back) == MW_OK);
    CHECK(mw_spectrum_n(back) == 2);
    REQUIRE(mw_spectrum_coeff(back, 2, &c) == MW_OK);
    CHECK(c == 3);
    std::remove(p.c_str());
    mw_spectrum_free(back);
    mw_spectrum_free(s);
    mw_mu_free(t);
}

TEST_CASE("walsh eval and mass through the C surface") {
    CHECK(mw_walsh_eval(0, 123) == 1);
    CHECK(mw_walsh_eval(0b10, 0b10) == -1);

    mw_mu_table* t = nullptr;
    REQUIRE(mw_mu_sieve(2, &t) == MW_OK);
    mw_spectrum* s = nullptr;
    REQUIRE(mw_spectrum_from_mu(t, &s) == MW_OK);
    char* num = nullptr;
    char* den = nullptr;
    double value = 0.0;
    REQUIRE(mw_low_level_mass(s, 1, &num, &den, &value) == MW_OK);
    CHECK(std::string(num) == "11");
    CHECK(std::string(den) == "16");
    CHECK(value == doctest::Approx(11.0 / 16.0));
    mw_string_free(num);
    mw_string_free(den);

    char* csv = nullptr;
    REQUIRE(mw_level_profile_csv(s, &csv) == MW_OK);
    CHECK(std::string(csv).find("level,mass_num,mass_den,mass_float") == 0);
    mw_string_free(csv);
    mw_spectrum_free(s);
    mw_mu_free(t);
}

TEST_CASE("noise tail through the C surface") {
    mw_mu_table* t = nullptr;
    REQUIRE(mw_mu_sieve(10, &t) == MW_OK);
    mw_spectrum* s = nullptr;
    REQUIRE(mw_spectrum_from_mu(t, &s) == MW_OK);
    double tail = 0.0, bound = 0.0;
    int32_t holds = 0;
    REQUIRE(mw_noise_tail(s, 3, 1.5, &tail, &bound, &holds) == MW_OK);
    CHECK(holds == 1);
    CHECK(tail <= bound);
    mw_spectrum_free(s);
    mw_mu_free(t);
}

TEST_CASE("report pipelines emit deterministic JSON") {
    char* a = nullptr;
    char* b = nullptr;
    REQUIRE(mw_report_mass(8, 2, "", &a) == MW_OK);
    REQUIRE(mw_report_mass(8, 2, "", &b) == MW_OK);
    CHECK(std::string(a) == std::string(b));
    CHECK(std::string(a).find("\"low_mass\"") != std::string::npos);
    mw_string_free(a);
    mw_string_free(b);

    char* csv = nullptr;
    REQUIRE(mw_chars_csv(3, &csv) == MW_OK);
    std::string body(csv);
    CHECK(body.find("index,conductor,order,real,primitive") == 0);
    int rows = 0;
    for (char ch : body) rows += (ch == '\n');
    CHECK(rows == 3);  // header + phi(3) entries
    mw_string_free(csv);
}

TEST_SUITE_END();

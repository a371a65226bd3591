#include <doctest.h>

#include <cmath>
#include <random>

#include "mw/correlation.hpp"
#include "mw/errors.hpp"

using namespace mw;

TEST_SUITE_BEGIN("correlation");

TEST_CASE("generators") {
    SUBCASE("dictator matches the Walsh character") {
        auto f = monotone_generate(MonotoneKind::Dictator, 2, 0);
        for (std::uint64_t x = 0; x < 4; ++x) CHECK(f.table[x] == walsh_eval(1, x));
        CHECK(f.monotone);
    }
    SUBCASE("majority of three concentrates on levels one and three") {
        auto f = monotone_generate(MonotoneKind::Majority, 3);
        CHECK(f.monotone);
        WalshSpectrum s = fwht(std::vector<std::int64_t>(f.table.begin(), f.table.end()));
        LevelProfile p = level_profile(s);
        CHECK(p.mass(0).num == 0);
        CHECK(p.mass(1).value() == doctest::Approx(0.75));
        CHECK(p.mass(2).num == 0);
        CHECK(p.mass(3).value() == doctest::Approx(0.25));
    }
    SUBCASE("conjunction has a single true point") {
        auto f = monotone_generate(MonotoneKind::And, 2);
        int negatives = 0;
        for (auto v : f.table) negatives += (v == -1);
        CHECK(negatives == 1);
        CHECK(f.monotone);
    }
    SUBCASE("tribes") {
        auto f = monotone_generate(MonotoneKind::Tribes, 4, 2);
        CHECK(f.monotone);
        CHECK(f.table[0b0011] == -1);
        CHECK(f.table[0b0110] == 1);
        CHECK_THROWS_AS(monotone_generate(MonotoneKind::Tribes, 4, 3), ParamError);
    }
    SUBCASE("majority needs odd arity") {
        CHECK_THROWS_AS(monotone_generate(MonotoneKind::Majority, 4), ParamError);
    }
    SUBCASE("kind parsing") {
        CHECK(monotone_kind_from_name("or") == MonotoneKind::Or);
        CHECK_THROWS_AS(monotone_kind_from_name("xor"), ParamError);
    }
}

TEST_CASE("min and max of monotone functions stay monotone") {
    auto f = monotone_generate(MonotoneKind::Majority, 5);
    auto g = monotone_generate(MonotoneKind::Dictator, 5, 2);
    std::vector<std::int8_t> lo(f.table.size()), hi(f.table.size());
    for (std::size_t x = 0; x < f.table.size(); ++x) {
        lo[x] = std::min(f.table[x], g.table[x]);
        hi[x] = std::max(f.table[x], g.table[x]);
    }
    CHECK(verify_monotone(5, lo));
    CHECK(verify_monotone(5, hi));
}

TEST_CASE("correlation functional") {
    SUBCASE("against a Walsh character it reads a coefficient") {
        MoebiusTable t = sieve_moebius(6);
        std::vector<std::int8_t> mu(t.values.begin(), t.values.end());
        WalshSpectrum s = fwht(std::vector<std::int64_t>(mu.begin(), mu.end()));
        std::uint64_t mask = 0b1001;
        std::vector<std::int8_t> w(mu.size());
        for (std::uint64_t x = 0; x < w.size(); ++x)
            w[x] = static_cast<std::int8_t>(walsh_eval(mask, x));
        Correlation c = correlate(mu, w);
        CHECK(c.num == s.coeffs[mask]);
        CHECK(c.den == mu.size());
    }
    SUBCASE("self-correlation of signs") {
        auto f = monotone_generate(MonotoneKind::Majority, 5);
        Correlation c = correlate(f.table, f.table);
        CHECK(c.value == 1.0);
        CHECK(c.plancherel_value == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("two routes agree for mu against majority at n = 15") {
        MoebiusTable t = sieve_moebius(15);
        std::vector<std::int8_t> mu(t.values.begin(), t.values.end());
        auto g = monotone_generate(MonotoneKind::Majority, 15);
        Correlation c = correlate(mu, g.table);
        CHECK(std::abs(c.value - c.plancherel_value) < 1e-12);
    }
    SUBCASE("length mismatch") {
        std::vector<std::int8_t> a(4, 1), b(8, 1);
        CHECK_THROWS_AS(correlate(a, b), ParamError);
    }
}

TEST_CASE("Boolean Parseval is exact") {
    for (auto kind : {MonotoneKind::Majority, MonotoneKind::Or}) {
        auto f = monotone_generate(kind, 5);
        WalshSpectrum s = fwht(std::vector<std::int64_t>(f.table.begin(), f.table.end()));
        u128 N = f.table.size();
        CHECK(s.total_square_sum() == N * N);
    }
}

TEST_CASE("Cauchy-Schwarz on random pairs") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::int8_t> f(64), g(64);
        for (auto& v : f) v = static_cast<std::int8_t>(dist(rng));
        for (auto& v : g) v = static_cast<std::int8_t>(dist(rng));
        Correlation c = correlate(f, g);
        double nf = 0.0, ng = 0.0;
        for (auto v : f) nf += v * v;
        for (auto v : g) ng += v * v;
        nf /= 64.0;
        ng /= 64.0;
        REQUIRE(std::abs(c.value) <= std::sqrt(nf) * std::sqrt(ng) + 1e-12);
    }
}

TEST_CASE("spectral tails") {
    SUBCASE("dictators have no mass above level one") {
        auto f = monotone_generate(MonotoneKind::Dictator, 6, 3);
        WalshSpectrum s = fwht(std::vector<std::int64_t>(f.table.begin(), f.table.end()));
        CHECK(spectral_tail(s, 1).num == 0);
    }
    SUBCASE("majority of three") {
        auto f = monotone_generate(MonotoneKind::Majority, 3);
        WalshSpectrum s = fwht(std::vector<std::int64_t>(f.table.begin(), f.table.end()));
        CHECK(spectral_tail(s, 1).value() == doctest::Approx(0.25));
    }
    SUBCASE("majority of fifteen concentrates low") {
        auto f = monotone_generate(MonotoneKind::Majority, 15);
        WalshSpectrum s = fwht(std::vector<std::int64_t>(f.table.begin(), f.table.end()));
        std::uint32_t level = static_cast<std::uint32_t>(std::ceil(4.0 * std::sqrt(15.0)));
        CHECK(spectral_tail(s, std::min(level, 15u)).value() < 0.1);
    }
}

TEST_CASE("correlation split") {
    MoebiusTable t = sieve_moebius(12);
    WalshSpectrum fs = fwht(std::vector<std::int64_t>(t.values.begin(), t.values.end()));
    auto g = monotone_generate(MonotoneKind::Tribes, 12, 3);
    WalshSpectrum gs = fwht(std::vector<std::int64_t>(g.table.begin(), g.table.end()));
    for (std::uint32_t level : {0u, 3u, 7u, 12u}) {
        auto split = correlation_split(fs, gs, level);
        REQUIRE(split.inequality_holds);
        REQUIRE(std::abs(split.tail) <= split.tail_bound + 1e-12);
        REQUIRE(split.correlation ==
                doctest::Approx(split.low_part + split.tail).epsilon(1e-12));
    }
    auto full = correlation_split(fs, gs, 12);
    CHECK(full.tail == 0.0);
}

TEST_SUITE_END();

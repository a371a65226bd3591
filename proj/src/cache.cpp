#include "mw/cache.hpp"

#include <array>
#include <cstdio>
#include <memory>

#include "mw/errors.hpp"
#include "mw/walsh.hpp"

namespace mw {

namespace {

constexpr std::array<unsigned char, 4> kMagicMu = {0x4D, 0x57, 0x55, 0x31};    // "MWU1"
constexpr std::array<unsigned char, 4> kMagicSpec = {0x4D, 0x57, 0x53, 0x50};  // "MWSP"

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using File = std::unique_ptr<std::FILE, FileCloser>;

File open_or_throw(const std::string& path, const char* mode) {
    File f(std::fopen(path.c_str(), mode));
    if (!f) throw CacheError("cannot open cache file: " + path);
    return f;
}

void write_all(std::FILE* f, const void* data, std::size_t len, const std::string& path) {
    if (std::fwrite(data, 1, len, f) != len) throw CacheError("short write: " + path);
}

void read_all(std::FILE* f, void* data, std::size_t len, const std::string& path) {
    if (std::fread(data, 1, len, f) != len) throw CacheError("truncated cache file: " + path);
}

void put_u32le(std::FILE* f, std::uint32_t v, const std::string& path) {
    unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                          static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
    write_all(f, b, 4, path);
}

std::uint32_t get_u32le(std::FILE* f, const std::string& path) {
    unsigned char b[4];
    read_all(f, b, 4, path);
    return std::uint32_t(b[0]) | (std::uint32_t(b[1]) << 8) | (std::uint32_t(b[2]) << 16) |
           (std::uint32_t(b[3]) << 24);
}

void check_magic(std::FILE* f, const std::array<unsigned char, 4>& magic, const std::string& path) {
    unsigned char b[4];
    read_all(f, b, 4, path);
    for (int i = 0; i < 4; ++i)
        if (b[i] != magic[i]) throw CacheError("cache magic mismatch: " + path);
}

void check_eof(std::FILE* f, const std::string& path) {
    unsigned char b;
    if (std::fread(&b, 1, 1, f) == 1)
        throw CacheError("trailing bytes in cache file: " + path);
}

}  // namespace

void save_mu(const MoebiusTable& t, const std::string& path) {
    File f = open_or_throw(path, "wb");
    write_all(f.get(), kMagicMu.data(), 4, path);
    put_u32le(f.get(), t.n, path);
    write_all(f.get(), t.values.data(), t.values.size(), path);
}

MoebiusTable load_mu(const std::string& path) {
    File f = open_or_throw(path, "rb");
    check_magic(f.get(), kMagicMu, path);
    std::uint32_t n = get_u32le(f.get(), path);
    if (n < 1 || n > kMaxSieveExponent) throw CacheError("cache n out of range: " + path);
    MoebiusTable t;
    t.n = n;
    t.values.resize(std::uint64_t(1) << n);
    read_all(f.get(), t.values.data(), t.values.size(), path);
    check_eof(f.get(), path);
    for (std::int8_t v : t.values)
        if (v < -1 || v > 1) throw CacheError("cache value out of range: " + path);
    return t;
}

void save_spectrum(const WalshSpectrum& s, const std::string& path) {
    File f = open_or_throw(path, "wb");
    write_all(f.get(), kMagicSpec.data(), 4, path);
    put_u32le(f.get(), s.n, path);
    for (std::int64_t c : s.coeffs) {
        unsigned char b[8];
        std::uint64_t u = static_cast<std::uint64_t>(c);
        for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(u >> (8 * i));
        write_all(f.get(), b, 8, path);
    }
}

WalshSpectrum load_spectrum(const std::string& path) {
    File f = open_or_throw(path, "rb");
    check_magic(f.get(), kMagicSpec, path);
    std::uint32_t n = get_u32le(f.get(), path);
    if (n > kMaxSieveExponent) throw CacheError("cache n out of range: " + path);
    WalshSpectrum s;
    s.n = n;
    s.coeffs.resize(std::uint64_t(1) << n);
    std::vector<unsigned char> raw(s.coeffs.size() * 8);
    read_all(f.get(), raw.data(), raw.size(), path);
    check_eof(f.get(), path);
    for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
        std::uint64_t u = 0;
        for (int b = 0; b < 8; ++b) u |= std::uint64_t(raw[i * 8 + b]) << (8 * b);
        s.coeffs[i] = static_cast<std::int64_t>(u);
    }
    return s;
}

}  // namespace mw

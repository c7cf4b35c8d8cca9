#pragma once

// On-disk cache of k-regular partition series mod m.
//
// File layout: a 32-byte header of "BKSERIES" followed by k, m and the
// precision P as little-endian 64-bit integers, then P bytes, one residue per
// coefficient (so m < 256).

#include <array>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

#include <unistd.h>

#include "qseries.hpp"
#include "regpart.hpp"

namespace regulus::cache {

inline constexpr std::array<char, 8> magic = {'B', 'K', 'S', 'E', 'R', 'I', 'E', 'S'};
inline constexpr std::size_t header_size = 32;

struct header {
    u64 k = 0;
    u64 m = 0;
    u64 precision = 0;

    friend bool operator==(const header&, const header&) = default;
};

namespace detail {

inline void put_u64(char* out, u64 v) {
    for (int i = 0; i < 8; ++i) out[i] = static_cast<char>((v >> (8 * i)) & 0xff);
}

inline u64 get_u64(const char* in) {
    u64 v = 0;
    for (int i = 0; i < 8; ++i) v |= u64{static_cast<unsigned char>(in[i])} << (8 * i);
    return v;
}

}  // namespace detail

inline std::array<char, header_size> encode_header(const header& h) {
    std::array<char, header_size> out{};
    std::copy(magic.begin(), magic.end(), out.begin());
    detail::put_u64(out.data() + 8, h.k);
    detail::put_u64(out.data() + 16, h.m);
    detail::put_u64(out.data() + 24, h.precision);
    return out;
}

inline std::optional<header> read_header(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::array<char, header_size> buf{};
    if (!in.read(buf.data(), buf.size())) return std::nullopt;
    if (!std::equal(magic.begin(), magic.end(), buf.begin())) return std::nullopt;
    return header{detail::get_u64(buf.data() + 8), detail::get_u64(buf.data() + 16), detail::get_u64(buf.data() + 24)};
}

/// Writes atomically: a temporary file in the same directory is renamed over the target.
inline void write_series(const std::filesystem::path& path, u64 k, const qseries& s) {
    const u32 m = s.ring().modulus();
    if (m >= 256) throw std::invalid_argument("cache: modulus must be below 256 for byte storage");
    if (s.offset24() != 0) throw std::invalid_argument("cache: only offset-0 series are cached");
    const auto tmp = path.parent_path() / (path.filename().string() + ".tmp" + std::to_string(::getpid()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cache: cannot open " + tmp.string());
        const auto h = encode_header({k, m, s.precision()});
        out.write(h.data(), h.size());
        std::vector<char> chunk;
        constexpr std::size_t chunk_len = std::size_t{1} << 20;
        for (std::size_t i = 0; i < s.precision(); i += chunk_len) {
            const std::size_t n = std::min(chunk_len, s.precision() - i);
            chunk.resize(n);
            for (std::size_t j = 0; j < n; ++j) chunk[j] = static_cast<char>(s[i + j]);
            out.write(chunk.data(), static_cast<std::streamsize>(n));
        }
        if (!out) throw std::runtime_error("cache: write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

/// Reads the first `precision` coefficients (all when omitted).
inline qseries read_series(const std::filesystem::path& path, std::optional<std::size_t> precision = std::nullopt) {
    const auto h = read_header(path);
    if (!h) throw std::runtime_error("cache: " + path.string() + " is not a BKSERIES file");
    const std::size_t n = precision.value_or(h->precision);
    if (n > h->precision) throw std::runtime_error("cache: " + path.string() + " holds fewer terms than requested");
    std::ifstream in(path, std::ios::binary);
    in.seekg(static_cast<std::streamoff>(header_size));
    const zp ring(static_cast<u32>(h->m));
    std::vector<u32> c(n);
    std::vector<char> chunk;
    constexpr std::size_t chunk_len = std::size_t{1} << 20;
    for (std::size_t i = 0; i < n; i += chunk_len) {
        const std::size_t len = std::min(chunk_len, n - i);
        chunk.resize(len);
        if (!in.read(chunk.data(), static_cast<std::streamsize>(len))) {
            throw std::runtime_error("cache: " + path.string() + " is truncated");
        }
        for (std::size_t j = 0; j < len; ++j) c[i + j] = static_cast<unsigned char>(chunk[j]);
    }
    return qseries(ring, std::move(c), 0);
}

/// REGULUS_CACHE, else $XDG_CACHE_HOME/regulus, else ~/.cache/regulus.
inline std::filesystem::path default_directory() {
    if (const char* env = std::getenv("REGULUS_CACHE"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "regulus";
    if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "regulus";
    return std::filesystem::temp_directory_path() / "regulus";
}

class series_cache {
public:
    explicit series_cache(std::filesystem::path dir, series_options opts = {})
        : dir_(std::move(dir)), opts_(opts) {}

    const std::filesystem::path& directory() const { return dir_; }

    std::filesystem::path file_for(u64 k, u64 m, u64 precision) const {
        return dir_ / ("bk" + std::to_string(k) + "_m" + std::to_string(m) + "_P" + std::to_string(precision) + ".bin");
    }

    /// Smallest cached file holding at least `precision` terms of b_k mod m.
    std::optional<std::filesystem::path> find(u64 k, u64 m, u64 precision) const {
        std::error_code ec;
        if (!std::filesystem::is_directory(dir_, ec)) return std::nullopt;
        std::optional<std::filesystem::path> best;
        u64 best_p = 0;
        for (const auto& entry : std::filesystem::directory_iterator(dir_, ec)) {
            if (!entry.is_regular_file() || entry.path().extension() != ".bin") continue;
            const auto h = read_header(entry.path());
            if (!h || h->k != k || h->m != m || h->precision < precision) continue;
            if (!best || h->precision < best_p) {
                best = entry.path();
                best_p = h->precision;
            }
        }
        return best;
    }

    /// b_k mod m to `precision`, from disk when available, else computed and stored.
    qseries get(u64 k, u32 m, std::size_t precision) const {
        if (auto hit = find(k, m, precision)) return read_series(*hit, precision);
        auto s = bk_series(k, precision, m, opts_);
        if (m < 256) {
            std::filesystem::create_directories(dir_);
            write_series(file_for(k, m, precision), k, s);
        }
        return s;
    }

private:
    std::filesystem::path dir_;
    series_options opts_;
};

}  // namespace regulus::cache

#pragma once

// Convolution modulo a small prime through three NTT-friendly primes and
// Garner reconstruction. Valid while the exact convolution stays below the
// product of the three primes (about 2^86).

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace regulus::ntt {

struct prime_info {
    u32 mod;
    u32 root;
    int max_log;  // supports transform lengths up to 2^max_log
};

inline constexpr std::array<prime_info, 3> primes = {{
    {998244353u, 3u, 23},  // 119 * 2^23 + 1
    {167772161u, 3u, 25},  // 5 * 2^25 + 1
    {469762049u, 3u, 26},  // 7 * 2^26 + 1
}};

inline constexpr std::size_t max_length = std::size_t{1} << 23;

inline void transform(std::vector<u32>& a, bool invert, const prime_info& pr) {
    const std::size_t n = a.size();
    const u64 mod = pr.mod;
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    std::vector<u32> w(n / 2 + 1);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        u64 wl = powmod(pr.root, (mod - 1) / len, mod);
        if (invert) wl = invmod_prime(wl, mod);
        const std::size_t half = len / 2;
        w[0] = 1;
        for (std::size_t k = 1; k < half; ++k) w[k] = static_cast<u32>(w[k - 1] * wl % mod);
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < half; ++k) {
                const u64 u = a[i + k];
                const u64 v = a[i + k + half] * u64{w[k]} % mod;
                a[i + k] = static_cast<u32>(u + v >= mod ? u + v - mod : u + v);
                a[i + k + half] = static_cast<u32>(u >= v ? u - v : u + mod - v);
            }
        }
    }
    if (invert) {
        const u64 ninv = invmod_prime(n % mod, mod);
        for (auto& x : a) x = static_cast<u32>(x * ninv % mod);
    }
}

/// First out_len coefficients of a*b, reduced modulo m. Inputs are residues mod m.
inline std::vector<u32> convolve_mod(std::span<const u32> a, std::span<const u32> b, std::size_t out_len, u32 m) {
    std::vector<u32> out(out_len, 0);
    if (a.empty() || b.empty() || out_len == 0) return out;
    const std::size_t la = std::min(a.size(), out_len);
    const std::size_t lb = std::min(b.size(), out_len);
    std::size_t n = 1;
    while (n < la + lb - 1) n <<= 1;
    if (n > max_length) throw std::length_error("ntt::convolve_mod: transform length exceeds 2^23");

    std::array<std::vector<u32>, 3> res;
    for (std::size_t t = 0; t < 3; ++t) {
        const auto& pr = primes[t];
        std::vector<u32> fa(n, 0), fb(n, 0);
        for (std::size_t i = 0; i < la; ++i) fa[i] = a[i] % pr.mod;
        for (std::size_t i = 0; i < lb; ++i) fb[i] = b[i] % pr.mod;
        transform(fa, false, pr);
        transform(fb, false, pr);
        for (std::size_t i = 0; i < n; ++i) fa[i] = static_cast<u32>(u64{fa[i]} * fb[i] % pr.mod);
        transform(fa, true, pr);
        res[t] = std::move(fa);
    }

    // Garner: x = r0 + p0*(k1 + p1*k2)
    const u64 p0 = primes[0].mod, p1 = primes[1].mod, p2 = primes[2].mod;
    const u64 inv_p0_mod_p1 = invmod_prime(p0 % p1, p1);
    const u64 inv_p0p1_mod_p2 = invmod_prime(mulmod(p0, p1, p2), p2);
    const u64 p0_mod_m = p0 % m;
    const u64 p0p1_mod_m = mulmod(p0, p1, m);
    const u64 p0_mod_p2 = p0 % p2;
    for (std::size_t i = 0; i < out_len && i < n; ++i) {
        const u64 r0 = res[0][i], r1 = res[1][i], r2 = res[2][i];
        const u64 k1 = mulmod((r1 + p1 - r0 % p1) % p1, inv_p0_mod_p1, p1);
        const u64 x01_mod_p2 = (r0 % p2 + mulmod(p0_mod_p2, k1, p2)) % p2;
        const u64 k2 = mulmod((r2 + p2 - x01_mod_p2) % p2, inv_p0p1_mod_p2, p2);
        out[i] = static_cast<u32>((r0 % m + mulmod(p0_mod_m, k1, m) + mulmod(p0p1_mod_m, k2, m)) % m);
    }
    return out;
}

}  // namespace regulus::ntt

#pragma once

// Elementary integer arithmetic shared by the series and form code.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace regulus {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

constexpr u64 mulmod(u64 a, u64 b, u64 m) noexcept {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

constexpr u64 powmod(u64 base, u64 exp, u64 m) noexcept {
    u64 r = 1 % m;
    base %= m;
    for (; exp > 0; exp >>= 1) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
    }
    return r;
}

/// Canonical residue of a signed value in [0, m).
constexpr u64 residue(i64 x, u64 m) noexcept {
    const i64 r = x % static_cast<i64>(m);
    return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}

/// Inverse of a modulo a prime p; a must be nonzero mod p.
constexpr u64 invmod_prime(u64 a, u64 p) noexcept { return powmod(a, p - 2, p); }

/// Deterministic Miller-Rabin for the full 64-bit range.
constexpr bool is_prime(u64 n) noexcept {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        u64 x = powmod(a, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// Distinct prime factors of n >= 1, ascending.
inline std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Positive divisors of n >= 1, ascending.
inline std::vector<u64> divisors(u64 n) {
    std::vector<u64> lo, hi;
    for (u64 d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            lo.push_back(d);
            if (d != n / d) hi.push_back(n / d);
        }
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

/// Squarefree part of |n| (n != 0): the product of primes dividing n to an odd power.
inline u64 squarefree_kernel(u64 n) {
    if (n == 0) throw std::invalid_argument("squarefree_kernel: zero");
    u64 out = 1;
    for (u64 p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e & 1) out *= p;
    }
    return out * n;
}

/// Kronecker symbol (a|n), extended to all integers n in the standard way.
constexpr int kronecker(i64 a, i64 n) noexcept {
    constexpr int tab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};  // (2|x) by x mod 8
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if ((a & 1) == 0 && (n & 1) == 0) return 0;
    int v = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++v;
    }
    int k = (v & 1) ? tab2[a & 7] : 1;
    if (n < 0) {
        n = -n;
        if (a < 0) k = -k;
    }
    // n odd and positive from here on
    while (true) {
        if (a == 0) return n > 1 ? 0 : k;
        v = 0;
        while ((a & 1) == 0) {
            a /= 2;
            ++v;
        }
        if (v & 1) k *= tab2[n & 7];
        if (a & n & 2) k = -k;
        const i64 r = a < 0 ? -a : a;
        a = n % r;
        n = r;
    }
}

}  // namespace regulus

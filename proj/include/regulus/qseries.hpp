#pragma once

// Truncated q-series over Z/pZ or Z.
//
// A series represents q^(offset24/24) * sum_{n < precision} c(n) q^n. Every
// operation truncates its result to the precision its inputs determine; two
// series are only combined additively when their offsets agree.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "error.hpp"
#include "ntt.hpp"
#include "ring.hpp"

namespace regulus {

template <class V>
struct term {
    std::size_t index;
    V value;
};

/// Tunables for the convolution engine.
struct series_options {
    /// Dense products (neither operand sparse) at least this long use the NTT.
    std::size_t ntt_threshold = 2048;
    /// Worker threads for the blocked triangular solve. Results do not depend on it.
    unsigned threads = 1;
};

/// Nonzero-term count at or below which an operand is treated as sparse.
inline std::size_t sparse_limit(std::size_t precision) {
    return static_cast<std::size_t>(2.0 * std::sqrt(2.0 * static_cast<double>(precision)));
}

template <class Ring>
class basic_qseries {
public:
    using ring_type = Ring;
    using value_type = typename Ring::value_type;

    basic_qseries() requires std::is_default_constructible_v<Ring> = default;

    basic_qseries(Ring ring, std::vector<value_type> coeffs, i64 offset24 = 0)
        : ring_(std::move(ring)), offset24_(offset24), coeffs_(std::move(coeffs)) {
        for (const auto& c : coeffs_) {
            if (!ring_.is_canonical(c)) throw std::invalid_argument("qseries: coefficient outside [0, m)");
        }
    }

    static basic_qseries zero(Ring ring, std::size_t precision, i64 offset24 = 0) {
        std::vector<value_type> c(precision, ring.zero());
        return basic_qseries(std::move(ring), std::move(c), offset24);
    }

    static basic_qseries one(Ring ring, std::size_t precision) {
        std::vector<value_type> c(precision, ring.zero());
        if (precision > 0) c[0] = ring.one();
        return basic_qseries(std::move(ring), std::move(c), 0);
    }

    /// Builds a series from signed integer coefficients, reducing them into the ring.
    static basic_qseries from_ints(Ring ring, std::span<const i64> values, i64 offset24 = 0) {
        std::vector<value_type> c;
        c.reserve(values.size());
        for (i64 v : values) c.push_back(ring.from_int(v));
        return basic_qseries(std::move(ring), std::move(c), offset24);
    }

    static basic_qseries from_terms(Ring ring, std::size_t precision, std::span<const term<value_type>> terms,
                                    i64 offset24 = 0) {
        std::vector<value_type> c(precision, ring.zero());
        for (const auto& t : terms) {
            if (t.index < precision) c[t.index] = ring.add(c[t.index], t.value);
        }
        return basic_qseries(std::move(ring), std::move(c), offset24);
    }

    const Ring& ring() const noexcept { return ring_; }
    std::size_t precision() const noexcept { return coeffs_.size(); }
    i64 offset24() const noexcept { return offset24_; }
    bool has_integral_offset() const noexcept { return offset24_ % 24 == 0; }

    const value_type& operator[](std::size_t n) const { return coeffs_[n]; }
    const value_type& at(std::size_t n) const { return coeffs_.at(n); }
    std::span<const value_type> coeffs() const noexcept { return coeffs_; }

    /// Moves the coefficient storage out; the series is left empty.
    std::vector<value_type> release() && { return std::move(coeffs_); }

    std::size_t nonzero_count() const {
        return static_cast<std::size_t>(
            std::count_if(coeffs_.begin(), coeffs_.end(), [&](const value_type& c) { return !ring_.is_zero(c); }));
    }

    std::vector<term<value_type>> nonzero_terms() const {
        std::vector<term<value_type>> out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (!ring_.is_zero(coeffs_[i])) out.push_back({i, coeffs_[i]});
        }
        return out;
    }

    std::optional<std::size_t> first_nonzero() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (!ring_.is_zero(coeffs_[i])) return i;
        }
        return std::nullopt;
    }

    bool is_zero() const { return !first_nonzero().has_value(); }

    basic_qseries truncated(std::size_t precision) const {
        std::vector<value_type> c(coeffs_.begin(), coeffs_.begin() + std::min(precision, coeffs_.size()));
        return basic_qseries(ring_, std::move(c), offset24_);
    }

    /// Same coefficients, multiplied by q^(delta24/24).
    basic_qseries shifted24(i64 delta24) const { return basic_qseries(ring_, coeffs_, offset24_ + delta24); }

    /// Absorbs an integral offset into the coefficient indexing, giving offset 0.
    basic_qseries normalized() const {
        if (!has_integral_offset()) {
            throw fractional_offset("qseries: offset " + std::to_string(offset24_) + "/24 is not integral");
        }
        const i64 shift = offset24_ / 24;
        if (shift >= 0) {
            std::vector<value_type> c(static_cast<std::size_t>(shift), ring_.zero());
            c.insert(c.end(), coeffs_.begin(), coeffs_.end());
            return basic_qseries(ring_, std::move(c), 0);
        }
        const std::size_t drop = static_cast<std::size_t>(-shift);
        for (std::size_t i = 0; i < std::min(drop, coeffs_.size()); ++i) {
            if (!ring_.is_zero(coeffs_[i])) throw std::domain_error("qseries: negative exponent with nonzero coefficient");
        }
        if (drop >= coeffs_.size()) return basic_qseries(ring_, {}, 0);
        return basic_qseries(ring_, std::vector<value_type>(coeffs_.begin() + drop, coeffs_.end()), 0);
    }

    /// Structural equality; differing offsets are an error rather than false.
    friend bool operator==(const basic_qseries& a, const basic_qseries& b) {
        if (!(a.ring_ == b.ring_)) throw modulus_mismatch("qseries: comparing series over different rings");
        if (a.offset24_ != b.offset24_) throw offset_mismatch("qseries: comparing series with different offsets");
        return a.coeffs_ == b.coeffs_;
    }

private:
    Ring ring_{};
    i64 offset24_ = 0;
    std::vector<value_type> coeffs_;
};

using qseries = basic_qseries<zp>;
using zseries = basic_qseries<zz>;

namespace detail {

template <class Ring>
void require_same_ring(const basic_qseries<Ring>& f, const basic_qseries<Ring>& g) {
    if (!(f.ring() == g.ring())) {
        throw modulus_mismatch("qseries: ring mismatch (" + f.ring().describe() + " vs " + g.ring().describe() + ")");
    }
}

template <class Ring>
void require_same_offset(const basic_qseries<Ring>& f, const basic_qseries<Ring>& g) {
    if (f.offset24() != g.offset24()) {
        throw offset_mismatch("qseries: offsets " + std::to_string(f.offset24()) + "/24 and " +
                              std::to_string(g.offset24()) + "/24 differ");
    }
}

inline std::vector<term<u32>> nonzero_terms(std::span<const u32> a) {
    std::vector<term<u32>> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0) out.push_back({i, a[i]});
    }
    return out;
}

/// Largest value a term can add to an accumulator: c * (p - 1), or p for the
/// negated-unit path which adds p - x.
inline u64 term_weight(u32 c, u32 p) {
    if (c == 1) return p - 1;
    if (c == p - 1) return p;
    return u64{p - 1} * c;
}

/// out[i + j] += c * dense[i] for each (j, c) in terms, truncated to out_len.
inline std::vector<u32> mul_dense_terms(std::span<const u32> dense, std::span<const term<u32>> terms,
                                        std::size_t out_len, u32 p) {
    std::vector<u64> acc(out_len, 0);
    u64 bound = 0;
    const std::size_t dlen = std::min(dense.size(), out_len);
    for (const auto& t : terms) {
        if (t.index >= out_len) break;
        const u32 c = t.value;
        const u64 w = term_weight(c, p);
        if (bound > std::numeric_limits<u64>::max() - w) {
            for (auto& a : acc) a %= p;
            bound = p - 1;
        }
        bound += w;
        const std::size_t cnt = std::min(dlen, out_len - t.index);
        u64* out = acc.data() + t.index;
        const u32* src = dense.data();
        if (c == 1) {
            for (std::size_t i = 0; i < cnt; ++i) out[i] += src[i];
        } else if (c == p - 1) {
            for (std::size_t i = 0; i < cnt; ++i) out[i] += p - src[i];
        } else {
            for (std::size_t i = 0; i < cnt; ++i) out[i] += u64{c} * src[i];
        }
    }
    std::vector<u32> out(out_len);
    for (std::size_t i = 0; i < out_len; ++i) out[i] = static_cast<u32>(acc[i] % p);
    return out;
}

/// First out_len coefficients of a*b over Z/pZ; a and b are treated as polynomials.
inline std::vector<u32> mul_mod(std::span<const u32> a, std::span<const u32> b, std::size_t out_len, u32 p,
                                const series_options& opts) {
    a = a.subspan(0, std::min(a.size(), out_len));
    b = b.subspan(0, std::min(b.size(), out_len));
    auto ta = nonzero_terms(a);
    auto tb = nonzero_terms(b);
    const bool a_sparser = ta.size() <= tb.size();
    const std::size_t nnz = a_sparser ? ta.size() : tb.size();
    if (nnz <= sparse_limit(out_len) || out_len < opts.ntt_threshold) {
        return a_sparser ? mul_dense_terms(b, ta, out_len, p) : mul_dense_terms(a, tb, out_len, p);
    }
    return ntt::convolve_mod(a, b, out_len, p);
}

/// Adds the far divisor terms (all with index >= block length) into one block of accumulators.
template <class Src, class Acc>
void accumulate_far(std::span<Acc> acc, u64& bound, const Src* h, std::size_t n0, std::span<const term<u32>> terms,
                    u32 p) {
    constexpr u64 cap = std::numeric_limits<Acc>::max();
    const std::size_t len = acc.size();
    for (const auto& t : terms) {
        const std::size_t j = t.index;
        if (j >= n0 + len) break;
        const std::size_t start = j > n0 ? j - n0 : 0;
        const u32 c = t.value;
        const u64 w = term_weight(c, p);
        if (bound + w > cap) {
            for (auto& a : acc) a %= p;
            bound = p - 1;
        }
        bound += w;
        Acc* out = acc.data() + start;
        const Src* src = h + (n0 + start - j);
        const std::size_t cnt = len - start;
        if (c == 1) {
            for (std::size_t i = 0; i < cnt; ++i) out[i] += src[i];
        } else if (c == p - 1) {
            const Acc pp = static_cast<Acc>(p);
            for (std::size_t i = 0; i < cnt; ++i) out[i] += pp - src[i];
        } else {
            const Acc cc = static_cast<Acc>(c);
            for (std::size_t i = 0; i < cnt; ++i) out[i] += cc * src[i];
        }
    }
}

inline constexpr std::size_t solve_block = std::size_t{1} << 12;

/// Solves g * h = rhs over Z/pZ to `precision` terms, where g = g0 + sum_j g_j q^j.
/// `tail` holds (j, p - g_j) for the nonzero g_j with j >= 1, sorted by j.
/// `init(n0, acc)` writes rhs[n0 .. n0 + acc.size()) into acc.
///
/// Blocked so that every divisor term reaching entirely behind the current
/// block is a contiguous, vectorizable add; only terms shorter than the block
/// run through the sequential recurrence.
template <class Src, class Acc, class Init>
std::vector<u32> solve_blocked(u32 p, u32 g0_inv, std::span<const term<u32>> tail, std::size_t precision, Init&& init,
                               unsigned threads) {
    std::vector<u32> h(precision);
    std::vector<Src> mirror;
    Src* src = nullptr;
    if constexpr (std::is_same_v<Src, u32>) {
        src = h.data();
    } else {
        mirror.resize(precision);
        src = mirror.data();
    }

    const std::size_t L = solve_block;
    const auto split = std::find_if(tail.begin(), tail.end(), [&](const term<u32>& t) { return t.index >= L; });
    const std::span<const term<u32>> near(tail.begin(), split);
    const std::span<const term<u32>> far(split, tail.end());
    const bool small_p = p < (1u << 16);

    std::vector<Acc> acc(L);
    std::vector<std::vector<Acc>> partial(threads > 1 ? threads - 1 : 0, std::vector<Acc>(L));

    for (std::size_t n0 = 0; n0 < precision; n0 += L) {
        const std::size_t len = std::min(L, precision - n0);
        std::span<Acc> block(acc.data(), len);
        init(n0, block);
        u64 bound = p - 1;

        // far terms reaching this block
        const auto far_end = std::find_if(far.begin(), far.end(), [&](const term<u32>& t) { return t.index >= n0 + len; });
        const std::span<const term<u32>> active(far.begin(), far_end);
        if (partial.empty() || active.size() < 64) {
            accumulate_far<Src, Acc>(block, bound, src, n0, active, p);
        } else {
            const std::size_t workers = partial.size() + 1;
            const std::size_t chunk = (active.size() + workers - 1) / workers;
            {
                std::vector<std::jthread> pool;
                for (std::size_t w = 1; w < workers; ++w) {
                    const std::size_t lo = std::min(active.size(), w * chunk);
                    const std::size_t hi = std::min(active.size(), lo + chunk);
                    pool.emplace_back([&, w, lo, hi] {
                        std::span<Acc> mine(partial[w - 1].data(), len);
                        std::fill(mine.begin(), mine.end(), Acc{0});
                        u64 b = 0;
                        accumulate_far<Src, Acc>(mine, b, src, n0, active.subspan(lo, hi - lo), p);
                    });
                }
                accumulate_far<Src, Acc>(block, bound, src, n0, active.subspan(0, std::min(chunk, active.size())), p);
            }
            for (auto& part : partial) {
                for (std::size_t i = 0; i < len; ++i) {
                    block[i] = static_cast<Acc>((u64{block[i]} % p + u64{part[i]} % p) % p);
                }
            }
        }

        for (std::size_t i = 0; i < len; ++i) {
            const std::size_t n = n0 + i;
            u64 s = u64{block[i]} % p;
            for (const auto& t : near) {
                if (t.index > n) break;
                s += u64{t.value} * src[n - t.index];
                if (!small_p) s %= p;
            }
            u64 r = s % p;
            if (g0_inv != 1) r = r * g0_inv % p;
            h[n] = static_cast<u32>(r);
            if constexpr (!std::is_same_v<Src, u32>) src[n] = static_cast<Src>(r);
        }
    }
    return h;
}

/// Dispatches the blocked solve on the accumulator width the modulus allows.
template <class Init>
std::vector<u32> solve_mod(u32 p, std::span<const term<u32>> divisor, std::size_t precision, Init&& init,
                           unsigned threads) {
    if (divisor.empty() || divisor.front().index != 0 || divisor.front().value == 0) {
        throw not_invertible("qseries: divisor has zero constant term");
    }
    const u32 g0_inv = static_cast<u32>(invmod_prime(divisor.front().value, p));
    std::vector<term<u32>> tail;
    tail.reserve(divisor.size());
    for (std::size_t i = 1; i < divisor.size(); ++i) {
        if (divisor[i].value != 0) tail.push_back({divisor[i].index, p - divisor[i].value});
    }
    if (p < 256) return solve_blocked<std::uint8_t, u32>(p, g0_inv, tail, precision, init, threads);
    return solve_blocked<u32, u64>(p, g0_inv, tail, precision, init, threads);
}

inline auto dense_init(std::span<const u32> rhs) {
    return [rhs](std::size_t n0, auto block) {
        using Acc = typename decltype(block)::value_type;
        for (std::size_t i = 0; i < block.size(); ++i) {
            const std::size_t n = n0 + i;
            block[i] = n < rhs.size() ? static_cast<Acc>(rhs[n]) : Acc{0};
        }
    };
}

inline auto sparse_init(std::span<const term<u32>> rhs) {
    return [rhs](std::size_t n0, auto block) {
        using Acc = typename decltype(block)::value_type;
        std::fill(block.begin(), block.end(), Acc{0});
        auto it = std::lower_bound(rhs.begin(), rhs.end(), n0,
                                   [](const term<u32>& t, std::size_t n) { return t.index < n; });
        for (; it != rhs.end() && it->index < n0 + block.size(); ++it) block[it->index - n0] = static_cast<Acc>(it->value);
    };
}

/// Newton iteration for 1/f, used for dense inputs beyond the NTT threshold.
inline std::vector<u32> inverse_newton(std::span<const u32> f, std::size_t precision, u32 p,
                                       const series_options& opts) {
    std::vector<u32> g{static_cast<u32>(invmod_prime(f[0], p))};
    std::size_t len = 1;
    while (len < precision) {
        const std::size_t next = std::min(precision, 2 * len);
        auto e = mul_mod(f.subspan(0, std::min(f.size(), next)), g, next, p, opts);
        // e <- 2 - f*g
        for (auto& x : e) x = x == 0 ? 0 : p - x;
        e[0] = static_cast<u32>((e[0] + 2) % p);
        g = mul_mod(g, e, next, p, opts);
        len = next;
    }
    g.resize(precision);
    return g;
}

/// Exact triangular solve over Z; the divisor's constant term must be a unit.
inline std::vector<zz::value_type> solve_exact(std::span<const term<zz::value_type>> divisor,
                                               std::span<const zz::value_type> rhs, std::size_t precision) {
    if (divisor.empty() || divisor.front().index != 0) throw not_invertible("qseries: divisor has zero constant term");
    const auto g0_inv = zz{}.inv(divisor.front().value);
    std::vector<zz::value_type> h(precision);
    for (std::size_t n = 0; n < precision; ++n) {
        zz::value_type s = n < rhs.size() ? rhs[n] : 0;
        for (std::size_t k = 1; k < divisor.size() && divisor[k].index <= n; ++k) {
            s -= divisor[k].value * h[n - divisor[k].index];
        }
        h[n] = s * g0_inv;
    }
    return h;
}

}  // namespace detail

template <class Ring>
basic_qseries<Ring> add(const basic_qseries<Ring>& f, const basic_qseries<Ring>& g) {
    detail::require_same_ring(f, g);
    detail::require_same_offset(f, g);
    const std::size_t P = std::min(f.precision(), g.precision());
    std::vector<typename Ring::value_type> c(P);
    for (std::size_t i = 0; i < P; ++i) c[i] = f.ring().add(f[i], g[i]);
    return basic_qseries<Ring>(f.ring(), std::move(c), f.offset24());
}

template <class Ring>
basic_qseries<Ring> negate(const basic_qseries<Ring>& f) {
    std::vector<typename Ring::value_type> c(f.precision());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.ring().neg(f[i]);
    return basic_qseries<Ring>(f.ring(), std::move(c), f.offset24());
}

template <class Ring>
basic_qseries<Ring> sub(const basic_qseries<Ring>& f, const basic_qseries<Ring>& g) {
    return add(f, negate(g));
}

template <class Ring>
basic_qseries<Ring> scale(const basic_qseries<Ring>& f, const typename Ring::value_type& c) {
    std::vector<typename Ring::value_type> out(f.precision());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.ring().mul(f[i], c);
    return basic_qseries<Ring>(f.ring(), std::move(out), f.offset24());
}

/// Product truncated to min(P_f, P_g); offsets add.
template <class Ring>
basic_qseries<Ring> mul(const basic_qseries<Ring>& f, const basic_qseries<Ring>& g, const series_options& opts = {}) {
    detail::require_same_ring(f, g);
    const std::size_t P = std::min(f.precision(), g.precision());
    const i64 offset = f.offset24() + g.offset24();
    if constexpr (std::is_same_v<Ring, zp>) {
        return qseries(f.ring(), detail::mul_mod(f.coeffs(), g.coeffs(), P, f.ring().modulus(), opts), offset);
    } else {
        auto tf = f.truncated(P).nonzero_terms();
        auto tg = g.truncated(P).nonzero_terms();
        if (tf.size() > tg.size()) std::swap(tf, tg);
        std::vector<typename Ring::value_type> c(P, f.ring().zero());
        for (const auto& a : tf) {
            for (const auto& b : tg) {
                if (a.index + b.index >= P) break;
                c[a.index + b.index] += a.value * b.value;
            }
        }
        return basic_qseries<Ring>(f.ring(), std::move(c), offset);
    }
}

/// Quotient f / g to min(P_f, P_g); g must have an invertible constant term.
template <class Ring>
basic_qseries<Ring> divide(const basic_qseries<Ring>& f, const basic_qseries<Ring>& g,
                           const series_options& opts = {}) {
    detail::require_same_ring(f, g);
    const std::size_t P = std::min(f.precision(), g.precision());
    const i64 offset = f.offset24() - g.offset24();
    if (P == 0) return basic_qseries<Ring>(f.ring(), {}, offset);
    if (g.ring().is_zero(g[0])) throw not_invertible("divide: constant term of the divisor is zero");
    const auto gt = g.truncated(P).nonzero_terms();
    if constexpr (std::is_same_v<Ring, zp>) {
        const u32 p = f.ring().modulus();
        if (gt.size() <= sparse_limit(P) || P < opts.ntt_threshold) {
            return qseries(f.ring(), detail::solve_mod(p, gt, P, detail::dense_init(f.coeffs()), opts.threads), offset);
        }
        auto ginv = detail::inverse_newton(g.coeffs(), P, p, opts);
        return qseries(f.ring(), detail::mul_mod(f.coeffs(), ginv, P, p, opts), offset);
    } else {
        return basic_qseries<Ring>(f.ring(), detail::solve_exact(gt, f.coeffs(), P), offset);
    }
}

/// Multiplicative inverse to P_f; the offset is negated.
template <class Ring>
basic_qseries<Ring> inverse(const basic_qseries<Ring>& f, const series_options& opts = {}) {
    auto one = basic_qseries<Ring>::one(f.ring(), f.precision());
    return divide(one, f, opts);
}

/// f^e by repeated squaring; negative e goes through the inverse.
template <class Ring>
basic_qseries<Ring> pow(const basic_qseries<Ring>& f, i64 e, const series_options& opts = {}) {
    if (e < 0) return pow(inverse(f, opts), -e, opts);
    auto result = basic_qseries<Ring>::one(f.ring(), f.precision());
    auto base = f;
    bool first = true;
    for (; e > 0; e >>= 1) {
        if (e & 1) {
            result = first ? base : mul(result, base, opts);
            first = false;
        }
        if (e > 1) base = mul(base, base, opts);
    }
    return result;
}

/// Coefficientwise reduction of an exact series into [0, m).
inline qseries reduce_mod(const zseries& f, u32 m) {
    zp ring(m);
    std::vector<u32> c(f.precision());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = ring.from_big(f[i]);
    return qseries(ring, std::move(c), f.offset24());
}

/// True when f and g agree on their common precision. Offsets must match.
template <class Ring>
bool agree(const basic_qseries<Ring>& f, const basic_qseries<Ring>& g) {
    detail::require_same_ring(f, g);
    detail::require_same_offset(f, g);
    const std::size_t P = std::min(f.precision(), g.precision());
    for (std::size_t i = 0; i < P; ++i) {
        if (f[i] != g[i]) return false;
    }
    return true;
}

template <class Ring>
basic_qseries<Ring> operator+(const basic_qseries<Ring>& f, const basic_qseries<Ring>& g) { return add(f, g); }
template <class Ring>
basic_qseries<Ring> operator-(const basic_qseries<Ring>& f, const basic_qseries<Ring>& g) { return sub(f, g); }
template <class Ring>
basic_qseries<Ring> operator*(const basic_qseries<Ring>& f, const basic_qseries<Ring>& g) { return mul(f, g); }

/// Human-readable rendering of the first few terms, e.g. "q^(1/24) * (1 - q - q^2 + O(q^3))".
template <class Ring>
std::string format(const basic_qseries<Ring>& f, std::size_t max_terms = 12) {
    std::ostringstream os;
    bool any = false;
    std::size_t shown = 0;
    for (std::size_t n = 0; n < f.precision() && shown < max_terms; ++n) {
        const auto& c = f[n];
        if (f.ring().is_zero(c)) continue;
        ++shown;
        std::ostringstream cs;
        cs << c;
        std::string s = cs.str();
        bool negative = !s.empty() && s[0] == '-';
        if (negative) s.erase(0, 1);
        if (any) os << (negative ? " - " : " + ");
        else if (negative) os << "-";
        const bool unit = s == "1";
        if (n == 0) os << s;
        else {
            if (!unit) os << s << "*";
            os << "q";
            if (n > 1) os << "^" << n;
        }
        any = true;
    }
    if (!any) os << "0";
    os << " + O(q^" << f.precision() << ")";
    const i64 nu = f.offset24();
    if (nu == 0) return os.str();
    std::ostringstream pre;
    if (nu % 24 == 0) pre << "q^" << nu / 24;
    else pre << "q^(" << nu << "/24)";
    return pre.str() + " * (" + os.str() + ")";
}

}  // namespace regulus

#pragma once

// Coefficient rings for truncated q-series: residues modulo a prime, and exact integers.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "arith.hpp"
#include "error.hpp"

namespace regulus {

/// Z/pZ for a prime p < 2^31. Residues are stored canonically in [0, p).
class zp {
public:
    using value_type = u32;

    static constexpr u32 max_modulus = (1u << 31) - 1;

    explicit zp(u32 p) : p_(p) {
        if (p < 2 || p > max_modulus || !is_prime(p)) {
            throw std::invalid_argument("zp: modulus must be a prime below 2^31, got " + std::to_string(p));
        }
    }

    u32 modulus() const noexcept { return p_; }

    value_type zero() const noexcept { return 0; }
    value_type one() const noexcept { return 1; }
    value_type from_int(i64 x) const noexcept { return static_cast<u32>(residue(x, p_)); }
    value_type from_big(const boost::multiprecision::cpp_int& x) const {
        boost::multiprecision::cpp_int r = x % p_;
        if (r < 0) r += p_;
        return r.convert_to<u32>();
    }

    value_type add(value_type a, value_type b) const noexcept {
        const u32 s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    value_type sub(value_type a, value_type b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
    value_type mul(value_type a, value_type b) const noexcept {
        return static_cast<u32>(static_cast<u64>(a) * b % p_);
    }
    value_type inv(value_type a) const {
        if (a == 0) throw not_invertible("zp: zero has no inverse");
        return static_cast<u32>(invmod_prime(a, p_));
    }
    bool is_zero(value_type a) const noexcept { return a == 0; }
    bool is_canonical(value_type a) const noexcept { return a < p_; }

    std::string describe() const { return "Z/" + std::to_string(p_); }

    friend bool operator==(const zp&, const zp&) = default;

private:
    u32 p_;
};

/// The exact integers, backed by arbitrary-precision integers.
struct zz {
    using value_type = boost::multiprecision::cpp_int;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(i64 x) const { return x; }
    value_type from_big(const value_type& x) const { return x; }

    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type inv(const value_type& a) const {
        if (a != 1 && a != -1) throw not_invertible("zz: only units +-1 are invertible");
        return a;
    }
    bool is_zero(const value_type& a) const { return a == 0; }
    bool is_canonical(const value_type&) const noexcept { return true; }

    std::string describe() const { return "Z"; }

    friend bool operator==(const zz&, const zz&) = default;
};

}  // namespace regulus

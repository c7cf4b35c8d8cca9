#pragma once

// Counting oracles by direct enumeration, independent of the series code.
// Intended for small n only.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

namespace regulus::oracle {

namespace detail {

// Partitions of n into parts <= max_part, none divisible by k (k = 0: unrestricted).
inline std::uint64_t count(std::uint64_t n, std::uint64_t max_part, std::uint64_t k,
                           std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t>& memo) {
    if (n == 0) return 1;
    if (max_part == 0) return 0;
    if (max_part > n) max_part = n;
    if (k != 0 && max_part % k == 0) return count(n, max_part - 1, k, memo);
    const auto key = std::make_pair(n, max_part);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    // either no part equals max_part, or remove one copy of it
    const std::uint64_t v = count(n, max_part - 1, k, memo) + count(n - max_part, max_part, k, memo);
    memo.emplace(key, v);
    return v;
}

}  // namespace detail

/// Number of partitions of n with no part divisible by k.
inline std::uint64_t regular_partitions(std::uint64_t k, std::uint64_t n) {
    if (n > 200) throw std::invalid_argument("oracle: n too large for enumeration");
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> memo;
    return detail::count(n, n, k, memo);
}

inline std::uint64_t partitions(std::uint64_t n) {
    if (n > 200) throw std::invalid_argument("oracle: n too large for enumeration");
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> memo;
    return detail::count(n, n, 0, memo);
}

/// b_5(n), counted directly.
inline std::uint64_t b5_value(std::uint64_t n) { return regular_partitions(5, n); }

}  // namespace regulus::oracle

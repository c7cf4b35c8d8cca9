#pragma once

// Parser for eta-quotient expressions such as "eta(5z)^4 * eta(z)^4" or
// "eta(5z)/eta(z)". Factors are eta(<k>z) with an optional signed integer
// exponent; factors combine with '*' and '/'. Whitespace is ignored.

#include <cctype>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "eta.hpp"

namespace regulus {

struct parse_error : std::invalid_argument {
    std::size_t position;
    parse_error(const std::string& what, std::size_t pos)
        : std::invalid_argument(what + " at position " + std::to_string(pos)), position(pos) {}
};

namespace detail {

class eta_parser {
public:
    explicit eta_parser(std::string_view text) : text_(text) {}

    eta_quotient::exponent_map parse() {
        eta_quotient::exponent_map out;
        int sign = 1;
        while (true) {
            const auto [delta, r] = factor();
            out[delta] += sign * r;
            skip_ws();
            if (pos_ == text_.size()) break;
            if (text_[pos_] == '*') sign = 1;
            else if (text_[pos_] == '/') sign = -1;
            else throw parse_error("expected '*' or '/'", pos_);
            ++pos_;
        }
        return out;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) throw parse_error(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    std::optional<i64> integer(bool allow_sign) {
        skip_ws();
        const std::size_t start = pos_;
        int sign = 1;
        if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            sign = text_[pos_] == '-' ? -1 : 1;
            ++pos_;
            skip_ws();
        }
        i64 v = 0;
        std::size_t digits = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > (i64{1} << 40)) throw parse_error("integer too large", start);
            ++pos_;
            ++digits;
        }
        if (digits == 0) {
            pos_ = start;
            return std::nullopt;
        }
        return sign * v;
    }

    std::pair<u64, i64> factor() {
        skip_ws();
        if (text_.compare(pos_, 3, "eta") != 0) throw parse_error("expected 'eta'", pos_);
        pos_ += 3;
        expect('(');
        const std::size_t at = pos_;
        const auto k = integer(false);
        if (k && *k == 0) throw parse_error("dilation must be positive", at);
        expect('z');
        expect(')');
        i64 r = 1;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            skip_ws();
            bool paren = pos_ < text_.size() && text_[pos_] == '(';
            if (paren) ++pos_;
            const std::size_t epos = pos_;
            const auto e = integer(true);
            if (!e) throw parse_error("expected integer exponent", epos);
            r = *e;
            if (paren) expect(')');
        }
        return {k ? static_cast<u64>(*k) : 1, r};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses an eta expression. The level defaults to the lcm of the dilations.
inline eta_quotient parse_eta_quotient(std::string_view text, std::optional<u64> level = std::nullopt) {
    auto exps = detail::eta_parser(text).parse();
    std::erase_if(exps, [](const auto& kv) { return kv.second == 0; });
    if (exps.empty()) throw parse_error("expression reduces to the constant 1", 0);
    if (level) return eta_quotient(*level, exps);
    return eta_quotient::minimal_level(exps);
}

}  // namespace regulus

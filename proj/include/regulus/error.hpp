#pragma once

#include <stdexcept>
#include <string>

namespace regulus {

/// Two series over different coefficient rings were combined.
struct modulus_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Two series with different q^(1/24) offsets were added or compared.
struct offset_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Operation needs integral exponents but the series carries a fractional offset.
struct fractional_offset : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct not_invertible : std::domain_error {
    using std::domain_error::domain_error;
};

/// A computation would exceed the configured memory ceiling.
struct resource_limit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace regulus

/// @file errors.hpp
/// @brief Exception types shared across the library.
///
/// ConfigError covers invalid parameters and precondition violations that
/// the caller can fix; NumericalError covers failures that only show up
/// while computing (CFL violation, non-finite values, inconsistent state).
#pragma once

#include <stdexcept>
#include <string>

namespace fbq {

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace fbq

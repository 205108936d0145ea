#ifndef ZETAMOM_ERRORS_HPP
#define ZETAMOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zetamom {

// Base class for all library errors so callers can catch one type.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// zeta/zeta_prime requested at the pole s = 1.
struct PoleError : Error {
    using Error::Error;
};

// |Im s| above the configured evaluation ceiling.
struct CeilingError : Error {
    using Error::Error;
};

// A prime interval reaches past the sieve limit.
struct SieveLimitError : Error {
    using Error::Error;
};

// Mollifier support would exceed the in-memory guard.
struct SupportSizeError : Error {
    using Error::Error;
};

// Zero scan count check failed after all retries.
struct MissedZeroError : Error {
    using Error::Error;
};

// Zero table does not span the range a computation needs.
struct CoverageError : Error {
    using Error::Error;
};

// Adaptive quadrature failed to converge.
struct QuadratureError : Error {
    using Error::Error;
};

// Bad run configuration (CLI / config file).
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace zetamom

#endif

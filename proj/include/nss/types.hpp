#pragma once

// Common scalar/matrix aliases and the error taxonomy shared by all modules.

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace nss {

using Real = double;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using IntVector = Eigen::VectorXi;
using Index = Eigen::Index;

// =============================================================================
// Errors
// =============================================================================
// All library failures derive from Error so callers can map them to process
// exit codes in one place (config -> 2, numerical -> 3, training -> 4).

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- configuration / input errors -------------------------------------------
struct ParseError : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct NonFiniteEntry : Error {
    using Error::Error;
};
struct InvalidSwitchValue : Error {
    using Error::Error;
};
struct SetTooLarge : Error {
    using Error::Error;
};
struct ScheduleTooLong : Error {
    using Error::Error;
};
struct ShapeMismatch : Error {
    using Error::Error;
};
struct ChecksumMismatch : Error {
    using Error::Error;
};
struct UntrainedModel : Error {
    using Error::Error;
};

// --- numerical errors --------------------------------------------------------
struct SingularConfiguration : Error {
    using Error::Error;
};
struct NonFiniteState : Error {
    explicit NonFiniteState(const std::string& what, int interval = -1)
        : Error(what), interval_index(interval) {}
    int interval_index;
};
struct StepUnderflow : Error {
    explicit StepUnderflow(const std::string& what, int interval = -1)
        : Error(what), interval_index(interval) {}
    int interval_index;
};
struct NonFiniteOutput : Error {
    using Error::Error;
};
struct NonFiniteGradient : Error {
    using Error::Error;
};

// --- training errors ---------------------------------------------------------
struct DivergedTraining : Error {
    using Error::Error;
};

// =============================================================================
// Small shared utilities
// =============================================================================

inline bool all_finite(const Matrix& m) { return m.allFinite(); }
inline bool all_finite(const Vector& v) { return v.allFinite(); }

/// FNV-1a 64-bit over a byte range. Used for weight-file and topology checksums.
inline std::uint64_t fnv1a64(const void* data, std::size_t len,
                             std::uint64_t seed = 0xcbf29ce484222325ULL) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace nss

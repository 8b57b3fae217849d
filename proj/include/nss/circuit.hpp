#pragma once

// Piecewise-LTI system description: a fixed set of constant matrices plus a
// discrete per-switch-pair state vector that selects the active configuration.
// Between switching events the dynamics are x' = A_k x + B_k u with
//
//   A_k = A0 + B1 K (I - D1 K)^{-1} C1
//   B_k = B0 + B1 K (I - D1 K)^{-1} C2
//
// where K = diag(k_1, ..., k_d), k_i in {-1, 0, 1}.
//
// CircuitTopology and SwitchVector are immutable after construction and safe
// to share across threads; every free function here is pure.

#include "nss/types.hpp"

#include <string>
#include <vector>

namespace nss {

// =============================================================================
// Domain types
// =============================================================================

/// d-element switch state, each entry exactly -1, 0 or +1.
class SwitchVector {
public:
    explicit SwitchVector(IntVector values);
    SwitchVector(std::initializer_list<int> values);

    Index size() const { return values_.size(); }
    int operator[](Index i) const { return values_[i]; }
    const IntVector& values() const { return values_; }

    bool operator==(const SwitchVector& other) const {
        return values_.size() == other.values_.size() && (values_ == other.values_).all();
    }

private:
    IntVector values_;
};

struct CircuitTopology {
    std::string name;
    Index n = 0;  ///< state dimension
    Index m = 0;  ///< input dimension
    Index d = 0;  ///< switch-pair count
    Matrix A0;    ///< n x n, 1/s scale
    Matrix B0;    ///< n x m
    Matrix B1;    ///< n x d
    Matrix C1;    ///< d x n
    Matrix C2;    ///< d x m
    Matrix D1;    ///< d x d

    /// Throws DimensionMismatch / NonFiniteEntry if the invariants fail.
    void validate() const;

    /// FNV-1a over dims and matrix payloads; used to pair trained bundles
    /// with the topology they were built for.
    std::uint64_t checksum() const;
};

struct SystemMatrices {
    Matrix A;  ///< n x n
    Matrix B;  ///< n x m
};

struct DeltaMatrices {
    Matrix dA;  ///< A_k - A0
    Matrix dB;  ///< B_k - B0
};

enum class AdmissibleMode { binary_pairs, ternary_full, explicit_list };

// =============================================================================
// Operations
// =============================================================================

/// Threshold on the estimated condition number of (I - D1 K) above which a
/// switch state is treated as degenerate.
constexpr Real kSingularConditionThreshold = 1e12;

/// Switch-dependent correction terms: dA = B1 K (I - D1 K)^{-1} C1 and the
/// corresponding dB. Solved via LU, never an explicit inverse. Throws
/// SingularConfiguration when (I - D1 K) is singular to working precision.
DeltaMatrices delta_matrices(const CircuitTopology& topo, const SwitchVector& K,
                             Real cond_threshold = kSingularConditionThreshold);

/// Full system matrices A_k = A0 + dA, B_k = B0 + dB (same correction terms
/// as delta_matrices, added to the constant part).
SystemMatrices assemble_matrices(const CircuitTopology& topo, const SwitchVector& K,
                                 Real cond_threshold = kSingularConditionThreshold);

/// Per-element one-hot expansion: -1 -> (1,0,0), 0 -> (0,1,0), +1 -> (0,0,1),
/// concatenated in index order. Length 3d, exactly d ones.
Vector one_hot_encode(const SwitchVector& K);

/// All admissible switch states in lexicographic order (-1 < 0 < +1, element 0
/// most significant). binary_pairs = {-1,+1}^d, ternary_full = {-1,0,1}^d,
/// explicit_list validates and passes through the supplied list. Throws
/// SetTooLarge when the enumerated count exceeds `cap`.
std::vector<SwitchVector> enumerate_admissible_switch_set(
    const CircuitTopology& topo, AdmissibleMode mode,
    const std::vector<SwitchVector>& explicit_list = {}, std::size_t cap = 65536);

/// Parses a .circuit config (see data/*.circuit) into a validated topology.
/// Throws ParseError, DimensionMismatch or NonFiniteEntry.
CircuitTopology load_topology(const std::string& config_text);
CircuitTopology load_topology_file(const std::string& path);

/// Admissible mode declared in a .circuit file (binary_pairs when absent),
/// plus the explicit list when mode is explicit_list.
struct AdmissibleSpec {
    AdmissibleMode mode = AdmissibleMode::binary_pairs;
    std::vector<SwitchVector> explicit_list;
};

/// Reads `admissible_mode` / `switch_list` from a parsed .circuit file.
AdmissibleSpec load_admissible_spec(const std::string& config_text);
AdmissibleSpec load_admissible_spec_file(const std::string& path);

}  // namespace nss

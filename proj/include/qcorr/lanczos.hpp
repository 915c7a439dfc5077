#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <vector>

namespace qcorr {

/// Operator application callback: y = H x, with x and y of length dim.
using ApplyFn = std::function<void(const double*, double*)>;

struct LanczosOptions {
    int max_basis = 120;     // Krylov vectors kept per restart cycle
    int max_restarts = 80;
    double tol = 1e-12;      // residual tolerance relative to spectral scale
    std::uint64_t seed = 0x9e3779b97f4a7c15ull;  // deterministic start vector
};

struct LanczosResult {
    std::vector<double> eigenvalues;             // nondecreasing
    std::vector<Eigen::VectorXd> eigenvectors;   // unit norm
    int matvecs = 0;
    bool converged = false;
};

/// Computes the n_pairs lowest eigenpairs of a real symmetric operator by
/// restarted Lanczos with full reorthogonalization. Eigenpairs are found one
/// at a time, deflating previously converged vectors, so (quasi)degenerate
/// doublets are resolved reliably. Throws std::runtime_error when the
/// iteration fails to converge.
LanczosResult lowest_eigenpairs(const ApplyFn& apply, std::size_t dim, int n_pairs,
                                const LanczosOptions& opts = {});

}  // namespace qcorr

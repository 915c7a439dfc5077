#pragma once

#include <Eigen/Dense>

namespace qcorr {

// Eigenvalues of reduced matrices may dip this far below zero from round-off;
// anything more negative is treated as a genuine positivity violation.
inline constexpr double kPsdTol = 1e-10;

enum class StateSource { thermal, broken, synthetic };

/// Two-qubit density matrix in the basis {|00>, |01>, |10>, |11>},
/// first slot = party A (left site), second = party B (right site).
struct TwoSiteState {
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
    int r = 1;                                   // site separation
    StateSource source = StateSource::synthetic;

    /// Enforces Hermiticity/trace/positivity. Eigenvalues in [-kPsdTol, 0)
    /// are clipped to zero and the matrix renormalized; worse violations
    /// throw std::domain_error.
    void validate_and_repair();

    double purity() const;  // Tr rho^2

    /// True when all the symmetry-breaking slots (Eq.-15 'a','b' positions)
    /// vanish, i.e. the matrix has X shape.
    bool is_x_state(double tol = 1e-12) const;
};

TwoSiteState make_two_site(const Eigen::Matrix4cd& rho, int r = 1,
                           StateSource source = StateSource::synthetic);

/// Magnetizations and two-point correlators of a (possibly symmetry-broken)
/// spin pair at distance r. gx, gz are per-site values (pair average);
/// gxz is the symmetrized <XZ + ZX>/2 cross correlator.
struct CorrelatorSet {
    double gx = 0.0;
    double gz = 0.0;
    double gxx = 0.0;
    double gyy = 0.0;
    double gzz = 0.0;
    double gxz = 0.0;
    int r = 1;
};

/// Reads the correlators off a two-site density matrix.
CorrelatorSet correlators_of(const TwoSiteState& state);

// Pauli matrices and two-site Kronecker products (index 0..3 = I,X,Y,Z).
const Eigen::Matrix2cd& pauli(int i);
Eigen::Matrix4cd pauli_kron(int i, int j);

Eigen::Matrix2cd partial_trace_keep_a(const Eigen::Matrix4cd& rho);
Eigen::Matrix2cd partial_trace_keep_b(const Eigen::Matrix4cd& rho);

}  // namespace qcorr

#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>

#include "qcorr/two_site_state.hpp"

namespace qcorr {

/// Binary entropy in bits; H(0) = H(1) = 0.
double binary_entropy(double p);

/// Von Neumann entropy in bits (base-2 log). Throws std::domain_error when an
/// eigenvalue is below -kPsdTol.
double von_neumann_entropy(const Eigen::MatrixXcd& rho);

double mutual_information(const TwoSiteState& state);

/// Projective measurement direction on the Bloch sphere,
/// theta in [0, pi], phi in [0, 2pi).
struct MeasurementBasis {
    double theta = 0.0;
    double phi = 0.0;
};

/// Projector pair {(I + n.sigma)/2, (I - n.sigma)/2} for the basis direction.
Eigen::Matrix2cd basis_projector(const MeasurementBasis& basis, int outcome);

/// Sum_k p_k S(rho_k) for a von Neumann measurement on party B.
/// Outcomes with p_k < 1e-14 contribute zero.
double conditioned_entropy(const TwoSiteState& state, const MeasurementBasis& on_b);

/// J(rho : {B_k}) = S(rho_A) - S(rho | {B_k}) at a fixed basis on B.
double measurement_mutual_information(const TwoSiteState& state, const MeasurementBasis& on_b);

struct OptimizerDiagnostics {
    MeasurementBasis argopt;
    int evaluations = 0;
    std::string method = "grid+nelder-mead";
    bool fallback = false;  // refinement failed; grid value returned
};

struct OptResult {
    double value = 0.0;
    OptimizerDiagnostics diag;
};

/// Classical correlation: max over von Neumann measurements on B of J.
/// Coarse grid (step pi/60) followed by Nelder-Mead refinement to angle
/// tolerance 1e-7; ties resolved toward smallest theta, then smallest phi.
OptResult classical_correlation(const TwoSiteState& state);

/// Quantum discord Q = I - C with the same optimizer. upper_bound is set for
/// non-X states, where projective measurements only bound the POVM optimum.
struct DiscordResult {
    double discord = 0.0;
    double classical = 0.0;
    double mutual_information = 0.0;
    bool upper_bound = false;
    OptimizerDiagnostics diag;
};
DiscordResult quantum_discord(const TwoSiteState& state);

/// Closed-form thermal-XY discord from symmetric correlators (gx = gxz = 0
/// required; throws std::invalid_argument otherwise). Measurement on B fixed
/// to the {|+>, |->} basis.
double discord_closed_form_xy(const CorrelatorSet& c);

// --- Bell-diagonal pipeline --------------------------------------------------

struct BellDiagonalCoeffs {
    double c1 = 0.0, c2 = 0.0, c3 = 0.0;
};

/// Requires PSD parameters (all four eigenvalues >= -kPsdTol).
double classical_correlation_bell_diagonal(double c1, double c2, double c3);
double mutual_information_bell_diagonal(double c1, double c2, double c3);
double discord_bell_diagonal(double c1, double c2, double c3);
TwoSiteState bell_diagonal_state(double c1, double c2, double c3);

/// Nearest-neighbor XXZ correlators from the ground-state energy density and
/// its anisotropy derivative (Hellmann-Feynman route):
/// c1 = c2 = delta * deps_ddelta - eps,  c3 = -2 * deps_ddelta.
BellDiagonalCoeffs xxz_correlators_from_energy(double eps, double deps_ddelta, double delta);

/// Wootters concurrence in [0, 1].
double concurrence(const TwoSiteState& state);

/// Symmetric discord: I(rho) minus the best classical mutual information of
/// outcomes under product projective measurements on both parties (four
/// angles). Zero iff the state is classical-classical (within tolerance).
struct SymmetricDiscordResult {
    double value = 0.0;
    MeasurementBasis basis_a, basis_b;
    int evaluations = 0;
    bool fallback = false;
};
SymmetricDiscordResult symmetric_discord(const TwoSiteState& state);

/// Classical mutual information of the outcome distribution at fixed bases.
double projected_mutual_information(const TwoSiteState& state, const MeasurementBasis& on_a,
                                    const MeasurementBasis& on_b);

/// Assembles the two-site matrix from correlators (translation-invariant
/// pair; per-site magnetizations). PSD-validated.
TwoSiteState xstate_from_correlators(const CorrelatorSet& c,
                                     StateSource source = StateSource::synthetic);

/// Full bundle used by the sweep driver.
struct CorrelationReport {
    double mutual_information = 0.0;
    double classical_correlation = 0.0;
    double discord = 0.0;
    std::optional<double> symmetric_discord;
    double concurrence = 0.0;
    bool discord_upper_bound = false;
    OptimizerDiagnostics diag;
};
CorrelationReport correlation_report(const TwoSiteState& state, bool with_symmetric = false);

}  // namespace qcorr

#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "qcorr/correlations.hpp"
#include "qcorr/two_site_state.hpp"

namespace qcorr {

/// Commutator of the state with the tensor product of its own marginals.
/// Anti-Hermitian; vanishes for every classical-classical state (the converse
/// fails: the Bell state also gives zero).
Eigen::Matrix4cd witness_operator(const TwoSiteState& state);

/// Trace norm, i.e. the sum of singular values.
double trace_norm(const Eigen::MatrixXcd& m);

struct WitnessReport {
    double trace_norm = 0.0;
    bool is_candidate_classical = false;  // trace_norm < tolerance
    double tolerance = 1e-8;
};
WitnessReport witness_report(const TwoSiteState& state, double tolerance = 1e-8);

struct ProductBasis {
    MeasurementBasis a, b;
};

/// True iff the state commutes with every projector of the supplied product
/// basis (trace norm below tolerance for all four commutators). When true the
/// state is classical-classical and dephasing in that basis leaves it fixed.
bool classicality_commutator_check(const TwoSiteState& state, const ProductBasis& basis,
                                   double tolerance = 1e-8);

/// Full dephasing map Phi(rho) = sum_jk Pi_jk rho Pi_jk in the product basis.
Eigen::Matrix4cd dephase(const TwoSiteState& state, const ProductBasis& basis);

struct WitnessProfile {
    std::vector<double> h;
    std::vector<double> norm;
    /// h locations where the witness dips below zero_threshold (one entry per
    /// contiguous below-threshold cluster, at the cluster minimum). Resolved
    /// only to grid spacing.
    std::vector<double> zeros;
    double zero_threshold = 1e-4;
    /// Location of the strongest curvature of ||W||(h) (first-derivative kink
    /// candidate); absent for fewer than three points.
    std::optional<double> kink_h;
};

/// Evaluates the witness along a sweep (states ordered by the field values).
WitnessProfile witness_profile(const std::vector<double>& h_values,
                               const std::vector<TwoSiteState>& states,
                               double zero_threshold = 1e-4);

}  // namespace qcorr

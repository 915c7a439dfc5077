#include "qcorr/witness.hpp"

#include <cmath>
#include <stdexcept>

namespace qcorr {

using Eigen::Matrix2cd;
using Eigen::Matrix4cd;

Matrix4cd witness_operator(const TwoSiteState& state) {
    const Matrix2cd ra = partial_trace_keep_a(state.rho);
    const Matrix2cd rb = partial_trace_keep_b(state.rho);
    Matrix4cd prod;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) prod.block<2, 2>(2 * r, 2 * c) = ra(r, c) * rb;
    return state.rho * prod - prod * state.rho;
}

double trace_norm(const Eigen::MatrixXcd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues().sum();
}

WitnessReport witness_report(const TwoSiteState& state, double tolerance) {
    WitnessReport rep;
    rep.trace_norm = trace_norm(witness_operator(state));
    rep.tolerance = tolerance;
    rep.is_candidate_classical = rep.trace_norm < tolerance;
    return rep;
}

bool classicality_commutator_check(const TwoSiteState& state, const ProductBasis& basis,
                                   double tolerance) {
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
            const Matrix2cd pa = basis_projector(basis.a, j);
            const Matrix2cd pb = basis_projector(basis.b, k);
            Matrix4cd pi;
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) pi.block<2, 2>(2 * r, 2 * c) = pa(r, c) * pb;
            if (trace_norm(state.rho * pi - pi * state.rho) >= tolerance) return false;
        }
    return true;
}

Matrix4cd dephase(const TwoSiteState& state, const ProductBasis& basis) {
    Matrix4cd out = Matrix4cd::Zero();
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
            const Matrix2cd pa = basis_projector(basis.a, j);
            const Matrix2cd pb = basis_projector(basis.b, k);
            Matrix4cd pi;
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) pi.block<2, 2>(2 * r, 2 * c) = pa(r, c) * pb;
            out += pi * state.rho * pi;
        }
    return out;
}

WitnessProfile witness_profile(const std::vector<double>& h_values,
                               const std::vector<TwoSiteState>& states,
                               double zero_threshold) {
    if (h_values.size() != states.size())
        throw std::invalid_argument("witness_profile: mismatched sweep arrays");
    WitnessProfile prof;
    prof.h = h_values;
    prof.zero_threshold = zero_threshold;
    prof.norm.reserve(states.size());
    for (const auto& s : states) prof.norm.push_back(trace_norm(witness_operator(s)));

    // Below-threshold clusters, reported at each cluster's minimum.
    std::size_t i = 0;
    while (i < prof.norm.size()) {
        if (prof.norm[i] >= zero_threshold) {
            ++i;
            continue;
        }
        std::size_t best = i;
        while (i < prof.norm.size() && prof.norm[i] < zero_threshold) {
            if (prof.norm[i] < prof.norm[best]) best = i;
            ++i;
        }
        prof.zeros.push_back(prof.h[best]);
    }

    if (prof.norm.size() >= 3) {
        std::size_t best = 1;
        double best_curv = -1.0;
        for (std::size_t k = 1; k + 1 < prof.norm.size(); ++k) {
            const double curv = std::abs(prof.norm[k + 1] - 2.0 * prof.norm[k] + prof.norm[k - 1]);
            if (curv > best_curv) {
                best_curv = curv;
                best = k;
            }
        }
        prof.kink_h = prof.h[best];
    }
    return prof;
}

}  // namespace qcorr

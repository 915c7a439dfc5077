#pragma once

#include <vector>

#include "qcorr/two_site_state.hpp"

namespace qcorr {

/// Point of the anisotropic XY chain in the canonical pauli convention.
/// The isotropic line gamma = 0 is excluded.
struct XYPoint {
    double gamma = 1.0;  // in (0, 1]
    double h = 0.0;      // >= 0
    void validate() const;
};

/// Fermionic contraction kernel G(n) of the infinite chain, evaluated by
/// adaptive quadrature (absolute error below 1e-10, target 1e-12).
double xy_kernel(const XYPoint& p, int n);

/// Thermodynamic-limit magnetization <sigma_z>.
double xy_magnetization(const XYPoint& p);

struct XYCorrelators {
    double sigma_z = 0.0;
    std::vector<double> gxx, gyy, gzz;  // index r-1, r = 1..r_max
};

/// Two-point correlators up to distance r_max (<= 50): gxx and gyy as r x r
/// Toeplitz determinants of the kernel, gzz by Wick contraction.
/// Throws std::invalid_argument for r_max out of range and std::runtime_error
/// when a determinant over/underflows.
XYCorrelators xy_correlators(const XYPoint& p, int r_max);

/// Correlator bundle of the pair at distance r, shaped for the measures API.
CorrelatorSet xy_correlator_set(const XYPoint& p, int r);

/// Thermal-state discord per distance r = 1..r_max via the closed-form
/// X-state pipeline.
std::vector<double> xy_discord_profile(const XYPoint& p, int r_max);

}  // namespace qcorr

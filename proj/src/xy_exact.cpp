#include "qcorr/xy_exact.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <stdexcept>

#include "qcorr/correlations.hpp"

namespace qcorr {

namespace {

constexpr int kRMaxCap = 50;  // determinant conditioning degrades beyond this

// Kernel cache for one (gamma, h) point: G(n) for n in [-r_max, r_max].
struct KernelTable {
    int r_max;
    std::vector<double> g;  // g[n + r_max]
    double at(int n) const { return g[n + r_max]; }
};

double quadrature_g(const XYPoint& p, int n) {
    using boost::math::quadrature::gauss_kronrod;
    const double gamma = p.gamma, h = p.h;
    auto integrand = [=](double k) {
        const double lambda = std::hypot(h - std::cos(k), gamma * std::sin(k));
        if (lambda == 0.0) return 0.0;  // removable point measure zero
        return (std::cos(k * n) * (std::cos(k) - h) + gamma * std::sin(k * n) * std::sin(k)) /
               lambda;
    };
    double err = 0.0;
    const double val =
        gauss_kronrod<double, 31>::integrate(integrand, 0.0, M_PI, 15, 1e-12, &err);
    if (!(err < 1e-10) || !std::isfinite(val))
        throw std::runtime_error("xy_kernel: quadrature non-convergence");
    return val / M_PI;
}

KernelTable build_table(const XYPoint& p, int r_max) {
    KernelTable t;
    t.r_max = r_max;
    t.g.resize(2 * r_max + 1);
    for (int n = -r_max; n <= r_max; ++n) t.g[n + r_max] = quadrature_g(p, n);
    return t;
}

// det[ G(i - j + shift) ], i, j = 0..r-1
double toeplitz_det(const KernelTable& t, int r, int shift) {
    Eigen::MatrixXd m(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) m(i, j) = t.at(i - j + shift);
    const double det = r == 1 ? m(0, 0) : m.determinant();
    if (!std::isfinite(det))
        throw std::runtime_error("xy_correlators: Toeplitz determinant over/underflow");
    return det;
}

}  // namespace

void XYPoint::validate() const {
    if (!(gamma > 0.0) || gamma > 1.0)
        throw std::invalid_argument("XYPoint: gamma must lie in (0, 1]");
    if (h < 0.0 || !std::isfinite(h)) throw std::invalid_argument("XYPoint: h must be >= 0");
}

double xy_kernel(const XYPoint& p, int n) {
    p.validate();
    return quadrature_g(p, n);
}

double xy_magnetization(const XYPoint& p) {
    p.validate();
    return -quadrature_g(p, 0);
}

XYCorrelators xy_correlators(const XYPoint& p, int r_max) {
    p.validate();
    if (r_max < 1 || r_max > kRMaxCap)
        throw std::invalid_argument("xy_correlators: r_max must be in 1..50");

    const KernelTable t = build_table(p, r_max);
    XYCorrelators out;
    out.sigma_z = -t.at(0);
    out.gxx.resize(r_max);
    out.gyy.resize(r_max);
    out.gzz.resize(r_max);
    for (int r = 1; r <= r_max; ++r) {
        out.gxx[r - 1] = toeplitz_det(t, r, 1);
        out.gyy[r - 1] = toeplitz_det(t, r, -1);
        out.gzz[r - 1] = out.sigma_z * out.sigma_z - t.at(r) * t.at(-r);
    }
    return out;
}

CorrelatorSet xy_correlator_set(const XYPoint& p, int r) {
    const XYCorrelators xy = xy_correlators(p, r);
    CorrelatorSet c;
    c.r = r;
    c.gx = 0.0;
    c.gz = xy.sigma_z;
    c.gxx = xy.gxx[r - 1];
    c.gyy = xy.gyy[r - 1];
    c.gzz = xy.gzz[r - 1];
    c.gxz = 0.0;
    return c;
}

std::vector<double> xy_discord_profile(const XYPoint& p, int r_max) {
    const XYCorrelators xy = xy_correlators(p, r_max);
    std::vector<double> q(r_max);
    for (int r = 1; r <= r_max; ++r) {
        CorrelatorSet c;
        c.r = r;
        c.gz = xy.sigma_z;
        c.gxx = xy.gxx[r - 1];
        c.gyy = xy.gyy[r - 1];
        c.gzz = xy.gzz[r - 1];
        q[r - 1] = discord_closed_form_xy(c);
    }
    return q;
}

}  // namespace qcorr

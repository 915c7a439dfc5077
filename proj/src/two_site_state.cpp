#include "qcorr/two_site_state.hpp"

#include <cmath>
#include <stdexcept>

namespace qcorr {

using Eigen::Matrix2cd;
using Eigen::Matrix4cd;

const Matrix2cd& pauli(int i) {
    static const Matrix2cd m[4] = {
        (Matrix2cd() << 1, 0, 0, 1).finished(),
        (Matrix2cd() << 0, 1, 1, 0).finished(),
        (Matrix2cd() << 0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0)
            .finished(),
        (Matrix2cd() << 1, 0, 0, -1).finished(),
    };
    return m[i];
}

Matrix4cd pauli_kron(int i, int j) {
    Matrix4cd out;
    const Matrix2cd &a = pauli(i), &b = pauli(j);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) out.block<2, 2>(2 * r, 2 * c) = a(r, c) * b;
    return out;
}

void TwoSiteState::validate_and_repair() {
    const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    if (herm > 1e-9) throw std::domain_error("TwoSiteState: matrix not Hermitian");
    rho = 0.5 * (rho + rho.adjoint().eval());

    const double tr = rho.trace().real();
    if (std::abs(tr - 1.0) > 1e-9) throw std::domain_error("TwoSiteState: trace != 1");

    Eigen::SelfAdjointEigenSolver<Matrix4cd> es(rho);
    const auto& lam = es.eigenvalues();
    if (lam.minCoeff() < -kPsdTol)
        throw std::domain_error("TwoSiteState: negative eigenvalue beyond tolerance");
    if (lam.minCoeff() < 0.0) {
        Eigen::Vector4d clipped = lam.cwiseMax(0.0);
        clipped /= clipped.sum();
        rho = es.eigenvectors() * clipped.asDiagonal() * es.eigenvectors().adjoint();
    } else if (std::abs(tr - 1.0) > 0.0) {
        rho /= tr;
    }
}

double TwoSiteState::purity() const { return (rho * rho).trace().real(); }

bool TwoSiteState::is_x_state(double tol) const {
    return std::abs(rho(0, 1)) < tol && std::abs(rho(0, 2)) < tol &&
           std::abs(rho(1, 3)) < tol && std::abs(rho(2, 3)) < tol;
}

TwoSiteState make_two_site(const Matrix4cd& rho, int r, StateSource source) {
    TwoSiteState s;
    s.rho = rho;
    s.r = r;
    s.source = source;
    s.validate_and_repair();
    return s;
}

CorrelatorSet correlators_of(const TwoSiteState& state) {
    auto expect = [&](int i, int j) {
        return (state.rho * pauli_kron(i, j)).trace().real();
    };
    CorrelatorSet c;
    c.r = state.r;
    c.gx = 0.5 * (expect(1, 0) + expect(0, 1));
    c.gz = 0.5 * (expect(3, 0) + expect(0, 3));
    c.gxx = expect(1, 1);
    c.gyy = expect(2, 2);
    c.gzz = expect(3, 3);
    c.gxz = 0.5 * (expect(1, 3) + expect(3, 1));
    return c;
}

Matrix2cd partial_trace_keep_a(const Matrix4cd& rho) {
    Matrix2cd out;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            out(a, b) = rho(2 * a, 2 * b) + rho(2 * a + 1, 2 * b + 1);
    return out;
}

Matrix2cd partial_trace_keep_b(const Matrix4cd& rho) {
    Matrix2cd out;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) out(a, b) = rho(a, b) + rho(2 + a, 2 + b);
    return out;
}

}  // namespace qcorr

#include "qcorr/lanczos.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace qcorr {

using Eigen::VectorXd;

namespace {

// Orthogonalize v against a set of unit vectors, twice (classical
// Gram-Schmidt with re-iteration is enough at these sizes).
void orthogonalize(VectorXd& v, const std::vector<VectorXd>& basis, int count) {
    for (int pass = 0; pass < 2; ++pass) {
        for (int i = 0; i < count; ++i) v -= basis[i].dot(v) * basis[i];
    }
}

void orthogonalize_against(VectorXd& v, const std::vector<VectorXd>& vecs) {
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& u : vecs) v -= u.dot(v) * u;
    }
}

}  // namespace

LanczosResult lowest_eigenpairs(const ApplyFn& apply, std::size_t dim, int n_pairs,
                                const LanczosOptions& opts) {
    if (dim == 0 || n_pairs < 1) throw std::invalid_argument("lowest_eigenpairs: bad arguments");
    LanczosResult result;

    const int m = static_cast<int>(std::min<std::size_t>(opts.max_basis, dim));
    std::mt19937_64 rng(opts.seed);
    std::normal_distribution<double> gauss;

    std::vector<VectorXd> basis(m, VectorXd(dim));
    VectorXd w(dim);

    for (int pair = 0; pair < n_pairs; ++pair) {
        // Deterministic random start, deflated against found eigenvectors.
        VectorXd start(dim);
        for (std::size_t i = 0; i < dim; ++i) start[i] = gauss(rng);
        orthogonalize_against(start, result.eigenvectors);
        double nrm = start.norm();
        if (nrm == 0.0) throw std::runtime_error("lanczos: degenerate start vector");
        start /= nrm;

        bool converged = false;
        double theta = 0.0;
        VectorXd ritz;

        for (int restart = 0; restart < opts.max_restarts && !converged; ++restart) {
            basis[0] = start;
            std::vector<double> alpha, beta;
            int built = 0;
            double scale = 1.0;

            for (int j = 0; j < m; ++j) {
                apply(basis[j].data(), w.data());
                ++result.matvecs;
                const double a = basis[j].dot(w);
                alpha.push_back(a);
                w -= a * basis[j];
                if (j > 0) w -= beta.back() * basis[j - 1];
                orthogonalize_against(w, result.eigenvectors);
                orthogonalize(w, basis, j + 1);
                built = j + 1;

                scale = std::abs(alpha[0]);
                for (int t = 0; t < static_cast<int>(alpha.size()); ++t)
                    scale = std::max(scale, std::abs(alpha[t]));
                for (double b : beta) scale = std::max(scale, b);
                if (scale == 0.0) scale = 1.0;

                const double b = w.norm();
                if (b < 1e-14 * scale || j == m - 1) break;
                beta.push_back(b);
                basis[j + 1] = w / b;
            }

            // Solve the tridiagonal Rayleigh-Ritz problem.
            Eigen::MatrixXd T = Eigen::MatrixXd::Zero(built, built);
            for (int i = 0; i < built; ++i) T(i, i) = alpha[i];
            for (int i = 0; i + 1 < built; ++i) T(i, i + 1) = T(i + 1, i) = beta[i];
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
            theta = es.eigenvalues()(0);
            const Eigen::VectorXd s = es.eigenvectors().col(0);

            ritz = VectorXd::Zero(dim);
            for (int i = 0; i < built; ++i) ritz += s[i] * basis[i];
            orthogonalize_against(ritz, result.eigenvectors);
            ritz.normalize();

            // Explicit residual check (robust against reorthogonalization drift).
            apply(ritz.data(), w.data());
            ++result.matvecs;
            const double resid = (w - theta * ritz).norm();
            if (resid <= opts.tol * std::max(scale, std::abs(theta)) || built == static_cast<int>(dim)) {
                converged = true;
            } else {
                start = ritz;  // restart from the best Ritz vector
            }
        }

        if (!converged)
            throw std::runtime_error("lanczos: eigensolver non-convergence");

        result.eigenvalues.push_back(theta);
        result.eigenvectors.push_back(ritz);
    }

    // Deflation can return pairs slightly out of order when levels cross
    // within tolerance; sort to keep energies nondecreasing.
    for (int i = 1; i < n_pairs; ++i) {
        int j = i;
        while (j > 0 && result.eigenvalues[j] < result.eigenvalues[j - 1]) {
            std::swap(result.eigenvalues[j], result.eigenvalues[j - 1]);
            std::swap(result.eigenvectors[j], result.eigenvectors[j - 1]);
            --j;
        }
    }
    result.converged = true;
    return result;
}

}  // namespace qcorr

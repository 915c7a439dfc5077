#include "qcorr/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace qcorr {

using Eigen::Matrix2cd;
using Eigen::Matrix3d;
using Eigen::Matrix4cd;
using Eigen::Vector3d;

namespace {

constexpr double kOutcomeFloor = 1e-14;  // outcomes rarer than this contribute 0
constexpr double kLog2E = 1.4426950408889634;

double xlog2x(double x) { return x > 1e-15 ? x * std::log2(x) : 0.0; }

struct PauliDecomp {
    Vector3d a = Vector3d::Zero();  // Bloch vector of A
    Vector3d b = Vector3d::Zero();  // Bloch vector of B
    Matrix3d T = Matrix3d::Zero();  // correlation matrix
};

PauliDecomp decompose(const Matrix4cd& rho) {
    PauliDecomp d;
    for (int i = 1; i <= 3; ++i) {
        d.a[i - 1] = (rho * pauli_kron(i, 0)).trace().real();
        d.b[i - 1] = (rho * pauli_kron(0, i)).trace().real();
        for (int j = 1; j <= 3; ++j) d.T(i - 1, j - 1) = (rho * pauli_kron(i, j)).trace().real();
    }
    return d;
}

Vector3d direction(double theta, double phi) {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

// J(rho : {B_k}) for measurement direction n on B, from the Pauli data.
double j_of_direction(const PauliDecomp& d, double entropy_a, const Vector3d& n) {
    double cond = 0.0;
    for (int k = 0; k < 2; ++k) {
        const double s = k == 0 ? 1.0 : -1.0;
        const double pk = 0.5 * (1.0 + s * d.b.dot(n));
        if (pk < kOutcomeFloor) continue;
        const Vector3d v = (d.a + s * (d.T * n)) / (2.0 * pk);
        const double len = std::min(1.0, v.norm());
        cond += pk * binary_entropy(0.5 * (1.0 + len));
    }
    return entropy_a - cond;
}

void canonicalize_angles(double& theta, double& phi) {
    const double two_pi = 2.0 * M_PI;
    theta = std::fmod(theta, two_pi);
    if (theta < 0) theta += two_pi;
    if (theta > M_PI) {
        theta = two_pi - theta;
        phi += M_PI;
    }
    phi = std::fmod(phi, two_pi);
    if (phi < 0) phi += two_pi;
}

// The projector pair is unchanged under (theta, phi) -> (pi - theta, phi + pi);
// report the representative in the upper hemisphere.
MeasurementBasis canonical_basis(double theta, double phi) {
    canonicalize_angles(theta, phi);
    if (theta > M_PI / 2.0 + 1e-12) {
        theta = M_PI - theta;
        phi += M_PI;
        canonicalize_angles(theta, phi);
    }
    if (theta < 1e-9 || theta > M_PI - 1e-9) phi = 0.0;  // poles: phi is a gauge
    return {theta, phi};
}

// --- tiny Nelder-Mead for 2 and 4 angle variables ----------------------------

struct NMResult {
    std::vector<double> x;
    double value = 0.0;
    int evaluations = 0;
};

NMResult nelder_mead(const std::function<double(const double*)>& f,
                     const std::vector<double>& x0, double step, double xtol, int max_iter) {
    const int n = static_cast<int>(x0.size());
    std::vector<std::vector<double>> pts(n + 1, x0);
    for (int i = 0; i < n; ++i) pts[i + 1][i] += step;
    std::vector<double> val(n + 1);
    int evals = 0;
    for (int i = 0; i <= n; ++i) val[i] = (++evals, f(pts[i].data()));

    std::vector<int> order(n + 1);
    std::vector<double> centroid(n), xr(n), xe(n), xc(n);
    for (int iter = 0; iter < max_iter; ++iter) {
        for (int i = 0; i <= n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) { return val[a] < val[b]; });
        const int best = order[0], worst = order[n], second = order[n - 1];

        double diam = 0.0;
        for (int i = 1; i <= n; ++i)
            for (int d = 0; d < n; ++d)
                diam = std::max(diam, std::abs(pts[order[i]][d] - pts[best][d]));
        if (diam < xtol) break;

        for (int d = 0; d < n; ++d) {
            centroid[d] = 0.0;
            for (int i = 0; i <= n; ++i)
                if (i != worst) centroid[d] += pts[i][d];
            centroid[d] /= n;
        }
        for (int d = 0; d < n; ++d) xr[d] = centroid[d] + (centroid[d] - pts[worst][d]);
        const double fr = (++evals, f(xr.data()));
        if (fr < val[best]) {
            for (int d = 0; d < n; ++d) xe[d] = centroid[d] + 2.0 * (centroid[d] - pts[worst][d]);
            const double fe = (++evals, f(xe.data()));
            if (fe < fr) {
                pts[worst] = xe;
                val[worst] = fe;
            } else {
                pts[worst] = xr;
                val[worst] = fr;
            }
        } else if (fr < val[second]) {
            pts[worst] = xr;
            val[worst] = fr;
        } else {
            for (int d = 0; d < n; ++d) xc[d] = centroid[d] + 0.5 * (pts[worst][d] - centroid[d]);
            const double fc = (++evals, f(xc.data()));
            if (fc < val[worst]) {
                pts[worst] = xc;
                val[worst] = fc;
            } else {
                for (int i = 0; i <= n; ++i) {
                    if (i == best) continue;
                    for (int d = 0; d < n; ++d)
                        pts[i][d] = pts[best][d] + 0.5 * (pts[i][d] - pts[best][d]);
                    val[i] = (++evals, f(pts[i].data()));
                }
            }
        }
    }
    int best = 0;
    for (int i = 1; i <= n; ++i)
        if (val[i] < val[best]) best = i;
    return {pts[best], val[best], evals};
}

}  // namespace

double binary_entropy(double p) {
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double von_neumann_entropy(const Eigen::MatrixXcd& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
    double s = 0.0;
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
        const double lam = es.eigenvalues()(i);
        if (lam < -kPsdTol)
            throw std::domain_error("von_neumann_entropy: matrix not positive semidefinite");
        s -= xlog2x(lam);
    }
    return s;
}

double mutual_information(const TwoSiteState& state) {
    return von_neumann_entropy(partial_trace_keep_a(state.rho)) +
           von_neumann_entropy(partial_trace_keep_b(state.rho)) -
           von_neumann_entropy(state.rho);
}

Eigen::Matrix2cd basis_projector(const MeasurementBasis& basis, int outcome) {
    const Vector3d n = direction(basis.theta, basis.phi);
    const double s = outcome == 0 ? 1.0 : -1.0;
    Matrix2cd p = 0.5 * Matrix2cd::Identity();
    for (int i = 0; i < 3; ++i) p += 0.5 * s * n[i] * pauli(i + 1);
    return p;
}

double conditioned_entropy(const TwoSiteState& state, const MeasurementBasis& on_b) {
    const PauliDecomp d = decompose(state.rho);
    const double sa = binary_entropy(0.5 * (1.0 + std::min(1.0, d.a.norm())));
    return sa - j_of_direction(d, sa, direction(on_b.theta, on_b.phi));
}

double measurement_mutual_information(const TwoSiteState& state, const MeasurementBasis& on_b) {
    const PauliDecomp d = decompose(state.rho);
    const double sa = binary_entropy(0.5 * (1.0 + std::min(1.0, d.a.norm())));
    return j_of_direction(d, sa, direction(on_b.theta, on_b.phi));
}

OptResult classical_correlation(const TwoSiteState& state) {
    const PauliDecomp d = decompose(state.rho);
    const double sa = binary_entropy(0.5 * (1.0 + std::min(1.0, d.a.norm())));

    const int n_theta = 61, n_phi = 120;
    const double dstep = M_PI / 60.0;
    int evals = 0;

    struct Cell {
        double value, theta, phi;
    };
    std::vector<Cell> cells;
    cells.reserve(16);
    auto consider = [&](double value, double theta, double phi) {
        cells.push_back({value, theta, phi});
        std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
            if (a.value != b.value) return a.value > b.value;
            const MeasurementBasis ca = canonical_basis(a.theta, a.phi);
            const MeasurementBasis cb = canonical_basis(b.theta, b.phi);
            if (ca.theta != cb.theta) return ca.theta < cb.theta;
            return ca.phi < cb.phi;
        });
        if (cells.size() > 3) cells.pop_back();
    };

    for (int i = 0; i < n_theta; ++i) {
        const double theta = i * dstep;
        const int phi_count = (i == 0 || i == n_theta - 1) ? 1 : n_phi;
        for (int jdx = 0; jdx < phi_count; ++jdx) {
            const double phi = jdx * dstep;
            ++evals;
            consider(j_of_direction(d, sa, direction(theta, phi)), theta, phi);
        }
    }

    auto objective = [&](const double* x) {
        double theta = x[0], phi = x[1];
        canonicalize_angles(theta, phi);
        return -j_of_direction(d, sa, direction(theta, phi));
    };

    OptResult out;
    out.value = cells.front().value;
    out.diag.argopt = canonical_basis(cells.front().theta, cells.front().phi);
    bool refined = false;
    for (const Cell& c : cells) {
        NMResult nm = nelder_mead(objective, {c.theta, c.phi}, dstep, 1e-7, 400);
        evals += nm.evaluations;
        const double value = -nm.value;
        const MeasurementBasis basis = canonical_basis(nm.x[0], nm.x[1]);
        const bool better =
            value > out.value + 1e-12 ||
            (std::abs(value - out.value) <= 1e-12 &&
             (basis.theta < out.diag.argopt.theta - 1e-12 ||
              (std::abs(basis.theta - out.diag.argopt.theta) <= 1e-12 &&
               basis.phi < out.diag.argopt.phi)));
        if (value >= out.value - 1e-12) refined = true;
        if (better) {
            out.value = value;
            out.diag.argopt = basis;
        }
    }
    out.diag.evaluations = evals;
    out.diag.fallback = !refined;
    if (out.diag.fallback) out.diag.method = "grid";
    return out;
}

DiscordResult quantum_discord(const TwoSiteState& state) {
    DiscordResult res;
    res.mutual_information = mutual_information(state);
    OptResult c = classical_correlation(state);
    res.classical = c.value;
    res.discord = res.mutual_information - res.classical;
    res.upper_bound = !state.is_x_state();
    res.diag = c.diag;
    return res;
}

double discord_closed_form_xy(const CorrelatorSet& c) {
    if (std::abs(c.gx) > 1e-9 || std::abs(c.gxz) > 1e-9)
        throw std::invalid_argument(
            "discord_closed_form_xy: symmetry-broken correlators (gx or gxz nonzero)");
    const double m = c.gz;
    const double root_xi = std::sqrt((c.gxx - c.gyy) * (c.gxx - c.gyy) + 4.0 * m * m);
    const double lam[4] = {
        0.25 * (1.0 + c.gzz) + 0.25 * root_xi,
        0.25 * (1.0 + c.gzz) - 0.25 * root_xi,
        0.25 * (1.0 - c.gzz + (c.gxx + c.gyy)),
        0.25 * (1.0 - c.gzz - (c.gxx + c.gyy)),
    };
    double s_ab = 0.0;
    for (double l : lam) {
        if (l < -kPsdTol)
            throw std::domain_error("discord_closed_form_xy: correlators give a non-PSD state");
        s_ab -= xlog2x(std::max(0.0, l));
    }
    const double p1 = 0.5 * (1.0 + std::abs(m));
    const double p2 = 0.5 * (1.0 + std::sqrt(c.gxx * c.gxx + m * m));
    const double info = 2.0 * binary_entropy(p1) - s_ab;
    const double j = binary_entropy(p1) - binary_entropy(p2);
    return info - j;
}

static void bell_diagonal_eigenvalues(double c1, double c2, double c3, double lam[4]) {
    lam[0] = 0.25 * (1.0 - c1 - c2 - c3);
    lam[1] = 0.25 * (1.0 - c1 + c2 + c3);
    lam[2] = 0.25 * (1.0 + c1 - c2 + c3);
    lam[3] = 0.25 * (1.0 + c1 + c2 - c3);
    for (int i = 0; i < 4; ++i)
        if (lam[i] < -kPsdTol)
            throw std::invalid_argument("bell-diagonal parameters give a non-PSD state");
}

double classical_correlation_bell_diagonal(double c1, double c2, double c3) {
    double lam[4];
    bell_diagonal_eigenvalues(c1, c2, c3, lam);  // PSD gate
    const double c = std::max({std::abs(c1), std::abs(c2), std::abs(c3)});
    return xlog2x(0.5 * (1.0 - c)) + xlog2x(0.5 * (1.0 + c)) + 1.0;
}

double mutual_information_bell_diagonal(double c1, double c2, double c3) {
    double lam[4];
    bell_diagonal_eigenvalues(c1, c2, c3, lam);
    double s = 2.0;
    for (double l : lam) s += xlog2x(std::max(0.0, l));
    return s;
}

double discord_bell_diagonal(double c1, double c2, double c3) {
    return mutual_information_bell_diagonal(c1, c2, c3) -
           classical_correlation_bell_diagonal(c1, c2, c3);
}

TwoSiteState bell_diagonal_state(double c1, double c2, double c3) {
    Matrix4cd rho = 0.25 * pauli_kron(0, 0);
    rho += 0.25 * c1 * pauli_kron(1, 1);
    rho += 0.25 * c2 * pauli_kron(2, 2);
    rho += 0.25 * c3 * pauli_kron(3, 3);
    return make_two_site(rho);
}

BellDiagonalCoeffs xxz_correlators_from_energy(double eps, double deps_ddelta, double delta) {
    BellDiagonalCoeffs c;
    c.c1 = delta * deps_ddelta - eps;
    c.c2 = c.c1;
    c.c3 = -2.0 * deps_ddelta;
    return c;
}

double concurrence(const TwoSiteState& state) {
    static const Matrix4cd yy = pauli_kron(2, 2);
    const Matrix4cd r = state.rho * yy * state.rho.conjugate() * yy;
    Eigen::ComplexEigenSolver<Matrix4cd> es(r);
    double vals[4];
    for (int i = 0; i < 4; ++i) vals[i] = std::sqrt(std::max(0.0, es.eigenvalues()(i).real()));
    std::sort(vals, vals + 4, std::greater<double>());
    return std::max(0.0, vals[0] - vals[1] - vals[2] - vals[3]);
}

double projected_mutual_information(const TwoSiteState& state, const MeasurementBasis& on_a,
                                    const MeasurementBasis& on_b) {
    const PauliDecomp d = decompose(state.rho);
    const Vector3d na = direction(on_a.theta, on_a.phi);
    const Vector3d nb = direction(on_b.theta, on_b.phi);
    double p[2][2], pa[2] = {0, 0}, pb[2] = {0, 0};
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
            const double sj = j == 0 ? 1.0 : -1.0;
            const double sk = k == 0 ? 1.0 : -1.0;
            p[j][k] = 0.25 * (1.0 + sj * d.a.dot(na) + sk * d.b.dot(nb) +
                              sj * sk * na.dot(d.T * nb));
            p[j][k] = std::max(0.0, p[j][k]);
            pa[j] += p[j][k];
            pb[k] += p[j][k];
        }
    double h_ab = 0.0, h_a = 0.0, h_b = 0.0;
    for (int j = 0; j < 2; ++j) {
        h_a -= xlog2x(pa[j]);
        h_b -= xlog2x(pb[j]);
        for (int k = 0; k < 2; ++k) h_ab -= xlog2x(p[j][k]);
    }
    return h_a + h_b - h_ab;
}

SymmetricDiscordResult symmetric_discord(const TwoSiteState& state) {
    const double info = mutual_information(state);
    SymmetricDiscordResult out;

    const int n_theta = 13, n_phi = 24;
    const double dt = M_PI / (n_theta - 1), dp = 2.0 * M_PI / n_phi;
    int evals = 0;

    struct Cell {
        double value;
        double x[4];
    };
    std::vector<Cell> best;
    auto consider = [&](double value, double ta, double pa, double tb, double pb) {
        best.push_back({value, {ta, pa, tb, pb}});
        std::sort(best.begin(), best.end(),
                  [](const Cell& a, const Cell& b) { return a.value > b.value; });
        if (best.size() > 3) best.pop_back();
    };

    for (int ia = 0; ia < n_theta; ++ia)
        for (int ja = 0; ja < ((ia == 0 || ia == n_theta - 1) ? 1 : n_phi); ++ja)
            for (int ib = 0; ib < n_theta; ++ib)
                for (int jb = 0; jb < ((ib == 0 || ib == n_theta - 1) ? 1 : n_phi); ++jb) {
                    ++evals;
                    const double v = projected_mutual_information(
                        state, {ia * dt, ja * dp}, {ib * dt, jb * dp});
                    consider(v, ia * dt, ja * dp, ib * dt, jb * dp);
                }

    auto objective = [&](const double* x) {
        double ta = x[0], pa = x[1], tb = x[2], pb = x[3];
        canonicalize_angles(ta, pa);
        canonicalize_angles(tb, pb);
        return -projected_mutual_information(state, {ta, pa}, {tb, pb});
    };

    double best_cc = best.front().value;
    std::vector<double> best_x(best.front().x, best.front().x + 4);
    bool refined = false;
    for (const Cell& c : best) {
        NMResult nm = nelder_mead(objective, {c.x[0], c.x[1], c.x[2], c.x[3]},
                                  std::max(dt, dp) / 2.0, 1e-7, 800);
        evals += nm.evaluations;
        if (-nm.value >= best_cc - 1e-12) refined = true;
        if (-nm.value > best_cc) {
            best_cc = -nm.value;
            best_x = nm.x;
        }
    }

    out.value = info - best_cc;
    out.basis_a = canonical_basis(best_x[0], best_x[1]);
    out.basis_b = canonical_basis(best_x[2], best_x[3]);
    out.evaluations = evals;
    out.fallback = !refined;
    return out;
}

TwoSiteState xstate_from_correlators(const CorrelatorSet& c, StateSource source) {
    Matrix4cd rho = 0.25 * pauli_kron(0, 0);
    rho += 0.25 * c.gx * (pauli_kron(1, 0) + pauli_kron(0, 1));
    rho += 0.25 * c.gz * (pauli_kron(3, 0) + pauli_kron(0, 3));
    rho += 0.25 * c.gxx * pauli_kron(1, 1);
    rho += 0.25 * c.gyy * pauli_kron(2, 2);
    rho += 0.25 * c.gzz * pauli_kron(3, 3);
    rho += 0.25 * c.gxz * (pauli_kron(1, 3) + pauli_kron(3, 1));
    return make_two_site(rho, c.r, source);
}

CorrelationReport correlation_report(const TwoSiteState& state, bool with_symmetric) {
    CorrelationReport rep;
    DiscordResult d = quantum_discord(state);
    rep.mutual_information = d.mutual_information;
    rep.classical_correlation = d.classical;
    rep.discord = d.discord;
    rep.discord_upper_bound = d.upper_bound;
    rep.diag = d.diag;
    rep.concurrence = qcorr::concurrence(state);
    if (with_symmetric) rep.symmetric_discord = symmetric_discord(state).value;
    return rep;
}

}  // namespace qcorr

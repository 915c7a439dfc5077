#include "qcorr/ed.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace qcorr {

using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

std::size_t insert_zero_bit(std::size_t x, int pos) {
    const std::size_t lo = x & ((std::size_t(1) << pos) - 1);
    return ((x >> pos) << (pos + 1)) | lo;
}

}  // namespace

HamiltonianMatrix build_hamiltonian(const ChainSpec& raw_spec, Storage storage) {
    raw_spec.validate();
    const ChainSpec spec = to_pauli(raw_spec);
    const int n = spec.n_sites;

    if (storage == Storage::automatic)
        storage = (n <= 10) ? Storage::dense : Storage::sparse;
    if (storage == Storage::dense && n > HamiltonianMatrix::kDenseMaxSites)
        throw std::invalid_argument(
            "build_hamiltonian: dense storage limited to 12 sites; request sparse storage");
    if (n > HamiltonianMatrix::kSparseMaxSites)
        throw std::invalid_argument(
            "build_hamiltonian: chains beyond 20 sites are not supported at desk scale");

    HamiltonianMatrix H;
    H.spec_ = spec;
    H.storage_ = storage;
    const std::size_t dim = std::size_t(1) << n;

    const int n_bonds = (spec.boundary == Boundary::periodic && n > 2) ? n : n - 1;
    for (int b = 0; b < n_bonds; ++b) {
        const int i = b, j = (b + 1) % n;
        HamiltonianMatrix::Bond bond;
        bond.i = i;
        bond.j = j;
        bond.mask = (std::size_t(1) << i) | (std::size_t(1) << j);
        bond.amp_equal = spec.jx - spec.jy;
        bond.amp_diff = spec.jx + spec.jy;
        bond.jz = spec.jz;
        H.bonds_.push_back(bond);
    }

    // Pinning field. Antiferromagnetic in-plane order is staggered; gauge the
    // stagger so the central site points along +x.
    H.hx_site_.assign(n, 0.0);
    if (spec.hx > 0.0) {
        const double dominant = (std::abs(spec.jx) >= std::abs(spec.jy)) ? spec.jx : spec.jy;
        const bool staggered = dominant > 0.0;
        const int center = n / 2;
        for (int i = 0; i < n; ++i) {
            double u = 1.0;
            if (staggered && ((i - center) & 1)) u = -1.0;
            H.hx_site_[i] = spec.hx * u;
        }
    }

    H.diag_.resize(dim);
    for (std::size_t s = 0; s < dim; ++s) {
        double d = 0.0;
        for (const auto& bond : H.bonds_) {
            const int zi = ((s >> bond.i) & 1) ? -1 : 1;
            const int zj = ((s >> bond.j) & 1) ? -1 : 1;
            d += bond.jz * zi * zj;
        }
        const int ups = n - 2 * __builtin_popcountll(s);
        d -= spec.h * ups;
        H.diag_[s] = d;
    }

    if (storage == Storage::dense) {
        MatrixXd M = MatrixXd::Zero(dim, dim);
        for (std::size_t s = 0; s < dim; ++s) M(s, s) = H.diag_[s];
        for (const auto& bond : H.bonds_) {
            for (std::size_t s = 0; s < dim; ++s) {
                const bool equal = (((s >> bond.i) ^ (s >> bond.j)) & 1) == 0;
                M(s ^ bond.mask, s) += equal ? bond.amp_equal : bond.amp_diff;
            }
        }
        for (int i = 0; i < n; ++i) {
            if (H.hx_site_[i] == 0.0) continue;
            const std::size_t m = std::size_t(1) << i;
            for (std::size_t s = 0; s < dim; ++s) M(s ^ m, s) -= H.hx_site_[i];
        }
        H.dense_ = std::move(M);
    }
    return H;
}

const MatrixXd& HamiltonianMatrix::dense() const {
    if (storage_ != Storage::dense)
        throw std::logic_error("HamiltonianMatrix: dense matrix not stored in sparse mode");
    return dense_;
}

void HamiltonianMatrix::apply(const double* x, double* y) const {
    const std::size_t dim = this->dim();
    for (std::size_t s = 0; s < dim; ++s) y[s] = diag_[s] * x[s];
    for (const auto& bond : bonds_) {
        for (std::size_t s = 0; s < dim; ++s) {
            const bool equal = (((s >> bond.i) ^ (s >> bond.j)) & 1) == 0;
            y[s ^ bond.mask] += (equal ? bond.amp_equal : bond.amp_diff) * x[s];
        }
    }
    for (int i = 0; i < spec_.n_sites; ++i) {
        if (hx_site_[i] == 0.0) continue;
        const std::size_t m = std::size_t(1) << i;
        const double f = -hx_site_[i];
        for (std::size_t s = 0; s < dim; ++s) y[s ^ m] += f * x[s];
    }
}

VectorXd HamiltonianMatrix::apply(const VectorXd& x) const {
    VectorXd y(x.size());
    apply(x.data(), y.data());
    return y;
}

GroundStateBundle ground_state(const HamiltonianMatrix& H, double degeneracy_tol) {
    GroundStateBundle out;
    out.spec = H.spec();
    out.degeneracy_tol = degeneracy_tol;
    const std::size_t dim = H.dim();

    if (H.storage() == Storage::dense && dim <= 2048) {
        Eigen::SelfAdjointEigenSolver<MatrixXd> es(H.dense());
        if (es.info() != Eigen::Success)
            throw std::runtime_error("ground_state: dense eigensolver failed");
        for (int k = 0; k < 2; ++k) {
            out.energies.push_back(es.eigenvalues()(k));
            out.states.emplace_back(es.eigenvectors().col(k));
        }
    } else {
        auto apply = [&H](const double* x, double* y) { H.apply(x, y); };
        LanczosResult res = lowest_eigenpairs(apply, dim, 2);
        out.energies = res.eigenvalues;
        out.states = std::move(res.eigenvectors);
    }

    out.energy_density = out.energies[0] / H.n_sites();
    out.gap = out.energies[1] - out.energies[0];
    out.degenerate = out.gap < degeneracy_tol;
    return out;
}

SpinEnsemble thermal_state(const GroundStateBundle& bundle) {
    if (bundle.spec.hx != 0.0)
        throw std::invalid_argument("thermal_state: requires hx == 0 (symmetric Hamiltonian)");
    SpinEnsemble ens;
    ens.spec = bundle.spec;
    if (bundle.degenerate) {
        ens.weights = {0.5, 0.5};
        ens.states = {bundle.states[0], bundle.states[1]};
    } else {
        ens.weights = {1.0};
        ens.states = {bundle.states[0]};
    }
    return ens;
}

GroundStateBundle broken_state(const ChainSpec& spec, Storage storage, double degeneracy_tol) {
    if (spec.hx <= 0.0)
        throw std::invalid_argument("broken_state: requires hx > 0");
    HamiltonianMatrix H = build_hamiltonian(spec, storage);
    return ground_state(H, degeneracy_tol);
}

SpinEnsemble broken_ensemble(const GroundStateBundle& bundle) {
    SpinEnsemble ens;
    ens.spec = bundle.spec;
    ens.weights = {1.0};
    ens.states = {bundle.states[0]};
    return ens;
}

std::pair<int, int> central_pair(int n_sites, int r) {
    if (r < 1 || r >= n_sites) throw std::invalid_argument("central_pair: invalid distance");
    const int i = (n_sites - r) / 2;
    return {i, i + r};
}

TwoSiteState reduce_two_site(const SpinEnsemble& ens, int site_i, int site_j) {
    const int n = ens.spec.n_sites;
    if (site_i < 0 || site_j >= n || site_i >= site_j)
        throw std::out_of_range("reduce_two_site: need 0 <= i < j < n_sites");

    Eigen::Matrix4d rho = Eigen::Matrix4d::Zero();
    const std::size_t rest_dim = std::size_t(1) << (n - 2);
    for (std::size_t t = 0; t < ens.states.size(); ++t) {
        const VectorXd& psi = ens.states[t];
        const double w = ens.weights[t];
        Eigen::Matrix4d acc = Eigen::Matrix4d::Zero();
        for (std::size_t rest = 0; rest < rest_dim; ++rest) {
            const std::size_t base = insert_zero_bit(insert_zero_bit(rest, site_i), site_j);
            double amp[4];
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    amp[2 * a + b] =
                        psi[base | (std::size_t(a) << site_i) | (std::size_t(b) << site_j)];
            for (int p = 0; p < 4; ++p)
                for (int q = 0; q < 4; ++q) acc(p, q) += amp[p] * amp[q];
        }
        rho += w * acc;
    }

    TwoSiteState state;
    state.rho = rho.cast<std::complex<double>>();
    state.r = site_j - site_i;
    state.source = (ens.spec.hx > 0.0) ? StateSource::broken : StateSource::thermal;
    state.validate_and_repair();
    return state;
}

Eigen::Matrix2cd reduce_single_site(const SpinEnsemble& ens, int site) {
    const int n = ens.spec.n_sites;
    if (site < 0 || site >= n) throw std::out_of_range("reduce_single_site: bad site");
    Eigen::Matrix2d rho = Eigen::Matrix2d::Zero();
    const std::size_t rest_dim = std::size_t(1) << (n - 1);
    for (std::size_t t = 0; t < ens.states.size(); ++t) {
        const VectorXd& psi = ens.states[t];
        const double w = ens.weights[t];
        for (std::size_t rest = 0; rest < rest_dim; ++rest) {
            const std::size_t base = insert_zero_bit(rest, site);
            const double a0 = psi[base];
            const double a1 = psi[base | (std::size_t(1) << site)];
            rho(0, 0) += w * a0 * a0;
            rho(0, 1) += w * a0 * a1;
            rho(1, 0) += w * a1 * a0;
            rho(1, 1) += w * a1 * a1;
        }
    }
    return rho.cast<std::complex<double>>();
}

CorrelatorSet correlators_at(const SpinEnsemble& ens, int site_i, int site_j) {
    return correlators_of(reduce_two_site(ens, site_i, site_j));
}

CorrelatorSet correlators(const SpinEnsemble& ens, int r) {
    auto [i, j] = central_pair(ens.spec.n_sites, r);
    return correlators_at(ens, i, j);
}

void dump_two_site_text(const TwoSiteState& state, std::ostream& os) {
    os << "r " << state.r << " source " << static_cast<int>(state.source) << "\n";
    char buf[64];
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            std::snprintf(buf, sizeof buf, "%.17g %.17g", state.rho(i, j).real(),
                          state.rho(i, j).imag());
            os << buf << (j == 3 ? "" : "  ");
        }
        os << "\n";
    }
}

TwoSiteState load_two_site_text(std::istream& is) {
    TwoSiteState state;
    std::string tag;
    int src = 0;
    is >> tag >> state.r >> tag >> src;
    state.source = static_cast<StateSource>(src);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double re, im;
            is >> re >> im;
            state.rho(i, j) = {re, im};
        }
    if (!is) throw std::runtime_error("load_two_site_text: malformed fixture");
    state.validate_and_repair();
    return state;
}

}  // namespace qcorr

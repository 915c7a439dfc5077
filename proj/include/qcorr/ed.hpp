#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <vector>

#include "qcorr/chain_spec.hpp"
#include "qcorr/lanczos.hpp"
#include "qcorr/two_site_state.hpp"

namespace qcorr {

enum class Storage { automatic, dense, sparse };

/// Finite-chain XYZ Hamiltonian in the sigma-z product basis (bit i of the
/// basis index = site i, bit value 0 = |0> = spin up). The matrix is real
/// symmetric in this basis. Sparse mode stores only the term list and applies
/// the operator matrix-free.
class HamiltonianMatrix {
public:
    static constexpr int kDenseMaxSites = 12;
    static constexpr int kSparseMaxSites = 20;

    int n_sites() const { return spec_.n_sites; }
    std::size_t dim() const { return std::size_t(1) << spec_.n_sites; }
    Storage storage() const { return storage_; }
    const ChainSpec& spec() const { return spec_; }  // pauli-canonical copy

    const Eigen::MatrixXd& dense() const;  // throws in sparse mode

    void apply(const double* x, double* y) const;  // y = H x
    Eigen::VectorXd apply(const Eigen::VectorXd& x) const;

private:
    friend HamiltonianMatrix build_hamiltonian(const ChainSpec&, Storage);
    struct Bond {
        std::size_t mask;
        int i, j;
        double amp_equal;  // jx - jy  (bits equal under the flip)
        double amp_diff;   // jx + jy
        double jz;
    };
    ChainSpec spec_;
    Storage storage_ = Storage::sparse;
    std::vector<Bond> bonds_;
    std::vector<double> hx_site_;  // signed per-site pinning field
    Eigen::VectorXd diag_;
    Eigen::MatrixXd dense_;
};

/// Realizes the spec (converted internally to the pauli convention).
/// For antiferromagnetic in-plane couplings the pinning field is staggered to
/// match the ordered pattern, oriented so the central site magnetizes along +x.
/// Throws std::invalid_argument when n_sites exceeds the storage limit.
HamiltonianMatrix build_hamiltonian(const ChainSpec& spec,
                                    Storage storage = Storage::automatic);

struct GroundStateBundle {
    ChainSpec spec;                            // pauli-canonical
    std::vector<double> energies;              // two lowest, nondecreasing
    std::vector<Eigen::VectorXd> states;       // unit-normalized
    double energy_density = 0.0;               // energies[0] / n_sites
    double gap = 0.0;                          // energies[1] - energies[0]
    bool degenerate = false;                   // gap < degeneracy_tol
    double degeneracy_tol = 1e-8;
};

/// Two lowest eigenpairs. Dense diagonalization for small dimensions,
/// deflated Lanczos otherwise. Throws std::runtime_error on solver failure.
GroundStateBundle ground_state(const HamiltonianMatrix& H, double degeneracy_tol = 1e-8);

/// A T->0 state: either the unique ground state or the equal-weight mixture
/// of a (quasi)degenerate doublet.
struct SpinEnsemble {
    ChainSpec spec;
    std::vector<double> weights;
    std::vector<Eigen::VectorXd> states;
};

/// Symmetry-preserving T->0 state. Requires hx == 0; when the bundle is
/// flagged degenerate the two lowest states enter with weight 1/2 each.
SpinEnsemble thermal_state(const GroundStateBundle& bundle);

/// Ground state with the Z2 symmetry explicitly broken by the pinning field.
/// Requires spec.hx > 0.
GroundStateBundle broken_state(const ChainSpec& spec, Storage storage = Storage::automatic,
                               double degeneracy_tol = 1e-8);

/// Single-state ensemble holding the pinned ground state.
SpinEnsemble broken_ensemble(const GroundStateBundle& bundle);

/// Partial trace onto sites (i, j), 0 <= i < j < n_sites.
TwoSiteState reduce_two_site(const SpinEnsemble& ens, int site_i, int site_j);

Eigen::Matrix2cd reduce_single_site(const SpinEnsemble& ens, int site);

/// Pair (i, i+r) centered in the chain.
std::pair<int, int> central_pair(int n_sites, int r);

/// Correlators of the centered pair at distance r.
CorrelatorSet correlators(const SpinEnsemble& ens, int r);
CorrelatorSet correlators_at(const SpinEnsemble& ens, int site_i, int site_j);

// Text fixture dump: row-major, "re im" pairs at 17 significant digits.
void dump_two_site_text(const TwoSiteState& state, std::ostream& os);
TwoSiteState load_two_site_text(std::istream& is);

}  // namespace qcorr

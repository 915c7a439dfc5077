#pragma once

#include <map>
#include <optional>
#include <string>

namespace qcorr {

enum class Boundary { periodic, open };
enum class Convention { pauli, spin_half };

/// Parameters of a finite XYZ chain in a transverse field, plus an optional
/// longitudinal pinning field used to break the Z2 symmetry explicitly.
///
/// Two parameter conventions are supported for the same physical operator:
///   pauli:     H = sum_bonds [jx XX + jy YY + jz ZZ] - h sum Z - hx sum X
///   spin_half: H = (1/2) sum_bonds [jx SxSx + jy SySy + jz SzSz]
///                  - h sum Sz - hx sum Sx,   with S = sigma/2
/// The spin_half parameters map onto pauli ones as j -> j/8, h -> h/2.
struct ChainSpec {
    double jx = 0.0;
    double jy = 0.0;
    double jz = 0.0;
    double h = 0.0;
    double hx = 0.0;  // >= 0; > 0 only for broken-symmetry runs
    int n_sites = 2;
    Boundary boundary = Boundary::periodic;
    Convention convention = Convention::pauli;

    // Throws std::invalid_argument on violated invariants.
    void validate() const;
};

enum class PresetTag { xy, ising, xxz, xyx, custom };

/// Named model families. xy(gamma) is the anisotropic XY chain normalized so
/// that in the pauli convention the critical field is h_c = 1 and the
/// factorizing field is h_f = sqrt(1 - gamma^2). ising == xy(1). xyx is the
/// antiferromagnetic chain with couplings in ratio 1 : 1/4 : 1, kept in the
/// spin_half convention where its field landmarks sit near h ~ 3.2.
struct ModelPreset {
    PresetTag tag = PresetTag::custom;
    double gamma = 1.0;  // xy anisotropy, 0 <= gamma <= 1
    double delta = 0.0;  // xxz anisotropy

    static ModelPreset xy(double gamma);
    static ModelPreset ising();
    static ModelPreset xxz(double delta);
    static ModelPreset xyx();

    /// Materializes a ChainSpec in the preset's canonical convention.
    ChainSpec chain(int n_sites, double h, double hx = 0.0,
                    Boundary boundary = Boundary::periodic) const;

    std::string name() const;
};

/// Re-expresses the same operator in the target convention. Ground states and
/// all reduced density matrices are unchanged.
ChainSpec convert_convention(const ChainSpec& spec, Convention target);

/// Internal canonical form used by the diagonalization engine.
ChainSpec to_pauli(const ChainSpec& spec);

/// Field at which the ground state factorizes into a product state,
/// in the same field units as spec.h. Absent when no such field exists
/// (negative radicand). Antiferromagnetic in-plane couplings are handled by
/// the spectrum-preserving sublattice rotation jx,jy -> -jx,-jy.
std::optional<double> factorizing_field(const ChainSpec& spec);

/// Location of the order-disorder quantum critical point for the supported
/// presets, in the preset's canonical field units. The xyx value is an
/// advisory constant used to seed search windows, not an exact result.
std::optional<double> critical_field(const ModelPreset& preset);

// --- key=value serialization (config files) ---------------------------------

std::string to_string(Boundary b);
std::string to_string(Convention c);
std::string to_string(PresetTag t);
Boundary boundary_from_string(const std::string& s);
Convention convention_from_string(const std::string& s);
PresetTag preset_tag_from_string(const std::string& s);

/// Exact field names: jx, jy, jz, h, hx, n_sites, boundary, convention.
std::map<std::string, std::string> chain_spec_to_kv(const ChainSpec& spec);
ChainSpec chain_spec_from_kv(const std::map<std::string, std::string>& kv);

}  // namespace qcorr

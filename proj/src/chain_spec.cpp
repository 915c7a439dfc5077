#include "qcorr/chain_spec.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qcorr {

void ChainSpec::validate() const {
    if (n_sites < 2) throw std::invalid_argument("ChainSpec: n_sites must be >= 2");
    if (hx < 0.0) throw std::invalid_argument("ChainSpec: hx must be >= 0");
    if (!std::isfinite(jx) || !std::isfinite(jy) || !std::isfinite(jz) ||
        !std::isfinite(h) || !std::isfinite(hx))
        throw std::invalid_argument("ChainSpec: non-finite parameter");
}

ModelPreset ModelPreset::xy(double gamma) {
    if (gamma < 0.0 || gamma > 1.0)
        throw std::invalid_argument("xy preset requires 0 <= gamma <= 1");
    ModelPreset p;
    p.tag = PresetTag::xy;
    p.gamma = gamma;
    return p;
}

ModelPreset ModelPreset::ising() {
    ModelPreset p = xy(1.0);
    p.tag = PresetTag::ising;
    return p;
}

ModelPreset ModelPreset::xxz(double delta) {
    ModelPreset p;
    p.tag = PresetTag::xxz;
    p.delta = delta;
    return p;
}

ModelPreset ModelPreset::xyx() {
    ModelPreset p;
    p.tag = PresetTag::xyx;
    return p;
}

ChainSpec ModelPreset::chain(int n_sites, double h, double hx, Boundary boundary) const {
    ChainSpec s;
    s.n_sites = n_sites;
    s.h = h;
    s.hx = hx;
    s.boundary = boundary;
    switch (tag) {
        case PresetTag::xy:
        case PresetTag::ising:
            s.jx = -(1.0 + gamma) / 2.0;
            s.jy = -(1.0 - gamma) / 2.0;
            s.jz = 0.0;
            s.convention = Convention::pauli;
            break;
        case PresetTag::xxz:
            // Normalized so the ground-state energy density obeys
            // eps = -(gxx + gyy + delta * gzz) / 2 on a ring.
            s.jx = -0.5;
            s.jy = -0.5;
            s.jz = -0.5 * delta;
            s.convention = Convention::pauli;
            break;
        case PresetTag::xyx:
            // Couplings in ratio 1 : 1/4 : 1. The energy unit is fixed so the
            // spin_half field landmarks land at h_f ~ 3.16 and h_c ~ 3.21.
            s.jx = 4.0;
            s.jy = 1.0;
            s.jz = 4.0;
            s.convention = Convention::spin_half;
            break;
        case PresetTag::custom:
            throw std::invalid_argument("custom preset carries no couplings");
    }
    s.validate();
    return s;
}

std::string ModelPreset::name() const {
    char buf[64];
    switch (tag) {
        case PresetTag::xy:
            std::snprintf(buf, sizeof buf, "xy(gamma=%g)", gamma);
            return buf;
        case PresetTag::ising: return "ising";
        case PresetTag::xxz:
            std::snprintf(buf, sizeof buf, "xxz(delta=%g)", delta);
            return buf;
        case PresetTag::xyx: return "xyx";
        case PresetTag::custom: return "custom";
    }
    return "?";
}

ChainSpec to_pauli(const ChainSpec& spec) {
    if (spec.convention == Convention::pauli) return spec;
    ChainSpec p = spec;
    p.jx = spec.jx / 8.0;
    p.jy = spec.jy / 8.0;
    p.jz = spec.jz / 8.0;
    p.h = spec.h / 2.0;
    p.hx = spec.hx / 2.0;
    p.convention = Convention::pauli;
    return p;
}

ChainSpec convert_convention(const ChainSpec& spec, Convention target) {
    spec.validate();
    if (spec.convention == target) return spec;
    if (target == Convention::pauli) return to_pauli(spec);
    ChainSpec s = spec;  // pauli -> spin_half
    s.jx = spec.jx * 8.0;
    s.jy = spec.jy * 8.0;
    s.jz = spec.jz * 8.0;
    s.h = spec.h * 2.0;
    s.hx = spec.hx * 2.0;
    s.convention = Convention::spin_half;
    return s;
}

std::optional<double> factorizing_field(const ChainSpec& spec) {
    const ChainSpec p = to_pauli(spec);
    double jx = p.jx, jy = p.jy;
    // Gauge the dominant in-plane coupling ferromagnetic; the sublattice
    // rotation (x,y -> -x,-y on odd sites) leaves the spectrum unchanged.
    const double dominant = (std::abs(jx) >= std::abs(jy)) ? jx : jy;
    if (dominant > 0.0) {
        jx = -jx;
        jy = -jy;
    }
    const double radicand = (jx - p.jz) * (jy - p.jz);
    if (radicand < 0.0) return std::nullopt;
    double hf = 2.0 * std::sqrt(radicand);
    if (spec.convention == Convention::spin_half) hf *= 2.0;
    return hf;
}

std::optional<double> critical_field(const ModelPreset& preset) {
    switch (preset.tag) {
        case PresetTag::ising: return 1.0;
        case PresetTag::xy:
            if (preset.gamma > 0.0) return 1.0;
            return std::nullopt;  // gamma = 0 is BKT, out of scope
        case PresetTag::xyx: return 3.21;
        default: return std::nullopt;
    }
}

std::string to_string(Boundary b) { return b == Boundary::periodic ? "periodic" : "open"; }
std::string to_string(Convention c) { return c == Convention::pauli ? "pauli" : "spin_half"; }
std::string to_string(PresetTag t) {
    switch (t) {
        case PresetTag::xy: return "xy";
        case PresetTag::ising: return "ising";
        case PresetTag::xxz: return "xxz";
        case PresetTag::xyx: return "xyx";
        case PresetTag::custom: return "custom";
    }
    return "?";
}

Boundary boundary_from_string(const std::string& s) {
    if (s == "periodic") return Boundary::periodic;
    if (s == "open") return Boundary::open;
    throw std::invalid_argument("unknown boundary: " + s);
}

Convention convention_from_string(const std::string& s) {
    if (s == "pauli") return Convention::pauli;
    if (s == "spin_half") return Convention::spin_half;
    throw std::invalid_argument("unknown convention: " + s);
}

PresetTag preset_tag_from_string(const std::string& s) {
    if (s == "xy") return PresetTag::xy;
    if (s == "ising") return PresetTag::ising;
    if (s == "xxz") return PresetTag::xxz;
    if (s == "xyx") return PresetTag::xyx;
    if (s == "custom") return PresetTag::custom;
    throw std::invalid_argument("unknown preset: " + s);
}

static std::string fmt_g17(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::map<std::string, std::string> chain_spec_to_kv(const ChainSpec& spec) {
    return {
        {"jx", fmt_g17(spec.jx)},       {"jy", fmt_g17(spec.jy)},
        {"jz", fmt_g17(spec.jz)},       {"h", fmt_g17(spec.h)},
        {"hx", fmt_g17(spec.hx)},       {"n_sites", std::to_string(spec.n_sites)},
        {"boundary", to_string(spec.boundary)},
        {"convention", to_string(spec.convention)},
    };
}

ChainSpec chain_spec_from_kv(const std::map<std::string, std::string>& kv) {
    ChainSpec s;
    auto get = [&](const char* key) -> const std::string* {
        auto it = kv.find(key);
        return it == kv.end() ? nullptr : &it->second;
    };
    try {
        if (auto* v = get("jx")) s.jx = std::stod(*v);
        if (auto* v = get("jy")) s.jy = std::stod(*v);
        if (auto* v = get("jz")) s.jz = std::stod(*v);
        if (auto* v = get("h")) s.h = std::stod(*v);
        if (auto* v = get("hx")) s.hx = std::stod(*v);
        if (auto* v = get("n_sites")) s.n_sites = std::stoi(*v);
    } catch (const std::exception&) {
        throw std::invalid_argument("chain_spec_from_kv: malformed numeric value");
    }
    if (auto* v = get("boundary")) s.boundary = boundary_from_string(*v);
    if (auto* v = get("convention")) s.convention = convention_from_string(*v);
    s.validate();
    return s;
}

}  // namespace qcorr

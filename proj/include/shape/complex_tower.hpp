#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shape/simplicial_complex.hpp"

namespace shape {

/// Claim about the infinite continuation of a truncated tower. Certificates
/// are checked against the truncation before they are used; a finite prefix
/// on its own never yields a claim about the infinite tower.
struct TowerCertificate {
    enum class Kind { None, Periodic, ShiftFamily };

    Kind kind = Kind::None;
    /// First level from which the pattern holds.
    std::size_t offset = 0;
    /// ShiftFamily: free rank lost per level.
    std::size_t drop = 1;
    /// Display names for lim^1 groups, keyed by homology dimension.
    std::map<int, std::string> lim1_labels;

    friend bool operator==(const TowerCertificate&, const TowerCertificate&) = default;
};

std::string to_string(TowerCertificate::Kind k);
std::optional<TowerCertificate::Kind> certificate_kind_from_string(const std::string& s);

/// Truncated inverse sequence  ... -> R_2 -> R_1 -> R_0  of finite complexes.
///
/// levels[0] is the coarsest level; bonds[i] maps levels[i + 1] to levels[i].
/// marked_K / marked_L, when present, hold one subcomplex per level.
struct ComplexTower {
    std::vector<SimplicialComplex> levels;
    std::vector<SimplicialMap> bonds;
    std::optional<std::vector<Subcomplex>> marked_K;
    std::optional<std::vector<Subcomplex>> marked_L;
    TowerCertificate certificate;

    std::size_t depth() const { return levels.size(); }

    /// Shape mismatches between levels, bonds and markings; nullopt if consistent.
    std::optional<std::string> structural_error() const;

    friend bool operator==(const ComplexTower&, const ComplexTower&) = default;
};

/// K <- K <- ... with identity bonds, K_i = L_i = K and a periodic certificate.
ComplexTower constant_tower(const SimplicialComplex& k, std::size_t depth);

}  // namespace shape

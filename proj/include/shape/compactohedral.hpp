#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shape/complex_tower.hpp"

namespace shape {

enum class Variant { Compactohedral, WeaklyCompactohedral, PreCompactohedral, WeaklyPreCompactohedral };

std::string to_string(Variant v);
std::optional<Variant> variant_from_string(const std::string& s);
/// Axiom tags checked by the variant, e.g. {"C0", "C1", "C2", "C3"}.
std::vector<std::string> axioms(Variant v);

struct InteriorCheck {
    bool holds = true;
    /// A simplex of the ambient complex containing a simplex of A but not in B.
    std::optional<Simplex> witness;
};

/// Star condition: every simplex of k having a face in a lies in b.
/// Throws std::invalid_argument if a or b is not a face-closed subcomplex of k.
InteriorCheck contained_in_interior(const Subcomplex& a, const Subcomplex& b, const SimplicialComplex& k);

struct Violation {
    std::string axiom;
    std::size_t level = 0;
    /// Simplex of levels[level]; empty when the axiom concerns the whole level.
    Simplex witness;
    std::string message;
};

struct ValidationReport {
    Variant variant = Variant::Compactohedral;
    std::vector<Violation> violations;

    bool passed() const { return violations.empty(); }
};

/// Bond-wise checks; C2 and its variants are skipped at a bond where the
/// corresponding inclusion (C1 or the first half of C2') already fails.
/// Throws std::invalid_argument when a required marking is missing or the
/// tower is structurally inconsistent.
ValidationReport validate(const ComplexTower& t, Variant v);

/// Subcomplex of the simplexes of f.source() whose image lies in `sub`.
Subcomplex preimage(const SimplicialMap& f, const Subcomplex& sub);

/// Copy of t with L_0 = R_0 and L_{i+1} = preimage of K_i under bonds[i].
ComplexTower with_preimage_markings(const ComplexTower& t);

}  // namespace shape

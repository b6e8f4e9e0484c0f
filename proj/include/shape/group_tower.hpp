#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "shape/abelian_group.hpp"
#include "shape/complex_tower.hpp"

namespace shape {

/// Truncated inverse sequence of f.g. abelian groups.
///
/// levels[0] is the coarsest level; bonds[i] maps levels[i + 1] to levels[i].
/// A Periodic certificate asserts that from `offset` on every level has the
/// same type and every bond is bonds[offset], up to the sign of each canonical
/// generator. A ShiftFamily certificate asserts that from `offset` on the
/// levels are free, the bonds are injective and each cokernel is free of rank
/// `drop`. Both need at least one bond at the offset to be checkable.
struct GroupTower {
    std::vector<GroupPtr> levels;
    std::vector<GroupHom> bonds;
    TowerCertificate certificate;

    std::size_t depth() const { return levels.size(); }

    std::optional<std::string> structural_error() const;
    /// nullopt when the certificate is None or holds on the truncation.
    std::optional<std::string> certificate_error() const;
};

/// Forward system levels[0] -> levels[1] -> ...; bonds[i]: levels[i] -> levels[i + 1].
struct DirectSystem {
    std::vector<GroupPtr> levels;
    std::vector<GroupHom> bonds;
    TowerCertificate certificate;
};

struct MLStatus {
    enum class Verdict { Stabilized, StrictlyDecreasing, UndeterminedWithinWindow };

    Verdict verdict = Verdict::UndeterminedWithinWindow;
    /// Stabilized: first k with image(k) == image(k + 1).
    std::size_t index = 0;
    /// image_chain[k] = image of levels[level + k] in levels[level].
    std::vector<FGAbelianGroup> image_chain;
    std::string reason;
};

struct Lim1Class {
    enum class Kind { Zero, Uncountable, Undetermined };

    Kind kind = Kind::Undetermined;
    std::string reason;
    std::optional<std::string> label;
};

std::string to_string(MLStatus::Verdict v);
std::string to_string(Lim1Class::Kind k);

struct NotStable {
    std::string diagnostics;
};

struct NotFinitelyStable {
    /// Canonical type of every level, in order.
    std::vector<FGAbelianGroup> chain;
    std::string diagnostics;
};

struct PeriodicLim {
    FGAbelianGroup group;
    /// False when only bounds on the free rank were obtained; `group` then
    /// carries the lower bound and `free_rank_upper` the upper one.
    bool exact = true;
    std::size_t free_rank_upper = 0;
};

/// Levelwise H_n with induced bonds. The complex tower's certificate is kept
/// only if it verifies on the result. Levels are computed in parallel.
GroupTower homology_tower(const ComplexTower& t, int n, bool reduced = false);
/// Same result, one level after another.
GroupTower homology_tower_serial(const ComplexTower& t, int n, bool reduced = false);

/// Levelwise H^n with bonds p_i^*: H^n(levels[i]) -> H^n(levels[i + 1]).
DirectSystem cohomology_system(const ComplexTower& t, int n);

/// Images of levels[level + k] in levels[level] for k < window. Certified
/// towers may continue past the window when the certificate forces the chain
/// to stop. Throws std::out_of_range if level + window exceeds the depth of an
/// uncertified tower, std::invalid_argument if the certificate fails.
MLStatus ml_status(const GroupTower& t, std::size_t level, std::size_t window);

/// Certified towers are decided at the certificate offset. Uncertified ones
/// are Zero when every checkable level stabilizes and Undetermined otherwise.
Lim1Class lim1_class(const GroupTower& t, std::size_t window);

/// The stable image, provided every checkable level stabilizes and the last
/// bonds restrict to isomorphisms between stable images.
std::variant<FGAbelianGroup, NotStable> stable_lim(const GroupTower& t, std::size_t window);

/// lim of G <-A- G <-A- ... . Throws if A is not an endomorphism of G.
PeriodicLim periodic_lim(const GroupPtr& g, const GroupHom& a);

/// The last level, provided the last min(window, bonds) bonds are isomorphisms.
std::variant<FGAbelianGroup, NotFinitelyStable> colim_direct_system(const DirectSystem& s, std::size_t window);

}  // namespace shape

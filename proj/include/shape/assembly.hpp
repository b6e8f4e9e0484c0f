#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "shape/group_tower.hpp"

namespace shape {

/// A mathematical precondition of an operation does not hold.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct UnresolvedExtension {};
struct UncountableViaLeft {};

/// 0 -> left -> middle -> right -> 0.
struct SESReport {
    int dimension = 0;
    bool reduced = false;
    bool cohomology = false;
    Lim1Class left;
    std::variant<FGAbelianGroup, NotStable> right;
    std::variant<FGAbelianGroup, UnresolvedExtension, UncountableViaLeft> middle;
    /// Which certificates and rules produced each end.
    std::vector<std::string> provenance;
};

/// Levelwise theory feeding the reports; integral simplicial homology by default.
using TowerFunctor = std::function<GroupTower(const ComplexTower&, int, bool)>;

struct ReportOptions {
    std::size_t window = 2;
    /// Skip the compactohedral check and treat the tower as a resolution.
    bool trusted = false;
    TowerFunctor theory = [](const ComplexTower& t, int n, bool reduced) { return homology_tower(t, n, reduced); };
};

/// Throws PreconditionError unless some compactohedral variant passes.
void require_resolution(const ComplexTower& t);

/// left = lim^1 class of H_{n+1}, right = lim of H_n (reduced when n = 0).
SESReport steenrod_report(const ComplexTower& t, int n, const ReportOptions& options = {});

/// colim of H^n(R_i) along the restriction maps.
std::variant<FGAbelianGroup, NotFinitelyStable> cech_cohomology_report(const ComplexTower& t, int n,
                                                                       const ReportOptions& options = {});

/// Increasing stages K_0 <= K_1 <= ... of `ambient`.
struct Filtration {
    SimplicialComplex ambient;
    std::vector<Subcomplex> stages;
};

/// Inverse tower H^n(K_0) <- H^n(K_1) <- ... of restriction maps, continued by
/// `extra` copies of the last stage and certified eventually constant.
GroupTower restriction_tower(const Filtration& f, int n, std::size_t extra);

/// left = lim^1 class of H^{n-1}, right = lim of H^n, the finite filtration read
/// as eventually constant. Throws PreconditionError with a witness when some
/// stage is not in the interior of the next one inside the last stage.
SESReport petkova_report(const Filtration& f, int n, std::size_t window = 2);

}  // namespace shape

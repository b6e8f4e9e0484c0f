#pragma once

#include <vector>

#include "shape/complex_tower.hpp"
#include "shape/simplicial_complex.hpp"

namespace shape {

struct MappingCylinder {
    SimplicialComplex complex;
    SimplicialMap source_inclusion;
    SimplicialMap target_inclusion;
    /// Collapse onto the target copy; retraction o source_inclusion = f.
    SimplicialMap retraction;
};

/// Order-complex prism: for every source simplex v_0 < ... < v_k and every j
/// the simplex {v_0..v_j} u f{v_j..v_k}, glued to the target. Source copies are
/// labelled "s:<v>", target copies "t:<w>". Throws if f is not simplicial.
MappingCylinder mapping_cylinder(const SimplicialMap& f);

struct Telescope {
    SimplicialComplex complex;
    /// level_inclusions[i]: levels[i] -> complex, vertex v labelled "L<i>:<v>".
    std::vector<SimplicialMap> level_inclusions;
};

/// MC(p_0) u_{R_1} MC(p_1) u ... u MC(p_{n-1}); deformation retracts onto level 0.
/// Throws std::out_of_range if n is beyond the truncation.
Telescope finite_telescope(const ComplexTower& tower, std::size_t n);

/// finite_telescope(tower, n) with a cone on the level-n copy (apex "*").
/// Throws std::invalid_argument for n = 0.
SimplicialComplex pinched_telescope(const ComplexTower& tower, std::size_t n);

}  // namespace shape

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "shape/complex_tower.hpp"

namespace shape {

struct GalleryParams {
    /// 0 selects depth + 1.
    std::size_t teeth = 0;
    std::size_t p = 2;
    std::size_t depth = 3;
};

/// Comb with `teeth` teeth: level i keeps the bottom edges below the teeth
/// j > i (1-based) and the flea edge, so H_1 has rank teeth - 1 - i and the
/// inclusions are shift inclusions. K_i is the bottom path plus the lowest
/// depth - i edges of every tooth it meets. Certified ShiftFamily.
ComplexTower comb_tower(std::size_t teeth, std::size_t depth);

/// Polygons with 3 p^i vertices, bond k -> k mod 3 p^i (degree p). K_i = L_i = R_i. Certified Periodic.
ComplexTower solenoid_tower(std::size_t p, std::size_t depth);

/// (3 + i)-gons, each bond collapsing the last edge (degree 1). K_i = L_i = R_i. Certified Periodic.
ComplexTower warsaw_tower(std::size_t depth);

/// Planar comb accumulating at two points (0, +-Y): vertical teeth at x = 1..teeth
/// from -Y to Y with Y = teeth + 2, plus two triangulated l-infinity boxes of
/// half-width teeth - i about the accumulation points. K_i is the pair of boxes;
/// bonds are inclusions. teeth == 0 selects depth + 1; requires teeth >= depth.
ComplexTower two_fleas_tower(std::size_t depth, std::size_t teeth = 0);

/// two_fleas_tower broken in exactly one axiom: "C1", "C2" or "C3". Needs depth >= 2.
ComplexTower two_fleas_with_violation(std::size_t depth, std::string_view axiom, std::size_t teeth = 0);

std::vector<std::string> gallery_families();
/// Dispatches on "comb", "solenoid", "warsaw", "two_fleas".
ComplexTower build_gallery(std::string_view family, const GalleryParams& params);

}  // namespace shape

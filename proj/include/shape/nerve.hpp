#pragma once

#include <gmpxx.h>

#include <vector>

#include "shape/complex_tower.hpp"

namespace shape {

using Rational = mpq_class;
using Point = std::vector<Rational>;

/// Finite sample with exact coordinates; compactum_mark indexes the points
/// standing for the compactum.
struct PointSample {
    std::vector<Point> points;
    std::vector<std::size_t> compactum_mark;

    /// Throws std::invalid_argument on ragged coordinates or bad marks.
    void check() const;
};

/// Closed l-infinity ball about a sample point.
struct Ball {
    std::size_t center = 0;
    Rational radius;

    friend bool operator==(const Ball&, const Ball&) = default;
};

struct BallCover {
    std::vector<Ball> elements;

    friend bool operator==(const BallCover&, const BallCover&) = default;
};

/// Max-coordinate distance.
Rational distance(const Point& a, const Point& b);

/// Sample indices inside the ball, ascending.
std::vector<std::size_t> trace(const PointSample& s, const Ball& b);

/// min over sample points x of max over elements containing x of (r - d(x, c)).
/// Throws std::invalid_argument if some point lies in no element.
Rational lebesgue_number(const PointSample& s, const BallCover& c);

/// One vertex "U<i>" per element; a simplex for every set of elements sharing a sample point.
SimplicialComplex nerve(const BallCover& c, const PointSample& s);

/// Each fine element goes to the least-index coarse element whose trace
/// contains its trace. Throws std::invalid_argument when some fine element
/// has no such coarse element.
SimplicialMap refinement_map(const BallCover& fine, const BallCover& coarse, const PointSample& s);

/// f and g agree up to contiguity: f(sigma) u g(sigma) is a simplex for every sigma.
bool are_contiguous(const SimplicialMap& f, const SimplicialMap& g);

/// Level i covers the sample by the balls of radius radii[i] about marked
/// points and the balls of radius `fine` about unmarked points farther than
/// radii[i] - fine from the mark, which makes each level refine the previous
/// one. Bonds are refinement maps; the tower is uncertified.
/// Throws std::invalid_argument for an empty mark, non-decreasing or
/// non-positive radii, or a non-positive fine radius.
ComplexTower cech_tower(const PointSample& s, const std::vector<Rational>& radii, const Rational& fine);

/// The cover used at one level of cech_tower.
BallCover cech_cover(const PointSample& s, const Rational& radius, const Rational& fine);

}  // namespace shape

#pragma once

#include <optional>
#include <vector>

#include "shape/integer_matrix.hpp"

namespace shape {

/// U * M * V = D with U, V unimodular and D in Smith normal form.
///
/// D's diagonal is nonnegative, each nonzero entry divides the next and the
/// zeros trail. `V_inverse` is tracked alongside V so that callers can change
/// coordinates in both directions without a second solve.
struct SmithDecomposition {
    IntegerMatrix U;
    IntegerMatrix D;
    IntegerMatrix V;
    IntegerMatrix V_inverse;

    std::size_t rank() const;
    std::vector<Integer> invariant_factors() const;  // nonzero diagonal, in order
};

/// OpenMP kernel. Row and column eliminations are applied in parallel once
/// the matrix is large enough to amortise the fork; small inputs run serially
/// through the same code path.
SmithDecomposition smith_normal_form(const IntegerMatrix& m);

/// Plain serial reduction, one elementary operation at a time. Kept as the
/// reference the kernel is tested and benchmarked against.
SmithDecomposition smith_normal_form_reference(const IntegerMatrix& m);

std::size_t rank(const IntegerMatrix& m);

/// Columns form a Z-basis of {x : m x = 0}.
IntegerMatrix kernel_basis(const IntegerMatrix& m);

/// Some integer x with m x = b, or nullopt when none exists.
std::optional<std::vector<Integer>> solve_integer(const IntegerMatrix& m, const std::vector<Integer>& b);

/// Factors m once and answers repeated solve queries against it.
class IntegerSolver {
public:
    explicit IntegerSolver(const IntegerMatrix& m);
    std::optional<std::vector<Integer>> solve(const std::vector<Integer>& b) const;

private:
    SmithDecomposition snf_;
    std::size_t rank_;
};

}  // namespace shape

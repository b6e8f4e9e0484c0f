#pragma once

#include <vector>

#include "shape/abelian_group.hpp"
#include "shape/simplicial_complex.hpp"

namespace shape {

/// A (co)homology group together with the chain-level data needed to push
/// classes along maps.
///
/// The group is presented on a Z-basis of the (co)cycles; relations are the
/// (co)boundaries written in that basis.
struct HomologyResult {
    GroupPtr group;
    /// One integer (co)chain per canonical summand of `group`.
    std::vector<std::vector<Integer>> cycle_representatives;

    /// Columns are the presentation generators as (co)chains.
    IntegerMatrix cycle_basis;
    /// Coordinates of a (co)cycle in cycle_basis; only meaningful on (co)cycles.
    IntegerMatrix chain_to_presentation;

    int dimension = 0;
    bool reduced = false;
    bool cohomology = false;

    /// Presentation coordinates of a (co)cycle.
    std::vector<Integer> classify(const std::vector<Integer>& cycle) const;
};

/// ker d_n / im d_{n+1}; `reduced` augments d_0 with a row of ones.
HomologyResult homology(const SimplicialComplex& k, int n, bool reduced = false);

/// ker delta^n / im delta^{n-1} with delta = transposed boundary.
HomologyResult cohomology_result(const SimplicialComplex& k, int n);
FGAbelianGroup cohomology(const SimplicialComplex& k, int n);

/// f_*: H_n(source) -> H_n(target). Throws if f is not simplicial.
GroupHom induced_map(const SimplicialMap& f, int n, bool reduced = false);
GroupHom induced_map(const SimplicialMap& f, const HomologyResult& source, const HomologyResult& target);

/// f^*: H^n(target) -> H^n(source).
GroupHom induced_cohomology_map(const SimplicialMap& f, int n);
GroupHom induced_cohomology_map(const SimplicialMap& f, const HomologyResult& target_cohomology,
                                const HomologyResult& source_cohomology);

/// d_n, or the augmentation row in degree 0 when `reduced`.
IntegerMatrix augmented_boundary(const SimplicialComplex& k, int n, bool reduced);

}  // namespace shape

#include "shape/homology.hpp"

#include <stdexcept>

#include "shape/smith.hpp"

namespace shape {

namespace {

// Subquotient ker(out) / im(in) of a chain complex  ... -> C' --in--> C --out--> C'' -> ...
HomologyResult subquotient(const IntegerMatrix& out, const IntegerMatrix& in) {
    const SmithDecomposition s = smith_normal_form(out);
    const std::size_t r = s.rank();
    const std::size_t n = out.cols();
    HomologyResult h;
    h.cycle_basis = s.V.select_cols(r, n - r);
    h.chain_to_presentation = s.V_inverse.select_rows(r, n - r);
    const IntegerMatrix relations = (h.chain_to_presentation * in).transpose();
    h.group = make_group(FGAbelianGroup::from_presentation(n - r, relations));
    const IntegerMatrix reps = h.cycle_basis * h.group->canonical_generators();
    for (std::size_t c = 0; c < reps.cols(); ++c) h.cycle_representatives.push_back(reps.column(c));
    return h;
}

}  // namespace

IntegerMatrix augmented_boundary(const SimplicialComplex& k, int n, bool reduced) {
    if (n == 0 && reduced && k.count(0) > 0) {
        IntegerMatrix aug(1, k.count(0));
        for (std::size_t i = 0; i < k.count(0); ++i) aug(0, i) = 1;
        return aug;
    }
    return boundary_matrix(k, n);
}

std::vector<Integer> HomologyResult::classify(const std::vector<Integer>& cycle) const {
    return chain_to_presentation.apply(cycle);
}

HomologyResult homology(const SimplicialComplex& k, int n, bool reduced) {
    if (n < 0) throw std::invalid_argument("homology: negative dimension");
    HomologyResult h = subquotient(augmented_boundary(k, n, reduced), boundary_matrix(k, n + 1));
    h.dimension = n;
    h.reduced = reduced && n == 0;
    return h;
}

HomologyResult cohomology_result(const SimplicialComplex& k, int n) {
    if (n < 0) throw std::invalid_argument("cohomology: negative dimension");
    HomologyResult h = subquotient(boundary_matrix(k, n + 1).transpose(), boundary_matrix(k, n).transpose());
    h.dimension = n;
    h.cohomology = true;
    return h;
}

FGAbelianGroup cohomology(const SimplicialComplex& k, int n) { return *cohomology_result(k, n).group; }

GroupHom induced_map(const SimplicialMap& f, const HomologyResult& source, const HomologyResult& target) {
    if (source.dimension != target.dimension || source.cohomology || target.cohomology)
        throw std::invalid_argument("induced_map: homology results do not match");
    const IntegerMatrix chain = chain_map_matrix(f, source.dimension);
    return GroupHom(source.group, target.group, target.chain_to_presentation * chain * source.cycle_basis);
}

GroupHom induced_map(const SimplicialMap& f, int n, bool reduced) {
    require_simplicial(f, "induced_map");
    return induced_map(f, homology(f.source(), n, reduced), homology(f.target(), n, reduced));
}

GroupHom induced_cohomology_map(const SimplicialMap& f, const HomologyResult& target_cohomology,
                                const HomologyResult& source_cohomology) {
    if (!target_cohomology.cohomology || !source_cohomology.cohomology ||
        target_cohomology.dimension != source_cohomology.dimension)
        throw std::invalid_argument("induced_cohomology_map: cohomology results do not match");
    const IntegerMatrix cochain = chain_map_matrix(f, target_cohomology.dimension).transpose();
    return GroupHom(target_cohomology.group, source_cohomology.group,
                    source_cohomology.chain_to_presentation * cochain * target_cohomology.cycle_basis);
}

GroupHom induced_cohomology_map(const SimplicialMap& f, int n) {
    require_simplicial(f, "induced_cohomology_map");
    return induced_cohomology_map(f, cohomology_result(f.target(), n), cohomology_result(f.source(), n));
}

}  // namespace shape

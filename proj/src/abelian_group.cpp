#include "shape/abelian_group.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "shape/smith.hpp"

namespace shape {

FGAbelianGroup::FGAbelianGroup() : relations_(0, 0), to_canonical_(0, 0), from_canonical_(0, 0) {}

FGAbelianGroup FGAbelianGroup::from_presentation(std::size_t generators, IntegerMatrix relations) {
    if (relations.cols() != generators) {
        std::ostringstream os;
        os << "relation matrix has " << relations.cols() << " columns but the presentation has " << generators
           << " generators";
        throw std::invalid_argument(os.str());
    }
    FGAbelianGroup g;
    g.generators_ = generators;
    SmithDecomposition s = smith_normal_form(relations);
    const std::size_t r = s.rank();

    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < r; ++i) {
        if (s.D(i, i) != 1) {
            kept.push_back(i);
            g.torsion_.push_back(s.D(i, i));
        }
    }
    for (std::size_t i = r; i < generators; ++i) kept.push_back(i);
    g.free_rank_ = generators - r;

    // y = V^T x; canonical generator i is V^{-T} e_i.
    g.to_canonical_ = IntegerMatrix(kept.size(), generators);
    g.from_canonical_ = IntegerMatrix(generators, kept.size());
    for (std::size_t k = 0; k < kept.size(); ++k) {
        for (std::size_t j = 0; j < generators; ++j) {
            g.to_canonical_(k, j) = s.V(j, kept[k]);
            g.from_canonical_(j, k) = s.V_inverse(kept[k], j);
        }
    }
    g.relations_ = std::move(relations);
    return g;
}

FGAbelianGroup FGAbelianGroup::free(std::size_t rank) { return from_presentation(rank, IntegerMatrix(0, rank)); }

FGAbelianGroup FGAbelianGroup::canonical(std::size_t free_rank, std::vector<Integer> torsion) {
    const std::size_t t = torsion.size();
    IntegerMatrix rel(t, t + free_rank);
    for (std::size_t i = 0; i < t; ++i) rel(i, i) = torsion[i];
    return from_presentation(t + free_rank, std::move(rel));
}

Integer FGAbelianGroup::summand_order(std::size_t i) const {
    return i < torsion_.size() ? torsion_[i] : Integer(0);
}

void FGAbelianGroup::reduce(std::span<Integer> y) const {
    for (std::size_t i = 0; i < torsion_.size() && i < y.size(); ++i) mpz_fdiv_r(y[i].get_mpz_t(), y[i].get_mpz_t(), torsion_[i].get_mpz_t());
}

std::vector<Integer> FGAbelianGroup::to_canonical(std::span<const Integer> x) const {
    std::vector<Integer> y = to_canonical_.apply(x);
    reduce(y);
    return y;
}

bool FGAbelianGroup::is_zero(std::span<const Integer> x) const {
    for (const auto& v : to_canonical(x))
        if (v != 0) return false;
    return true;
}

IntegerMatrix FGAbelianGroup::canonical_relations() const {
    IntegerMatrix p(summand_count(), torsion_.size());
    for (std::size_t i = 0; i < torsion_.size(); ++i) p(i, i) = torsion_[i];
    return p;
}

std::string FGAbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank_ > 0) {
        os << 'Z';
        if (free_rank_ > 1) os << '^' << free_rank_;
        first = false;
    }
    for (const auto& d : torsion_) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

bool isomorphic(const FGAbelianGroup& a, const FGAbelianGroup& b) {
    return a.free_rank() == b.free_rank() && a.torsion() == b.torsion();
}

FGAbelianGroup canonicalize_presentation(std::size_t generators, const IntegerMatrix& relations) {
    return FGAbelianGroup::from_presentation(generators, relations);
}

// ---------------------------------------------------------------------------

GroupHom::GroupHom(GroupPtr source, GroupPtr target, IntegerMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (!source_ || !target_) throw std::invalid_argument("GroupHom: null group");
    if (matrix_.rows() != target_->generator_count() || matrix_.cols() != source_->generator_count()) {
        std::ostringstream os;
        os << "GroupHom: matrix is " << matrix_.rows() << "x" << matrix_.cols() << ", expected "
           << target_->generator_count() << "x" << source_->generator_count();
        throw std::invalid_argument(os.str());
    }
    const IntegerMatrix& rel = source_->relations();
    for (std::size_t r = 0; r < rel.rows(); ++r) {
        auto row = rel.row(r);
        std::vector<Integer> image = matrix_.apply(std::vector<Integer>(row.begin(), row.end()));
        if (!target_->is_zero(image)) {
            std::ostringstream os;
            os << "GroupHom: source relation " << r << " is not carried into the target relation lattice";
            throw std::invalid_argument(os.str());
        }
    }
}

GroupHom GroupHom::identity(GroupPtr g) {
    const std::size_t n = g->generator_count();
    return GroupHom(g, g, IntegerMatrix::identity(n));
}

GroupHom GroupHom::zero(GroupPtr source, GroupPtr target) {
    IntegerMatrix m(target->generator_count(), source->generator_count());
    return GroupHom(std::move(source), std::move(target), std::move(m));
}

IntegerMatrix GroupHom::canonical_matrix() const {
    IntegerMatrix c = target_->canonical_projection() * matrix_ * source_->canonical_generators();
    for (std::size_t j = 0; j < c.cols(); ++j)
        for (std::size_t i = 0; i < target_->torsion().size(); ++i)
            mpz_fdiv_r(c(i, j).get_mpz_t(), c(i, j).get_mpz_t(), target_->torsion()[i].get_mpz_t());
    return c;
}

bool GroupHom::is_zero() const { return canonical_matrix().is_zero(); }

bool GroupHom::is_injective() const {
    // Preimage lattice of the target relations, compared with the source relations.
    const IntegerMatrix a = canonical_matrix();
    const std::size_t m = a.cols();
    const IntegerMatrix k = kernel_basis(a.hstack(target_->canonical_relations()));
    for (std::size_t c = 0; c < k.cols(); ++c) {
        std::vector<Integer> x(m);
        for (std::size_t i = 0; i < m; ++i) x[i] = k(i, c);
        source_->reduce(x);
        for (const auto& v : x)
            if (v != 0) return false;
    }
    return true;
}

bool GroupHom::is_surjective() const {
    Subgroup img = Subgroup::image(*this);
    return img.contains(Subgroup::whole(target_));
}

bool GroupHom::is_isomorphism() const { return isomorphic(*source_, *target_) && is_surjective(); }

GroupHom compose_homs(const GroupHom& g, const GroupHom& f) {
    if (!(f.target() == g.source() || *f.target() == *g.source()))
        throw std::invalid_argument("compose_homs: target of the first map is not the source of the second");
    return GroupHom(f.source(), g.target(), g.matrix() * f.matrix());
}

bool same_map(const GroupHom& a, const GroupHom& b) {
    if (!(*a.source() == *b.source()) || !(*a.target() == *b.target())) return false;
    return a.canonical_matrix() == b.canonical_matrix();
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(GroupPtr ambient, IntegerMatrix generators)
    : ambient_(std::move(ambient)), generators_(std::move(generators)) {
    if (generators_.rows() != ambient_->summand_count())
        throw std::invalid_argument("Subgroup: generators must be written in canonical coordinates");
    for (std::size_t c = 0; c < generators_.cols(); ++c)
        for (std::size_t i = 0; i < ambient_->torsion().size(); ++i)
            mpz_fdiv_r(generators_(i, c).get_mpz_t(), generators_(i, c).get_mpz_t(),
                       ambient_->torsion()[i].get_mpz_t());
}

Subgroup Subgroup::whole(GroupPtr ambient) {
    const std::size_t n = ambient->summand_count();
    return Subgroup(std::move(ambient), IntegerMatrix::identity(n));
}

Subgroup Subgroup::image(const GroupHom& h) { return Subgroup(h.target(), h.canonical_matrix()); }

bool Subgroup::contains(std::span<const Integer> v) const {
    const IntegerMatrix span = generators_.hstack(ambient_->canonical_relations());
    return solve_integer(span, std::vector<Integer>(v.begin(), v.end())).has_value();
}

bool Subgroup::contains(const Subgroup& other) const {
    const IntegerSolver solver(generators_.hstack(ambient_->canonical_relations()));
    for (std::size_t c = 0; c < other.generators_.cols(); ++c)
        if (!solver.solve(other.generators_.column(c))) return false;
    return true;
}

FGAbelianGroup Subgroup::structure() const {
    const std::size_t k = generators_.cols();
    const IntegerMatrix kern = kernel_basis(generators_.hstack(ambient_->canonical_relations()));
    return FGAbelianGroup::from_presentation(k, kern.select_rows(0, k).transpose());
}

Subgroup Subgroup::mapped_by(const GroupHom& h) const {
    if (!(*h.source() == *ambient_)) throw std::invalid_argument("Subgroup::mapped_by: map does not start at the ambient group");
    return Subgroup(h.target(), h.canonical_matrix() * generators_);
}

}  // namespace shape

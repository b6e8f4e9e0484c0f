#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "shape/integer_matrix.hpp"

namespace shape {

/// A finitely generated abelian group Z^g / (row space of `relations`),
/// together with its canonical decomposition
///     Z/d_1 + ... + Z/d_t + Z^f,   d_i >= 2,  d_i | d_{i+1}.
///
/// Elements are written in presentation coordinates (length g). Canonical
/// coordinates list the torsion summands first, then the free ones; the
/// change of basis comes from the Smith form of the relation matrix.
class FGAbelianGroup {
public:
    FGAbelianGroup();  // trivial group, no generators

    /// Throws std::invalid_argument if relations.cols() != generators.
    static FGAbelianGroup from_presentation(std::size_t generators, IntegerMatrix relations);
    static FGAbelianGroup free(std::size_t rank);
    /// Presented directly in canonical form (generators = canonical summands).
    static FGAbelianGroup canonical(std::size_t free_rank, std::vector<Integer> torsion);

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<Integer>& torsion() const { return torsion_; }
    bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
    bool is_finite() const { return free_rank_ == 0; }

    std::size_t generator_count() const { return generators_; }
    const IntegerMatrix& relations() const { return relations_; }

    /// Number of canonical summands, torsion first.
    std::size_t summand_count() const { return torsion_.size() + free_rank_; }
    /// Order of canonical summand i, 0 for free summands.
    Integer summand_order(std::size_t i) const;

    /// Presentation -> canonical coordinates, reduced mod the torsion orders.
    std::vector<Integer> to_canonical(std::span<const Integer> x) const;
    /// Canonical summand generators written in presentation coordinates (g x summands).
    const IntegerMatrix& canonical_generators() const { return from_canonical_; }
    /// The linear part of to_canonical (summands x g), unreduced.
    const IntegerMatrix& canonical_projection() const { return to_canonical_; }

    /// Reduces canonical coordinates in place.
    void reduce(std::span<Integer> canonical) const;
    bool is_zero(std::span<const Integer> x) const;

    /// Relation lattice in canonical coordinates: diag(d_1..d_t) padded with zero rows.
    IntegerMatrix canonical_relations() const;

    std::string to_string() const;

    /// Same presentation (generator count and relation matrix).
    friend bool operator==(const FGAbelianGroup& a, const FGAbelianGroup& b) {
        return a.generators_ == b.generators_ && a.relations_ == b.relations_;
    }

private:
    std::size_t generators_ = 0;
    IntegerMatrix relations_;
    std::size_t free_rank_ = 0;
    std::vector<Integer> torsion_;
    IntegerMatrix to_canonical_;
    IntegerMatrix from_canonical_;
};

/// Same isomorphism type.
bool isomorphic(const FGAbelianGroup& a, const FGAbelianGroup& b);

using GroupPtr = std::shared_ptr<const FGAbelianGroup>;

inline GroupPtr make_group(FGAbelianGroup g) { return std::make_shared<const FGAbelianGroup>(std::move(g)); }

/// Relations given as rows, one column per generator.
FGAbelianGroup canonicalize_presentation(std::size_t generators, const IntegerMatrix& relations);

/// Homomorphism given on presentation generators: column j is the image of
/// source generator j in target presentation coordinates.
class GroupHom {
public:
    /// Verifies that every source relation lands in the target relation
    /// lattice; throws std::invalid_argument otherwise.
    GroupHom(GroupPtr source, GroupPtr target, IntegerMatrix matrix);

    static GroupHom identity(GroupPtr g);
    static GroupHom zero(GroupPtr source, GroupPtr target);

    const GroupPtr& source() const { return source_; }
    const GroupPtr& target() const { return target_; }
    const IntegerMatrix& matrix() const { return matrix_; }

    std::vector<Integer> apply(std::span<const Integer> x) const { return matrix_.apply(x); }

    /// Matrix on canonical summands (target summands x source summands), reduced.
    IntegerMatrix canonical_matrix() const;

    bool is_zero() const;
    bool is_injective() const;
    bool is_surjective() const;
    bool is_isomorphism() const;

private:
    GroupPtr source_;
    GroupPtr target_;
    IntegerMatrix matrix_;
};

/// g o f. Requires f.target() and g.source() to be the same presented group.
GroupHom compose_homs(const GroupHom& g, const GroupHom& f);

/// Equal as homomorphisms (same canonical matrices, compatible groups).
bool same_map(const GroupHom& a, const GroupHom& b);

/// Subgroup of `ambient` generated by the columns of `generators`, written in
/// the ambient's canonical coordinates.
class Subgroup {
public:
    Subgroup(GroupPtr ambient, IntegerMatrix generators);

    static Subgroup whole(GroupPtr ambient);
    static Subgroup image(const GroupHom& h);

    const GroupPtr& ambient() const { return ambient_; }
    const IntegerMatrix& generators() const { return generators_; }

    bool contains(std::span<const Integer> canonical) const;
    bool contains(const Subgroup& other) const;
    /// Mutual generator containment.
    bool equals(const Subgroup& other) const { return contains(other) && other.contains(*this); }

    FGAbelianGroup structure() const;
    /// Image of this subgroup under h, where h.source() is the ambient group.
    Subgroup mapped_by(const GroupHom& h) const;

private:
    GroupPtr ambient_;
    IntegerMatrix generators_;
};

}  // namespace shape

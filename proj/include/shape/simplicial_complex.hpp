#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "shape/integer_matrix.hpp"

namespace shape {

/// Sorted vertex indices into SimplicialComplex::vertices().
using Simplex = std::vector<std::size_t>;
using LabelSimplex = std::vector<std::string>;

/// Finite abstract simplicial complex.
///
/// Vertices are kept in lexicographic label order and simplexes are sorted
/// tuples of vertex indices, so orientations (and hence every boundary
/// matrix) depend only on the labels.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Stores exactly the given simplexes; the result may fail validate_complex.
    static SimplicialComplex from_simplices(std::vector<std::string> vertices,
                                            const std::vector<LabelSimplex>& simplices);
    /// Closes the given simplexes under faces. `extra_vertices` adds isolated points.
    static SimplicialComplex from_maximal(const std::vector<LabelSimplex>& simplices,
                                          const std::vector<std::string>& extra_vertices = {});

    const std::vector<std::string>& vertices() const { return vertices_; }
    std::optional<std::size_t> vertex_index(std::string_view label) const;

    /// -1 for the empty complex.
    int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
    const std::vector<Simplex>& simplices(int n) const;
    std::size_t count(int n) const { return simplices(n).size(); }
    std::size_t size() const;
    std::optional<std::size_t> index_of(const Simplex& s) const;
    bool contains(const Simplex& s) const { return index_of(s).has_value(); }

    std::vector<Simplex> maximal_simplices() const;
    LabelSimplex labels(const Simplex& s) const;
    std::optional<Simplex> from_labels(const LabelSimplex& labels) const;
    std::string format(const Simplex& s) const;

    long euler_characteristic() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.vertices_ == b.vertices_ && a.by_dim_ == b.by_dim_;
    }

private:
    void insert(Simplex s);
    void rebuild_lookup();

    std::vector<std::string> vertices_;
    std::map<std::string, std::size_t, std::less<>> vertex_lookup_;
    std::vector<std::vector<Simplex>> by_dim_;
    std::vector<std::map<Simplex, std::size_t>> lookup_;
};

struct ComplexViolation {
    Simplex simplex;
    std::string message;
};

/// Face closure and vertex consistency; reports the first offending simplex.
std::optional<ComplexViolation> validate_complex(const SimplicialComplex& k);

/// Simplicial boundary d_n: rows are (n-1)-simplexes, columns n-simplexes,
/// entry (-1)^i for the face omitting the i-th vertex. d_0 has no rows.
/// Throws std::invalid_argument for n < 0.
IntegerMatrix boundary_matrix(const SimplicialComplex& k, int n);

/// Vertex map between complexes. Construction checks only that the map is
/// total; simplicity is reported by first_non_simplicial().
class SimplicialMap {
public:
    SimplicialMap() = default;
    SimplicialMap(SimplicialComplex source, SimplicialComplex target, std::vector<std::size_t> vertex_map);
    SimplicialMap(SimplicialComplex source, SimplicialComplex target, const std::map<std::string, std::string>& labels);

    static SimplicialMap identity(const SimplicialComplex& k);
    /// Label-preserving inclusion; throws if some vertex is missing from `k`.
    static SimplicialMap inclusion(const SimplicialComplex& sub, const SimplicialComplex& k);

    const SimplicialComplex& source() const { return source_; }
    const SimplicialComplex& target() const { return target_; }
    const std::vector<std::size_t>& vertex_map() const { return vertex_map_; }
    std::size_t operator()(std::size_t v) const { return vertex_map_[v]; }

    /// Image vertex set, sorted and deduplicated.
    Simplex image(const Simplex& s) const;
    std::optional<Simplex> first_non_simplicial() const;
    bool is_simplicial() const { return !first_non_simplicial(); }

    std::map<std::string, std::string> label_map() const;

    friend bool operator==(const SimplicialMap& a, const SimplicialMap& b) = default;

private:
    SimplicialComplex source_;
    SimplicialComplex target_;
    std::vector<std::size_t> vertex_map_;
};

/// g o f; throws if f's target is not g's source.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

/// Throws std::invalid_argument naming the first bad simplex.
void require_simplicial(const SimplicialMap& f, std::string_view what);

/// Oriented chain map C_n(source) -> C_n(target); degenerate images go to 0.
IntegerMatrix chain_map_matrix(const SimplicialMap& f, int n);

/// A set of simplexes of a fixed parent complex.
class Subcomplex {
public:
    Subcomplex() = default;
    explicit Subcomplex(std::set<Simplex> simplices) : simplices_(std::move(simplices)) {}

    /// Face closure of the given simplexes; throws if one is not in `parent`.
    static Subcomplex closure(const SimplicialComplex& parent, const std::vector<Simplex>& generators);
    static Subcomplex closure_of_labels(const SimplicialComplex& parent, const std::vector<LabelSimplex>& generators);
    static Subcomplex whole(const SimplicialComplex& parent);
    /// Every simplex of `parent` all of whose vertices satisfy the predicate.
    template <class Pred>
    static Subcomplex full(const SimplicialComplex& parent, Pred&& in_set) {
        std::set<Simplex> out;
        for (int d = 0; d <= parent.dimension(); ++d)
            for (const auto& s : parent.simplices(d)) {
                bool all = true;
                for (auto v : s) all = all && in_set(v);
                if (all) out.insert(s);
            }
        return Subcomplex(std::move(out));
    }

    const std::set<Simplex>& simplices() const { return simplices_; }
    bool contains(const Simplex& s) const { return simplices_.count(s) > 0; }
    bool contains_vertex(std::size_t v) const { return simplices_.count(Simplex{v}) > 0; }
    bool empty() const { return simplices_.empty(); }
    std::size_t size() const { return simplices_.size(); }

    bool is_face_closed() const;
    std::vector<LabelSimplex> maximal_labels(const SimplicialComplex& parent) const;
    SimplicialComplex as_complex(const SimplicialComplex& parent) const;

    friend bool operator==(const Subcomplex& a, const Subcomplex& b) = default;

private:
    std::set<Simplex> simplices_;
};

/// All nonempty faces of s, including s.
std::vector<Simplex> faces(const Simplex& s);

}  // namespace shape

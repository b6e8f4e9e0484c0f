#include <doctest.h>

#include "oracles.hpp"
#include "shape/compactohedral.hpp"
#include "shape/gallery.hpp"
#include "shape/homology.hpp"

using namespace shape;

namespace {

const std::vector<Variant> kVariants{Variant::Compactohedral, Variant::WeaklyCompactohedral, Variant::PreCompactohedral,
                                     Variant::WeaklyPreCompactohedral};

std::set<std::string> failed_axioms(const ValidationReport& r) {
    std::set<std::string> out;
    for (const auto& v : r.violations) out.insert(v.axiom);
    return out;
}

}  // namespace

TEST_CASE("variant names and axiom lists") {
    for (auto v : kVariants) CHECK(variant_from_string(to_string(v)) == v);
    CHECK_FALSE(variant_from_string("compact"));
    CHECK(axioms(Variant::Compactohedral) == std::vector<std::string>{"C0", "C1", "C2", "C3"});
    CHECK(axioms(Variant::WeaklyCompactohedral) == std::vector<std::string>{"C0", "C1", "C3"});
    CHECK(axioms(Variant::PreCompactohedral) == std::vector<std::string>{"C0", "C1", "C2''", "C3''"});
    CHECK(axioms(Variant::WeaklyPreCompactohedral) == std::vector<std::string>{"C0", "C1", "C2'", "C3'"});
}

TEST_CASE("interior containment") {
    // Path a - b - c - d.
    const auto k = SimplicialComplex::from_maximal({{"a", "b"}, {"b", "c"}, {"c", "d"}});
    const auto a = Subcomplex::closure_of_labels(k, {{"a"}});
    const auto ab = Subcomplex::closure_of_labels(k, {{"a", "b"}});
    const auto abc = Subcomplex::closure_of_labels(k, {{"a", "b"}, {"b", "c"}});
    CHECK(contained_in_interior(a, ab, k).holds);
    const InteriorCheck bad = contained_in_interior(ab, ab, k);
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.witness);
    CHECK(k.format(*bad.witness) == "{b,c}");
    CHECK(contained_in_interior(ab, abc, k).holds);
    CHECK_THROWS_AS(contained_in_interior(Subcomplex({Simplex{0, 1}}), abc, k), std::invalid_argument);
}

TEST_CASE("preimages and derived markings") {
    const ComplexTower t = two_fleas_tower(3);
    const Subcomplex p = preimage(t.bonds[0], (*t.marked_K)[0]);
    for (const auto& s : p.simplices()) CHECK((*t.marked_K)[0].contains(t.bonds[0].image(s)));
    const ComplexTower derived = with_preimage_markings(t);
    CHECK((*derived.marked_L)[0] == Subcomplex::whole(t.levels[0]));
    CHECK((*derived.marked_L)[1] == p);
}

TEST_CASE("gallery towers satisfy every variant") {
    for (const auto& family : gallery_families())
        for (std::size_t depth : {2u, 3u, 4u}) {
            const ComplexTower t = build_gallery(family, GalleryParams{0, 2, depth});
            for (auto v : kVariants) {
                CAPTURE(family);
                CAPTURE(to_string(v));
                CHECK(validate(t, v).passed());
            }
        }
}

TEST_CASE("single-axiom violations name exactly their axiom") {
    for (const std::string axiom : {"C1", "C2", "C3"})
        for (std::size_t depth : {2u, 3u, 4u}) {
            CAPTURE(axiom);
            CAPTURE(depth);
            const ComplexTower t = two_fleas_with_violation(depth, axiom);
            const ValidationReport r = validate(t, Variant::Compactohedral);
            CHECK(failed_axioms(r) == std::set<std::string>{axiom});
            for (const auto& v : r.violations) {
                REQUIRE(v.level < t.depth());
                CHECK_FALSE(v.witness.empty());
                CHECK(t.levels[v.level].contains(v.witness));
            }
        }
    CHECK_THROWS_AS(two_fleas_with_violation(3, "C4"), std::invalid_argument);
    CHECK_THROWS_AS(two_fleas_with_violation(1, "C1"), std::invalid_argument);
}

TEST_CASE("validation needs markings") {
    ComplexTower t = two_fleas_tower(3);
    t.marked_L.reset();
    CHECK(validate(t, Variant::Compactohedral).passed());
    CHECK_THROWS_AS(validate(t, Variant::PreCompactohedral), std::invalid_argument);
    t.marked_K.reset();
    CHECK_THROWS_AS(validate(t, Variant::Compactohedral), std::invalid_argument);
}

TEST_CASE("gallery homology") {
    const ComplexTower comb = comb_tower(6, 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(homology(comb.levels[i], 1).group->free_rank() == 5 - i);
    const ComplexTower sol = solenoid_tower(3, 3);
    CHECK(sol.levels[2].count(0) == 27);
    CHECK(abs(induced_map(sol.bonds[0], 1).canonical_matrix()(0, 0)) == 3);
    const ComplexTower warsaw = warsaw_tower(4);
    CHECK(induced_map(warsaw.bonds[2], 1).is_isomorphism());
    CHECK_THROWS_AS(build_gallery("klein", GalleryParams{}), std::invalid_argument);
    CHECK_THROWS_AS(comb_tower(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(solenoid_tower(1, 3), std::invalid_argument);
}

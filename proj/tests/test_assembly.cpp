#include <doctest.h>

#include "oracles.hpp"
#include "shape/assembly.hpp"
#include "shape/gallery.hpp"
#include "shape/homology.hpp"

using namespace shape;

namespace {

std::string middle_text(const SESReport& r) {
    if (const auto* g = std::get_if<FGAbelianGroup>(&r.middle)) return g->to_string();
    return std::holds_alternative<UncountableViaLeft>(r.middle) ? "uncountable" : "unresolved";
}

Filtration one_step(const SimplicialComplex& k) { return Filtration{k, {Subcomplex::whole(k)}}; }

}  // namespace

TEST_CASE("comb reports") {
    const ComplexTower comb = comb_tower(6, 3);
    const SESReport r0 = steenrod_report(comb, 0);
    CHECK(r0.reduced);
    CHECK(r0.left.kind == Lim1Class::Kind::Uncountable);
    CHECK(r0.left.label == "Prod(Z)/Sum(Z)");
    REQUIRE(std::holds_alternative<FGAbelianGroup>(r0.right));
    CHECK(std::get<FGAbelianGroup>(r0.right).is_trivial());
    CHECK(std::holds_alternative<UncountableViaLeft>(r0.middle));
    CHECK_FALSE(r0.provenance.empty());

    const SESReport r1 = steenrod_report(comb, 1);
    CHECK(r1.left.kind == Lim1Class::Kind::Zero);
    CHECK(middle_text(r1) == "0");
}

TEST_CASE("constant towers degenerate to ordinary (co)homology") {
    for (const auto& k : {oracle::hollow_triangle(), oracle::torus(), oracle::projective_plane()}) {
        const ComplexTower t = constant_tower(k, 3);
        for (int n = 0; n <= 2; ++n) {
            const SESReport s = steenrod_report(t, n);
            CHECK(s.left.kind == Lim1Class::Kind::Zero);
            CHECK(middle_text(s) == homology(k, n, n == 0).group->to_string());
            const SESReport p = petkova_report(one_step(k), n);
            CHECK(middle_text(p) == cohomology(k, n).to_string());
        }
    }
}

TEST_CASE("solenoid reports") {
    const ComplexTower sol = solenoid_tower(2, 4);
    CHECK(middle_text(steenrod_report(sol, 1)) == "0");
    const SESReport r0 = steenrod_report(sol, 0);
    CHECK(r0.left.kind == Lim1Class::Kind::Uncountable);
    CHECK(std::holds_alternative<UncountableViaLeft>(r0.middle));
    CHECK(std::holds_alternative<NotFinitelyStable>(cech_cohomology_report(sol, 1)));
    const auto h0 = cech_cohomology_report(sol, 0);
    REQUIRE(std::holds_alternative<FGAbelianGroup>(h0));
    CHECK(std::get<FGAbelianGroup>(h0).to_string() == "Z");
}

TEST_CASE("warsaw circle reports") {
    const ComplexTower w = warsaw_tower(4);
    CHECK(middle_text(steenrod_report(w, 1)) == "Z");
    const auto c = cech_cohomology_report(w, 1);
    REQUIRE(std::holds_alternative<FGAbelianGroup>(c));
    CHECK(std::get<FGAbelianGroup>(c).to_string() == "Z");
}

TEST_CASE("reports require a resolution unless trusted") {
    const ComplexTower broken = two_fleas_with_violation(3, "C1");
    CHECK_THROWS_AS(steenrod_report(broken, 0), PreconditionError);
    CHECK_THROWS_AS(cech_cohomology_report(broken, 0), PreconditionError);
    ReportOptions trusted;
    trusted.trusted = true;
    CHECK_NOTHROW(steenrod_report(broken, 0, trusted));
    ComplexTower unmarked = constant_tower(oracle::torus(), 2);
    unmarked.marked_K.reset();
    CHECK_THROWS_AS(require_resolution(unmarked), PreconditionError);
    CHECK_THROWS_AS(steenrod_report(constant_tower(oracle::torus(), 2), -1), std::invalid_argument);
}

TEST_CASE("the levelwise theory is pluggable") {
    int calls = 0;
    ReportOptions o;
    o.theory = [&](const ComplexTower& t, int n, bool reduced) {
        ++calls;
        return homology_tower_serial(t, n, reduced);
    };
    const SESReport r = steenrod_report(constant_tower(oracle::torus(), 3), 1, o);
    CHECK(calls == 2);
    CHECK(middle_text(r) == "Z^2");
}

TEST_CASE("filtration reports") {
    // Two disjoint edges growing into a path: the union is contractible.
    const auto ambient = SimplicialComplex::from_maximal({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}});
    const Filtration f{ambient,
                       {Subcomplex::closure_of_labels(ambient, {{"c"}}),
                        Subcomplex::closure_of_labels(ambient, {{"b", "c"}, {"c", "d"}}),
                        Subcomplex::whole(ambient)}};
    CHECK(middle_text(petkova_report(f, 0)) == "Z");
    CHECK(middle_text(petkova_report(f, 1)) == "0");
    const GroupTower g = restriction_tower(f, 0, 2);
    CHECK(g.depth() == 5);
    CHECK(g.certificate.kind == TowerCertificate::Kind::Periodic);
    CHECK(g.certificate.offset == 2);

    const Subcomplex ab = Subcomplex::closure_of_labels(ambient, {{"a", "b"}});
    const Filtration touching{ambient, {ab, ab, Subcomplex::whole(ambient)}};
    CHECK_THROWS_AS(petkova_report(touching, 0), PreconditionError);
    const Filtration shrinking{ambient, {Subcomplex::whole(ambient), Subcomplex::closure_of_labels(ambient, {{"c"}})}};
    CHECK_THROWS_AS(petkova_report(shrinking, 0), PreconditionError);
    CHECK_THROWS_AS(petkova_report(Filtration{ambient, {}}, 0), PreconditionError);
}

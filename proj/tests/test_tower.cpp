#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "shape/gallery.hpp"
#include "shape/group_tower.hpp"
#include "shape/homology.hpp"

using namespace shape;
using Verdict = MLStatus::Verdict;

namespace {

// G <-A- G <-A- ... truncated at `depth` levels.
GroupTower constant_group_tower(const FGAbelianGroup& g, const IntegerMatrix& a, std::size_t depth,
                                TowerCertificate::Kind kind = TowerCertificate::Kind::Periodic) {
    GroupTower t;
    const GroupPtr p = make_group(g);
    for (std::size_t i = 0; i < depth; ++i) t.levels.push_back(p);
    for (std::size_t i = 0; i + 1 < depth; ++i) t.bonds.emplace_back(p, p, a);
    t.certificate.kind = kind;
    return t;
}

bool same_tower(const GroupTower& a, const GroupTower& b) {
    if (a.depth() != b.depth() || a.bonds.size() != b.bonds.size()) return false;
    for (std::size_t i = 0; i < a.depth(); ++i)
        if (!(*a.levels[i] == *b.levels[i])) return false;
    for (std::size_t i = 0; i < a.bonds.size(); ++i)
        if (!(a.bonds[i].matrix() == b.bonds[i].matrix())) return false;
    return a.certificate == b.certificate;
}

// Rank of the lattice spanned by the points of the box |x| <= bound lying in A^k Z^2,
// for A invertible over Q. For k large this is the free rank of lim(Z^2, A).
std::size_t brute_lim_rank(const IntegerMatrix& a, std::size_t k, long bound) {
    IntegerMatrix power = IntegerMatrix::identity(2);
    for (std::size_t i = 0; i < k; ++i) power = power * a;
    const Integer det = determinant(power);
    // adj(P) x / det must be integral.
    IntegerMatrix adjugate(2, 2);
    adjugate(0, 0) = power(1, 1);
    adjugate(1, 1) = power(0, 0);
    adjugate(0, 1) = -power(0, 1);
    adjugate(1, 0) = -power(1, 0);
    std::vector<std::vector<Integer>> hits;
    for (long x = -bound; x <= bound; ++x)
        for (long y = -bound; y <= bound; ++y) {
            const std::vector<Integer> v{x, y};
            const auto w = adjugate.apply(v);
            if (w[0] % det == 0 && w[1] % det == 0) hits.push_back(v);
        }
    return oracle::bareiss_rank(IntegerMatrix::from_columns(2, hits));
}

}  // namespace

TEST_CASE("complex tower structure") {
    const auto t = constant_tower(oracle::torus(), 3);
    CHECK_FALSE(t.structural_error());
    CHECK(t.certificate.kind == TowerCertificate::Kind::Periodic);
    ComplexTower broken = t;
    broken.bonds.pop_back();
    CHECK(broken.structural_error());
    broken = t;
    broken.marked_K->pop_back();
    CHECK(broken.structural_error());
    CHECK(to_string(TowerCertificate::Kind::ShiftFamily) == "shift_family");
    CHECK(certificate_kind_from_string("periodic") == TowerCertificate::Kind::Periodic);
    CHECK_FALSE(certificate_kind_from_string("bogus"));
}

TEST_CASE("parallel homology tower equals the serial one") {
    for (const auto& family : gallery_families()) {
        const ComplexTower t = build_gallery(family, GalleryParams{0, 2, 4});
        for (int n = 0; n <= 2; ++n)
            for (bool reduced : {false, true}) CHECK(same_tower(homology_tower(t, n, reduced), homology_tower_serial(t, n, reduced)));
    }
}

TEST_CASE("certificates are verified") {
    const auto z = FGAbelianGroup::free(1);
    GroupTower doubling = constant_group_tower(z, IntegerMatrix{{2}}, 4);
    CHECK_FALSE(doubling.certificate_error());
    GroupTower mixed = doubling;
    mixed.bonds[2] = GroupHom(mixed.levels[3], mixed.levels[2], IntegerMatrix{{3}});
    CHECK(mixed.certificate_error());
    CHECK_THROWS_AS(ml_status(mixed, 0, 2), std::invalid_argument);
    // A sign flip of the generator is the same period.
    GroupTower flipped = doubling;
    flipped.bonds[1] = GroupHom(flipped.levels[2], flipped.levels[1], IntegerMatrix{{-2}});
    CHECK_FALSE(flipped.certificate_error());

    // The comb's H_1 is not periodic, so a periodic claim is dropped.
    ComplexTower comb = comb_tower(5, 4);
    comb.certificate.kind = TowerCertificate::Kind::Periodic;
    CHECK(homology_tower(comb, 1).certificate.kind == TowerCertificate::Kind::None);
    CHECK(homology_tower(comb_tower(5, 4), 1).certificate.kind == TowerCertificate::Kind::ShiftFamily);
}

TEST_CASE("Mittag-Leffler status") {
    const auto z = FGAbelianGroup::free(1);
    const MLStatus doubling = ml_status(constant_group_tower(z, IntegerMatrix{{2}}, 3), 0, 2);
    CHECK(doubling.verdict == Verdict::StrictlyDecreasing);
    CHECK(doubling.image_chain.size() == 2);

    const MLStatus identity = ml_status(constant_group_tower(z, IntegerMatrix{{1}}, 3), 0, 2);
    CHECK(identity.verdict == Verdict::Stabilized);
    CHECK(identity.index == 0);

    // Projection Z^2 -> Z^2 onto the first factor stabilizes after one step.
    const MLStatus proj = ml_status(constant_group_tower(FGAbelianGroup::free(2), IntegerMatrix{{1, 0}, {0, 0}}, 3), 0, 2);
    CHECK(proj.verdict == Verdict::Stabilized);
    CHECK(proj.index == 1);

    // Uncertified and out of range.
    const GroupTower plain = constant_group_tower(z, IntegerMatrix{{2}}, 3, TowerCertificate::Kind::None);
    CHECK(ml_status(plain, 0, 3).verdict == Verdict::UndeterminedWithinWindow);
    CHECK_THROWS_AS(ml_status(plain, 2, 2), std::out_of_range);

    // Nilpotent period: certified towers may run past the window to the repeat.
    const MLStatus nil =
        ml_status(constant_group_tower(FGAbelianGroup::free(3), IntegerMatrix{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}, 2), 0, 1);
    CHECK(nil.verdict == Verdict::Stabilized);
    CHECK(nil.index == 3);
}

TEST_CASE("lim1 classes") {
    const auto z = FGAbelianGroup::free(1);
    CHECK(lim1_class(constant_group_tower(z, IntegerMatrix{{2}}, 3), 2).kind == Lim1Class::Kind::Uncountable);
    CHECK(lim1_class(constant_group_tower(z, IntegerMatrix{{-1}}, 3), 2).kind == Lim1Class::Kind::Zero);
    CHECK(lim1_class(constant_group_tower(FGAbelianGroup::canonical(0, {6}), IntegerMatrix{{2}}, 3), 2).kind ==
          Lim1Class::Kind::Zero);
    CHECK(lim1_class(homology_tower(comb_tower(6, 3), 1), 2).kind == Lim1Class::Kind::Uncountable);
    CHECK(lim1_class(constant_group_tower(z, IntegerMatrix{{2}}, 3, TowerCertificate::Kind::None), 2).kind ==
          Lim1Class::Kind::Undetermined);
    CHECK(lim1_class(constant_group_tower(z, IntegerMatrix{{1}}, 3, TowerCertificate::Kind::None), 2).kind ==
          Lim1Class::Kind::Zero);
}

TEST_CASE("stable and periodic limits") {
    const auto z6 = FGAbelianGroup::canonical(0, {6});
    const auto lim = stable_lim(constant_group_tower(z6, IntegerMatrix{{2}}, 3), 2);
    REQUIRE(std::holds_alternative<FGAbelianGroup>(lim));
    CHECK(std::get<FGAbelianGroup>(lim).to_string() == "Z/3");
    CHECK(std::holds_alternative<NotStable>(stable_lim(constant_group_tower(FGAbelianGroup::free(1), IntegerMatrix{{2}}, 3), 2)));

    const auto periodic = [](const FGAbelianGroup& g, const IntegerMatrix& a) {
        const GroupPtr p = make_group(g);
        return periodic_lim(p, GroupHom(p, p, a));
    };
    CHECK(periodic(FGAbelianGroup::free(2), IntegerMatrix{{0, 2}, {1, 0}}).group.is_trivial());
    CHECK(periodic(FGAbelianGroup::free(2), IntegerMatrix{{1, 0}, {0, 2}}).group.to_string() == "Z");
    CHECK(periodic(FGAbelianGroup::free(2), IntegerMatrix{{1, 1}, {0, 3}}).group.to_string() == "Z");
    CHECK(periodic(FGAbelianGroup::free(2), IntegerMatrix{{2, 1}, {1, 1}}).group.to_string() == "Z^2");
    CHECK(periodic(FGAbelianGroup::canonical(1, {4}), IntegerMatrix{{2, 0}, {0, 1}}).group.to_string() == "Z");
    const GroupPtr z = make_group(FGAbelianGroup::free(1));
    CHECK_THROWS_AS(periodic_lim(make_group(FGAbelianGroup::free(2)), GroupHom::identity(z)), std::invalid_argument);
}

TEST_CASE("periodic lim free rank matches a lattice brute force") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> entry(-3, 3);
    int compared = 0;
    for (int trial = 0; trial < 200 && compared < 60; ++trial) {
        IntegerMatrix a(2, 2);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c) a(r, c) = entry(rng);
        if (determinant(a) == 0) continue;
        const GroupPtr g = make_group(FGAbelianGroup::free(2));
        const PeriodicLim lim = periodic_lim(g, GroupHom(g, g, a));
        if (!lim.exact) continue;
        ++compared;
        CAPTURE(to_string(a));
        CHECK(lim.group.free_rank() == brute_lim_rank(a, 16, 6));
    }
    CHECK(compared >= 30);
}

TEST_CASE("direct limits of cohomology") {
    const DirectSystem torus = cohomology_system(constant_tower(oracle::torus(), 3), 1);
    const auto colim = colim_direct_system(torus, 2);
    REQUIRE(std::holds_alternative<FGAbelianGroup>(colim));
    CHECK(std::get<FGAbelianGroup>(colim).to_string() == "Z^2");
    const auto sol = colim_direct_system(cohomology_system(solenoid_tower(2, 4), 1), 2);
    REQUIRE(std::holds_alternative<NotFinitelyStable>(sol));
    CHECK(std::get<NotFinitelyStable>(sol).chain.size() == 4);
    CHECK_THROWS_AS(colim_direct_system(torus, 0), std::invalid_argument);
}

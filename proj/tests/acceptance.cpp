// Acceptance suite: one PASS/FAIL line per criterion, with wall time.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "generators.hpp"
#include "oracles.hpp"
#include "shape/assembly.hpp"
#include "shape/cli.hpp"
#include "shape/compactohedral.hpp"
#include "shape/gallery.hpp"
#include "shape/homology.hpp"
#include "shape/smith.hpp"
#include "shape/telescope.hpp"

using namespace shape;

namespace {

/// Collects failed expectations of one criterion.
class Check {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok && failures_.size() < 5) failures_.push_back(what);
        if (!ok) ++failed_;
        ++total_;
    }
    bool passed() const { return failed_ == 0; }
    std::string summary() const {
        std::ostringstream os;
        os << total_ - failed_ << "/" << total_ << " checks";
        for (const auto& f : failures_) os << "; " << f;
        return os.str();
    }

private:
    std::vector<std::string> failures_;
    std::size_t failed_ = 0;
    std::size_t total_ = 0;
};

std::string middle_text(const SESReport& r) {
    if (const auto* g = std::get_if<FGAbelianGroup>(&r.middle)) return g->to_string();
    return std::holds_alternative<UncountableViaLeft>(r.middle) ? "uncountable via lim1" : "unresolved extension";
}

std::string cli(const std::vector<std::string>& args, int& status) {
    std::ostringstream out, err;
    status = run_cli(args, out, err);
    return out.str();
}

void comb_reproduction(Check& c) {
    const ComplexTower comb = build_gallery("comb", GalleryParams{6, 2, 3});
    const SESReport r1 = steenrod_report(comb, 1);
    c.expect(middle_text(r1) == "0", "dim-1 middle is " + middle_text(r1));
    const SESReport r0 = steenrod_report(comb, 0);
    c.expect(r0.reduced, "dim-0 report is not reduced");
    c.expect(r0.left.kind == Lim1Class::Kind::Uncountable, "dim-0 left is " + to_string(r0.left.kind));
    c.expect(r0.left.label == "Prod(Z)/Sum(Z)", "dim-0 left label missing");
    const auto* right = std::get_if<FGAbelianGroup>(&r0.right);
    c.expect(right && right->is_trivial(), "dim-0 right is not 0");
    c.expect(std::holds_alternative<UncountableViaLeft>(r0.middle), "dim-0 middle is " + middle_text(r0));

    int status = 0;
    const std::string out =
        cli({"gallery", "comb", "--teeth", "6", "--depth", "3", "--report", "steenrod", "--dim", "0"}, status);
    c.expect(status == 0, "CLI exit status " + std::to_string(status));
    c.expect(out.find("lim1: Uncountable (label: Prod(Z)/Sum(Z))") != std::string::npos, "CLI lim1 line");
    c.expect(out.find("H~_0(X): uncountable via lim1") != std::string::npos, "CLI middle line");
}

void constant_degeneration(Check& c) {
    const std::vector<std::pair<std::string, SimplicialComplex>> spaces{
        {"hollow triangle", oracle::hollow_triangle()}, {"torus", oracle::torus()}, {"RP2", oracle::projective_plane()}};
    for (const auto& [name, k] : spaces) {
        const ComplexTower t = constant_tower(k, 3);
        const Filtration f{k, {Subcomplex::whole(k)}};
        for (int n = 0; n <= 2; ++n) {
            const FGAbelianGroup h = *homology(k, n, n == 0).group;
            // Free ranks cross-checked against the rank oracle.
            const std::size_t betti = oracle::betti(k, n) - (n == 0 ? 1 : 0);
            c.expect(h.free_rank() == betti, name + ": H_" + std::to_string(n) + " rank disagrees with the oracle");
            const SESReport s = steenrod_report(t, n);
            c.expect(middle_text(s) == h.to_string(), name + ": steenrod dim " + std::to_string(n));
            const SESReport p = petkova_report(f, n);
            c.expect(middle_text(p) == cohomology(k, n).to_string(), name + ": petkova dim " + std::to_string(n));
        }
    }
    c.expect(homology(oracle::projective_plane(), 1).group->to_string() == "Z/2", "RP2 torsion");
    c.expect(cohomology(oracle::projective_plane(), 2).to_string() == "Z/2", "RP2 cohomology torsion");
}

void solenoid_reports(Check& c) {
    const ComplexTower sol = build_gallery("solenoid", GalleryParams{0, 2, 4});
    const GroupTower h1 = homology_tower(sol, 1);
    c.expect(h1.certificate.kind == TowerCertificate::Kind::Periodic, "H_1 tower lost its certificate");
    c.expect(ml_status(h1, 0, 2).verdict == MLStatus::Verdict::StrictlyDecreasing, "H_1 tower is not StrictlyDecreasing");
    const std::size_t o = h1.certificate.offset;
    const PeriodicLim lim = periodic_lim(h1.levels[o], GroupHom(h1.levels[o], h1.levels[o], h1.bonds[o].matrix()));
    c.expect(lim.exact && lim.group.is_trivial(), "periodic_lim of the H_1 period is " + lim.group.to_string());
    c.expect(middle_text(steenrod_report(sol, 1)) == "0", "dim-1 middle");
    c.expect(steenrod_report(sol, 0).left.kind == Lim1Class::Kind::Uncountable, "dim-0 left");

    // Threads x_0 = 2 x_1 = ... = 2^9 x_9 of the x2 tower with every |x_i| <= 2^8.
    const long bound = 1L << 8;
    const int length = 9;
    std::size_t threads = 0;
    for (long last = -bound; last <= bound; ++last) {
        bool inside = true;
        for (int i = 0; i <= length; ++i) inside = inside && std::labs(last << (length - i)) <= bound;
        if (inside) ++threads;
    }
    const GroupPtr z = make_group(FGAbelianGroup::free(1));
    const PeriodicLim doubling = periodic_lim(z, GroupHom(z, z, IntegerMatrix{{2}}));
    c.expect(threads == 1, "brute force found " + std::to_string(threads) + " threads");
    c.expect(doubling.exact && doubling.group.is_trivial() && threads == 1, "periodic_lim(x2) disagrees with brute force");
}

void validator_fidelity(Check& c) {
    const ComplexTower good = build_gallery("two_fleas", GalleryParams{0, 2, 3});
    c.expect(validate(good, Variant::Compactohedral).passed(), "two_fleas depth 3 fails compactohedral");
    int status = 0;
    const std::string out = cli({"gallery", "two_fleas", "--depth", "3", "--report", "validate"}, status);
    c.expect(out.find("PASS (C0..C3)") != std::string::npos, "CLI validation line: " + out);
    for (const std::string axiom : {"C1", "C2", "C3"}) {
        const ComplexTower bad = two_fleas_with_violation(3, axiom);
        const ValidationReport r = validate(bad, Variant::Compactohedral);
        c.expect(!r.passed(), axiom + " violation passes");
        for (const auto& v : r.violations) {
            c.expect(v.axiom == axiom, axiom + " violation also reports " + v.axiom);
            c.expect(!v.witness.empty() && v.level < bad.depth() && bad.levels[v.level].contains(v.witness),
                     axiom + " witness is not a simplex of level " + std::to_string(v.level));
        }
    }
}

void snf_properties(Check& c) {
    std::mt19937 rng(20240601);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    std::uniform_int_distribution<long> entry(-9, 9);
    for (int trial = 0; trial < 1000; ++trial) {
        IntegerMatrix m(dim(rng), dim(rng));
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t col = 0; col < m.cols(); ++col) m(r, col) = entry(rng);
        const SmithDecomposition s = smith_normal_form(m);
        const std::string tag = "matrix " + std::to_string(trial);
        c.expect(s.U * m * s.V == s.D, tag + ": U M V != D");
        c.expect(abs(determinant(s.U)) == 1 && abs(determinant(s.V)) == 1, tag + ": not unimodular");
        bool diagonal = true, chain = true;
        for (std::size_t r = 0; r < s.D.rows(); ++r)
            for (std::size_t col = 0; col < s.D.cols(); ++col)
                if (r != col && s.D(r, col) != 0) diagonal = false;
        const auto factors = s.invariant_factors();
        for (std::size_t i = 0; i + 1 < factors.size(); ++i) chain = chain && factors[i + 1] % factors[i] == 0;
        for (const auto& d : factors) chain = chain && d > 0;
        c.expect(diagonal && chain, tag + ": not a divisibility chain");
        c.expect(s.rank() == oracle::bareiss_rank(m), tag + ": rank disagrees with fraction-free elimination");
        c.expect(factors == oracle::determinantal_invariant_factors(m), tag + ": invariant factors disagree with minors");
    }
}

void homology_invariants(Check& c) {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const SimplicialComplex k = oracle::random_complex(rng, 8, 3);
        const std::string tag = "complex " + std::to_string(trial);
        for (int n = 1; n < k.dimension(); ++n)
            c.expect((boundary_matrix(k, n) * boundary_matrix(k, n + 1)).is_zero(), tag + ": dd != 0");
        long chi = 0;
        for (int n = 0; n <= k.dimension(); ++n) {
            const FGAbelianGroup h = *homology(k, n).group;
            chi += (n % 2 == 0 ? 1 : -1) * static_cast<long>(h.free_rank());
            c.expect(h.free_rank() == oracle::betti(k, n), tag + ": Betti number disagrees with the oracle");
            // Universal coefficients over F_2.
            const auto even = [](const FGAbelianGroup& g) {
                return static_cast<std::size_t>(
                    std::count_if(g.torsion().begin(), g.torsion().end(), [](const Integer& d) { return d % 2 == 0; }));
            };
            const std::size_t below = n == 0 ? 0 : even(*homology(k, n - 1).group);
            c.expect(oracle::betti_mod_p(k, n, 2) == h.free_rank() + even(h) + below, tag + ": mod-2 rank mismatch");
        }
        long cells = 0;
        for (int n = 0; n <= k.dimension(); ++n) cells += (n % 2 == 0 ? 1 : -1) * static_cast<long>(k.count(n));
        c.expect(chi == cells, tag + ": Euler characteristic mismatch");
    }
    for (int trial = 0; trial < 100; ++trial) {
        const auto [f, g] = gen::random_composable(rng);
        const SimplicialMap gf = compose(g, f);
        for (int n = 0; n <= 2; ++n) {
            const HomologyResult hk = homology(f.source(), n), hl = homology(f.target(), n), hm = homology(g.target(), n);
            const GroupHom lhs = induced_map(gf, hk, hm);
            const GroupHom rhs = compose_homs(induced_map(g, hl, hm), induced_map(f, hk, hl));
            c.expect(same_map(lhs, rhs), "map pair " + std::to_string(trial) + ": (gf)_* != g_* f_* in dim " + std::to_string(n));
        }
    }
}

void telescope_laws(Check& c) {
    const auto level0_iso = [&](const ComplexTower& t, std::size_t n, const std::string& tag) {
        const Telescope tel = finite_telescope(t, n);
        for (int d = 0; d <= 2; ++d)
            c.expect(induced_map(tel.level_inclusions[0], d).is_isomorphism(),
                     tag + ": level 0 inclusion is not an isomorphism on H_" + std::to_string(d));
    };
    for (const auto& family : gallery_families()) {
        const ComplexTower t = build_gallery(family, GalleryParams{0, 2, 3});
        for (std::size_t n = 0; n < t.depth(); ++n) level0_iso(t, n, family + " through level " + std::to_string(n));
    }
    std::mt19937 rng(77);
    for (int trial = 0; trial < 50; ++trial) level0_iso(gen::random_two_level(rng), 1, "random tower " + std::to_string(trial));

    const ComplexTower dyadic = build_gallery("solenoid", GalleryParams{0, 2, 3});
    c.expect(homology(pinched_telescope(dyadic, 2), 1).group->to_string() == "Z/4", "pinched dyadic telescope");

    for (int trial = 0; trial < 50; ++trial) {
        const SimplicialMap f = gen::random_map(rng);
        const MappingCylinder mc = mapping_cylinder(f);
        for (int d = 0; d <= std::max(0, f.target().dimension()); ++d)
            c.expect(induced_map(mc.target_inclusion, d).is_isomorphism(),
                     "map " + std::to_string(trial) + ": target inclusion not an isomorphism on H_" + std::to_string(d));
        c.expect(compose(mc.retraction, mc.source_inclusion) == f, "map " + std::to_string(trial) + ": retraction law");
    }
}

void nerve_correctness(Check& c) {
    const long xy[12][2] = {{10, 0}, {9, 5},   {5, 9},    {0, 10},  {-5, 9}, {-9, 5},
                            {-10, 0}, {-9, -5}, {-5, -9}, {0, -10}, {5, -9}, {9, -5}};
    PointSample circle;
    for (const auto& p : xy) circle.points.push_back({Rational(p[0]), Rational(p[1])});
    const BallCover arcs{{{0, Rational(10)}, {4, Rational(10)}, {8, Rational(10)}}};
    c.expect(homology(nerve(arcs, circle), 1).group->to_string() == "Z", "3-arc nerve H_1");

    std::mt19937 rng(404);
    for (int trial = 0; trial < 50; ++trial) {
        const PointSample s = gen::planar_sample(rng, 20, 8);
        const BallCover coarse = gen::random_cover(rng, s, 6);
        const BallCover fine = gen::refining_cover(rng, s, coarse, 4);
        const SimplicialMap f = refinement_map(fine, coarse, s);
        std::vector<std::size_t> alt;
        for (const auto& b : fine.elements) {
            const auto t = trace(s, b);
            std::vector<std::size_t> options;
            for (std::size_t d = 0; d < coarse.elements.size(); ++d) {
                const auto u = trace(s, coarse.elements[d]);
                if (std::includes(u.begin(), u.end(), t.begin(), t.end())) options.push_back(d);
            }
            alt.push_back(options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)]);
        }
        const SimplicialMap g(f.source(), f.target(), alt);
        c.expect(g.is_simplicial() && are_contiguous(f, g), "cover pair " + std::to_string(trial) + ": not contiguous");
    }
    for (int trial = 0; trial < 100; ++trial) {
        const PointSample s = gen::planar_sample(rng, 12, 6);
        const BallCover cover = gen::random_cover(rng, s, 5);
        const auto brute = oracle::brute_lebesgue(s, cover);
        c.expect(brute && lebesgue_number(s, cover) == *brute, "pair " + std::to_string(trial) + ": Lebesgue number");
    }
}

void headline_properties(Check& c) {
    // Validator and gallery agree.
    for (const auto& family : gallery_families())
        for (std::size_t depth : {2u, 3u, 4u})
            for (auto v : {Variant::Compactohedral, Variant::WeaklyCompactohedral, Variant::PreCompactohedral,
                           Variant::WeaklyPreCompactohedral})
                c.expect(validate(build_gallery(family, GalleryParams{0, 2, depth}), v).passed(),
                         family + " fails " + to_string(v));
    // Compactohedral towers become pre-compactohedral with preimage markings.
    for (const auto& family : gallery_families()) {
        const ComplexTower derived = with_preimage_markings(build_gallery(family, GalleryParams{0, 2, 3}));
        for (auto v : {Variant::PreCompactohedral, Variant::WeaklyPreCompactohedral})
            c.expect(validate(derived, v).passed(), family + " with preimage markings fails " + to_string(v));
    }
    // Degeneration of both sequences on random constant towers.
    std::mt19937 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const SimplicialComplex k = oracle::random_complex(rng, 6, 2);
        const ComplexTower t = constant_tower(k, 3);
        for (int n = 0; n <= 2; ++n) {
            c.expect(middle_text(steenrod_report(t, n)) == homology(k, n, n == 0).group->to_string(),
                     "steenrod degeneration, complex " + std::to_string(trial));
            c.expect(middle_text(petkova_report(Filtration{k, {Subcomplex::whole(k)}}, n)) == cohomology(k, n).to_string(),
                     "petkova degeneration, complex " + std::to_string(trial));
        }
    }
    // Naturality along towers: H(p_0 p_1) = H(p_0) H(p_1).
    for (const auto& family : gallery_families()) {
        const ComplexTower t = build_gallery(family, GalleryParams{0, 2, 3});
        for (int n = 0; n <= 1; ++n) {
            const GroupTower g = homology_tower(t, n);
            const GroupHom direct = induced_map(compose(t.bonds[0], t.bonds[1]), n);
            c.expect(same_map(direct, compose_homs(g.bonds[0], g.bonds[1])), family + ": naturality in dim " + std::to_string(n));
        }
    }
}

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;
    std::function<void(Check&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "comb-space reproduction", 5, comb_reproduction},
        {2, "constant-tower degeneration", 5, constant_degeneration},
        {3, "solenoid reports", 5, solenoid_reports},
        {4, "validator fidelity", 2, validator_fidelity},
        {5, "SNF property suite", 30, snf_properties},
        {6, "homology invariant suite", 60, homology_invariants},
        {7, "telescope laws", 60, telescope_laws},
        {8, "nerve correctness", 60, nerve_correctness},
        {9, "property-based headline checks", 120, headline_properties},
    };
    int failed = 0;
    for (const auto& criterion : criteria) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            criterion.run(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        check.expect(seconds <= criterion.budget_seconds, "over the time budget");
        const bool ok = check.passed();
        failed += ok ? 0 : 1;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion.id << ": " << criterion.name << " ("
                  << std::fixed << std::setprecision(2) << seconds << " s, budget " << std::setprecision(0)
                  << criterion.budget_seconds << " s) " << check.summary() << "\n";
    }
    return failed == 0 ? 0 : 1;
}

#include "shape/assembly.hpp"

#include "shape/compactohedral.hpp"
#include "shape/homology.hpp"

namespace shape {

namespace {

using Kind = TowerCertificate::Kind;

std::string tower_name(int n, bool cohomology, bool reduced) {
    return std::string(cohomology ? "H^" : reduced ? "H~_" : "H_") + std::to_string(n) + " tower";
}

// lim of a tower, using its certificate where one survives.
std::variant<FGAbelianGroup, NotStable> tower_lim(const GroupTower& g, std::size_t window, const std::string& name,
                                                   std::vector<std::string>& provenance) {
    const TowerCertificate& c = g.certificate;
    if (c.kind == Kind::ShiftFamily) {
        provenance.push_back(name + ": shift_family certificate, lim = 0");
        return FGAbelianGroup();
    }
    if (c.kind == Kind::Periodic) {
        const GroupPtr level = make_group(
            FGAbelianGroup::canonical(g.levels[c.offset]->free_rank(), g.levels[c.offset]->torsion()));
        const GroupHom period(level, level, g.bonds[c.offset].canonical_matrix());
        const PeriodicLim lim = periodic_lim(level, period);
        if (!lim.exact) {
            provenance.push_back(name + ": periodic certificate, lim free rank between " +
                                 std::to_string(lim.group.free_rank()) + " and " + std::to_string(lim.free_rank_upper));
            return NotStable{"periodic lim determined only up to free rank"};
        }
        provenance.push_back(name + ": periodic certificate at level " + std::to_string(c.offset) + ", exact lim");
        return lim.group;
    }
    provenance.push_back(name + ": uncertified, stable images within window " + std::to_string(window));
    return stable_lim(g, window);
}

SESReport assemble(int n, bool reduced, bool cohomology, const GroupTower& left_tower, int left_dim,
                   const GroupTower& right_tower, std::size_t window) {
    SESReport r;
    r.dimension = n;
    r.reduced = reduced;
    r.cohomology = cohomology;
    r.left = lim1_class(left_tower, window);
    r.provenance.push_back(tower_name(left_dim, cohomology, false) + ": lim1 " + to_string(r.left.kind) + " (" +
                           r.left.reason + ")");
    if (r.left.kind == Lim1Class::Kind::Uncountable) {
        const auto& labels = left_tower.certificate.lim1_labels;
        if (auto it = labels.find(left_dim); it != labels.end()) r.left.label = it->second;
    }
    r.right = tower_lim(right_tower, window, tower_name(n, cohomology, reduced), r.provenance);
    if (r.left.kind == Lim1Class::Kind::Uncountable)
        r.middle = UncountableViaLeft{};
    else if (r.left.kind == Lim1Class::Kind::Zero && std::holds_alternative<FGAbelianGroup>(r.right))
        r.middle = std::get<FGAbelianGroup>(r.right);
    else
        r.middle = UnresolvedExtension{};
    return r;
}

}  // namespace

void require_resolution(const ComplexTower& t) {
    if (auto e = t.structural_error()) throw PreconditionError(*e);
    if (!t.marked_K) throw PreconditionError("tower has no K markings, so no compactohedral variant can be checked");
    std::string first_failure;
    for (auto v : {Variant::Compactohedral, Variant::WeaklyCompactohedral, Variant::PreCompactohedral,
                   Variant::WeaklyPreCompactohedral}) {
        if (!t.marked_L && (v == Variant::PreCompactohedral || v == Variant::WeaklyPreCompactohedral)) continue;
        const ValidationReport r = validate(t, v);
        if (r.passed()) return;
        if (first_failure.empty()) {
            const Violation& x = r.violations.front();
            first_failure = x.axiom + " at level " + std::to_string(x.level) + ": " + x.message;
        }
    }
    throw PreconditionError("tower fails every compactohedral variant; first violation " + first_failure);
}

SESReport steenrod_report(const ComplexTower& t, int n, const ReportOptions& options) {
    if (n < 0) throw std::invalid_argument("steenrod_report: negative dimension");
    if (!options.trusted) require_resolution(t);
    const bool reduced = n == 0;
    GroupTower upper, lower;
#pragma omp parallel sections
    {
#pragma omp section
        upper = options.theory(t, n + 1, false);
#pragma omp section
        lower = options.theory(t, n, reduced);
    }
    return assemble(n, reduced, false, upper, n + 1, lower, options.window);
}

std::variant<FGAbelianGroup, NotFinitelyStable> cech_cohomology_report(const ComplexTower& t, int n,
                                                                       const ReportOptions& options) {
    if (!options.trusted) require_resolution(t);
    return colim_direct_system(cohomology_system(t, n), options.window);
}

GroupTower restriction_tower(const Filtration& f, int n, std::size_t extra) {
    if (f.stages.empty()) throw std::invalid_argument("filtration has no stages");
    std::vector<SimplicialComplex> stages;
    for (const auto& s : f.stages) stages.push_back(s.as_complex(f.ambient));
    for (std::size_t k = 0; k < extra; ++k) stages.push_back(stages.back());

    std::vector<HomologyResult> coh(stages.size());
    if (n >= 0) {
        const long count = static_cast<long>(stages.size());
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < count; ++i) coh[i] = cohomology_result(stages[i], n);
    }
    GroupTower g;
    for (std::size_t i = 0; i < stages.size(); ++i)
        g.levels.push_back(n >= 0 ? coh[i].group : make_group(FGAbelianGroup()));
    for (std::size_t i = 0; i + 1 < stages.size(); ++i) {
        if (n < 0) {
            g.bonds.push_back(GroupHom::zero(g.levels[i + 1], g.levels[i]));
            continue;
        }
        const SimplicialMap inc = SimplicialMap::inclusion(stages[i], stages[i + 1]);
        g.bonds.push_back(induced_cohomology_map(inc, coh[i + 1], coh[i]));
    }
    if (extra > 0) {
        g.certificate.kind = Kind::Periodic;
        g.certificate.offset = f.stages.size() - 1;
    }
    return g;
}

SESReport petkova_report(const Filtration& f, int n, std::size_t window) {
    if (n < 0) throw std::invalid_argument("petkova_report: negative dimension");
    if (f.stages.empty()) throw PreconditionError("filtration has no stages");
    const Subcomplex& top = f.stages.back();
    for (std::size_t i = 0; i < f.stages.size(); ++i) {
        if (!f.stages[i].is_face_closed())
            throw PreconditionError("stage " + std::to_string(i) + " is not closed under faces");
        for (const auto& s : f.stages[i].simplices())
            if (!f.ambient.contains(s)) throw PreconditionError("stage " + std::to_string(i) + " leaves the ambient complex");
    }
    const SimplicialComplex union_complex = top.as_complex(f.ambient);
    const auto relabel = [&](const Subcomplex& s) {
        std::vector<LabelSimplex> labels;
        for (const auto& simplex : s.simplices()) labels.push_back(f.ambient.labels(simplex));
        return Subcomplex::closure_of_labels(union_complex, labels);
    };
    for (std::size_t i = 0; i + 1 < f.stages.size(); ++i) {
        for (const auto& s : f.stages[i].simplices())
            if (!f.stages[i + 1].contains(s))
                throw PreconditionError("stage " + std::to_string(i) + " is not contained in stage " +
                                        std::to_string(i + 1) + ": " + f.ambient.format(s));
        const InteriorCheck c = contained_in_interior(relabel(f.stages[i]), relabel(f.stages[i + 1]), union_complex);
        if (!c.holds)
            throw PreconditionError("stage " + std::to_string(i) + " is not in the interior of stage " +
                                    std::to_string(i + 1) + ": witness " + union_complex.format(*c.witness));
    }
    const std::size_t extra = std::max<std::size_t>(window, 1);
    return assemble(n, false, true, restriction_tower(f, n - 1, extra), n - 1, restriction_tower(f, n, extra), window);
}

}  // namespace shape

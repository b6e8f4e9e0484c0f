#include "shape/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "shape/assembly.hpp"
#include "shape/compactohedral.hpp"
#include "shape/document.hpp"
#include "shape/gallery.hpp"
#include "shape/homology.hpp"
#include "shape/nerve.hpp"
#include "shape/telescope.hpp"

namespace shape {

namespace {

using json = nlohmann::json;

/// Bad flag combinations that CLI11 cannot express.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "text";
    bool reduced = false;
    bool trusted = false;
    int dim = -1;
    std::size_t window = 2;
    std::string report;
    std::string variant = "compactohedral";
    std::string output;
    std::size_t level = 1;
    bool cohomology = false;
    std::vector<std::string> files;
    std::string family;
    std::string violation;
    GalleryParams gallery;
};

/// One report: human-readable lines plus the structured block.
struct Report {
    std::ostringstream text;
    json data = json::object();
};

json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

json group_json(const FGAbelianGroup& g) {
    json torsion = json::array();
    for (const auto& d : g.torsion()) torsion.push_back(integer_json(d));
    return {{"text", g.to_string()}, {"free_rank", g.free_rank()}, {"torsion", torsion}};
}

json matrix_json(const IntegerMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (const auto& x : m.row(r)) row.push_back(integer_json(x));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string group_name(int n, bool reduced, bool cohomology) {
    if (cohomology) return "H^" + std::to_string(n);
    return (reduced ? "H~_" : "H_") + std::to_string(n);
}

template <class T>
T load(const std::string& file) {
    return expect_payload<T>(read_document(file), file);
}

std::vector<int> dims_to_report(int requested, int top) {
    if (requested >= 0) return {requested};
    std::vector<int> out;
    for (int n = 0; n <= std::max(top, 0); ++n) out.push_back(n);
    return out;
}

void homology_block(const SimplicialComplex& k, const std::vector<int>& dims, bool reduced, bool cohomology_groups,
                    Report& r) {
    json groups = json::array();
    for (int n : dims) {
        const FGAbelianGroup g = cohomology_groups ? cohomology(k, n) : *homology(k, n, reduced && n == 0).group;
        const bool red = reduced && n == 0 && !cohomology_groups;
        r.text << group_name(n, red, cohomology_groups) << " = " << g.to_string() << "\n";
        groups.push_back({{"dimension", n}, {"reduced", red}, {"group", group_json(g)}});
    }
    r.data["groups"] = groups;
}

void complex_summary(const SimplicialComplex& k, Report& r) {
    std::size_t simplices = 0;
    for (int d = 0; d <= k.dimension(); ++d) simplices += k.count(d);
    r.text << "complex: " << k.vertices().size() << " vertices, " << simplices << " simplices, dimension "
           << k.dimension() << "\n";
    r.data["vertices"] = k.vertices().size();
    r.data["simplices"] = simplices;
    r.data["complex_dimension"] = k.dimension();
}

std::string axiom_range(Variant v) {
    const auto list = axioms(v);
    if (list == std::vector<std::string>{"C0", "C1", "C2", "C3"}) return "C0..C3";
    std::string out;
    for (const auto& a : list) out += (out.empty() ? "" : ", ") + a;
    return out;
}

int validation_block(const ComplexTower& t, const std::string& variant_name, Report& r) {
    const auto v = variant_from_string(variant_name);
    if (!v) throw UsageError("unknown variant '" + variant_name + "'");
    const ValidationReport report = validate(t, *v);
    r.data["variant"] = to_string(*v);
    r.data["axioms"] = axioms(*v);
    r.data["passed"] = report.passed();
    json violations = json::array();
    std::vector<std::string> failed;
    for (const auto& x : report.violations) {
        if (std::find(failed.begin(), failed.end(), x.axiom) == failed.end()) failed.push_back(x.axiom);
        json w = json::array();
        if (!x.witness.empty()) w = t.levels[x.level].labels(x.witness);
        violations.push_back({{"axiom", x.axiom}, {"level", x.level}, {"witness", w}, {"message", x.message}});
    }
    r.data["violations"] = violations;
    if (report.passed()) {
        r.text << "PASS (" << axiom_range(*v) << ")\n";
        return kSuccess;
    }
    r.text << "FAIL (";
    for (std::size_t i = 0; i < failed.size(); ++i) r.text << (i ? ", " : "") << failed[i];
    r.text << ")\n";
    for (const auto& x : report.violations) {
        r.text << "  " << x.axiom << " at level " << x.level;
        if (!x.witness.empty()) r.text << ", witness " << t.levels[x.level].format(x.witness);
        r.text << ": " << x.message << "\n";
    }
    return kPreconditionFailed;
}

void ses_block(const SESReport& s, const std::string& report_name, std::size_t window, Report& r) {
    const std::string name = group_name(s.dimension, s.reduced, s.cohomology) + "(X)";
    r.data["report"] = report_name;
    r.data["dimension"] = s.dimension;
    r.data["reduced"] = s.reduced;
    r.data["window"] = window;
    r.text << report_name << " report, " << name << ", window " << window << "\n";

    json left = {{"kind", to_string(s.left.kind)}, {"reason", s.left.reason}};
    r.text << "lim1: " << to_string(s.left.kind);
    if (s.left.label) {
        left["label"] = *s.left.label;
        r.text << " (label: " << *s.left.label << ")";
    }
    r.text << "\n";
    r.data["left"] = left;

    if (const auto* g = std::get_if<FGAbelianGroup>(&s.right)) {
        r.data["right"] = {{"kind", "group"}, {"group", group_json(*g)}};
        r.text << "lim: " << g->to_string() << "\n";
    } else {
        const auto& ns = std::get<NotStable>(s.right);
        r.data["right"] = {{"kind", "not_stable"}, {"diagnostics", ns.diagnostics}};
        r.text << "lim: not stable (" << ns.diagnostics << ")\n";
    }

    if (const auto* g = std::get_if<FGAbelianGroup>(&s.middle)) {
        r.data["middle"] = {{"kind", "group"}, {"group", group_json(*g)}};
        r.text << name << ": " << g->to_string() << "\n";
    } else if (std::holds_alternative<UncountableViaLeft>(s.middle)) {
        r.data["middle"] = {{"kind", "uncountable_via_lim1"}};
        r.text << name << ": uncountable via lim1\n";
    } else {
        r.data["middle"] = {{"kind", "unresolved_extension"}};
        r.text << name << ": unresolved extension\n";
    }
    r.data["provenance"] = s.provenance;
    r.text << "provenance:\n";
    for (const auto& p : s.provenance) r.text << "  " << p << "\n";
}

void cech_block(const ComplexTower& t, const Options& o, Report& r) {
    if (o.dim < 0) throw UsageError("--dim is required for the cech report");
    ReportOptions ro;
    ro.window = o.window;
    ro.trusted = o.trusted;
    const auto result = cech_cohomology_report(t, o.dim, ro);
    r.data["report"] = "cech";
    r.data["dimension"] = o.dim;
    r.data["window"] = o.window;
    const std::string name = "Cech H^" + std::to_string(o.dim) + "(X)";
    if (const auto* g = std::get_if<FGAbelianGroup>(&result)) {
        r.data["colim"] = {{"kind", "group"}, {"group", group_json(*g)}};
        r.text << name << ": " << g->to_string() << "\n";
        return;
    }
    const auto& nfs = std::get<NotFinitelyStable>(result);
    json chain = json::array();
    std::string listed;
    for (const auto& g : nfs.chain) {
        chain.push_back(group_json(g));
        listed += (listed.empty() ? "" : ", ") + g.to_string();
    }
    r.data["colim"] = {{"kind", "not_finitely_stable"}, {"chain", chain}, {"diagnostics", nfs.diagnostics}};
    r.text << name << ": not finitely stable (" << nfs.diagnostics << ")\n  chain: " << listed << "\n";
}

int tower_report(const ComplexTower& t, const Options& o, Report& r) {
    if (o.report == "validate") return validation_block(t, o.variant, r);
    if (o.report == "cech") {
        cech_block(t, o, r);
        return kSuccess;
    }
    if (o.report != "steenrod") throw UsageError("report '" + o.report + "' does not apply to a complex tower");
    if (o.dim < 0) throw UsageError("--dim is required for the steenrod report");
    ReportOptions ro;
    ro.window = o.window;
    ro.trusted = o.trusted;
    ses_block(steenrod_report(t, o.dim, ro), "steenrod", o.window, r);
    return kSuccess;
}

int dispatch(const std::string& command, const Options& o, Report& r) {
    r.data["command"] = command;
    if (command == "homology" || command == "cohomology") {
        const auto k = load<SimplicialComplex>(o.files.at(0));
        homology_block(k, dims_to_report(o.dim, k.dimension()), o.reduced, command == "cohomology", r);
        return kSuccess;
    }
    if (command == "induced") {
        if (o.dim < 0) throw UsageError("--dim is required");
        const auto f = load<SimplicialMap>(o.files.at(0));
        const GroupHom h = o.cohomology ? induced_cohomology_map(f, o.dim) : induced_map(f, o.dim, o.reduced && o.dim == 0);
        const std::string name = group_name(o.dim, o.reduced && o.dim == 0 && !o.cohomology, o.cohomology);
        const std::string arrow = o.cohomology ? "f^*: " : "f_*: ";
        r.text << arrow << name << "(" << (o.cohomology ? "target" : "source") << ") = " << h.source()->to_string()
               << " -> " << name << "(" << (o.cohomology ? "source" : "target") << ") = " << h.target()->to_string()
               << "\n";
        r.text << "matrix: " << to_string(h.canonical_matrix()) << "\n";
        r.data["dimension"] = o.dim;
        r.data["cohomology"] = o.cohomology;
        r.data["domain"] = group_json(*h.source());
        r.data["codomain"] = group_json(*h.target());
        r.data["matrix"] = matrix_json(h.canonical_matrix());
        return kSuccess;
    }
    if (command == "telescope" || command == "pinch") {
        const auto t = load<ComplexTower>(o.files.at(0));
        if (o.level >= t.depth()) throw UsageError("--level must be below the tower depth " + std::to_string(t.depth()));
        const SimplicialComplex k =
            command == "telescope" ? finite_telescope(t, o.level).complex : pinched_telescope(t, o.level);
        r.data["level"] = o.level;
        complex_summary(k, r);
        homology_block(k, dims_to_report(o.dim, std::min(k.dimension(), 2)), o.reduced, false, r);
        if (!o.output.empty()) write_document(o.output, {k});
        return kSuccess;
    }
    if (command == "tower-report") {
        if (o.report == "petkova") {
            if (o.dim < 0) throw UsageError("--dim is required for the petkova report");
            const auto f = load<Filtration>(o.files.at(0));
            ses_block(petkova_report(f, o.dim, o.window), "petkova", o.window, r);
            return kSuccess;
        }
        return tower_report(load<ComplexTower>(o.files.at(0)), o, r);
    }
    if (command == "validate") {
        const auto t = load<ComplexTower>(o.files.at(0));
        return validation_block(t, o.variant, r);
    }
    if (command == "nerve" || command == "lebesgue") {
        const auto s = load<PointSample>(o.files.at(0));
        const auto c = load<BallCover>(o.files.at(1));
        if (command == "lebesgue") {
            const Rational lambda = lebesgue_number(s, c);
            r.text << "Lebesgue number = " << lambda.get_str() << "\n";
            r.data["lebesgue_number"] = lambda.get_str();
            return kSuccess;
        }
        const SimplicialComplex k = nerve(c, s);
        complex_summary(k, r);
        json maximal = json::array();
        for (const auto& m : k.maximal_simplices()) {
            maximal.push_back(k.labels(m));
            r.text << "  " << k.format(m) << "\n";
        }
        r.data["maximal_simplices"] = maximal;
        homology_block(k, dims_to_report(o.dim, std::min(k.dimension(), 2)), o.reduced, false, r);
        if (!o.output.empty()) write_document(o.output, {k});
        return kSuccess;
    }
    if (command == "gallery") {
        ComplexTower t;
        if (!o.violation.empty()) {
            if (o.family != "two_fleas") throw UsageError("--violation applies to the two_fleas family only");
            t = two_fleas_with_violation(o.gallery.depth, o.violation, o.gallery.teeth);
        } else {
            t = build_gallery(o.family, o.gallery);
        }
        r.data["family"] = o.family;
        r.data["depth"] = t.depth();
        if (!o.output.empty()) write_document(o.output, {t});
        if (o.report.empty()) {
            if (o.output.empty()) r.text << serialize({t});
            r.data["document"] = json::parse(serialize({t}));
            return kSuccess;
        }
        if (o.report == "petkova") throw UsageError("the petkova report takes a filtration file");
        return tower_report(t, o, r);
    }
    throw UsageError("unknown command " + command);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Homology, towers and shape invariants of finite simplicial data", "shapetool"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "structured"}));
    app.add_flag("--reduced", o.reduced, "Reduced homology in degree 0");
    app.add_flag("--trusted", o.trusted, "Skip the compactohedral check before tower reports");

    const auto dim = [&](CLI::App* c) { c->add_option("--dim", o.dim, "Dimension")->check(CLI::NonNegativeNumber); };
    const auto window = [&](CLI::App* c) { c->add_option("--window", o.window, "Stabilization window")->capture_default_str(); };
    const auto file = [&](CLI::App* c, const char* name) {
        c->add_option(name, o.files, "Input document")->required()->check(CLI::ExistingFile);
    };

    CLI::App* homology_cmd = app.add_subcommand("homology", "Integral homology of a complex");
    file(homology_cmd, "complex");
    dim(homology_cmd);
    CLI::App* cohomology_cmd = app.add_subcommand("cohomology", "Integral cohomology of a complex");
    file(cohomology_cmd, "complex");
    dim(cohomology_cmd);
    CLI::App* induced_cmd = app.add_subcommand("induced", "Map induced on (co)homology by a simplicial map");
    file(induced_cmd, "map");
    dim(induced_cmd);
    induced_cmd->add_flag("--cohomology", o.cohomology, "Induced map on cohomology");
    for (const char* name : {"telescope", "pinch"}) {
        CLI::App* c = app.add_subcommand(name, std::string(name) == "telescope" ? "Finite mapping telescope of a tower"
                                                                                  : "Telescope with its last level coned off");
        file(c, "tower");
        dim(c);
        c->add_option("--level", o.level, "Deepest level used")->capture_default_str();
        c->add_option("--output", o.output, "Write the complex document here");
    }
    CLI::App* report_cmd = app.add_subcommand("tower-report", "Steenrod, Cech or filtration report");
    file(report_cmd, "input");
    dim(report_cmd);
    window(report_cmd);
    report_cmd->add_option("--report", o.report, "Report kind")
        ->required()
        ->check(CLI::IsMember({"steenrod", "cech", "petkova"}));
    CLI::App* validate_cmd = app.add_subcommand("validate", "Check a complex tower against a compactohedral variant");
    file(validate_cmd, "tower");
    const std::vector<std::string> variants{"compactohedral", "weakly_compactohedral", "pre_compactohedral",
                                            "weakly_pre_compactohedral"};
    validate_cmd->add_option("--variant", o.variant, "Axiom variant")->capture_default_str()->check(CLI::IsMember(variants));
    CLI::App* nerve_cmd = app.add_subcommand("nerve", "Nerve of a ball cover of a point sample");
    nerve_cmd->add_option("files", o.files, "Point sample and cover documents")
        ->required()
        ->expected(2)
        ->check(CLI::ExistingFile);
    dim(nerve_cmd);
    nerve_cmd->add_option("--output", o.output, "Write the nerve document here");
    CLI::App* lebesgue_cmd = app.add_subcommand("lebesgue", "Lebesgue number of a cover over a sample");
    lebesgue_cmd->add_option("files", o.files, "Point sample and cover documents")
        ->required()
        ->expected(2)
        ->check(CLI::ExistingFile);
    CLI::App* gallery_cmd = app.add_subcommand("gallery", "Built-in towers");
    gallery_cmd->add_option("family", o.family, "Tower family")->required()->check(CLI::IsMember(gallery_families()));
    gallery_cmd->add_option("--teeth", o.gallery.teeth, "Teeth (comb, two_fleas); 0 selects depth + 1");
    gallery_cmd->add_option("--p", o.gallery.p, "Solenoid degree")->capture_default_str();
    gallery_cmd->add_option("--depth", o.gallery.depth, "Number of levels")->capture_default_str();
    gallery_cmd->add_option("--violation", o.violation, "Break one axiom of two_fleas")
        ->check(CLI::IsMember({"C1", "C2", "C3"}));
    gallery_cmd->add_option("--report", o.report, "Report on the tower")
        ->check(CLI::IsMember({"steenrod", "cech", "validate"}));
    gallery_cmd->add_option("--variant", o.variant, "Axiom variant for --report validate")->check(CLI::IsMember(variants));
    dim(gallery_cmd);
    window(gallery_cmd);
    gallery_cmd->add_option("--output", o.output, "Write the tower document here");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInvalidInput;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    Report r;
    int status = kSuccess;
    try {
        status = dispatch(command, o, r);
    } catch (const DocumentError& e) {
        err << "shapetool: invalid input: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const UsageError& e) {
        err << "shapetool: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const PreconditionError& e) {
        err << "shapetool: precondition failed: " << e.what() << "\n";
        return kPreconditionFailed;
    } catch (const std::exception& e) {
        err << "shapetool: " << command << ": " << e.what() << "\n";
        return kPreconditionFailed;
    }
    if (o.format == "structured") {
        r.data["exit_status"] = status;
        out << r.data.dump(2) << "\n";
    } else {
        out << r.text.str();
    }
    return status;
}

}  // namespace shape

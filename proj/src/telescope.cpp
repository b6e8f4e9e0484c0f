#include "shape/telescope.hpp"

#include <stdexcept>
#include <string>

namespace shape {

namespace {

std::string tagged(const std::string& prefix, const std::string& label) { return prefix + label; }

LabelSimplex tag_simplex(const std::string& prefix, const LabelSimplex& s) {
    LabelSimplex out;
    out.reserve(s.size());
    for (const auto& v : s) out.push_back(tagged(prefix, v));
    return out;
}

// Prism simplices of MC(f) with source copies tagged `src` and target copies `tgt`.
void append_cylinder(const SimplicialMap& f, const std::string& src, const std::string& tgt,
                     std::vector<LabelSimplex>& out) {
    const SimplicialComplex& a = f.source();
    const SimplicialComplex& b = f.target();
    for (const auto& s : a.maximal_simplices()) {
        for (std::size_t j = 0; j < s.size(); ++j) {
            LabelSimplex cell;
            for (std::size_t i = 0; i <= j; ++i) cell.push_back(tagged(src, a.vertices()[s[i]]));
            Simplex tail(s.begin() + static_cast<std::ptrdiff_t>(j), s.end());
            for (auto w : f.image(tail)) cell.push_back(tagged(tgt, b.vertices()[w]));
            out.push_back(std::move(cell));
        }
    }
    for (const auto& s : b.maximal_simplices()) out.push_back(tag_simplex(tgt, b.labels(s)));
}

std::vector<std::string> tagged_vertices(const std::string& prefix, const SimplicialComplex& k) {
    std::vector<std::string> out;
    for (const auto& v : k.vertices()) out.push_back(tagged(prefix, v));
    return out;
}

// Vertex map k -> whole sending v to prefix + v.
SimplicialMap tagged_inclusion(const SimplicialComplex& k, const SimplicialComplex& whole, const std::string& prefix) {
    std::map<std::string, std::string> labels;
    for (const auto& v : k.vertices()) labels[v] = tagged(prefix, v);
    return SimplicialMap(k, whole, labels);
}

std::string level_prefix(std::size_t i) { return "L" + std::to_string(i) + ":"; }

}  // namespace

MappingCylinder mapping_cylinder(const SimplicialMap& f) {
    require_simplicial(f, "mapping_cylinder");
    std::vector<LabelSimplex> cells;
    append_cylinder(f, "s:", "t:", cells);
    std::vector<std::string> isolated = tagged_vertices("s:", f.source());
    for (auto& v : tagged_vertices("t:", f.target())) isolated.push_back(std::move(v));
    SimplicialComplex cyl = SimplicialComplex::from_maximal(cells, isolated);

    std::map<std::string, std::string> retract;
    for (std::size_t v = 0; v < f.source().vertices().size(); ++v)
        retract[tagged("s:", f.source().vertices()[v])] = f.target().vertices()[f(v)];
    for (const auto& w : f.target().vertices()) retract[tagged("t:", w)] = w;

    MappingCylinder mc{cyl, tagged_inclusion(f.source(), cyl, "s:"), tagged_inclusion(f.target(), cyl, "t:"),
                       SimplicialMap(cyl, f.target(), retract)};
    return mc;
}

Telescope finite_telescope(const ComplexTower& tower, std::size_t n) {
    if (n >= tower.depth())
        throw std::out_of_range("finite_telescope: level " + std::to_string(n) + " beyond truncation depth " +
                                std::to_string(tower.depth()));
    std::vector<LabelSimplex> cells;
    std::vector<std::string> isolated;
    for (std::size_t i = 0; i <= n; ++i) {
        const SimplicialComplex& level = tower.levels[i];
        for (const auto& s : level.maximal_simplices()) cells.push_back(tag_simplex(level_prefix(i), level.labels(s)));
        for (auto& v : tagged_vertices(level_prefix(i), level)) isolated.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < n; ++i) {
        require_simplicial(tower.bonds[i], "finite_telescope");
        append_cylinder(tower.bonds[i], level_prefix(i + 1), level_prefix(i), cells);
    }
    Telescope t;
    t.complex = SimplicialComplex::from_maximal(cells, isolated);
    for (std::size_t i = 0; i <= n; ++i)
        t.level_inclusions.push_back(tagged_inclusion(tower.levels[i], t.complex, level_prefix(i)));
    return t;
}

SimplicialComplex pinched_telescope(const ComplexTower& tower, std::size_t n) {
    if (n == 0) throw std::invalid_argument("pinched_telescope: level 0 has nothing to pinch");
    const Telescope t = finite_telescope(tower, n);
    std::vector<LabelSimplex> cells;
    for (const auto& s : t.complex.maximal_simplices()) cells.push_back(t.complex.labels(s));
    const SimplicialComplex& top = tower.levels[n];
    for (const auto& s : top.maximal_simplices()) {
        LabelSimplex cone = tag_simplex(level_prefix(n), top.labels(s));
        cone.push_back("*");
        cells.push_back(std::move(cone));
    }
    std::vector<std::string> extra = t.complex.vertices();
    extra.push_back("*");
    return SimplicialComplex::from_maximal(cells, extra);
}

}  // namespace shape

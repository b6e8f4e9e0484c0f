#include "shape/gallery.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "shape/compactohedral.hpp"

namespace shape {

namespace {

std::string padded(std::size_t k, std::size_t largest) {
    std::string s = std::to_string(k);
    const std::size_t width = std::to_string(largest).size();
    return std::string(width - s.size(), '0') + s;
}

SimplicialComplex polygon(std::size_t n, std::size_t largest) {
    std::vector<LabelSimplex> edges;
    for (std::size_t k = 0; k < n; ++k)
        edges.push_back({"v" + padded(k, largest), "v" + padded((k + 1) % n, largest)});
    return SimplicialComplex::from_maximal(edges);
}

// Bonds k -> rule(i, k) between consecutive polygons, markings K = L = R.
ComplexTower polygon_tower(const std::vector<std::size_t>& sizes,
                          const std::function<std::size_t(std::size_t, std::size_t)>& rule) {
    const std::size_t largest = sizes.back();
    ComplexTower t;
    for (auto n : sizes) t.levels.push_back(polygon(n, largest));
    for (std::size_t i = 0; i + 1 < sizes.size(); ++i) {
        std::vector<std::size_t> map(sizes[i + 1]);
        for (std::size_t k = 0; k < sizes[i + 1]; ++k) map[k] = rule(i, k);
        t.bonds.emplace_back(t.levels[i + 1], t.levels[i], map);
    }
    std::vector<Subcomplex> whole;
    for (const auto& level : t.levels) whole.push_back(Subcomplex::whole(level));
    t.marked_K = whole;
    t.marked_L = whole;
    t.certificate.kind = TowerCertificate::Kind::Periodic;
    return t;
}

std::vector<SimplicialMap> inclusions(const std::vector<SimplicialComplex>& levels) {
    std::vector<SimplicialMap> out;
    for (std::size_t i = 0; i + 1 < levels.size(); ++i) out.push_back(SimplicialMap::inclusion(levels[i + 1], levels[i]));
    return out;
}

std::string point(long x, long y) { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }

// Triangulated grid box [-s, s] x [cy - s, cy + s].
void append_box(long cy, long s, std::vector<LabelSimplex>& out) {
    for (long x = -s; x < s; ++x)
        for (long y = cy - s; y < cy + s; ++y) {
            out.push_back({point(x, y), point(x + 1, y), point(x + 1, y + 1)});
            out.push_back({point(x, y), point(x, y + 1), point(x + 1, y + 1)});
        }
}

struct FleaGeometry {
    long teeth;
    long reach;  // Y
};

FleaGeometry flea_geometry(std::size_t depth, std::size_t teeth) {
    if (depth == 0) throw std::invalid_argument("two_fleas: depth must be at least 1");
    if (teeth == 0) teeth = depth + 1;
    if (teeth < depth) throw std::invalid_argument("two_fleas: teeth must be at least the depth");
    return {static_cast<long>(teeth), static_cast<long>(teeth) + 2};
}

std::vector<LabelSimplex> flea_teeth(const FleaGeometry& g) {
    std::vector<LabelSimplex> out;
    for (long x = 1; x <= g.teeth; ++x)
        for (long y = -g.reach; y < g.reach; ++y) out.push_back({point(x, y), point(x, y + 1)});
    return out;
}

Subcomplex flea_boxes(const SimplicialComplex& level, const FleaGeometry& g, long s) {
    std::vector<LabelSimplex> boxes;
    append_box(g.reach, s, boxes);
    append_box(-g.reach, s, boxes);
    return Subcomplex::closure_of_labels(level, boxes);
}

}  // namespace

ComplexTower comb_tower(std::size_t teeth, std::size_t depth) {
    if (depth == 0) throw std::invalid_argument("comb: depth must be at least 1");
    if (teeth < depth + 1) throw std::invalid_argument("comb: teeth must be at least depth + 1");
    const std::size_t height = depth;  // interior vertices per tooth
    const auto b = [&](std::size_t j) { return "b" + padded(j, teeth); };
    const auto t = [&](std::size_t j) { return "t" + padded(j, teeth); };
    const auto u = [&](std::size_t j, std::size_t k) { return "u" + padded(j, teeth) + "_" + padded(k, height); };
    // Vertices of tooth j from bottom to top.
    const auto tooth = [&](std::size_t j) {
        std::vector<std::string> path{b(j)};
        for (std::size_t k = 1; k <= height; ++k) path.push_back(u(j, k));
        path.push_back(t(j));
        return path;
    };

    std::vector<LabelSimplex> fixed{{"o", b(teeth)}};
    for (std::size_t j = 1; j <= teeth; ++j) {
        const auto path = tooth(j);
        for (std::size_t k = 0; k + 1 < path.size(); ++k) fixed.push_back({path[k], path[k + 1]});
        if (j < teeth) fixed.push_back({t(j), t(j + 1)});
    }

    ComplexTower tower;
    std::vector<Subcomplex> marks;
    for (std::size_t i = 0; i < depth; ++i) {
        std::vector<LabelSimplex> cells = fixed;
        std::vector<LabelSimplex> k_cells{{"o", b(teeth)}};
        for (std::size_t j = i + 1; j < teeth; ++j) {
            cells.push_back({b(j), b(j + 1)});
            k_cells.push_back({b(j), b(j + 1)});
        }
        for (std::size_t j = i + 1; j <= teeth; ++j) {
            const auto path = tooth(j);
            for (std::size_t k = 0; k < depth - i; ++k) k_cells.push_back({path[k], path[k + 1]});
        }
        tower.levels.push_back(SimplicialComplex::from_maximal(cells));
        marks.push_back(Subcomplex::closure_of_labels(tower.levels.back(), k_cells));
    }
    tower.bonds = inclusions(tower.levels);
    tower.marked_K = marks;
    tower.certificate.kind = TowerCertificate::Kind::ShiftFamily;
    tower.certificate.drop = 1;
    tower.certificate.lim1_labels[1] = "Prod(Z)/Sum(Z)";
    return with_preimage_markings(tower);
}

ComplexTower solenoid_tower(std::size_t p, std::size_t depth) {
    if (depth == 0) throw std::invalid_argument("solenoid: depth must be at least 1");
    if (p < 2) throw std::invalid_argument("solenoid: p must be at least 2");
    std::vector<std::size_t> sizes{3};
    for (std::size_t i = 1; i < depth; ++i) sizes.push_back(sizes.back() * p);
    return polygon_tower(sizes, [&](std::size_t i, std::size_t k) { return k % sizes[i]; });
}

ComplexTower warsaw_tower(std::size_t depth) {
    if (depth == 0) throw std::invalid_argument("warsaw: depth must be at least 1");
    std::vector<std::size_t> sizes;
    for (std::size_t i = 0; i < depth; ++i) sizes.push_back(3 + i);
    return polygon_tower(sizes, [](std::size_t i, std::size_t k) { return std::min(k, 2 + i); });
}

ComplexTower two_fleas_tower(std::size_t depth, std::size_t teeth) {
    const FleaGeometry g = flea_geometry(depth, teeth);
    const std::vector<LabelSimplex> comb = flea_teeth(g);
    ComplexTower tower;
    std::vector<Subcomplex> marks;
    for (std::size_t i = 0; i < depth; ++i) {
        const long s = g.teeth - static_cast<long>(i);
        std::vector<LabelSimplex> cells = comb;
        append_box(g.reach, s, cells);
        append_box(-g.reach, s, cells);
        tower.levels.push_back(SimplicialComplex::from_maximal(cells));
        marks.push_back(flea_boxes(tower.levels.back(), g, s));
    }
    tower.bonds = inclusions(tower.levels);
    tower.marked_K = marks;
    return with_preimage_markings(tower);
}

ComplexTower two_fleas_with_violation(std::size_t depth, std::string_view axiom, std::size_t teeth) {
    if (depth < 2) throw std::invalid_argument("two_fleas_with_violation: depth must be at least 2");
    const FleaGeometry g = flea_geometry(depth, teeth);
    ComplexTower t = two_fleas_tower(depth, teeth);
    auto& K = *t.marked_K;
    const std::size_t last = depth - 1;
    if (axiom == "C1") {
        // A far tooth vertex joins the deepest K but lies outside the K below it.
        std::set<Simplex> grown = K[last].simplices();
        grown.insert(*t.levels[last].from_labels({point(g.teeth, 0)}));
        K[last] = Subcomplex(std::move(grown));
    } else if (axiom == "C2") {
        // K_1 grows to the whole preimage of K_0, reaching its frontier.
        K[1] = preimage(t.bonds[0], K[0]);
    } else if (axiom == "C3") {
        // The deepest level loses a tooth edge far from both boxes.
        const LabelSimplex cut{point(g.teeth, 0), point(g.teeth, 1)};
        const SimplicialComplex& old = t.levels[last];
        std::vector<LabelSimplex> cells;
        for (const auto& s : old.maximal_simplices()) {
            LabelSimplex labels = old.labels(s);
            if (labels != cut) cells.push_back(std::move(labels));
        }
        t.levels[last] = SimplicialComplex::from_maximal(cells, old.vertices());
        t.bonds[last - 1] = SimplicialMap::inclusion(t.levels[last], t.levels[last - 1]);
    } else {
        throw std::invalid_argument("two_fleas_with_violation: unknown axiom " + std::string(axiom));
    }
    t.marked_L.reset();
    return with_preimage_markings(t);
}

std::vector<std::string> gallery_families() { return {"comb", "solenoid", "warsaw", "two_fleas"}; }

ComplexTower build_gallery(std::string_view family, const GalleryParams& params) {
    const std::size_t teeth = params.teeth == 0 ? params.depth + 1 : params.teeth;
    if (family == "comb") return comb_tower(teeth, params.depth);
    if (family == "solenoid") return solenoid_tower(params.p, params.depth);
    if (family == "warsaw") return warsaw_tower(params.depth);
    if (family == "two_fleas") return two_fleas_tower(params.depth, teeth);
    throw std::invalid_argument("unknown gallery family " + std::string(family));
}

}  // namespace shape

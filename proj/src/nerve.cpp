#include "shape/nerve.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace shape {

namespace {

std::string element_label(std::size_t i, std::size_t count) {
    const std::string s = std::to_string(i);
    const std::size_t width = std::to_string(count == 0 ? 0 : count - 1).size();
    return "U" + std::string(width - s.size(), '0') + s;
}

std::vector<std::vector<std::size_t>> traces(const PointSample& s, const BallCover& c) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& b : c.elements) out.push_back(trace(s, b));
    return out;
}

void check_cover(const PointSample& s, const BallCover& c) {
    for (const auto& b : c.elements) {
        if (b.center >= s.points.size()) throw std::invalid_argument("cover element centred at a missing point");
        if (b.radius <= 0) throw std::invalid_argument("cover element with non-positive radius");
    }
}

}  // namespace

void PointSample::check() const {
    for (const auto& p : points)
        if (p.size() != points.front().size()) throw std::invalid_argument("sample points have different dimensions");
    std::set<std::size_t> seen;
    for (auto m : compactum_mark) {
        if (m >= points.size()) throw std::invalid_argument("compactum mark " + std::to_string(m) + " is not a point");
        if (!seen.insert(m).second) throw std::invalid_argument("compactum mark " + std::to_string(m) + " repeats");
    }
}

Rational distance(const Point& a, const Point& b) {
    if (a.size() != b.size()) throw std::invalid_argument("distance: points of different dimensions");
    Rational d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max<Rational>(d, abs(a[i] - b[i]));
    return d;
}

std::vector<std::size_t> trace(const PointSample& s, const Ball& b) {
    std::vector<std::size_t> out;
    const Point& c = s.points.at(b.center);
    for (std::size_t i = 0; i < s.points.size(); ++i)
        if (distance(s.points[i], c) <= b.radius) out.push_back(i);
    return out;
}

Rational lebesgue_number(const PointSample& s, const BallCover& c) {
    s.check();
    check_cover(s, c);
    std::optional<Rational> lambda;
    for (std::size_t x = 0; x < s.points.size(); ++x) {
        std::optional<Rational> best;
        for (const auto& b : c.elements) {
            const Rational slack = b.radius - distance(s.points[x], s.points[b.center]);
            if (slack >= 0 && (!best || slack > *best)) best = slack;
        }
        if (!best) throw std::invalid_argument("lebesgue_number: point " + std::to_string(x) + " lies in no element");
        if (!lambda || *best < *lambda) lambda = best;
    }
    return lambda.value_or(Rational(0));
}

SimplicialComplex nerve(const BallCover& c, const PointSample& s) {
    s.check();
    check_cover(s, c);
    const std::size_t n = c.elements.size();
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(element_label(i, n));
    std::vector<std::vector<std::size_t>> containing(s.points.size());
    const auto tr = traces(s, c);
    for (std::size_t e = 0; e < n; ++e)
        for (auto x : tr[e]) containing[x].push_back(e);
    std::set<LabelSimplex> cells;
    for (const auto& elems : containing) {
        if (elems.empty()) continue;
        LabelSimplex cell;
        for (auto e : elems) cell.push_back(labels[e]);
        cells.insert(std::move(cell));
    }
    return SimplicialComplex::from_maximal(std::vector<LabelSimplex>(cells.begin(), cells.end()), labels);
}

SimplicialMap refinement_map(const BallCover& fine, const BallCover& coarse, const PointSample& s) {
    const auto fine_tr = traces(s, fine);
    const auto coarse_tr = traces(s, coarse);
    std::vector<std::size_t> map;
    for (std::size_t e = 0; e < fine_tr.size(); ++e) {
        std::optional<std::size_t> target;
        for (std::size_t d = 0; d < coarse_tr.size() && !target; ++d)
            if (std::includes(coarse_tr[d].begin(), coarse_tr[d].end(), fine_tr[e].begin(), fine_tr[e].end())) target = d;
        if (!target)
            throw std::invalid_argument("refinement_map: fine element " + std::to_string(e) +
                                        " lies in no coarse element over the sample");
        map.push_back(*target);
    }
    const SimplicialComplex src = nerve(fine, s);
    const SimplicialComplex tgt = nerve(coarse, s);
    // Nerve vertices are labelled in element order, so indices coincide.
    SimplicialMap f(src, tgt, map);
    require_simplicial(f, "refinement_map");
    return f;
}

bool are_contiguous(const SimplicialMap& f, const SimplicialMap& g) {
    if (!(f.source() == g.source()) || !(f.target() == g.target())) return false;
    for (const auto& s : f.source().maximal_simplices()) {
        Simplex joint = f.image(s);
        for (auto v : g.image(s)) joint.push_back(v);
        std::sort(joint.begin(), joint.end());
        joint.erase(std::unique(joint.begin(), joint.end()), joint.end());
        if (!f.target().contains(joint)) return false;
    }
    return true;
}

BallCover cech_cover(const PointSample& s, const Rational& radius, const Rational& fine) {
    BallCover c;
    for (auto k : s.compactum_mark) c.elements.push_back({k, radius});
    const std::set<std::size_t> marked(s.compactum_mark.begin(), s.compactum_mark.end());
    for (std::size_t p = 0; p < s.points.size(); ++p) {
        if (marked.count(p)) continue;
        Rational to_mark = distance(s.points[p], s.points[s.compactum_mark.front()]);
        for (auto k : s.compactum_mark) to_mark = std::min(to_mark, distance(s.points[p], s.points[k]));
        if (to_mark > radius - fine) c.elements.push_back({p, fine});
    }
    return c;
}

ComplexTower cech_tower(const PointSample& s, const std::vector<Rational>& radii, const Rational& fine) {
    s.check();
    if (s.compactum_mark.empty()) throw std::invalid_argument("cech_tower: the compactum mark is empty");
    if (radii.empty()) throw std::invalid_argument("cech_tower: empty radius schedule");
    if (fine <= 0) throw std::invalid_argument("cech_tower: fine radius must be positive");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (radii[i] <= 0) throw std::invalid_argument("cech_tower: radii must be positive");
        if (i > 0 && radii[i] >= radii[i - 1]) throw std::invalid_argument("cech_tower: radii must strictly decrease");
    }
    std::vector<BallCover> covers(radii.size());
    std::vector<SimplicialComplex> levels(radii.size());
    const long count = static_cast<long>(radii.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        covers[i] = cech_cover(s, radii[i], fine);
        levels[i] = nerve(covers[i], s);
    }
    ComplexTower t;
    t.levels = levels;
    for (std::size_t i = 0; i + 1 < covers.size(); ++i) t.bonds.push_back(refinement_map(covers[i + 1], covers[i], s));
    return t;
}

}  // namespace shape

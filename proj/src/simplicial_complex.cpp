#include "shape/simplicial_complex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace shape {

namespace {

const std::vector<Simplex> kNoSimplices;

std::vector<std::string> sorted_unique(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

std::vector<Simplex> faces(const Simplex& s) {
    std::vector<Simplex> out;
    const std::size_t n = s.size();
    if (n >= 8 * sizeof(unsigned long)) throw std::invalid_argument("faces: simplex too large");
    for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
        Simplex f;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1UL << i)) f.push_back(s[i]);
        out.push_back(std::move(f));
    }
    return out;
}

SimplicialComplex SimplicialComplex::from_simplices(std::vector<std::string> vertices,
                                                    const std::vector<LabelSimplex>& simplices) {
    for (const auto& s : simplices) vertices.insert(vertices.end(), s.begin(), s.end());
    SimplicialComplex k;
    k.vertices_ = sorted_unique(std::move(vertices));
    for (std::size_t i = 0; i < k.vertices_.size(); ++i) k.vertex_lookup_.emplace(k.vertices_[i], i);
    std::vector<std::set<Simplex>> dims;
    for (const auto& s : simplices) {
        if (s.empty()) continue;
        Simplex idx;
        for (const auto& l : s) idx.push_back(k.vertex_lookup_.at(l));
        std::sort(idx.begin(), idx.end());
        idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
        if (dims.size() < idx.size()) dims.resize(idx.size());
        dims[idx.size() - 1].insert(std::move(idx));
    }
    for (auto& d : dims) k.by_dim_.emplace_back(d.begin(), d.end());
    k.rebuild_lookup();
    return k;
}

SimplicialComplex SimplicialComplex::from_maximal(const std::vector<LabelSimplex>& simplices,
                                                  const std::vector<std::string>& extra_vertices) {
    std::vector<std::string> verts = extra_vertices;
    for (const auto& s : simplices) verts.insert(verts.end(), s.begin(), s.end());
    SimplicialComplex k;
    k.vertices_ = sorted_unique(std::move(verts));
    for (std::size_t i = 0; i < k.vertices_.size(); ++i) k.vertex_lookup_.emplace(k.vertices_[i], i);
    std::vector<std::set<Simplex>> dims(1);
    for (std::size_t i = 0; i < k.vertices_.size(); ++i) dims[0].insert(Simplex{i});
    for (const auto& s : simplices) {
        Simplex idx;
        for (const auto& l : s) idx.push_back(k.vertex_lookup_.at(l));
        std::sort(idx.begin(), idx.end());
        idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
        if (idx.empty()) continue;
        for (auto& f : faces(idx)) {
            if (dims.size() < f.size()) dims.resize(f.size());
            dims[f.size() - 1].insert(std::move(f));
        }
    }
    if (k.vertices_.empty()) dims.clear();
    for (auto& d : dims) k.by_dim_.emplace_back(d.begin(), d.end());
    k.rebuild_lookup();
    return k;
}

void SimplicialComplex::rebuild_lookup() {
    while (!by_dim_.empty() && by_dim_.back().empty()) by_dim_.pop_back();
    lookup_.assign(by_dim_.size(), {});
    for (std::size_t d = 0; d < by_dim_.size(); ++d)
        for (std::size_t i = 0; i < by_dim_[d].size(); ++i) lookup_[d].emplace(by_dim_[d][i], i);
}

std::optional<std::size_t> SimplicialComplex::vertex_index(std::string_view label) const {
    auto it = vertex_lookup_.find(label);
    if (it == vertex_lookup_.end()) return std::nullopt;
    return it->second;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int n) const {
    if (n < 0 || n > dimension()) return kNoSimplices;
    return by_dim_[static_cast<std::size_t>(n)];
}

std::size_t SimplicialComplex::size() const {
    std::size_t total = 0;
    for (const auto& d : by_dim_) total += d.size();
    return total;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
    if (s.empty() || s.size() > lookup_.size()) return std::nullopt;
    const auto& m = lookup_[s.size() - 1];
    auto it = m.find(s);
    if (it == m.end()) return std::nullopt;
    return it->second;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
    std::set<Simplex> covered;
    std::vector<Simplex> out;
    for (int d = dimension(); d >= 0; --d) {
        for (const auto& s : simplices(d)) {
            if (covered.count(s)) continue;
            out.push_back(s);
            for (auto& f : faces(s)) covered.insert(std::move(f));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

LabelSimplex SimplicialComplex::labels(const Simplex& s) const {
    LabelSimplex out;
    out.reserve(s.size());
    for (auto v : s) out.push_back(vertices_.at(v));
    return out;
}

std::optional<Simplex> SimplicialComplex::from_labels(const LabelSimplex& labels) const {
    Simplex s;
    for (const auto& l : labels) {
        auto v = vertex_index(l);
        if (!v) return std::nullopt;
        s.push_back(*v);
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

std::string SimplicialComplex::format(const Simplex& s) const {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += s[i] < vertices_.size() ? vertices_[s[i]] : "?";
    }
    return out + "}";
}

long SimplicialComplex::euler_characteristic() const {
    long chi = 0;
    for (std::size_t d = 0; d < by_dim_.size(); ++d)
        chi += (d % 2 == 0 ? 1L : -1L) * static_cast<long>(by_dim_[d].size());
    return chi;
}

std::optional<ComplexViolation> validate_complex(const SimplicialComplex& k) {
    for (int d = 0; d <= k.dimension(); ++d) {
        for (const auto& s : k.simplices(d)) {
            for (auto v : s) {
                if (!k.contains(Simplex{v}))
                    return ComplexViolation{s, "simplex " + k.format(s) + " uses vertex " + k.vertices()[v] +
                                                   " whose singleton is missing"};
            }
            if (s.size() < 2) continue;
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex face = s;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
                if (!k.contains(face))
                    return ComplexViolation{s, "simplex " + k.format(s) + " is missing its face " + k.format(face)};
            }
        }
    }
    return std::nullopt;
}

IntegerMatrix boundary_matrix(const SimplicialComplex& k, int n) {
    if (n < 0) throw std::invalid_argument("boundary_matrix: negative dimension");
    const auto& cols = k.simplices(n);
    if (n == 0) return IntegerMatrix(0, cols.size());
    const auto& rows = k.simplices(n - 1);
    IntegerMatrix m(rows.size(), cols.size());
    const std::size_t count = cols.size();
    bool closed = true;
#pragma omp parallel for schedule(static) if (count > 2048) reduction(&& : closed)
    for (std::size_t c = 0; c < count; ++c) {
        const Simplex& s = cols[c];
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex face = s;
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
            auto r = k.index_of(face);
            if (!r) {
                closed = false;
                continue;
            }
            m(*r, c) = (i % 2 == 0) ? 1 : -1;
        }
    }
    if (!closed) throw std::invalid_argument("boundary_matrix: complex is not closed under faces");
    return m;
}

// ---------------------------------------------------------------------------

SimplicialMap::SimplicialMap(SimplicialComplex source, SimplicialComplex target, std::vector<std::size_t> vertex_map)
    : source_(std::move(source)), target_(std::move(target)), vertex_map_(std::move(vertex_map)) {
    if (vertex_map_.size() != source_.vertices().size())
        throw std::invalid_argument("SimplicialMap: vertex map does not cover the source vertices");
    for (auto v : vertex_map_)
        if (v >= target_.vertices().size()) throw std::invalid_argument("SimplicialMap: vertex image out of range");
}

SimplicialMap::SimplicialMap(SimplicialComplex source, SimplicialComplex target,
                             const std::map<std::string, std::string>& labels)
    : source_(std::move(source)), target_(std::move(target)) {
    for (const auto& v : source_.vertices()) {
        auto it = labels.find(v);
        if (it == labels.end()) throw std::invalid_argument("SimplicialMap: source vertex '" + v + "' is not mapped");
        auto t = target_.vertex_index(it->second);
        if (!t) throw std::invalid_argument("SimplicialMap: image '" + it->second + "' is not a target vertex");
        vertex_map_.push_back(*t);
    }
}

SimplicialMap SimplicialMap::identity(const SimplicialComplex& k) {
    std::vector<std::size_t> m(k.vertices().size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = i;
    return SimplicialMap(k, k, std::move(m));
}

SimplicialMap SimplicialMap::inclusion(const SimplicialComplex& sub, const SimplicialComplex& k) {
    std::vector<std::size_t> m;
    for (const auto& v : sub.vertices()) {
        auto t = k.vertex_index(v);
        if (!t) throw std::invalid_argument("SimplicialMap::inclusion: vertex '" + v + "' missing from the ambient complex");
        m.push_back(*t);
    }
    return SimplicialMap(sub, k, std::move(m));
}

Simplex SimplicialMap::image(const Simplex& s) const {
    Simplex out;
    out.reserve(s.size());
    for (auto v : s) out.push_back(vertex_map_[v]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<Simplex> SimplicialMap::first_non_simplicial() const {
    for (const auto& s : source_.maximal_simplices())
        if (!target_.contains(image(s))) return s;
    return std::nullopt;
}

std::map<std::string, std::string> SimplicialMap::label_map() const {
    std::map<std::string, std::string> out;
    for (std::size_t v = 0; v < vertex_map_.size(); ++v) out.emplace(source_.vertices()[v], target_.vertices()[vertex_map_[v]]);
    return out;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
    if (!(f.target() == g.source())) throw std::invalid_argument("compose: target of f is not the source of g");
    std::vector<std::size_t> m(f.vertex_map().size());
    for (std::size_t v = 0; v < m.size(); ++v) m[v] = g(f(v));
    return SimplicialMap(f.source(), g.target(), std::move(m));
}

void require_simplicial(const SimplicialMap& f, std::string_view what) {
    if (auto bad = f.first_non_simplicial())
        throw std::invalid_argument(std::string(what) + ": map is not simplicial, image of " + f.source().format(*bad) +
                                    " is not a simplex of the target");
}

IntegerMatrix chain_map_matrix(const SimplicialMap& f, int n) {
    const auto& src = f.source().simplices(n);
    IntegerMatrix m(f.target().count(n), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
        std::vector<std::size_t> img;
        for (auto v : src[c]) img.push_back(f(v));
        // Sign of the permutation sorting img; zero if a vertex repeats.
        int sign = 1;
        for (std::size_t i = 0; i < img.size(); ++i)
            for (std::size_t j = i + 1; j < img.size(); ++j) {
                if (img[i] == img[j]) sign = 0;
                else if (img[i] > img[j]) sign = -sign;
            }
        if (sign == 0) continue;
        std::sort(img.begin(), img.end());
        auto r = f.target().index_of(img);
        if (!r) throw std::invalid_argument("chain_map_matrix: map is not simplicial");
        m(*r, c) = sign;
    }
    return m;
}

// ---------------------------------------------------------------------------

Subcomplex Subcomplex::closure(const SimplicialComplex& parent, const std::vector<Simplex>& generators) {
    std::set<Simplex> out;
    for (const auto& g : generators) {
        if (!parent.contains(g))
            throw std::invalid_argument("Subcomplex: " + parent.format(g) + " is not a simplex of the parent complex");
        for (auto& f : faces(g)) out.insert(std::move(f));
    }
    return Subcomplex(std::move(out));
}

Subcomplex Subcomplex::closure_of_labels(const SimplicialComplex& parent, const std::vector<LabelSimplex>& generators) {
    std::vector<Simplex> gens;
    for (const auto& g : generators) {
        auto s = parent.from_labels(g);
        if (!s || s->empty()) {
            std::string text = "{";
            for (std::size_t i = 0; i < g.size(); ++i) text += (i ? "," : "") + g[i];
            throw std::invalid_argument("Subcomplex: " + text + "} is not a simplex of the parent complex");
        }
        gens.push_back(*s);
    }
    return closure(parent, gens);
}

Subcomplex Subcomplex::whole(const SimplicialComplex& parent) {
    std::set<Simplex> out;
    for (int d = 0; d <= parent.dimension(); ++d) out.insert(parent.simplices(d).begin(), parent.simplices(d).end());
    return Subcomplex(std::move(out));
}

bool Subcomplex::is_face_closed() const {
    for (const auto& s : simplices_)
        for (const auto& f : faces(s))
            if (!simplices_.count(f)) return false;
    return true;
}

std::vector<LabelSimplex> Subcomplex::maximal_labels(const SimplicialComplex& parent) const {
    const SimplicialComplex k = as_complex(parent);
    std::vector<LabelSimplex> out;
    for (const auto& s : k.maximal_simplices()) out.push_back(k.labels(s));
    return out;
}

SimplicialComplex Subcomplex::as_complex(const SimplicialComplex& parent) const {
    std::vector<LabelSimplex> gens;
    for (const auto& s : simplices_) gens.push_back(parent.labels(s));
    return SimplicialComplex::from_maximal(gens);
}

}  // namespace shape

#include "shape/compactohedral.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace shape {

namespace {

std::set<std::size_t> vertex_set(const Subcomplex& s) {
    std::set<std::size_t> out;
    for (const auto& simplex : s.simplices())
        if (simplex.size() == 1) out.insert(simplex[0]);
    return out;
}

void require_subcomplex(const Subcomplex& s, const SimplicialComplex& k, const char* name) {
    if (!s.is_face_closed()) throw std::invalid_argument(std::string(name) + " is not closed under faces");
    for (const auto& simplex : s.simplices())
        if (!k.contains(simplex))
            throw std::invalid_argument(std::string(name) + " contains a simplex outside the complex");
}

// Simplexes of k not in `sub`, closed under faces.
Subcomplex closure_of_complement(const SimplicialComplex& k, const Subcomplex& sub) {
    std::vector<Simplex> outside;
    for (int d = 0; d <= k.dimension(); ++d)
        for (const auto& s : k.simplices(d))
            if (!sub.contains(s)) outside.push_back(s);
    return Subcomplex::closure(k, outside);
}

// f restricted to src is a simplicial isomorphism onto tgt. src must map into tgt.
std::optional<Violation> restriction_iso(const SimplicialMap& f, const Subcomplex& src, const Subcomplex& tgt,
                                         const std::string& axiom, std::size_t bond) {
    const SimplicialComplex& a = f.source();
    const SimplicialComplex& b = f.target();
    std::map<std::size_t, std::size_t> inverse;
    for (auto v : vertex_set(src)) {
        const auto [it, fresh] = inverse.emplace(f(v), v);
        if (!fresh)
            return Violation{axiom, bond + 1, Simplex{v},
                             "vertices " + a.vertices()[it->second] + " and " + a.vertices()[v] + " both map to " +
                                 b.vertices()[f(v)]};
    }
    for (auto w : vertex_set(tgt))
        if (!inverse.count(w))
            return Violation{axiom, bond, Simplex{w}, "vertex " + b.vertices()[w] + " has no preimage outside the marking"};
    for (const auto& tau : tgt.simplices()) {
        Simplex sigma;
        for (auto w : tau) sigma.push_back(inverse.at(w));
        std::sort(sigma.begin(), sigma.end());
        if (!src.contains(sigma))
            return Violation{axiom, bond, tau, "simplex " + b.format(tau) + " has no preimage simplex"};
    }
    return std::nullopt;
}

// Every simplex of `from` lands in `into` under f.
std::optional<Simplex> first_escape(const SimplicialMap& f, const Subcomplex& from, const Subcomplex& into) {
    for (const auto& s : from.simplices())
        if (!into.contains(f.image(s))) return s;
    return std::nullopt;
}

template <class Pred>
Subcomplex full_outside(const SimplicialComplex& k, Pred&& inside) {
    return Subcomplex::full(k, [&](std::size_t v) { return !inside(v); });
}

}  // namespace

std::string to_string(Variant v) {
    switch (v) {
        case Variant::Compactohedral: return "compactohedral";
        case Variant::WeaklyCompactohedral: return "weakly_compactohedral";
        case Variant::PreCompactohedral: return "pre_compactohedral";
        case Variant::WeaklyPreCompactohedral: return "weakly_pre_compactohedral";
    }
    return "compactohedral";
}

std::optional<Variant> variant_from_string(const std::string& s) {
    for (auto v : {Variant::Compactohedral, Variant::WeaklyCompactohedral, Variant::PreCompactohedral,
                   Variant::WeaklyPreCompactohedral})
        if (to_string(v) == s) return v;
    return std::nullopt;
}

std::vector<std::string> axioms(Variant v) {
    switch (v) {
        case Variant::Compactohedral: return {"C0", "C1", "C2", "C3"};
        case Variant::WeaklyCompactohedral: return {"C0", "C1", "C3"};
        case Variant::PreCompactohedral: return {"C0", "C1", "C2''", "C3''"};
        case Variant::WeaklyPreCompactohedral: return {"C0", "C1", "C2'", "C3'"};
    }
    return {};
}

InteriorCheck contained_in_interior(const Subcomplex& a, const Subcomplex& b, const SimplicialComplex& k) {
    require_subcomplex(a, k, "contained_in_interior: A");
    require_subcomplex(b, k, "contained_in_interior: B");
    const std::set<std::size_t> va = vertex_set(a);
    for (int d = 0; d <= k.dimension(); ++d)
        for (const auto& s : k.simplices(d)) {
            if (b.contains(s)) continue;
            for (auto v : s)
                if (va.count(v)) return InteriorCheck{false, s};
        }
    return InteriorCheck{};
}

Subcomplex preimage(const SimplicialMap& f, const Subcomplex& sub) {
    std::set<Simplex> out;
    const SimplicialComplex& a = f.source();
    for (int d = 0; d <= a.dimension(); ++d)
        for (const auto& s : a.simplices(d))
            if (sub.contains(f.image(s))) out.insert(s);
    return Subcomplex(std::move(out));
}

ComplexTower with_preimage_markings(const ComplexTower& t) {
    if (!t.marked_K) throw std::invalid_argument("with_preimage_markings: tower has no K markings");
    ComplexTower out = t;
    std::vector<Subcomplex> l{Subcomplex::whole(t.levels.at(0))};
    for (std::size_t i = 0; i < t.bonds.size(); ++i) l.push_back(preimage(t.bonds[i], (*t.marked_K)[i]));
    out.marked_L = std::move(l);
    return out;
}

ValidationReport validate(const ComplexTower& t, Variant v) {
    if (auto e = t.structural_error()) throw std::invalid_argument("validate: " + *e);
    const bool pre = v == Variant::PreCompactohedral || v == Variant::WeaklyPreCompactohedral;
    if (!t.marked_K) throw std::invalid_argument("validate: variant " + to_string(v) + " needs marked K");
    if (pre && !t.marked_L) throw std::invalid_argument("validate: variant " + to_string(v) + " needs marked L");

    ValidationReport report;
    report.variant = v;
    auto& out = report.violations;

    for (std::size_t i = 0; i < t.depth(); ++i)
        if (auto bad = validate_complex(t.levels[i])) out.push_back({"C0", i, bad->simplex, bad->message});
    for (std::size_t i = 0; i < t.bonds.size(); ++i)
        if (auto bad = t.bonds[i].first_non_simplicial())
            out.push_back({"C0", i + 1, *bad, "bond " + std::to_string(i) + " does not carry " +
                                                  t.levels[i + 1].format(*bad) + " to a simplex"});
    if (!out.empty()) return report;

    const auto& K = *t.marked_K;
    for (std::size_t i = 0; i < t.bonds.size(); ++i) {
        const SimplicialMap& p = t.bonds[i];
        const SimplicialComplex& upper = t.levels[i + 1];
        const SimplicialComplex& lower = t.levels[i];

        const auto escape = first_escape(p, K[i + 1], K[i]);
        if (escape) out.push_back({"C1", i + 1, *escape, upper.format(*escape) + " is not carried into K_" + std::to_string(i)});

        switch (v) {
            case Variant::Compactohedral:
                if (!escape) {
                    const InteriorCheck c = contained_in_interior(K[i + 1], preimage(p, K[i]), upper);
                    if (!c.holds)
                        out.push_back({"C2", i + 1, *c.witness,
                                       upper.format(*c.witness) + " meets K_" + std::to_string(i + 1) +
                                           " but leaves the preimage of K_" + std::to_string(i)});
                }
                [[fallthrough]];
            case Variant::WeaklyCompactohedral: {
                const auto kv = vertex_set(K[i]);
                const Subcomplex src = full_outside(upper, [&](std::size_t x) { return kv.count(p(x)) > 0; });
                const Subcomplex tgt = full_outside(lower, [&](std::size_t x) { return kv.count(x) > 0; });
                if (auto bad = restriction_iso(p, src, tgt, "C3", i)) out.push_back(*bad);
                break;
            }
            case Variant::WeaklyPreCompactohedral:
            case Variant::PreCompactohedral: {
                const auto& L = *t.marked_L;
                const std::string c2 = v == Variant::PreCompactohedral ? "C2''" : "C2'";
                const std::string c3 = v == Variant::PreCompactohedral ? "C3''" : "C3'";
                if (auto bad = first_escape(p, L[i + 1], K[i]))
                    out.push_back({c2, i + 1, *bad, upper.format(*bad) + " in L_" + std::to_string(i + 1) +
                                                        " is not carried into K_" + std::to_string(i)});
                if (v == Variant::WeaklyPreCompactohedral) {
                    const auto lv = vertex_set(L[i]);
                    const Subcomplex src = full_outside(upper, [&](std::size_t x) { return lv.count(p(x)) > 0; });
                    const Subcomplex tgt = full_outside(lower, [&](std::size_t x) { return lv.count(x) > 0; });
                    if (auto bad = restriction_iso(p, src, tgt, c3, i)) out.push_back(*bad);
                } else {
                    const Subcomplex tgt = closure_of_complement(lower, L[i]);
                    if (auto bad = restriction_iso(p, preimage(p, tgt), tgt, c3, i)) out.push_back(*bad);
                }
                break;
            }
        }
    }

    if (pre) {
        const auto& L = *t.marked_L;
        for (std::size_t i = 0; i < t.depth(); ++i) {
            if (v == Variant::WeaklyPreCompactohedral) {
                for (const auto& s : K[i].simplices())
                    if (!L[i].contains(s)) {
                        out.push_back({"C2'", i, s, t.levels[i].format(s) + " is in K_" + std::to_string(i) +
                                                        " but not in L_" + std::to_string(i)});
                        break;
                    }
            } else {
                const InteriorCheck c = contained_in_interior(K[i], L[i], t.levels[i]);
                if (!c.holds)
                    out.push_back({"C2''", i, *c.witness,
                                   t.levels[i].format(*c.witness) + " meets K_" + std::to_string(i) +
                                       " but leaves L_" + std::to_string(i)});
            }
        }
    }
    return report;
}

}  // namespace shape

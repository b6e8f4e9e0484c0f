#include "shape/group_tower.hpp"

#include <gmp.h>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "shape/homology.hpp"
#include "shape/smith.hpp"

namespace shape {

using Kind = TowerCertificate::Kind;

namespace {

// Safety net for certified chains that must stop; never reached on valid input.
constexpr std::size_t kChainCap = 100000;

GroupPtr canonical_group(const FGAbelianGroup& g) { return make_group(FGAbelianGroup::canonical(g.free_rank(), g.torsion())); }

GroupHom reduced(GroupPtr src, GroupPtr tgt, const IntegerMatrix& m) {
    GroupHom h(src, tgt, m);
    return GroupHom(std::move(src), std::move(tgt), h.canonical_matrix());
}

std::string level_name(std::size_t i) { return "level " + std::to_string(i); }

// The tower rewritten in canonical coordinates. A verified periodic tower is
// continued past its truncation by the conjugated period.
struct CanonicalTower {
    std::vector<GroupPtr> levels;
    std::vector<GroupHom> bonds;
    Kind kind = Kind::None;
    std::size_t offset = 0;
    std::optional<IntegerMatrix> period;  // bonds[offset] in level-offset coordinates
    std::optional<GroupHom> tail;         // endomorphism of the last level continuing the tower

    GroupPtr level(std::size_t i) const { return i < levels.size() ? levels[i] : levels.back(); }
    const GroupHom& bond(std::size_t i) const {
        if (i < bonds.size()) return bonds[i];
        if (tail) return *tail;
        throw std::out_of_range("bond " + std::to_string(i) + " is beyond the truncation");
    }
};

std::optional<std::string> verify_periodic(CanonicalTower& c) {
    const std::size_t o = c.offset;
    if (o + 2 > c.levels.size()) return "periodic certificate needs a bond at offset " + std::to_string(o);
    const GroupPtr g = c.levels[o];
    for (std::size_t i = o + 1; i < c.levels.size(); ++i)
        if (!isomorphic(*c.levels[i], *g)) return level_name(i) + " differs in type from " + level_name(o);
    const IntegerMatrix& a = c.bonds[o].matrix();
    const std::size_t m = g->summand_count();
    std::vector<int> sign(m, 1);
    for (std::size_t i = o; i + 1 < c.levels.size(); ++i) {
        const IntegerMatrix& ai = c.bonds[i].matrix();
        std::vector<int> next(m, 1);
        for (std::size_t j = 0; j < m; ++j) {
            std::vector<Integer> plus(m), minus(m);
            for (std::size_t r = 0; r < m; ++r) {
                plus[r] = sign[r] * a(r, j);
                minus[r] = -plus[r];
            }
            g->reduce(plus);
            g->reduce(minus);
            const std::vector<Integer> actual = ai.column(j);
            if (actual == plus) continue;
            if (actual == minus) {
                next[j] = -1;
                continue;
            }
            return "bond " + std::to_string(i) + " is not conjugate to bond " + std::to_string(o);
        }
        sign = next;
    }
    IntegerMatrix conj(m, m);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t j = 0; j < m; ++j) conj(r, j) = sign[r] * sign[j] * a(r, j);
    c.period = a;
    c.tail = reduced(c.levels.back(), c.levels.back(), conj);
    return std::nullopt;
}

std::optional<std::string> verify_shift(const CanonicalTower& c, std::size_t drop) {
    const std::size_t o = c.offset;
    if (o + 2 > c.levels.size()) return "shift certificate needs a bond at offset " + std::to_string(o);
    if (drop == 0) return "shift certificate needs a positive drop";
    for (std::size_t i = o; i < c.levels.size(); ++i)
        if (!c.levels[i]->torsion().empty()) return level_name(i) + " has torsion";
    for (std::size_t i = o; i + 1 < c.levels.size(); ++i) {
        const GroupHom& b = c.bonds[i];
        if (c.levels[i]->free_rank() != c.levels[i + 1]->free_rank() + drop)
            return "bond " + std::to_string(i) + " does not drop the rank by " + std::to_string(drop);
        if (!b.is_injective()) return "bond " + std::to_string(i) + " is not injective";
        const FGAbelianGroup coker =
            FGAbelianGroup::from_presentation(c.levels[i]->summand_count(), b.matrix().transpose());
        if (!coker.torsion().empty()) return "bond " + std::to_string(i) + " has a cokernel with torsion";
    }
    return std::nullopt;
}

CanonicalTower canonicalize(const GroupTower& t, std::optional<std::string>& error) {
    if (auto e = t.structural_error()) throw std::invalid_argument(*e);
    CanonicalTower c;
    for (const auto& g : t.levels) c.levels.push_back(canonical_group(*g));
    for (std::size_t i = 0; i < t.bonds.size(); ++i)
        c.bonds.push_back(reduced(c.levels[i + 1], c.levels[i], t.bonds[i].canonical_matrix()));
    c.kind = t.certificate.kind;
    c.offset = t.certificate.offset;
    if (c.kind == Kind::Periodic) error = verify_periodic(c);
    if (c.kind == Kind::ShiftFamily) error = verify_shift(c, t.certificate.drop);
    return c;
}

CanonicalTower verified(const GroupTower& t) {
    std::optional<std::string> error;
    CanonicalTower c = canonicalize(t, error);
    if (error) throw std::invalid_argument("certificate does not hold: " + *error);
    return c;
}

IntegerMatrix power(const IntegerMatrix& a, std::size_t k) {
    IntegerMatrix out = IntegerMatrix::identity(a.rows());
    for (std::size_t i = 0; i < k; ++i) out = out * a;
    return out;
}

IntegerMatrix free_block(const GroupPtr& g, const IntegerMatrix& a) {
    const std::size_t t = g->torsion().size();
    return a.select_rows(t, g->free_rank()).select_cols(t, g->free_rank());
}

// Basis of the saturated eventual rational image of `a`, and `a` written on it.
struct EventualImage {
    IntegerMatrix basis;
    IntegerMatrix restricted;
};

EventualImage eventual_image(const IntegerMatrix& a) {
    const std::size_t f = a.rows();
    const IntegerMatrix stable = power(a, f);
    const IntegerMatrix annihilator = kernel_basis(stable.transpose());
    EventualImage e;
    e.basis = annihilator.cols() == 0 ? IntegerMatrix::identity(f) : kernel_basis(annihilator.transpose());
    const std::size_t r = e.basis.cols();
    e.restricted = IntegerMatrix(r, r);
    const IntegerSolver solver(e.basis);
    for (std::size_t j = 0; j < r; ++j) {
        const auto y = solver.solve(a.apply(e.basis.column(j)));
        if (!y) throw std::logic_error("eventual image is not invariant");
        for (std::size_t i = 0; i < r; ++i) e.restricted(i, j) = (*y)[i];
    }
    return e;
}

Integer abs_det(const IntegerMatrix& b) {
    if (b.rows() == 0) return 1;
    Integer d = determinant(b);
    return abs(d);
}

// Whether A^k G stabilizes; decided by the free block on its eventual image.
bool period_stabilizes(const GroupPtr& g, const IntegerMatrix& a) {
    return abs_det(eventual_image(free_block(g, a)).restricted) == 1;
}

struct Chain {
    MLStatus status;
    std::vector<Subgroup> images;
};

Chain image_chain(const CanonicalTower& c, std::size_t level, std::size_t window) {
    if (window == 0) throw std::invalid_argument("ml_status: window must be positive");
    if (!c.tail && level + window > c.levels.size())
        throw std::out_of_range("ml_status: level " + std::to_string(level) + " with window " +
                                std::to_string(window) + " exceeds the truncation depth " +
                                std::to_string(c.levels.size()));
    Chain ch;
    MLStatus& st = ch.status;
    const GroupPtr base = c.level(level);
    ch.images.push_back(Subgroup::whole(base));
    st.image_chain.push_back(*base);
    GroupHom composite = GroupHom::identity(base);
    const bool in_tail = level >= c.offset;
    for (std::size_t k = 1;; ++k) {
        if (k == window) {
            if (c.kind == Kind::ShiftFamily && in_tail) {
                st.verdict = MLStatus::Verdict::StrictlyDecreasing;
                st.reason = "shift certificate: injective bonds with nonzero free cokernels";
                return ch;
            }
            if (c.kind == Kind::Periodic) {
                const bool stabilizes = period_stabilizes(c.levels[c.offset], *c.period);
                if (!stabilizes && in_tail) {
                    st.verdict = MLStatus::Verdict::StrictlyDecreasing;
                    st.reason = "periodic certificate: the period has |det| >= 2 on its eventual image";
                    return ch;
                }
                if (!stabilizes) {
                    st.reason = "no repeat within the window below the periodic offset";
                    return ch;
                }
            } else {
                st.reason = "no repeat within the window";
                return ch;
            }
        }
        if (k > kChainCap) throw std::logic_error("image chain did not stabilize");
        const GroupHom& b = c.bond(level + k - 1);
        composite = reduced(b.source(), base, (composite.matrix() * b.matrix()));
        Subgroup next = Subgroup::image(composite);
        const bool repeat = next.equals(ch.images.back());
        st.image_chain.push_back(next.structure());
        ch.images.push_back(std::move(next));
        if (repeat) {
            st.verdict = MLStatus::Verdict::Stabilized;
            st.index = k - 1;
            st.reason = "image(" + std::to_string(k - 1) + ") = image(" + std::to_string(k) + ")";
            if (k >= window) st.reason += ", forced by the periodic certificate";
            return ch;
        }
    }
}

// Rank of m over F_p.
std::size_t rank_mod_p(IntegerMatrix m, const Integer& p) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        for (std::size_t i = r; i < m.rows(); ++i) mpz_fdiv_r(m(i, col).get_mpz_t(), m(i, col).get_mpz_t(), p.get_mpz_t());
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(r, piv);
        Integer inv;
        mpz_invert(inv.get_mpz_t(), m(r, col).get_mpz_t(), p.get_mpz_t());
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            mpz_fdiv_r(m(i, col).get_mpz_t(), m(i, col).get_mpz_t(), p.get_mpz_t());
            if (m(i, col) == 0) continue;
            Integer factor = m(i, col) * inv;
            m.add_row_multiple(i, r, -factor);
        }
        ++r;
    }
    return r;
}

// Primes dividing n found by trial division, plus a probable-prime cofactor.
std::vector<Integer> prime_factors(Integer n) {
    std::vector<Integer> out;
    for (Integer p = 2; p * p <= n && p < 1000000; ++p) {
        if (n % p != 0) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) out.push_back(n);
    return out;
}

using Poly = std::vector<Integer>;  // coefficients, constant term first

Poly cyclotomic(std::size_t n, std::vector<Poly>& cache) {
    if (cache.size() <= n) cache.resize(n + 1);
    if (!cache[n].empty()) return cache[n];
    Poly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const Poly q = cyclotomic(d, cache);
        Poly quotient(p.size() - q.size() + 1, 0);
        for (std::size_t i = p.size(); i-- >= q.size();) {
            const Integer coef = p[i];
            quotient[i - (q.size() - 1)] = coef;
            for (std::size_t j = 0; j < q.size(); ++j) p[i - (q.size() - 1) + j] -= coef * q[j];
        }
        p = quotient;
    }
    cache[n] = p;
    return p;
}

IntegerMatrix evaluate(const Poly& p, const IntegerMatrix& b) {
    IntegerMatrix out(b.rows(), b.cols());
    for (std::size_t i = p.size(); i-- > 0;) {
        out = out * b;
        for (std::size_t d = 0; d < b.rows(); ++d) out(d, d) += p[i];
    }
    return out;
}

std::size_t euler_phi(std::size_t n) {
    std::size_t count = 0;
    for (std::size_t k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++count;
    return count;
}

// Rank of the largest sublattice on which b is invertible over Z: bounded
// above by the invertible Fitting part mod each prime of det b, below by the
// generalized eigenspaces of roots of unity.
std::pair<std::size_t, std::size_t> unit_rank_bounds(const IntegerMatrix& b) {
    const std::size_t r = b.rows();
    const Integer det = abs_det(b);
    if (det == 1) return {r, r};
    if (det == 0) throw std::logic_error("period is singular on its eventual image");
    std::size_t upper = r;
    const IntegerMatrix fitting = power(b, r);
    for (const auto& p : prime_factors(det)) upper = std::min(upper, rank_mod_p(fitting, p));
    std::size_t lower = 0;
    std::vector<Poly> cache;
    for (std::size_t n = 1; n <= 2 * r * r + 2 && lower < upper; ++n) {
        if (euler_phi(n) > r) continue;
        const IntegerMatrix phi = power(evaluate(cyclotomic(n, cache), b), r);
        lower += r - rank(phi);
    }
    return {lower, upper};
}

}  // namespace

std::string to_string(MLStatus::Verdict v) {
    switch (v) {
        case MLStatus::Verdict::Stabilized: return "Stabilized";
        case MLStatus::Verdict::StrictlyDecreasing: return "StrictlyDecreasing";
        case MLStatus::Verdict::UndeterminedWithinWindow: break;
    }
    return "UndeterminedWithinWindow";
}

std::string to_string(Lim1Class::Kind k) {
    switch (k) {
        case Lim1Class::Kind::Zero: return "Zero";
        case Lim1Class::Kind::Uncountable: return "Uncountable";
        case Lim1Class::Kind::Undetermined: break;
    }
    return "Undetermined";
}

std::optional<std::string> GroupTower::structural_error() const {
    if (levels.empty()) return "tower has no levels";
    if (bonds.size() + 1 != levels.size())
        return "tower has " + std::to_string(levels.size()) + " levels but " + std::to_string(bonds.size()) + " bonds";
    for (std::size_t i = 0; i < bonds.size(); ++i)
        if (!(*bonds[i].source() == *levels[i + 1]) || !(*bonds[i].target() == *levels[i]))
            return "bond " + std::to_string(i) + " does not run from level " + std::to_string(i + 1) + " to level " +
                   std::to_string(i);
    return std::nullopt;
}

std::optional<std::string> GroupTower::certificate_error() const {
    std::optional<std::string> error;
    canonicalize(*this, error);
    return error;
}

namespace {

GroupTower assemble(const ComplexTower& t, const std::vector<HomologyResult>& hs) {
    GroupTower g;
    for (const auto& h : hs) g.levels.push_back(h.group);
    for (std::size_t i = 0; i < t.bonds.size(); ++i) g.bonds.push_back(induced_map(t.bonds[i], hs[i + 1], hs[i]));
    g.certificate = t.certificate;
    if (g.certificate.kind != Kind::None && g.certificate_error()) g.certificate = TowerCertificate{};
    return g;
}

void require_tower(const ComplexTower& t, int n) {
    if (n < 0) throw std::invalid_argument("homology_tower: negative dimension");
    if (auto e = t.structural_error()) throw std::invalid_argument(*e);
    for (const auto& b : t.bonds) require_simplicial(b, "homology_tower");
}

}  // namespace

GroupTower homology_tower(const ComplexTower& t, int n, bool reduced_h) {
    require_tower(t, n);
    std::vector<HomologyResult> hs(t.depth());
    const long count = static_cast<long>(t.depth());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) hs[i] = homology(t.levels[i], n, reduced_h);
    return assemble(t, hs);
}

GroupTower homology_tower_serial(const ComplexTower& t, int n, bool reduced_h) {
    require_tower(t, n);
    std::vector<HomologyResult> hs;
    for (const auto& level : t.levels) hs.push_back(homology(level, n, reduced_h));
    return assemble(t, hs);
}

DirectSystem cohomology_system(const ComplexTower& t, int n) {
    require_tower(t, n);
    std::vector<HomologyResult> hs(t.depth());
    const long count = static_cast<long>(t.depth());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) hs[i] = cohomology_result(t.levels[i], n);
    DirectSystem s;
    for (const auto& h : hs) s.levels.push_back(h.group);
    for (std::size_t i = 0; i < t.bonds.size(); ++i)
        s.bonds.push_back(induced_cohomology_map(t.bonds[i], hs[i], hs[i + 1]));
    s.certificate = t.certificate;
    return s;
}

MLStatus ml_status(const GroupTower& t, std::size_t level, std::size_t window) {
    return image_chain(verified(t), level, window).status;
}

Lim1Class lim1_class(const GroupTower& t, std::size_t window) {
    const CanonicalTower c = verified(t);
    const std::size_t w = std::clamp<std::size_t>(window, 1, c.levels.size());
    Lim1Class out;
    if (c.kind != Kind::None) {
        const MLStatus st = image_chain(c, c.offset, w).status;
        const std::string cert = to_string(c.kind) + " certificate at " + level_name(c.offset) + ": ";
        if (st.verdict == MLStatus::Verdict::Stabilized) {
            out.kind = Lim1Class::Kind::Zero;
        } else if (st.verdict == MLStatus::Verdict::StrictlyDecreasing) {
            out.kind = Lim1Class::Kind::Uncountable;
        }
        out.reason = cert + st.reason;
        return out;
    }
    for (std::size_t l = 0; l + w <= c.levels.size(); ++l) {
        const MLStatus st = image_chain(c, l, w).status;
        if (st.verdict != MLStatus::Verdict::Stabilized) {
            out.reason = "uncertified: " + level_name(l) + ": " + st.reason;
            return out;
        }
    }
    out.kind = Lim1Class::Kind::Zero;
    out.reason = "uncertified: images stabilize at every checkable level";
    return out;
}

std::variant<FGAbelianGroup, NotStable> stable_lim(const GroupTower& t, std::size_t window) {
    const CanonicalTower c = verified(t);
    const std::size_t w = std::clamp<std::size_t>(window, 1, c.levels.size());
    std::size_t last = c.levels.size() - w;
    if (c.tail) last = std::max(last, c.offset + 1);
    std::vector<Subgroup> stable;
    for (std::size_t l = 0; l <= last; ++l) {
        Chain ch = image_chain(c, l, w);
        if (ch.status.verdict != MLStatus::Verdict::Stabilized)
            return NotStable{level_name(l) + ": " + to_string(ch.status.verdict) + " (" + ch.status.reason + ")"};
        stable.push_back(ch.images.back());
    }
    std::size_t start = stable.size() - 1;
    while (start > 0) {
        const Subgroup pushed = stable[start].mapped_by(c.bond(start - 1));
        const bool iso = pushed.equals(stable[start - 1]) &&
                         isomorphic(stable[start].structure(), stable[start - 1].structure());
        if (!iso) break;
        --start;
    }
    if (start + 1 == stable.size() && stable.size() > 1)
        return NotStable{"bond " + std::to_string(start - 1) + " does not restrict to an isomorphism of stable images"};
    const FGAbelianGroup s = stable[start].structure();
    return FGAbelianGroup::canonical(s.free_rank(), s.torsion());
}

PeriodicLim periodic_lim(const GroupPtr& g, const GroupHom& a) {
    if (!(*a.source() == *g) || !(*a.target() == *g))
        throw std::invalid_argument("periodic_lim: the map is not an endomorphism of the group");
    const GroupPtr cg = canonical_group(*g);
    const IntegerMatrix m = a.canonical_matrix();
    const std::size_t t = g->torsion().size();

    // Torsion: the eventual image, on which the period acts bijectively.
    const GroupPtr tor = make_group(FGAbelianGroup::canonical(0, g->torsion()));
    const GroupHom at = reduced(tor, tor, m.select_rows(0, t).select_cols(0, t));
    Subgroup image = Subgroup::whole(tor);
    for (std::size_t k = 0;; ++k) {
        if (k > kChainCap) throw std::logic_error("torsion image chain did not stabilize");
        Subgroup next = image.mapped_by(at);
        if (next.equals(image)) break;
        image = std::move(next);
    }
    const FGAbelianGroup tor_lim = image.structure();

    const EventualImage e = eventual_image(free_block(cg, m));
    const auto [lower, upper] = unit_rank_bounds(e.restricted);
    PeriodicLim out{FGAbelianGroup::canonical(lower, tor_lim.torsion()), lower == upper, upper};
    return out;
}

std::variant<FGAbelianGroup, NotFinitelyStable> colim_direct_system(const DirectSystem& s, std::size_t window) {
    if (s.levels.empty()) throw std::invalid_argument("colim_direct_system: no levels");
    if (window == 0) throw std::invalid_argument("colim_direct_system: window must be positive");
    if (s.bonds.size() + 1 != s.levels.size()) throw std::invalid_argument("colim_direct_system: bond count mismatch");
    const std::size_t w = std::min(window, s.bonds.size());
    const auto canonical_type = [](const FGAbelianGroup& g) { return FGAbelianGroup::canonical(g.free_rank(), g.torsion()); };
    for (std::size_t i = s.bonds.size() - w; i < s.bonds.size(); ++i) {
        if (s.bonds[i].is_isomorphism()) continue;
        NotFinitelyStable out;
        for (const auto& g : s.levels) out.chain.push_back(canonical_type(*g));
        out.diagnostics = "bond " + std::to_string(i) + " is not an isomorphism";
        return out;
    }
    return canonical_type(*s.levels.back());
}

}  // namespace shape

#include "shape/complex_tower.hpp"

#include <sstream>

namespace shape {

std::string to_string(TowerCertificate::Kind k) {
    switch (k) {
        case TowerCertificate::Kind::Periodic: return "periodic";
        case TowerCertificate::Kind::ShiftFamily: return "shift_family";
        case TowerCertificate::Kind::None: break;
    }
    return "none";
}

std::optional<TowerCertificate::Kind> certificate_kind_from_string(const std::string& s) {
    if (s == "none") return TowerCertificate::Kind::None;
    if (s == "periodic") return TowerCertificate::Kind::Periodic;
    if (s == "shift_family") return TowerCertificate::Kind::ShiftFamily;
    return std::nullopt;
}

std::optional<std::string> ComplexTower::structural_error() const {
    std::ostringstream os;
    if (levels.empty()) return "tower has no levels";
    if (bonds.size() + 1 != levels.size()) {
        os << "tower has " << levels.size() << " levels but " << bonds.size() << " bonds";
        return os.str();
    }
    for (std::size_t i = 0; i < bonds.size(); ++i) {
        if (!(bonds[i].source() == levels[i + 1]) || !(bonds[i].target() == levels[i])) {
            os << "bond " << i << " does not run from level " << i + 1 << " to level " << i;
            return os.str();
        }
    }
    for (const auto* marks : {&marked_K, &marked_L}) {
        if (!*marks) continue;
        const char* name = marks == &marked_K ? "K" : "L";
        if ((*marks)->size() != levels.size()) {
            os << "marked " << name << " has " << (*marks)->size() << " entries for " << levels.size() << " levels";
            return os.str();
        }
        for (std::size_t i = 0; i < levels.size(); ++i) {
            const Subcomplex& s = (**marks)[i];
            if (!s.is_face_closed()) {
                os << "marked " << name << " at level " << i << " is not closed under faces";
                return os.str();
            }
            for (const auto& simplex : s.simplices()) {
                if (!levels[i].contains(simplex)) {
                    os << "marked " << name << " at level " << i << " contains a simplex outside the level";
                    return os.str();
                }
            }
        }
    }
    return std::nullopt;
}

ComplexTower constant_tower(const SimplicialComplex& k, std::size_t depth) {
    ComplexTower t;
    t.levels.assign(depth, k);
    for (std::size_t i = 0; i + 1 < depth; ++i) t.bonds.push_back(SimplicialMap::identity(k));
    t.marked_K = std::vector<Subcomplex>(depth, Subcomplex::whole(k));
    t.marked_L = t.marked_K;
    t.certificate.kind = TowerCertificate::Kind::Periodic;
    return t;
}

}  // namespace shape

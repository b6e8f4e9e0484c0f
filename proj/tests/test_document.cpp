#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "oracles.hpp"
#include "shape/document.hpp"
#include "shape/gallery.hpp"
#include "shape/homology.hpp"

using namespace shape;

namespace {

template <class T>
T round_trip(const T& x) {
    return expect_payload<T>(deserialize(serialize(Document{x}), "mem"), "mem");
}

bool same(const GroupTower& a, const GroupTower& b) {
    if (a.depth() != b.depth()) return false;
    for (std::size_t i = 0; i < a.depth(); ++i)
        if (!(*a.levels[i] == *b.levels[i])) return false;
    for (std::size_t i = 0; i < a.bonds.size(); ++i)
        if (!(a.bonds[i].matrix() == b.bonds[i].matrix())) return false;
    return a.certificate == b.certificate;
}

std::string envelope(const std::string& kind, const std::string& payload) {
    return "{\n  \"format_version\": \"1\",\n  \"kind\": \"" + kind + "\",\n  \"payload\": " + payload + "\n}\n";
}

DocumentError error_of(const std::string& text) {
    try {
        deserialize(text, "doc.json");
    } catch (const DocumentError& e) {
        return e;
    }
    FAIL("no error raised");
    return DocumentError("", std::nullopt, "", "");
}

}  // namespace

TEST_CASE("round trip of every document kind") {
    const auto rp2 = oracle::projective_plane();
    CHECK(round_trip(rp2) == rp2);
    CHECK(round_trip(SimplicialComplex::from_maximal({{"a", "b"}}, {"lonely"})).vertices().size() == 3);
    CHECK(round_trip(SimplicialComplex()) == SimplicialComplex());

    for (const auto& family : gallery_families()) {
        const ComplexTower t = build_gallery(family, GalleryParams{0, 3, 3});
        CHECK(round_trip(t) == t);
        CHECK(same(round_trip(homology_tower(t, 1)), homology_tower(t, 1)));
    }
    const GroupTower big = [] {
        GroupTower g;
        const GroupPtr p = make_group(FGAbelianGroup::from_presentation(2, IntegerMatrix{{6, 0}}));
        g.levels = {p, p};
        IntegerMatrix m{{1, 0}, {0, 1}};
        m(0, 1) = Integer("123456789012345678901234567890") * 6;
        g.bonds.emplace_back(p, p, m);
        g.certificate.kind = TowerCertificate::Kind::Periodic;
        g.certificate.lim1_labels[0] = "label with / and ~";
        return g;
    }();
    CHECK(same(round_trip(big), big));
    CHECK(serialize(Document{big}).find("\"740740734074074073407407407340\"") != std::string::npos);

    const auto ambient = oracle::torus();
    const Filtration f{ambient, {Subcomplex::closure_of_labels(ambient, {{"0", "1"}}), Subcomplex::whole(ambient)}};
    const Filtration back = round_trip(f);
    CHECK(back.ambient == f.ambient);
    CHECK(back.stages == f.stages);

    PointSample s{{{Rational(1, 3), Rational(-7)}, {Rational(Integer("99999999999999999999")), Rational(1, 2)}}, {1}};
    const PointSample sb = round_trip(s);
    CHECK(sb.points == s.points);
    CHECK(sb.compactum_mark == s.compactum_mark);
    const BallCover c{{{0, Rational(5, 2)}, {1, Rational(3)}}};
    CHECK(round_trip(c) == c);
}

TEST_CASE("round trip on generated instances") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const SimplicialMap f = gen::random_map(rng);
        CHECK(round_trip(f) == f);
        CHECK(round_trip(f.source()) == f.source());
        const ComplexTower t = gen::random_two_level(rng);
        CHECK(round_trip(t) == t);
        const PointSample s = gen::planar_sample(rng, 10, 5);
        const PointSample sb = round_trip(s);
        CHECK(sb.points == s.points);
        const BallCover c = gen::random_cover(rng, s, 3);
        CHECK(round_trip(c) == c);
        // Serialization is canonical.
        CHECK(serialize(Document{round_trip(t)}) == serialize(Document{t}));
    }
}

TEST_CASE("schema errors are path-precise") {
    const DocumentError version = error_of("{\"format_version\": \"7\", \"kind\": \"complex\", \"payload\": 1}");
    CHECK(version.path() == "/format_version");
    CHECK(version.violation().find("unsupported format_version") != std::string::npos);

    const DocumentError missing = error_of(envelope("complex", "{\n    \"vertices\": [\"a\"]\n  }"));
    CHECK(missing.path() == "/payload");
    CHECK(missing.violation() == "missing field 'simplices'");
    CHECK(missing.line() == 4u);

    const DocumentError typed = error_of(envelope("complex", "{\n    \"simplices\": [[\"a\", \"b\"],\n [\"c\", 3]]\n  }"));
    CHECK(typed.path() == "/payload/simplices/1/1");
    CHECK(typed.line() == 6u);

    const DocumentError truncated = error_of(envelope("complex", "{\"simplices\": [[\"a\"").substr(0, 60));
    CHECK(truncated.violation().find("malformed JSON") != std::string::npos);
    CHECK(truncated.line().has_value());

    CHECK(error_of(envelope("klein_bottle", "{}")).path() == "/kind");
    CHECK(error_of(envelope("complex", "{\"simplices\": [], \"extra\": 1}")).path() == "/payload/extra");
    CHECK(error_of(envelope("map", "{\"source\": {\"simplices\": [[\"a\",\"b\"]]}, \"target\": {\"simplices\": "
                                   "[[\"x\"],[\"y\"]]}, \"vertex_map\": {\"a\": \"x\", \"b\": \"y\"}}"))
              .violation()
              .find("not a simplex") != std::string::npos);
    CHECK(error_of(envelope("cover", "{\"elements\": [{\"center\": 0, \"radius\": \"-1/2\"}]}")).path() ==
          "/payload/elements/0/radius");
    CHECK(error_of(envelope("point_sample", "{\"points\": [[\"1/0\"]]}")).path() == "/payload/points/0/0");
    CHECK(error_of(envelope("group_tower", "{\"levels\": [{\"generators\": 1}, {\"generators\": 1, \"relations\": [[2]]}],"
                                           " \"bonds\": [[[1]]]}"))
              .path() == "/payload/bonds/0");
    CHECK(error_of(envelope("complex_tower", "{\"levels\": [{\"simplices\": [[\"a\"]]}], \"bonds\": [],"
                                             " \"marked_K\": []}"))
              .path() == "/payload/marked_K");

    const DocumentError e = error_of(envelope("complex", "[]"));
    CHECK(std::string(e.what()).rfind("doc.json:4: /payload: ", 0) == 0);
}

TEST_CASE("documents of the wrong kind are rejected") {
    const Document d{oracle::torus()};
    CHECK_THROWS_AS(expect_payload<ComplexTower>(d, "x"), DocumentError);
    CHECK(to_string(DocumentKind::PointSample) == "point_sample");
    CHECK(document_kind_from_string("cover") == DocumentKind::Cover);
    CHECK_THROWS_AS(read_document("/nonexistent/file.json"), DocumentError);
}

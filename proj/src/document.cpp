#include "shape/document.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace shape {

namespace {

using json = nlohmann::json;

constexpr std::array<std::string_view, 7> kKindNames{"complex",        "map",          "group_tower", "complex_tower",
                                                     "filtration",     "point_sample", "cover"};

// ---------------------------------------------------------------------------
// Writing

json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

json rational_json(const Rational& q) {
    if (q.get_den() == 1) return integer_json(q.get_num());
    return q.get_str();
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

json labels_json(const std::vector<LabelSimplex>& simplices) {
    json out = json::array();
    for (const auto& s : simplices) out.push_back(s);
    return out;
}

json complex_json(const SimplicialComplex& k) {
    std::vector<LabelSimplex> maximal;
    for (const auto& s : k.maximal_simplices()) maximal.push_back(k.labels(s));
    return {{"vertices", k.vertices()}, {"simplices", labels_json(maximal)}};
}

json vertex_map_json(const SimplicialMap& f) {
    json out = json::object();
    for (const auto& [from, to] : f.label_map()) out[from] = to;
    return out;
}

json certificate_json(const TowerCertificate& c) {
    json labels = json::object();
    for (const auto& [dim, label] : c.lim1_labels) labels[std::to_string(dim)] = label;
    return {{"kind", to_string(c.kind)}, {"offset", c.offset}, {"drop", c.drop}, {"lim1_labels", labels}};
}

json subcomplexes_json(const std::vector<Subcomplex>& marks, const std::vector<SimplicialComplex>& levels) {
    json out = json::array();
    for (std::size_t i = 0; i < marks.size(); ++i) out.push_back(labels_json(marks[i].maximal_labels(levels[i])));
    return out;
}

json payload_json(const SimplicialComplex& k) { return complex_json(k); }

json payload_json(const SimplicialMap& f) {
    return {{"source", complex_json(f.source())}, {"target", complex_json(f.target())}, {"vertex_map", vertex_map_json(f)}};
}

json payload_json(const GroupTower& g) {
    json levels = json::array();
    for (const auto& level : g.levels)
        levels.push_back({{"generators", level->generator_count()}, {"relations", matrix_json(level->relations())}});
    json bonds = json::array();
    for (const auto& b : g.bonds) bonds.push_back(matrix_json(b.matrix()));
    return {{"levels", levels}, {"bonds", bonds}, {"certificate", certificate_json(g.certificate)}};
}

json payload_json(const ComplexTower& t) {
    json levels = json::array();
    for (const auto& level : t.levels) levels.push_back(complex_json(level));
    json bonds = json::array();
    for (const auto& b : t.bonds) bonds.push_back({{"vertex_map", vertex_map_json(b)}});
    json out = {{"levels", levels}, {"bonds", bonds}, {"certificate", certificate_json(t.certificate)}};
    if (t.marked_K) out["marked_K"] = subcomplexes_json(*t.marked_K, t.levels);
    if (t.marked_L) out["marked_L"] = subcomplexes_json(*t.marked_L, t.levels);
    return out;
}

json payload_json(const Filtration& f) {
    json stages = json::array();
    for (const auto& s : f.stages) stages.push_back(labels_json(s.maximal_labels(f.ambient)));
    return {{"ambient", complex_json(f.ambient)}, {"stages", stages}};
}

json payload_json(const PointSample& s) {
    json points = json::array();
    for (const auto& p : s.points) {
        json coords = json::array();
        for (const auto& x : p) coords.push_back(rational_json(x));
        points.push_back(std::move(coords));
    }
    return {{"points", points}, {"compactum_mark", s.compactum_mark}};
}

json payload_json(const BallCover& c) {
    json elements = json::array();
    for (const auto& b : c.elements) elements.push_back({{"center", b.center}, {"radius", rational_json(b.radius)}});
    return {{"elements", elements}};
}

// ---------------------------------------------------------------------------
// Parsing with positions

std::string escape_pointer(const std::string& key) {
    std::string out;
    for (char c : key) {
        if (c == '~')
            out += "~0";
        else if (c == '/')
            out += "~1";
        else
            out += c;
    }
    return out;
}

// Character iterator that publishes how far the parser has read.
class CountingIterator {
public:
    using iterator_category = std::input_iterator_tag;
    using value_type = char;
    using difference_type = std::ptrdiff_t;
    using pointer = const char*;
    using reference = const char&;

    CountingIterator(const char* base, const char* p, std::size_t* consumed) : base_(base), p_(p), consumed_(consumed) {}

    reference operator*() const { return *p_; }
    CountingIterator& operator++() {
        ++p_;
        *consumed_ = static_cast<std::size_t>(p_ - base_);
        return *this;
    }
    CountingIterator operator++(int) {
        CountingIterator old = *this;
        ++*this;
        return old;
    }
    friend bool operator==(const CountingIterator& a, const CountingIterator& b) { return a.p_ == b.p_; }

private:
    const char* base_;
    const char* p_;
    std::size_t* consumed_;
};

class LineIndex {
public:
    explicit LineIndex(std::string_view text) {
        for (std::size_t i = 0; i < text.size(); ++i)
            if (text[i] == '\n') newlines_.push_back(i);
    }
    std::size_t line_of(std::size_t offset) const {
        return 1 + static_cast<std::size_t>(std::lower_bound(newlines_.begin(), newlines_.end(), offset) -
                                            newlines_.begin());
    }

private:
    std::vector<std::size_t> newlines_;
};

struct Parsed {
    json root;
    std::map<std::string, std::size_t> lines;  // JSON pointer -> line of the value
};

Parsed parse_positioned(std::string_view text, const std::string& file) {
    const LineIndex index(text);
    std::size_t consumed = 0;
    Parsed out;
    struct Frame {
        bool array;
        std::size_t next = 0;
        std::string key;
        std::string path;
    };
    std::vector<Frame> stack;
    const auto child = [&] {
        if (stack.empty()) return std::string();
        const Frame& f = stack.back();
        return f.path + "/" + (f.array ? std::to_string(f.next) : escape_pointer(f.key));
    };
    const auto here = [&] { return index.line_of(consumed == 0 ? 0 : consumed - 1); };
    const auto advance = [&] {
        if (!stack.empty() && stack.back().array) ++stack.back().next;
    };
    const json::parser_callback_t callback = [&](int, json::parse_event_t event, json& parsed) {
        switch (event) {
            case json::parse_event_t::object_start:
            case json::parse_event_t::array_start: {
                std::string path = child();
                out.lines.emplace(path, here());
                stack.push_back({event == json::parse_event_t::array_start, 0, {}, std::move(path)});
                break;
            }
            case json::parse_event_t::key:
                stack.back().key = parsed.get<std::string>();
                break;
            case json::parse_event_t::value:
                out.lines.emplace(child(), here());
                advance();
                break;
            case json::parse_event_t::object_end:
            case json::parse_event_t::array_end:
                stack.pop_back();
                advance();
                break;
        }
        return true;
    };
    try {
        const char* base = text.data();
        out.root = json::parse(CountingIterator(base, base, &consumed),
                               CountingIterator(base, base + text.size(), &consumed), callback);
    } catch (const json::parse_error& e) {
        std::string what = e.what();
        // "[json.exception.parse_error.N] parse error at line L, column C: <detail>"
        if (auto colon = what.find(": ", what.find("parse error")); colon != std::string::npos)
            what = what.substr(colon + 2);
        const std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
        throw DocumentError(file, index.line_of(byte), child(), "malformed JSON: " + what);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Schema checks

class Reader {
public:
    Reader(std::string file, std::map<std::string, std::size_t> lines) : file_(std::move(file)), lines_(std::move(lines)) {}

    [[noreturn]] void fail(const std::string& path, const std::string& violation) const {
        throw DocumentError(file_, line_for(path), path.empty() ? "/" : path, violation);
    }

    const json& object(const json& j, const std::string& path, std::initializer_list<std::string_view> allowed) const {
        if (!j.is_object()) fail(path, "expected an object");
        for (const auto& [key, value] : j.items())
            if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
                fail(path + "/" + escape_pointer(key), "unknown field '" + key + "'");
        return j;
    }

    const json& field(const json& obj, const std::string& path, const std::string& key) const {
        auto it = obj.find(key);
        if (it == obj.end()) fail(path, "missing field '" + key + "'");
        return *it;
    }

    const json* optional_field(const json& obj, const std::string& key) const {
        auto it = obj.find(key);
        return it == obj.end() ? nullptr : &*it;
    }

    const json& array(const json& j, const std::string& path) const {
        if (!j.is_array()) fail(path, "expected an array");
        return j;
    }

    std::string string(const json& j, const std::string& path) const {
        if (!j.is_string()) fail(path, "expected a string");
        return j.get<std::string>();
    }

    Integer integer(const json& j, const std::string& path) const {
        if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
        if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
        if (j.is_string()) {
            const std::string s = j.get<std::string>();
            if (!is_decimal(s)) fail(path, "'" + s + "' is not a decimal integer");
            return Integer(s);
        }
        fail(path, "expected an integer or a decimal string");
    }

    std::size_t index(const json& j, const std::string& path) const {
        if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
            fail(path, "expected a nonnegative integer");
        return j.get<std::size_t>();
    }

    Rational rational(const json& j, const std::string& path) const {
        if (j.is_string()) {
            const std::string s = j.get<std::string>();
            const auto slash = s.find('/');
            const std::string num = s.substr(0, slash);
            const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
            if (!is_decimal(num) || !is_decimal(den) || den.front() == '-')
                fail(path, "'" + s + "' is not a rational of the form p or p/q");
            Rational q{Integer(num), Integer(den)};
            if (q.get_den() == 0) fail(path, "zero denominator");
            q.canonicalize();
            return q;
        }
        return Rational(integer(j, path));
    }

    IntegerMatrix matrix(const json& j, const std::string& path, std::optional<std::size_t> rows,
                         std::size_t cols) const {
        array(j, path);
        if (rows && j.size() != *rows)
            fail(path, "expected " + std::to_string(*rows) + " rows, found " + std::to_string(j.size()));
        IntegerMatrix m(j.size(), cols);
        for (std::size_t r = 0; r < j.size(); ++r) {
            const std::string row_path = path + "/" + std::to_string(r);
            array(j[r], row_path);
            if (j[r].size() != cols)
                fail(row_path, "expected " + std::to_string(cols) + " entries, found " + std::to_string(j[r].size()));
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = integer(j[r][c], row_path + "/" + std::to_string(c));
        }
        return m;
    }

    std::vector<LabelSimplex> label_simplices(const json& j, const std::string& path) const {
        array(j, path);
        std::vector<LabelSimplex> out;
        for (std::size_t i = 0; i < j.size(); ++i) {
            const std::string p = path + "/" + std::to_string(i);
            array(j[i], p);
            if (j[i].empty()) fail(p, "empty simplex");
            LabelSimplex s;
            for (std::size_t v = 0; v < j[i].size(); ++v) s.push_back(string(j[i][v], p + "/" + std::to_string(v)));
            if (std::set<std::string>(s.begin(), s.end()).size() != s.size()) fail(p, "repeated vertex in simplex");
            out.push_back(std::move(s));
        }
        return out;
    }

    SimplicialComplex complex(const json& j, const std::string& path) const {
        object(j, path, {"vertices", "simplices"});
        const auto simplices = label_simplices(field(j, path, "simplices"), path + "/simplices");
        std::vector<std::string> vertices;
        if (const json* v = optional_field(j, "vertices")) {
            const std::string vpath = path + "/vertices";
            array(*v, vpath);
            for (std::size_t i = 0; i < v->size(); ++i) vertices.push_back(string((*v)[i], vpath + "/" + std::to_string(i)));
            const std::set<std::string> known(vertices.begin(), vertices.end());
            if (known.size() != vertices.size()) fail(vpath, "repeated vertex label");
            for (std::size_t i = 0; i < simplices.size(); ++i)
                for (std::size_t k = 0; k < simplices[i].size(); ++k)
                    if (!known.count(simplices[i][k]))
                        fail(path + "/simplices/" + std::to_string(i) + "/" + std::to_string(k),
                             "vertex '" + simplices[i][k] + "' is not listed in vertices");
        }
        return SimplicialComplex::from_maximal(simplices, vertices);
    }

    SimplicialMap vertex_map(const json& j, const std::string& path, const SimplicialComplex& source,
                             const SimplicialComplex& target) const {
        if (!j.is_object()) fail(path, "expected an object from source to target labels");
        std::map<std::string, std::string> labels;
        for (const auto& [from, to] : j.items()) {
            const std::string p = path + "/" + escape_pointer(from);
            if (!source.vertex_index(from)) fail(p, "'" + from + "' is not a source vertex");
            const std::string image = string(to, p);
            if (!target.vertex_index(image)) fail(p, "'" + image + "' is not a target vertex");
            labels[from] = image;
        }
        for (const auto& v : source.vertices())
            if (!labels.count(v)) fail(path, "source vertex '" + v + "' has no image");
        SimplicialMap f(source, target, labels);
        if (auto bad = f.first_non_simplicial())
            fail(path, "image of " + source.format(*bad) + " is not a simplex of the target");
        return f;
    }

    Subcomplex subcomplex(const json& j, const std::string& path, const SimplicialComplex& parent) const {
        const auto generators = label_simplices(j, path);
        for (std::size_t i = 0; i < generators.size(); ++i)
            if (!parent.from_labels(generators[i]))
                fail(path + "/" + std::to_string(i), "not a simplex of the enclosing complex");
        return Subcomplex::closure_of_labels(parent, generators);
    }

    TowerCertificate certificate(const json& j, const std::string& path) const {
        object(j, path, {"kind", "offset", "drop", "lim1_labels"});
        TowerCertificate c;
        const std::string kind = string(field(j, path, "kind"), path + "/kind");
        const auto k = certificate_kind_from_string(kind);
        if (!k) fail(path + "/kind", "unknown certificate kind '" + kind + "'");
        c.kind = *k;
        if (const json* v = optional_field(j, "offset")) c.offset = index(*v, path + "/offset");
        if (const json* v = optional_field(j, "drop")) c.drop = index(*v, path + "/drop");
        if (const json* v = optional_field(j, "lim1_labels")) {
            if (!v->is_object()) fail(path + "/lim1_labels", "expected an object keyed by dimension");
            for (const auto& [key, label] : v->items()) {
                const std::string p = path + "/lim1_labels/" + escape_pointer(key);
                if (!is_decimal(key) || key.front() == '-' || key.size() > 6) fail(p, "key is not a dimension");
                c.lim1_labels[std::stoi(key)] = string(label, p);
            }
        }
        return c;
    }

    std::optional<std::vector<Subcomplex>> markings(const json& j, const std::string& key, const std::string& path,
                                                    const std::vector<SimplicialComplex>& levels) const {
        const json* m = optional_field(j, key);
        if (!m) return std::nullopt;
        const std::string p = path + "/" + key;
        array(*m, p);
        if (m->size() != levels.size())
            fail(p, "expected one marking per level (" + std::to_string(levels.size()) + "), found " +
                        std::to_string(m->size()));
        std::vector<Subcomplex> out;
        for (std::size_t i = 0; i < levels.size(); ++i) out.push_back(subcomplex((*m)[i], p + "/" + std::to_string(i), levels[i]));
        return out;
    }

    DocumentPayload payload(DocumentKind kind, const json& j, const std::string& path) const {
        switch (kind) {
            case DocumentKind::Complex:
                return complex(j, path);
            case DocumentKind::Map: {
                object(j, path, {"source", "target", "vertex_map"});
                const SimplicialComplex source = complex(field(j, path, "source"), path + "/source");
                const SimplicialComplex target = complex(field(j, path, "target"), path + "/target");
                return vertex_map(field(j, path, "vertex_map"), path + "/vertex_map", source, target);
            }
            case DocumentKind::GroupTower:
                return group_tower(j, path);
            case DocumentKind::ComplexTower:
                return complex_tower(j, path);
            case DocumentKind::Filtration: {
                object(j, path, {"ambient", "stages"});
                Filtration f;
                f.ambient = complex(field(j, path, "ambient"), path + "/ambient");
                const json& stages = array(field(j, path, "stages"), path + "/stages");
                for (std::size_t i = 0; i < stages.size(); ++i)
                    f.stages.push_back(subcomplex(stages[i], path + "/stages/" + std::to_string(i), f.ambient));
                return f;
            }
            case DocumentKind::PointSample:
                return point_sample(j, path);
            case DocumentKind::Cover: {
                object(j, path, {"elements"});
                BallCover c;
                const json& elements = array(field(j, path, "elements"), path + "/elements");
                for (std::size_t i = 0; i < elements.size(); ++i) {
                    const std::string p = path + "/elements/" + std::to_string(i);
                    object(elements[i], p, {"center", "radius"});
                    Ball b{index(field(elements[i], p, "center"), p + "/center"),
                           rational(field(elements[i], p, "radius"), p + "/radius")};
                    if (b.radius <= 0) fail(p + "/radius", "radius must be positive");
                    c.elements.push_back(std::move(b));
                }
                return c;
            }
        }
        fail(path, "unsupported kind");
    }

private:
    static bool is_decimal(const std::string& s) {
        const std::size_t start = !s.empty() && s.front() == '-' ? 1 : 0;
        if (s.size() == start) return false;
        return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                           [](char c) { return c >= '0' && c <= '9'; });
    }

    std::optional<std::size_t> line_for(std::string path) const {
        // Missing fields are reported at the line of the enclosing value.
        while (true) {
            if (auto it = lines_.find(path); it != lines_.end()) return it->second;
            if (path.empty()) return std::nullopt;
            path.erase(path.rfind('/'));
        }
    }

    GroupTower group_tower(const json& j, const std::string& path) const {
        object(j, path, {"levels", "bonds", "certificate"});
        GroupTower g;
        const json& levels = array(field(j, path, "levels"), path + "/levels");
        for (std::size_t i = 0; i < levels.size(); ++i) {
            const std::string p = path + "/levels/" + std::to_string(i);
            object(levels[i], p, {"generators", "relations"});
            const std::size_t gens = index(field(levels[i], p, "generators"), p + "/generators");
            const json* rel = optional_field(levels[i], "relations");
            const IntegerMatrix relations = rel ? matrix(*rel, p + "/relations", std::nullopt, gens) : IntegerMatrix(0, gens);
            g.levels.push_back(make_group(FGAbelianGroup::from_presentation(gens, relations)));
        }
        const json& bonds = array(field(j, path, "bonds"), path + "/bonds");
        if (bonds.size() + 1 != std::max<std::size_t>(levels.size(), 1))
            fail(path + "/bonds", "expected " + std::to_string(levels.empty() ? 0 : levels.size() - 1) +
                                      " bonds, found " + std::to_string(bonds.size()));
        for (std::size_t i = 0; i < bonds.size(); ++i) {
            const std::string p = path + "/bonds/" + std::to_string(i);
            const IntegerMatrix m = matrix(bonds[i], p, g.levels[i]->generator_count(), g.levels[i + 1]->generator_count());
            try {
                g.bonds.emplace_back(g.levels[i + 1], g.levels[i], m);
            } catch (const std::invalid_argument& e) {
                fail(p, e.what());
            }
        }
        if (const json* c = optional_field(j, "certificate")) g.certificate = certificate(*c, path + "/certificate");
        return g;
    }

    ComplexTower complex_tower(const json& j, const std::string& path) const {
        object(j, path, {"levels", "bonds", "marked_K", "marked_L", "certificate"});
        ComplexTower t;
        const json& levels = array(field(j, path, "levels"), path + "/levels");
        for (std::size_t i = 0; i < levels.size(); ++i)
            t.levels.push_back(complex(levels[i], path + "/levels/" + std::to_string(i)));
        const json& bonds = array(field(j, path, "bonds"), path + "/bonds");
        if (bonds.size() + 1 != std::max<std::size_t>(levels.size(), 1))
            fail(path + "/bonds", "expected " + std::to_string(levels.empty() ? 0 : levels.size() - 1) +
                                      " bonds, found " + std::to_string(bonds.size()));
        for (std::size_t i = 0; i < bonds.size(); ++i) {
            const std::string p = path + "/bonds/" + std::to_string(i);
            object(bonds[i], p, {"vertex_map"});
            t.bonds.push_back(vertex_map(field(bonds[i], p, "vertex_map"), p + "/vertex_map", t.levels[i + 1], t.levels[i]));
        }
        t.marked_K = markings(j, "marked_K", path, t.levels);
        t.marked_L = markings(j, "marked_L", path, t.levels);
        if (const json* c = optional_field(j, "certificate")) t.certificate = certificate(*c, path + "/certificate");
        if (auto e = t.structural_error()) fail(path, *e);
        return t;
    }

    PointSample point_sample(const json& j, const std::string& path) const {
        object(j, path, {"points", "compactum_mark"});
        PointSample s;
        const json& points = array(field(j, path, "points"), path + "/points");
        for (std::size_t i = 0; i < points.size(); ++i) {
            const std::string p = path + "/points/" + std::to_string(i);
            array(points[i], p);
            if (i > 0 && points[i].size() != points[0].size())
                fail(p, "expected " + std::to_string(points[0].size()) + " coordinates");
            Point x;
            for (std::size_t c = 0; c < points[i].size(); ++c) x.push_back(rational(points[i][c], p + "/" + std::to_string(c)));
            s.points.push_back(std::move(x));
        }
        const json* mark = optional_field(j, "compactum_mark");
        if (mark) {
            array(*mark, path + "/compactum_mark");
            std::set<std::size_t> seen;
            for (std::size_t i = 0; i < mark->size(); ++i) {
                const std::string p = path + "/compactum_mark/" + std::to_string(i);
                const std::size_t m = index((*mark)[i], p);
                if (m >= s.points.size()) fail(p, "mark " + std::to_string(m) + " is not a point index");
                if (!seen.insert(m).second) fail(p, "mark " + std::to_string(m) + " repeats");
                s.compactum_mark.push_back(m);
            }
        }
        return s;
    }

    std::string file_;
    std::map<std::string, std::size_t> lines_;
};

std::string describe(const std::string& file, std::optional<std::size_t> line, const std::string& path,
                     const std::string& violation) {
    std::string out = file;
    if (line) out += ":" + std::to_string(*line);
    out += ": ";
    if (!path.empty()) out += path + ": ";
    return out + violation;
}

}  // namespace

std::string to_string(DocumentKind k) { return std::string(kKindNames[static_cast<std::size_t>(k)]); }

std::optional<DocumentKind> document_kind_from_string(std::string_view s) {
    for (std::size_t i = 0; i < kKindNames.size(); ++i)
        if (kKindNames[i] == s) return static_cast<DocumentKind>(i);
    return std::nullopt;
}

DocumentError::DocumentError(std::string file, std::optional<std::size_t> line, std::string path, std::string violation)
    : std::runtime_error(describe(file, line, path, violation)),
      file_(std::move(file)),
      line_(line),
      path_(std::move(path)),
      violation_(std::move(violation)) {}

std::string serialize(const Document& d) {
    const json payload = std::visit([](const auto& p) { return payload_json(p); }, d.payload);
    const json envelope = {{"format_version", kFormatVersion}, {"kind", to_string(d.kind())}, {"payload", payload}};
    return envelope.dump(2) + "\n";
}

Document deserialize(std::string_view text, const std::string& file) {
    Parsed parsed = parse_positioned(text, file);
    const Reader r(file, std::move(parsed.lines));
    const json& root = r.object(parsed.root, "", {"format_version", "kind", "payload"});
    const std::string version = r.string(r.field(root, "", "format_version"), "/format_version");
    if (version != kFormatVersion)
        r.fail("/format_version", "unsupported format_version '" + version + "' (expected '" +
                                      std::string(kFormatVersion) + "')");
    const std::string kind_name = r.string(r.field(root, "", "kind"), "/kind");
    const auto kind = document_kind_from_string(kind_name);
    if (!kind) r.fail("/kind", "unknown kind '" + kind_name + "'");
    return Document{r.payload(*kind, r.field(root, "", "payload"), "/payload")};
}

Document read_document(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DocumentError(path.string(), std::nullopt, "", "cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return deserialize(buffer.str(), path.string());
}

void write_document(const std::filesystem::path& path, const Document& d) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DocumentError(path.string(), std::nullopt, "", "cannot open file for writing");
    out << serialize(d);
    if (!out) throw DocumentError(path.string(), std::nullopt, "", "write failed");
}

}  // namespace shape

#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "shape/assembly.hpp"
#include "shape/complex_tower.hpp"
#include "shape/group_tower.hpp"
#include "shape/nerve.hpp"
#include "shape/simplicial_complex.hpp"

namespace shape {

/// Envelope  {"format_version": "1", "kind": ..., "payload": ...}.
///
/// Complexes store maximal simplexes (faces are closed on load) and their
/// vertex list. Integers that do not fit in 64 bits and all non-integral
/// rationals are written as decimal strings ("-12", "3/4").
inline constexpr std::string_view kFormatVersion = "1";

enum class DocumentKind { Complex, Map, GroupTower, ComplexTower, Filtration, PointSample, Cover };

std::string to_string(DocumentKind k);
std::optional<DocumentKind> document_kind_from_string(std::string_view s);

using DocumentPayload =
    std::variant<SimplicialComplex, SimplicialMap, GroupTower, ComplexTower, Filtration, PointSample, BallCover>;

struct Document {
    DocumentPayload payload;

    DocumentKind kind() const { return static_cast<DocumentKind>(payload.index()); }
};

/// Malformed input: names the file, the line when it is known, and the JSON
/// pointer of the offending value.
class DocumentError : public std::runtime_error {
public:
    DocumentError(std::string file, std::optional<std::size_t> line, std::string path, std::string violation);

    const std::string& file() const { return file_; }
    std::optional<std::size_t> line() const { return line_; }
    const std::string& path() const { return path_; }
    const std::string& violation() const { return violation_; }

private:
    std::string file_;
    std::optional<std::size_t> line_;
    std::string path_;
    std::string violation_;
};

/// Pretty-printed, keys sorted, trailing newline.
std::string serialize(const Document& d);

/// Validates the whole payload before returning; nothing is returned on error.
Document deserialize(std::string_view text, const std::string& file = "<input>");

Document read_document(const std::filesystem::path& path);
void write_document(const std::filesystem::path& path, const Document& d);

/// The payload of the expected kind; DocumentError at the root otherwise.
template <class T>
T expect_payload(Document d, const std::string& file) {
    if (!std::holds_alternative<T>(d.payload)) {
        const auto want = static_cast<DocumentKind>(DocumentPayload(T{}).index());
        throw DocumentError(file, std::nullopt, "/kind",
                            "expected a " + to_string(want) + " document, found " + to_string(d.kind()));
    }
    return std::get<T>(std::move(d.payload));
}

}  // namespace shape

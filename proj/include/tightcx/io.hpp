#pragma once

#include <json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "tightcx/complex.hpp"
#include "tightcx/flips.hpp"

namespace tightcx {

using Json = nlohmann::ordered_json;

/// A complex together with the metadata of its file.
struct ComplexFile {
    std::string name;
    std::string description;
    Complex complex;
    /// Caller-asserted facts, never used as verified hypotheses.
    Json claims = Json::object();
    /// Non-fatal findings such as repeated facets.
    std::vector<std::string> warnings;
};

/// Parses either format: JSON when the first non-blank character is '{',
/// otherwise one facet per line with whitespace-separated labels and '#'
/// comments. Throws ParseError with line and column, or the complex
/// construction errors.
ComplexFile parse_complex(std::string_view text, std::string_view origin = "<input>");
/// Reads and parses a file. Throws ParseError if it cannot be read.
ComplexFile load_complex(const std::string& path);

/// Deterministic JSON document: labels in natural order, facets sorted.
Json complex_to_json(const Complex& x, const std::string& name = "", const std::string& description = "");
std::string serialize_json(const ComplexFile& file);
/// Plain text, one facet per line.
std::string serialize_text(const Complex& x);

Json certificate_to_json(const FlipCertificate& cert);
/// Throws ParseError on malformed documents; the replay is not checked here.
FlipCertificate certificate_from_json(const Json& j);

/// 64-bit FNV-1a of the canonical text serialization.
std::string content_hash(const Complex& x);

}  // namespace tightcx

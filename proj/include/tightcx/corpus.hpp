#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tightcx/complex.hpp"
#include "tightcx/io.hpp"

namespace tightcx {

/// A bundled complex with the values the acceptance suite expects of it.
struct CorpusEntry {
    std::string name;
    std::string description;
    Complex complex;
    Json claims = Json::object();
    /// {"f": [...], "betti": {"q": [...], ...}, "neighbourliness": n, "tight": {"q": b, ...}}
    Json expected = Json::object();
    /// Source of every expected value.
    Json provenance = Json::object();
    /// True for entries generated in code rather than read from a file.
    bool generated = false;
};

/// Asset directory: $TIGHTCX_CORPUS if set, else the directory configured at build time.
std::string corpus_dir();

/// Generated standard spheres S^d_{d+2} for d <= 6, then the assets listed in
/// manifest.json. Throws IntegrityError when an asset's content hash differs
/// from the manifest.
std::vector<CorpusEntry> corpus();

std::optional<CorpusEntry> find_corpus_entry(const std::string& name);

}  // namespace tightcx

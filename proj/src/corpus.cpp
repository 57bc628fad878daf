#include "tightcx/corpus.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "tightcx/errors.hpp"

#ifndef TIGHTCX_DEFAULT_CORPUS_DIR
#define TIGHTCX_DEFAULT_CORPUS_DIR "corpus"
#endif

namespace tightcx {

namespace {

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IntegrityError(path + ": cannot open corpus file");
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return Json::parse(ss.str());
    } catch (const nlohmann::json::parse_error&) {
        throw IntegrityError(path + ": malformed JSON");
    }
}

CorpusEntry standard_sphere_entry(int d) {
    CorpusEntry e;
    e.name = "S" + std::to_string(d) + "_" + std::to_string(d + 2);
    e.description = "Boundary of the " + std::to_string(d + 1) + "-simplex.";
    e.complex = standard_sphere(d);
    e.generated = true;
    Json f = Json::array();
    for (int i = 0; i <= d; ++i) f.push_back(binomial(d + 2, i + 1).get_si());
    Json b = Json::array();
    for (int i = 0; i <= d; ++i) b.push_back((i == 0 || i == d) ? (d == 0 && i == 0 ? 2 : 1) : 0);
    e.expected = {{"f", f},
                  {"betti", {{"q", b}, {"f2", b}, {"f3", b}}},
                  {"neighbourliness", d + 1},
                  {"tight", {{"q", d > 0}, {"f2", d > 0}}}};
    e.provenance = {{"f", "derived: C(d+2, i+1) faces of dimension i"},
                    {"betti", "derived: homology of a sphere"},
                    {"neighbourliness", "derived: every proper subset is a face"},
                    {"tight", d > 0 ? "literature: the boundary of a simplex is the only tight sphere"
                                    : "derived: two points are disconnected, so not tight"}};
    return e;
}

}  // namespace

std::string corpus_dir() {
    if (const char* env = std::getenv("TIGHTCX_CORPUS"); env && *env) return env;
    return TIGHTCX_DEFAULT_CORPUS_DIR;
}

std::vector<CorpusEntry> corpus() {
    std::vector<CorpusEntry> out;
    for (int d = 0; d <= 6; ++d) out.push_back(standard_sphere_entry(d));

    const std::string dir = corpus_dir();
    const Json manifest = read_json(dir + "/manifest.json");
    for (const auto& item : manifest.at("assets")) {
        const std::string path = dir + "/" + item.at("file").get<std::string>();
        const Json doc = read_json(path);
        CorpusEntry e;
        try {
            const ComplexFile file = parse_complex(doc.dump(), path);
            e.complex = file.complex;
            e.claims = file.claims;
        } catch (const Error& err) {
            throw IntegrityError(path + ": " + err.what());
        }
        const std::string hash = content_hash(e.complex);
        if (hash != item.at("hash").get<std::string>()) {
            throw IntegrityError(path + ": content hash " + hash + " does not match the manifest");
        }
        e.name = doc.value("name", item.value("name", ""));
        e.description = doc.value("description", "");
        e.expected = doc.value("expected", Json::object());
        e.provenance = doc.value("provenance", Json::object());
        out.push_back(std::move(e));
    }
    return out;
}

std::optional<CorpusEntry> find_corpus_entry(const std::string& name) {
    for (auto& e : corpus()) {
        if (e.name == name) return e;
    }
    return std::nullopt;
}

}  // namespace tightcx

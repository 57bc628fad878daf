#include "tightcx/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "tightcx/errors.hpp"

namespace tightcx {

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

std::string label_of(const Json& v, const std::string& where) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw ParseError(where + ": vertex labels must be strings or integers");
}

std::vector<std::string> label_list(const Json& v, const std::string& where) {
    if (!v.is_array()) throw ParseError(where + ": expected an array of labels");
    std::vector<std::string> out;
    for (const auto& e : v) out.push_back(label_of(e, where));
    return out;
}

void note_duplicates(const std::vector<std::vector<std::string>>& facets, std::vector<std::string>& warnings) {
    std::set<std::multiset<std::string>> seen;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        std::multiset<std::string> key(facets[i].begin(), facets[i].end());
        if (!seen.insert(key).second) warnings.push_back("facet " + std::to_string(i + 1) + " repeats an earlier facet");
    }
}

ComplexFile parse_json(std::string_view text, std::string_view origin) {
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError(std::string(origin) + ":" + std::to_string(line) + ":" + std::to_string(col) +
                         ": malformed JSON");
    }
    const std::string where(origin);
    if (!doc.is_object()) throw ParseError(where + ": expected a JSON object");
    if (!doc.contains("facets")) throw ParseError(where + ": missing \"facets\"");
    ComplexFile out;
    out.name = doc.value("name", "");
    out.description = doc.value("description", "");
    if (doc.contains("claims")) out.claims = doc["claims"];

    std::vector<std::vector<std::string>> facets;
    const auto& fs = doc["facets"];
    if (!fs.is_array()) throw ParseError(where + ": \"facets\" must be an array");
    for (std::size_t i = 0; i < fs.size(); ++i) {
        facets.push_back(label_list(fs[i], where + ": facet " + std::to_string(i + 1)));
    }
    note_duplicates(facets, out.warnings);
    if (doc.contains("vertices")) {
        std::set<std::string> in_facets;
        for (const auto& f : facets) in_facets.insert(f.begin(), f.end());
        for (const auto& v : label_list(doc["vertices"], where + ": vertices")) {
            if (!in_facets.count(v)) facets.push_back({v});
        }
    }
    if (facets.empty()) throw EmptyComplexError(where + ": no facets");
    out.complex = Complex::from_facets(facets);
    return out;
}

ComplexFile parse_text(std::string_view text, std::string_view origin) {
    ComplexFile out;
    std::vector<std::vector<std::string>> facets;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream words(line);
        std::vector<std::string> facet;
        std::string w;
        while (words >> w) facet.push_back(w);
        if (facet.empty()) continue;
        std::set<std::string> uniq(facet.begin(), facet.end());
        if (uniq.size() != facet.size()) {
            throw MalformedFaceError(std::string(origin) + ":" + std::to_string(number) +
                                     ":1: repeated vertex label in facet");
        }
        facets.push_back(std::move(facet));
    }
    if (facets.empty()) throw EmptyComplexError(std::string(origin) + ": no facets");
    note_duplicates(facets, out.warnings);
    out.complex = Complex::from_facets(facets);
    return out;
}

Json move_to_json(const BistellarMove& m) {
    return Json{{"alpha", m.alpha}, {"beta", m.beta}, {"index", m.index()}};
}

}  // namespace

ComplexFile parse_complex(std::string_view text, std::string_view origin) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return parse_json(text, origin);
    return parse_text(text, origin);
}

ComplexFile load_complex(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    auto file = parse_complex(ss.str(), path);
    if (file.name.empty()) {
        const auto slash = path.find_last_of('/');
        file.name = path.substr(slash == std::string::npos ? 0 : slash + 1);
    }
    return file;
}

Json complex_to_json(const Complex& x, const std::string& name, const std::string& description) {
    Json j = Json::object();
    j["name"] = name;
    j["description"] = description;
    j["vertices"] = x.labels();
    Json facets = Json::array();
    for (Mask f : x.facets()) {
        if (f != 0) facets.push_back(x.labels_of(f));
    }
    j["facets"] = facets;
    return j;
}

std::string serialize_json(const ComplexFile& file) {
    Json j = complex_to_json(file.complex, file.name, file.description);
    if (!file.claims.empty()) j["claims"] = file.claims;
    return j.dump(2) + "\n";
}

std::string serialize_text(const Complex& x) {
    std::string out;
    for (Mask f : x.facets()) {
        if (f == 0) continue;
        const auto labels = x.labels_of(f);
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (i) out += ' ';
            out += labels[i];
        }
        out += '\n';
    }
    return out;
}

Json certificate_to_json(const FlipCertificate& cert) {
    Json moves = Json::array();
    for (const auto& m : cert.moves) moves.push_back(move_to_json(m));
    return Json{{"schema", 1},
                {"kind", "flip-certificate"},
                {"start", complex_to_json(cert.start)},
                {"moves", moves},
                {"end", complex_to_json(cert.end)},
                {"max_index", cert.max_index}};
}

FlipCertificate certificate_from_json(const Json& j) {
    try {
        FlipCertificate c;
        auto complex_of = [](const Json& doc) {
            return parse_complex(doc.dump(), "<certificate>").complex;
        };
        c.start = complex_of(j.at("start"));
        c.end = complex_of(j.at("end"));
        for (const auto& m : j.at("moves")) {
            c.moves.push_back({label_list(m.at("alpha"), "move alpha"), label_list(m.at("beta"), "move beta")});
        }
        c.max_index = j.at("max_index").get<int>();
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed certificate: ") + e.what());
    }
}

std::string content_hash(const Complex& x) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : serialize_text(x)) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace tightcx

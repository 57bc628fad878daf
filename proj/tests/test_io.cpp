#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "tightcx/corpus.hpp"
#include "tightcx/errors.hpp"
#include "tightcx/flips.hpp"
#include "tightcx/io.hpp"

using namespace tightcx;

TEST_CASE("plain text format") {
    const auto f = parse_complex("1 2 3\n1 2 4\n1 3 4\n2 3 4", "<text>");
    CHECK(f.complex == standard_sphere(2));
    const auto g = parse_complex("# a comment\n\n a b  # trailing\nb c\n", "<text>");
    CHECK(g.complex.facets().size() == 2);
    CHECK_THROWS_AS(parse_complex("1 2 2\n", "<text>"), MalformedFaceError);
    try {
        parse_complex("1 2\n3 4 3\n", "bad.txt");
    } catch (const MalformedFaceError& e) {
        CHECK(std::string(e.what()).find("bad.txt:2") == 0);
    }
    CHECK_THROWS_AS(parse_complex("# nothing\n", "<text>"), EmptyComplexError);
}

TEST_CASE("json format") {
    const auto f = parse_complex(R"({"name": "s", "facets": [[1, 2], [2, 3], [1, 3]], "vertices": [1, 2, 3, 9]})",
                                 "<json>");
    CHECK(f.name == "s");
    CHECK(f.complex.num_vertices() == 4);
    CHECK(f.complex.dim() == 1);
    const auto dup = parse_complex(R"({"facets": [["a", "b"], ["b", "a"]]})", "<json>");
    CHECK(dup.warnings.size() == 1);
    CHECK(dup.complex.facets().size() == 1);
    try {
        parse_complex("{\n  \"facets\": [[1, 2],\n  oops]\n}", "broken.json");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("broken.json:3:") == 0);
    }
    CHECK_THROWS_AS(parse_complex(R"({"name": "x"})", "<json>"), ParseError);
    CHECK_THROWS_AS(parse_complex(R"({"facets": [[1.5]]})", "<json>"), ParseError);
}

TEST_CASE("serialization round trips") {
    for (const auto& e : corpus()) {
        const auto text = serialize_text(e.complex);
        CHECK(parse_complex(text, "<rt>").complex == e.complex);
        const auto json = serialize_json({e.name, e.description, e.complex, e.claims, {}});
        const auto back = parse_complex(json, "<rt>");
        CHECK(back.complex == e.complex);
        CHECK(back.name == e.name);
        CHECK(serialize_text(back.complex) == text);
    }
}

TEST_CASE("serialization is canonical") {
    const auto a = parse_complex("3 1 2\n2 4 3\n", "<a>").complex;
    const auto b = parse_complex("4 3 2\n1 2 3\n", "<b>").complex;
    CHECK(serialize_text(a) == serialize_text(b));
    CHECK(content_hash(a) == content_hash(b));
    CHECK(content_hash(a).size() == 16);
}

TEST_CASE("certificates round trip through json") {
    const auto c = random_stellated_sphere(3, 2, 8, 12);
    const auto back = certificate_from_json(certificate_to_json(c));
    CHECK(back.start == c.start);
    CHECK(back.end == c.end);
    CHECK(back.moves == c.moves);
    CHECK(back.max_index == c.max_index);
    CHECK(certificate_valid(back));
    CHECK(certificate_to_json(c)["schema"] == 1);
    CHECK_THROWS_AS(certificate_from_json(Json::object()), ParseError);
}

TEST_CASE("corpus contents") {
    const auto all = corpus();
    CHECK(all.size() == 12);
    const auto cp2 = find_corpus_entry("CP2_9");
    REQUIRE(cp2.has_value());
    CHECK(cp2->expected["f"] == Json::array({9, 36, 84, 90, 36}));
    CHECK(find_corpus_entry("T2_7")->expected["betti"]["q"] == Json::array({1, 2, 1}));
    CHECK(find_corpus_entry("K3_9")->expected["tight"]["f2"] == true);
    CHECK(find_corpus_entry("S3_5")->generated);
    for (const auto& e : all) {
        CHECK_FALSE(e.provenance.empty());
        CHECK(e.expected.contains("f"));
    }
    CHECK_FALSE(find_corpus_entry("nothing").has_value());
}

TEST_CASE("corpus integrity is enforced") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "tightcx_corpus_test";
    fs::remove_all(dir);
    fs::copy(corpus_dir(), dir);
    {
        std::ifstream in(dir / "torus7.json");
        std::stringstream ss;
        ss << in.rdbuf();
        auto j = Json::parse(ss.str());
        j["facets"][0] = Json::array({"1", "2", "5"});
        std::ofstream(dir / "torus7.json") << j.dump(2);
    }
    setenv("TIGHTCX_CORPUS", dir.c_str(), 1);
    CHECK_THROWS_AS(corpus(), IntegrityError);
    unsetenv("TIGHTCX_CORPUS");
    CHECK_NOTHROW(corpus());
    fs::remove_all(dir);
}

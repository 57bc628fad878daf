#include <doctest.h>

#include "oracle.hpp"
#include "tightcx/corpus.hpp"
#include "tightcx/errors.hpp"

using namespace tightcx;

namespace {

std::vector<long> lib_f(const Complex& x) {
    std::vector<long> out;
    const auto f = f_vector(x);
    for (const auto& z : f.entries()) out.push_back(z.get_si());
    return out;
}

std::vector<Complex> samples() {
    std::vector<Complex> out{standard_sphere(0), standard_sphere(3), cycle(6), standard_ball(4),
                             find_corpus_entry("T2_7")->complex, find_corpus_entry("RP2_6")->complex};
    std::mt19937_64 rng(11);
    for (int i = 0; i < 10; ++i) out.push_back(Complex::from_facets(oracle::random_facets(rng, 8, 2 + i % 3, 6 + i)));
    return out;
}

}  // namespace

TEST_CASE("face numbers agree with brute-force enumeration") {
    for (const auto& x : samples()) CHECK(lib_f(x) == oracle::face_counts(oracle::faces_of(x)));
}

TEST_CASE("standard spheres and balls") {
    for (int d = 0; d <= 6; ++d) {
        const auto s = standard_sphere(d);
        CHECK(s.num_vertices() == d + 2);
        CHECK(s.dim() == d);
        std::vector<Integer> g(static_cast<std::size_t>(d) + 2, 0);
        g[0] = 1;
        CHECK(g_vector(s).entries() == g);
        CHECK(euler_characteristic(s) == (d % 2 == 0 ? 2 : 0));
        CHECK(neighbourliness(s) == d + 1);
    }
    CHECK(standard_ball(3).facets().size() == 1);
    CHECK(lib_f(simplex_boundary({"a", "b", "c"})) == std::vector<long>{1, 3, 3});
}

TEST_CASE("torus g-vector") {
    const auto t = find_corpus_entry("T2_7")->complex;
    CHECK(g_vector(t).entries() == std::vector<Integer>{1, 3, 6, -11});
    CHECK(euler_characteristic(t) == 0);
}

TEST_CASE("f and g vectors are mutually inverse") {
    std::mt19937_64 rng(3);
    for (const auto& x : samples()) {
        const auto f = f_vector(x);
        CHECK(f_from_g(g_from_f(f, x.dim()), x.dim()) == f);
    }
    for (int trial = 0; trial < 50; ++trial) {
        const int d = static_cast<int>(rng() % 6);
        std::vector<Integer> g{1};
        for (int i = 1; i <= d + 1; ++i) g.push_back(static_cast<long>(rng() % 41) - 20);
        const IntVector gv(VectorKind::G, d, g);
        CHECK(g_from_f(f_from_g(gv, d), d) == gv);
    }
    CHECK_THROWS_AS(g_from_f(g_vector(cycle(4)), 1), MalformedVectorError);
}

TEST_CASE("euler characteristic is the alternating face count") {
    for (const auto& x : samples()) {
        const auto f = oracle::face_counts(oracle::faces_of(x));
        long chi = 0;
        for (std::size_t i = 1; i < f.size(); ++i) chi += (i % 2 == 1) ? f[i] : -f[i];
        CHECK(euler_characteristic(x) == chi);
    }
}

TEST_CASE("neighbourliness and connectivity") {
    for (const auto& x : samples()) {
        const auto fs = oracle::faces_of(x);
        int l = 0;
        for (int k = 1; k <= x.num_vertices(); ++k) {
            if (oracle::face_counts(fs).size() > static_cast<std::size_t>(k) &&
                oracle::face_counts(fs)[static_cast<std::size_t>(k)] == oracle::choose(x.num_vertices(), k)) {
                l = k;
            } else {
                break;
            }
        }
        CHECK(neighbourliness(x) == l);
        std::set<int> all;
        for (int v = 0; v < x.num_vertices(); ++v) all.insert(v);
        CHECK(is_connected(x) == (oracle::components(fs, all) == 1));
        CHECK(is_neighbourly(x, 2) == (l >= 2));
    }
    CHECK_FALSE(is_connected(standard_sphere(0)));
}

TEST_CASE("induced subcomplexes and links") {
    std::mt19937_64 rng(5);
    for (const auto& x : samples()) {
        const auto fs = oracle::faces_of(x);
        for (int t = 0; t < 5; ++t) {
            const Mask a = rng() & x.vertex_mask();
            std::set<int> as;
            for (int i = 0; i < x.num_vertices(); ++i) {
                if (a >> i & 1) as.insert(i);
            }
            const auto sub = induced_subcomplex(x, a);
            std::vector<long> expected = oracle::face_counts(oracle::induced(fs, as));
            if (as.empty()) expected = {1};
            CHECK(lib_f(sub) == expected);
        }
        for (int v = 0; v < x.num_vertices(); ++v) {
            const auto lk = vertex_link(x, v);
            auto expected = oracle::face_counts(oracle::link(fs, v));
            CHECK(lib_f(lk) == expected);
            CHECK_FALSE(lk.find(x.labels()[static_cast<std::size_t>(v)]).has_value());
        }
    }
}

TEST_CASE("join multiplies face polynomials") {
    const auto x = cycle(4);
    const auto y = Complex::from_facets({{"p"}, {"q"}});
    const auto j = join(x, y);
    CHECK(lib_f(j) == std::vector<long>{1, 6, 12, 8});
    CHECK_THROWS_AS(join(x, x), DisjointnessError);
}

TEST_CASE("boundary and skeleton") {
    const auto ball = standard_ball(4);
    CHECK(boundary_complex(ball) == standard_sphere(2));
    CHECK(boundary_ridges(ball).size() == 4);
    CHECK(lib_f(skeleton(standard_sphere(3), 1)) == std::vector<long>{1, 5, 10});
    CHECK(boundary_complex(standard_sphere(2)).is_empty());
}

TEST_CASE("structure report") {
    const auto r = structure_report(find_corpus_entry("RP2_6")->complex);
    CHECK(r.pure);
    CHECK(r.pseudomanifold);
    CHECK(r.closed);
    CHECK(r.connected);
    CHECK(r.neighbourliness == 2);
    CHECK(r.euler_characteristic == 1);
    const auto open = structure_report(standard_ball(3));
    CHECK_FALSE(open.closed);
    CHECK(dual_graph(find_corpus_entry("T2_7")->complex).connected);
}

TEST_CASE("labels are normalised in natural order") {
    const auto x = Complex::from_facets({{"v10", "v2", "v1"}});
    CHECK(x.labels() == std::vector<std::string>{"v1", "v2", "v10"});
    CHECK(natural_less("2", "10"));
    CHECK_FALSE(natural_less("10", "2"));
    const auto y = Complex::from_facets({{"a", "b"}, {"a", "b", "c"}, {"b", "c"}});
    CHECK(y.facets().size() == 1);
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(Complex::from_facets({}), EmptyComplexError);
    CHECK_THROWS_AS(Complex::from_facets({{"a", "a"}}), MalformedFaceError);
    std::vector<std::vector<std::string>> many;
    for (int i = 0; i < 65; ++i) many.push_back({"x" + std::to_string(i)});
    CHECK_THROWS_AS(Complex::from_facets(many), CapacityError);
    CHECK_THROWS_AS(vertex_link(cycle(5), "nope"), LookupError);
    CHECK_THROWS_AS(cycle(2), PreconditionError);
}

TEST_CASE("empty complex") {
    const auto e = Complex::empty();
    CHECK(e.dim() == -1);
    CHECK(e.is_empty());
    CHECK(lib_f(e) == std::vector<long>{1});
}

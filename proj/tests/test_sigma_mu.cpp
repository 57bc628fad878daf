#include <doctest.h>

#include "oracle.hpp"
#include "tightcx/corpus.hpp"
#include "tightcx/errors.hpp"
#include "tightcx/parallel.hpp"
#include "tightcx/sigma_mu.hpp"

using namespace tightcx;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);

std::vector<Complex> samples() {
    std::vector<Complex> out{find_corpus_entry("T2_7")->complex, find_corpus_entry("RP2_6")->complex, cycle(6)};
    std::mt19937_64 rng(29);
    for (int i = 0; i < 6; ++i) out.push_back(Complex::from_facets(oracle::random_facets(rng, 7, 3, 4 + i)));
    for (int i = 0; i < 4; ++i) out.push_back(oracle::random_two_neighbourly(rng, 6, 0.4));
    return out;
}

std::set<int> all_vertices(const Complex& x) {
    std::set<int> s;
    for (int i = 0; i < x.num_vertices(); ++i) s.insert(i);
    return s;
}

}  // namespace

TEST_CASE("sigma agrees with the subset-by-subset definition") {
    for (const auto& x : samples()) {
        const auto fs = oracle::faces_of(x);
        CHECK(sigma_vector(x, Q) == oracle::sigma(fs, all_vertices(x), x.dim(), 0));
        CHECK(sigma_vector(x, F2) == oracle::sigma(fs, all_vertices(x), x.dim(), 2));
    }
}

TEST_CASE("sigma_0 counts components") {
    for (const auto& x : samples()) {
        const auto fs = oracle::faces_of(x);
        const long m = x.num_vertices();
        mpq_class s0 = 0;
        for (long a = 0; a < (1L << m); ++a) {
            std::set<int> as;
            for (int i = 0; i < m; ++i) {
                if (a >> i & 1) as.insert(i);
            }
            s0 += mpq_class(mpz_class(oracle::components(fs, as) - 1), oracle::choose(m, static_cast<long>(as.size())));
        }
        s0.canonicalize();
        CHECK(sigma_vector(x, Q)[0] == s0);
    }
}

TEST_CASE("small spheres") {
    CHECK(sigma_vector(standard_sphere(2), Q) == RationalVector{-1, 0, 1});
    CHECK(mu_vector(standard_sphere(2), Q) == RationalVector{1, 0, 1});
    CHECK(sigma_vector(standard_sphere(0), Q) == RationalVector{0});
    CHECK(mu_vector(standard_sphere(0), Q) == RationalVector{1});
}

TEST_CASE("mu agrees with the link definition") {
    for (const auto& x : samples()) {
        CHECK(mu_vector(x, Q) == oracle::mu(oracle::faces_of(x), 0));
        CHECK(mu_vector(x, F2) == oracle::mu(oracle::faces_of(x), 2));
    }
}

TEST_CASE("relative formula equals the definition on 2-neighbourly complexes") {
    for (const auto& x : samples()) {
        if (!is_neighbourly(x, 2)) {
            CHECK_THROWS_AS(mu_via_relative(x, Q), PreconditionError);
            continue;
        }
        CHECK(mu_via_relative(x, Q) == mu_vector(x, Q));
        CHECK(mu_via_relative(x, F2) == mu_vector(x, F2));
    }
    for (const char* name : {"K3_9", "CP2_9"}) {
        const auto x = find_corpus_entry(name)->complex;
        CHECK(mu_via_relative(x, F2) == mu_vector(x, F2));
    }
}

TEST_CASE("surface mu-vectors") {
    const auto torus = find_corpus_entry("T2_7")->complex;
    CHECK(mu_vector(torus, Q) == RationalVector{1, 2, 1});
    const auto rp2 = find_corpus_entry("RP2_6")->complex;
    CHECK(mu_vector(rp2, F2) == RationalVector{1, 1, 1});
    CHECK(mu_vector(rp2, Q) == RationalVector{1, 1, 1});
}

TEST_CASE("results do not depend on the thread count") {
    const auto x = find_corpus_entry("K4_11")->complex;
    set_thread_count(1);
    const auto one = reduced_betti_sums(x, F2);
    const auto mu1 = mu_vector(x, Q);
    set_thread_count(7);
    CHECK(reduced_betti_sums(x, F2) == one);
    CHECK(mu_vector(x, Q) == mu1);
    set_thread_count(0);
}

TEST_CASE("sweep capacity") {
    const auto big = cycle(17);
    CHECK_THROWS_AS(sigma_vector(big, Q), CapacityError);
    try {
        sigma_vector(big, Q);
    } catch (const CapacityError& e) {
        CHECK(std::string(e.what()).find("--cap") != std::string::npos);
    }
    CHECK(sigma_vector(big, Q, {17}).size() == 2);
    CHECK_THROWS_AS(sigma_vector(cycle(8), Q, {7}), CapacityError);
    CHECK_THROWS_AS(sigma_vector(cycle(30), Q, {40}), CapacityError);
}

TEST_CASE("sums over the empty and full subsets") {
    const auto x = find_corpus_entry("T2_7")->complex;
    const auto s = reduced_betti_sums(x, Q);
    CHECK(s.size() == 8);
    CHECK(s[0][0] == -1);
    CHECK(s[7] == std::vector<long long>{0, 2, 1});
}

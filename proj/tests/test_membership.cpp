#include <doctest.h>

#include "tightcx/corpus.hpp"
#include "tightcx/errors.hpp"
#include "tightcx/membership.hpp"

using namespace tightcx;

namespace {

Complex cone(const Complex& x, const std::string& apex) { return join(x, Complex::from_facets({{apex}})); }

}  // namespace

TEST_CASE("stacked ball checks") {
    const auto square = cycle(4);
    const auto c = cone(square, "a");
    CHECK(boundary_complex(c) == square);
    CHECK_FALSE(k_stacked_ball_check(c, 1));
    CHECK(k_stacked_ball_check(c, 2));
    CHECK(k_stacked_sphere_check(square, 2, c));
    CHECK_FALSE(k_stacked_sphere_check(square, 1, c));
    CHECK(k_stacked_ball_check(standard_ball(4), 0));
    CHECK_THROWS_AS(k_stacked_sphere_check(square, 1, standard_ball(4)), PreconditionError);
    CHECK_THROWS_AS(k_stacked_ball_check(standard_sphere(2), 1), StructureError);
    CHECK(stacked_boundary_dim(4, 1) == 2);
    const auto glued = Complex::from_facets({{"1", "2", "3", "4"}, {"2", "3", "4", "5"}});
    CHECK(k_stacked_ball_check(glued, 1));
    CHECK_FALSE(k_stacked_ball_check(glued, 0));
}

TEST_CASE("shellings") {
    const auto strip = Complex::from_facets({{"1", "2", "3"}, {"2", "3", "4"}, {"3", "4", "5"}});
    const Mask a = strip.mask_of({"1", "2", "3"});
    const Mask b = strip.mask_of({"2", "3", "4"});
    const Mask c = strip.mask_of({"3", "4", "5"});
    CHECK(is_shelling(strip, {a, b, c}));
    CHECK_FALSE(is_shelling(strip, {a, c, b}));
    CHECK_FALSE(is_shelling(strip, {a, b}));
    const auto r = shelling_search(strip, 100);
    CHECK(r.verdict == Verdict::Yes);
    CHECK(is_shelling(strip, r.order));
    // Two triangles meeting in a vertex admit no shelling.
    const auto bowtie = Complex::from_facets({{"1", "2", "3"}, {"3", "4", "5"}});
    CHECK(shelling_search(bowtie, 100).verdict == Verdict::No);
}

TEST_CASE("stacked balls from flip certificates") {
    for (auto [d, k] : {std::pair{2, 1}, {3, 2}, {4, 1}, {5, 3}}) {
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            const auto cert = random_stellated_sphere(d, k, 7, seed);
            const auto sb = stacked_ball_from_certificate(cert);
            CHECK(sb.ball.dim() == d + 1);
            CHECK(boundary_complex(sb.ball) == cert.end);
            CHECK(is_shelling(sb.ball, sb.shelling));
            CHECK(k_stacked_sphere_check(cert.end, k, sb.ball));
        }
    }
}

TEST_CASE("class membership of surfaces and corpus manifolds") {
    const auto torus = find_corpus_entry("T2_7")->complex;
    const auto w = class_membership(torus, 1, ClassKind::W, 1000);
    CHECK(w.verdict == Verdict::Yes);
    CHECK(w.links.size() == 7);
    for (const auto& l : w.links) {
        CHECK(l.verdict == Verdict::Yes);
        REQUIRE(l.flips.has_value());
        CHECK(certificate_valid(*l.flips));
    }
    CHECK(class_membership(torus, 1, ClassKind::K, 1000).verdict == Verdict::Yes);
    CHECK(class_membership(find_corpus_entry("K4_11")->complex, 1, ClassKind::W, 10000).verdict == Verdict::Yes);
    CHECK(class_membership(find_corpus_entry("K4_11")->complex, 1, ClassKind::K, 10000).verdict == Verdict::Yes);
    CHECK(class_membership(find_corpus_entry("K3_9")->complex, 1, ClassKind::W, 10000).verdict == Verdict::Yes);
}

TEST_CASE("K-class witnesses") {
    const auto torus = find_corpus_entry("T2_7")->complex;
    // Links are 1-spheres; 2-stacked balls cannot be derived for them.
    CHECK(class_membership(torus, 2, ClassKind::K, 1000).verdict == Verdict::Unknown);
    std::map<std::string, Complex> witnesses;
    for (const auto& v : torus.labels()) witnesses.emplace(v, cone(vertex_link(torus, v), "apex"));
    CHECK(class_membership(torus, 2, ClassKind::K, 1000, witnesses).verdict == Verdict::Yes);
    // A cone is not 1-stacked.
    CHECK(class_membership(torus, 1, ClassKind::K, 1000, witnesses).verdict != Verdict::Yes);
}

TEST_CASE("membership hypotheses") {
    CHECK_THROWS_AS(class_membership(standard_ball(4), 1, ClassKind::W, 10), HypothesisError);
    const auto two = Complex::from_facets({{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"}, {"2", "3", "4"},
                                           {"5", "6", "7"}, {"5", "6", "8"}, {"5", "7", "8"}, {"6", "7", "8"}});
    CHECK_THROWS_AS(class_membership(two, 1, ClassKind::W, 10), HypothesisError);
    CHECK(to_string(ClassKind::W) == "W");
}

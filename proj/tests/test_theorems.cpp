#include <doctest.h>

#include "oracle.hpp"
#include "tightcx/corpus.hpp"
#include "tightcx/errors.hpp"
#include "tightcx/theorems.hpp"

using namespace tightcx;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);

Complex asset(const char* name) { return find_corpus_entry(name)->complex; }

TheoremParams with_k(int k) {
    TheoremParams p;
    p.k = k;
    return p;
}

void require_holds(const TheoremReport& r) {
    INFO(r.id);
    for (const auto& h : r.hypotheses) INFO(h);
    CHECK(r.hypotheses_satisfied);
    for (const auto& c : r.checks) {
        INFO(c.label << ": " << to_string(c.lhs) << " " << to_string(c.relation) << " " << to_string(c.rhs));
        CHECK(c.holds);
    }
    CHECK(r.holds());
}

}  // namespace

TEST_CASE("sigma relations on stellated spheres") {
    for (auto [d, k] : {std::pair{3, 2}, {5, 3}, {4, 1}}) {
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            auto p = with_k(k);
            p.certificate = random_stellated_sphere(d, k, 6, seed);
            const auto r = verify(p.certificate->end, "P19", Q, p);
            require_holds(r);
            CHECK_FALSE(r.checks.empty());
        }
    }
}

TEST_CASE("P19 without a certificate runs the reduction search") {
    const auto s = random_stellated_sphere(3, 1, 5, 4).end;
    require_holds(verify(s, "P19", F2, with_k(1)));
}

TEST_CASE("P19 rejects a certificate for another complex") {
    auto p = with_k(1);
    p.certificate = random_stellated_sphere(2, 1, 3, 1);
    const auto r = verify(random_stellated_sphere(2, 1, 3, 2).end, "P19", Q, p);
    CHECK_FALSE(r.hypotheses_satisfied);
    CHECK(r.checks.empty());
    CHECK_FALSE(r.holds());
}

TEST_CASE("mu and beta relations for W_1 manifolds") {
    for (const char* name : {"K3_9", "K4_11"}) {
        require_holds(verify(asset(name), "P20", F2, with_k(1)));
        require_holds(verify(asset(name), "P21", F2, with_k(1)));
    }
    const auto p20 = verify(asset("K4_11"), "P20", Q, with_k(1));
    CHECK(p20.checks.size() == 3);
}

TEST_CASE("face-number bounds for K^4_11") {
    const auto r = verify(asset("K4_11"), "P23", F2);
    require_holds(r);
    const std::map<std::string, std::string> values(r.values.begin(), r.values.end());
    CHECK(values.at("beta_1(F2)") == "1");
    CHECK(values.at("equality in (a)") == "all j");
    CHECK(values.at("equality in (b)") == "yes");
}

TEST_CASE("tightness consequences") {
    require_holds(verify(asset("K3_9"), "P25", F2, with_k(1)));
    require_holds(verify(asset("T2_7"), "P25", Q, with_k(1)));
    require_holds(verify(asset("CP2_9"), "L10", Q));
    require_holds(verify(asset("T2_7"), "L10", Q));
    require_holds(verify(asset("CP2_9"), "L9", Q));
    require_holds(verify(asset("CP2_9"), "L9", F2));
}

TEST_CASE("duality statements") {
    require_holds(verify(asset("T2_7"), "T2.3", Q));
    require_holds(verify(asset("RP2_6"), "T2.3", Q));
    require_holds(verify(asset("CP2_9"), "T2.3", FieldSpec::prime(3)));
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        require_holds(verify(random_stellated_sphere(3, 2, 6, seed).end, "L2.2", Q));
    }
}

TEST_CASE("link identity and Euler relation") {
    for (const auto& e : corpus()) {
        if (e.complex.dim() >= 0) require_holds(verify(e.complex, "L4", Q));
    }
    require_holds(verify(asset("T2_7"), "EULER-K", Q, with_k(1)));
    require_holds(verify(asset("K4_11"), "EULER-K", Q, with_k(1)));
}

TEST_CASE("unmet hypotheses produce no checks") {
    const auto l10 = verify(asset("RP2_6"), "L10", Q);
    CHECK_FALSE(l10.hypotheses_satisfied);
    CHECK(l10.checks.empty());
    bool any_failed = false;
    for (const auto& h : l10.hypotheses) any_failed = any_failed || h.rfind("failed: ", 0) == 0;
    CHECK(any_failed);
    CHECK_FALSE(verify(asset("CP2_9"), "P24", Q).hypotheses_satisfied);
    CHECK_FALSE(verify(cycle(6), "P20", Q).hypotheses_satisfied);
    CHECK_THROWS_AS(verify(asset("T2_7"), "P99", Q), UnknownTheoremError);
}

TEST_CASE("binomial identity against a direct evaluation") {
    const auto r = verify_eq12(6);
    require_holds(r);
    for (int p = 0; p <= 6; ++p) {
        for (int q = 0; q <= 6; ++q) {
            for (int s = 0; s <= 6; ++s) {
                mpq_class lhs = 0;
                for (int i = 0; i <= p; ++i) lhs += mpq_class(oracle::choose(p, i), oracle::choose(p + q + s, s + i));
                mpq_class rhs(mpz_class(p + q + s + 1), mpz_class(q + s + 1) * oracle::choose(q + s, s));
                lhs.canonicalize();
                rhs.canonicalize();
                CHECK(lhs == rhs);
            }
        }
    }
    CHECK(r.checks.front().rhs == 7 * 7 * 7);
    CHECK(verify(Complex{}, "EQ12", Q).holds());
}

TEST_CASE("arithmetic screen") {
    const auto m13 = p24_screen(2, 6, 13);
    CHECK_FALSE(m13.integral);
    CHECK_FALSE(m13.vertex_bound);
    CHECK_FALSE(m13.admissible());
    const auto m14 = p24_screen(2, 6, 14);
    CHECK(m14.admissible());
    CHECK(*m14.beta == 1);
    CHECK(m14.numerator == 56);
    CHECK(m14.denominator == 56);
}

TEST_CASE("relations") {
    CHECK(compare(1, Relation::Le, 2));
    CHECK_FALSE(compare(3, Relation::Le, 2));
    CHECK(compare(make_rational(1, 2), Relation::Eq, make_rational(2, 4)));
    CHECK(compare(2, Relation::Ge, 2));
    CHECK(to_string(Relation::Ge) == ">=");
    CHECK(theorem_ids().size() == 13);
}

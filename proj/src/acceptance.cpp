#include "tightcx/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "tightcx/corpus.hpp"
#include "tightcx/errors.hpp"
#include "tightcx/flips.hpp"
#include "tightcx/homology.hpp"
#include "tightcx/sigma_mu.hpp"
#include "tightcx/theorems.hpp"
#include "tightcx/tightness.hpp"

namespace tightcx {

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kF2 = FieldSpec::prime(2);
const FieldSpec kF3 = FieldSpec::prime(3);

// Collects failed assertions and informational notes of one criterion.
class Ledger {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok) failures_.push_back(what);
    }
    template <class A, class B>
    void equal(const A& got, const B& want, const std::string& what) {
        if (!(got == want)) failures_.push_back(what + ": got " + show(got) + ", want " + show(want));
    }
    void note(const std::string& s) { notes_.push_back(s); }
    bool ok() const { return failures_.empty(); }
    std::string detail() const {
        std::string s;
        for (const auto& f : failures_) s += (s.empty() ? "" : "; ") + f;
        for (const auto& n : notes_) s += (s.empty() ? "" : "; ") + n;
        return s;
    }

private:
    template <class T>
    static std::string show(const T& v) {
        if constexpr (std::is_same_v<T, std::vector<long>> || std::is_same_v<T, RationalVector> ||
                      std::is_same_v<T, std::vector<Integer>>) {
            return format_tuple(v);
        } else if constexpr (std::is_same_v<T, bool>) {
            return v ? "true" : "false";
        } else {
            std::ostringstream o;
            o << v;
            return o.str();
        }
    }
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

CorpusEntry entry(const std::string& name) {
    auto e = find_corpus_entry(name);
    if (!e) throw LookupError("corpus entry " + name + " not found");
    return *e;
}

// f_0..f_d.
std::vector<Integer> face_numbers(const Complex& x) {
    const auto f = f_vector(x);
    return {f.entries().begin() + 1, f.entries().end()};
}

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

RationalVector rats(const std::vector<long>& v) { return {v.begin(), v.end()}; }

void expect_theorem(Ledger& l, const TheoremReport& r) {
    l.expect(r.hypotheses_satisfied, r.id + " hypotheses");
    for (const auto& c : r.checks) l.expect(c.holds, r.id + " " + c.label);
    l.expect(!r.checks.empty(), r.id + " produced checks");
}

void sphere_battery(Ledger& l) {
    for (int d = 0; d <= 6; ++d) {
        const auto s = standard_sphere(d);
        const std::string tag = "S^" + std::to_string(d) + " ";
        std::vector<Integer> f;
        for (int i = 0; i <= d; ++i) f.push_back(binomial(d + 2, i + 1));
        l.equal(face_numbers(s), f, tag + "f");
        std::vector<Integer> g(static_cast<std::size_t>(d) + 2, 0);
        g[0] = 1;
        l.equal(g_vector(s).entries(), g, tag + "g");
        for (FieldSpec field : {kQ, kF2}) {
            const std::string ft = tag + field.name() + " ";
            std::vector<long> beta(static_cast<std::size_t>(d) + 1, 0);
            RationalVector sigma(static_cast<std::size_t>(d) + 1, 0);
            RationalVector mu(static_cast<std::size_t>(d) + 1, 0);
            if (d == 0) {
                // S^0 is two points: beta_0 = 2, the empty and full sets cancel in sigma_0.
                beta[0] = 2;
                mu[0] = 1;
            } else {
                beta[0] = beta[static_cast<std::size_t>(d)] = 1;
                sigma[0] = -1;
                sigma[static_cast<std::size_t>(d)] = 1;
                mu[0] = mu[static_cast<std::size_t>(d)] = 1;
            }
            l.equal(betti(s, field).betti, beta, ft + "beta");
            l.equal(sigma_vector(s, field), sigma, ft + "sigma");
            l.equal(mu_vector(s, field), mu, ft + "mu");
            const bool want = d > 0;
            l.equal(tight_mu(s, field).tight, want, ft + "tight by mu");
            l.equal(tight_direct(s, field).tight, want, ft + "tight by definition");
        }
    }
    l.note("S^0 is disconnected: beta = (2), sigma = (0), mu = (1), not tight; the stated pattern is checked for d = 1..6");
}

void torus(Ledger& l) {
    const auto x = entry("T2_7").complex;
    l.equal(face_numbers(x), ints({7, 21, 14}), "f");
    l.equal(g_vector(x).entries(), ints({1, 3, 6, -11}), "g");
    l.equal(betti(x, kQ).betti, std::vector<long>{1, 2, 1}, "beta_Q");
    const auto mu = mu_vector(x, kQ);
    l.equal(mu, rats({1, 2, 1}), "mu_Q by definition");
    l.equal(mu_via_relative(x, kQ), mu, "mu_Q by relative formula");
    l.expect(tight_direct(x, kQ).tight, "tight_direct over Q");
    l.expect(tight_mu(x, kQ).tight, "tight_mu over Q");
}

void rp2(Ledger& l) {
    const auto x = entry("RP2_6").complex;
    l.equal(mu_vector(x, kF2), rats({1, 1, 1}), "mu_F2");
    l.equal(betti(x, kF2).betti, std::vector<long>{1, 1, 1}, "beta_F2");
    l.expect(tight_mu(x, kF2).tight, "Z_2-tight by mu");
    l.expect(tight_direct(x, kF2).tight, "Z_2-tight by definition");
    const auto mu = mu_vector(x, kQ);
    const auto beta = betti(x, kQ).betti;
    l.equal(mu[2], Rational(1), "mu_2 over Q");
    l.equal(beta[2], 0L, "beta_2 over Q");
    l.expect(!tight_mu(x, kQ).tight, "not tight over Q by mu");
    const auto direct = tight_direct(x, kQ);
    l.expect(!direct.tight, "not tight over Q by definition");
    l.expect(direct.witness.has_value(), "failing witness emitted");
    if (direct.witness) {
        std::string a;
        for (const auto& v : direct.witness->subset) a += (a.empty() ? "" : ",") + v;
        l.note("witness A = {" + a + "}, j = " + std::to_string(direct.witness->degree));
        // The witness must really fail: H_j(X[A]) -> H_j(X) not injective.
        l.expect(!inclusion_injective(x, direct.witness->subset, direct.witness->degree, kQ),
                 "witness is a genuine failure");
    }
    const auto t23 = verify(x, "T2.3", kQ);
    expect_theorem(l, t23);
}

// Complete graph on m vertices plus random triangles and tetrahedra.
Complex random_two_neighbourly(std::mt19937_64& rng) {
    const int m = 5 + static_cast<int>(rng() % 5);
    std::bernoulli_distribution tri(0.2 + 0.1 * static_cast<double>(rng() % 5));
    std::bernoulli_distribution tet(0.05);
    std::vector<Mask> facets;
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) facets.push_back((Mask{1} << a) | (Mask{1} << b));
    }
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            for (int c = b + 1; c < m; ++c) {
                const Mask t = (Mask{1} << a) | (Mask{1} << b) | (Mask{1} << c);
                if (tri(rng)) facets.push_back(t);
                for (int e = c + 1; e < m; ++e) {
                    if (tet(rng)) facets.push_back(t | (Mask{1} << e));
                }
            }
        }
    }
    std::vector<std::string> labels;
    for (int i = 1; i <= m; ++i) labels.push_back(std::to_string(i));
    return Complex::from_masks(labels, facets);
}

void equivalence(Ledger& l) {
    std::vector<std::pair<std::string, Complex>> cases;
    for (const auto& e : corpus()) {
        if (e.complex.num_vertices() <= 12) cases.emplace_back(e.name, e.complex);
    }
    std::mt19937_64 rng(20240601);
    for (int i = 0; i < 20; ++i) cases.emplace_back("random#" + std::to_string(i), random_two_neighbourly(rng));
    int tight_count = 0;
    for (const auto& [name, x] : cases) {
        for (FieldSpec field : {kQ, kF2}) {
            const bool a = tight_direct(x, field).tight;
            const bool b = tight_mu(x, field).tight;
            l.equal(a, b, name + " over " + field.name());
            tight_count += a ? 1 : 0;
        }
    }
    l.note(std::to_string(cases.size()) + " complexes, " + std::to_string(tight_count) + " tight decisions");
}

void flip_moves(Ledger& l) {
    std::mt19937_64 rng(7);
    int applied = 0;
    for (int d = 2; d <= 5; ++d) {
        Complex x = standard_sphere(d);
        for (int step = 0; step < 50; ++step) {
            const auto e = enumerate_moves(x);
            std::vector<BistellarMove> options = e.proper;
            if (x.num_vertices() < 20) {
                for (const auto& site : e.zero_move_sites) options.push_back({site, {fresh_label(x)}});
            }
            if (options.empty()) {
                l.expect(false, "no move available in dimension " + std::to_string(d));
                break;
            }
            const auto m = options[rng() % options.size()];
            const auto y = apply_move(x, m);
            const int t = m.index();
            std::vector<Integer> delta(static_cast<std::size_t>(d) + 2, 0);
            delta[static_cast<std::size_t>(t) + 1] += 1;
            delta[static_cast<std::size_t>(d - t) + 1] -= 1;
            const auto gx = g_vector(x).entries();
            const auto gy = g_vector(y).entries();
            std::vector<Integer> got(gx.size());
            for (std::size_t i = 0; i < gx.size(); ++i) got[i] = gy[i] - gx[i];
            const std::string tag = "d=" + std::to_string(d) + " step " + std::to_string(step) + " t=" + std::to_string(t);
            l.equal(got, delta, tag + " g delta");
            l.expect(is_valid_move(y, m.reversed()), tag + " reverse move valid");
            if (is_valid_move(y, m.reversed())) l.expect(apply_move(y, m.reversed()) == x, tag + " roundtrip");
            x = y;
            ++applied;
        }
    }
    l.equal(applied, 200, "moves applied");
}

void p19(Ledger& l) {
    const std::vector<std::pair<int, int>> grid{{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 2}, {5, 2}};
    TheoremParams params;
    params.sweep.cap = 14;
    int runs = 0;
    for (const auto& [d, k] : grid) {
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const int moves = 14 - (d + 2);
            const auto cert = random_stellated_sphere(d, k, moves, seed);
            params.k = k;
            params.certificate = cert;
            const auto r = verify(cert.end, "P19", kQ, params);
            const std::string tag = "(d,k)=(" + std::to_string(d) + "," + std::to_string(k) + ") seed " +
                                    std::to_string(seed) + " ";
            l.expect(r.hypotheses_satisfied, tag + "hypotheses");
            for (const auto& c : r.checks) l.expect(c.holds, tag + c.label);
            ++runs;
        }
    }
    l.note(std::to_string(runs) + " stellated spheres with at most 14 vertices");
}

void link_identity(Ledger& l) {
    int n = 0;
    for (const auto& e : corpus()) {
        const auto r = verify(e.complex, "L4", kQ);
        for (const auto& c : r.checks) l.expect(c.holds, e.name + " " + c.label);
        l.expect(r.hypotheses_satisfied && !r.checks.empty(), e.name + " evaluated");
        ++n;
    }
    // Torus, j = 1: the link g_1 values sum to 21 = 3*3 + 2*6.
    const auto x = entry("T2_7").complex;
    Integer sum = 0;
    for (int v = 0; v < x.num_vertices(); ++v) sum += g_from_f(f_vector(vertex_link(x, v)), 1).at(1);
    l.equal(sum, Integer(21), "torus j=1 link sum");
    l.note(std::to_string(n) + " corpus members");
}

void binomial_identity(Ledger& l) {
    const auto r = verify_eq12(12);
    expect_theorem(l, r);
    l.equal(r.checks.empty() ? Rational(0) : r.checks.front().rhs, Rational(13 * 13 * 13), "grid points");
}

void k4(Ledger& l) {
    const auto x = entry("K4_11").complex;
    l.expect(is_neighbourly(x, 2), "2-neighbourly");
    l.equal(betti(x, kF2).betti[1], 1L, "beta_1(F2)");
    l.equal(face_numbers(x), ints({11, 55, 110, 110, 44}), "f");
    l.equal(binomial(6, 2), Integer(15), "C(6,2)");
    const auto r = verify(x, "P23", kF2);
    expect_theorem(l, r);
    std::map<std::string, std::string> values(r.values.begin(), r.values.end());
    l.equal(values["equality in (a)"], std::string("all j"), "P23(a) equality");
    l.equal(values["equality in (b)"], std::string("yes"), "P23(b) equality");
    l.equal(values["W_1 membership"], std::string("yes"), "W_1(4) membership by link reductions");
    l.expect(tight_mu(x, kQ).tight, "tight over Q by mu");
}

void k3(Ledger& l) {
    const auto x = entry("K3_9").complex;
    const long n = x.num_vertices();
    const Rational required = make_rational(binomial(n - 1 - 3, 2), binomial(5, 2));
    l.equal(required, Rational(1), "P25(b) required beta_1");
    l.equal(betti(x, kF2).betti[1], 1L, "beta_1(F2)");
    l.expect(tight_mu(x, kF2).tight, "Z_2-tight by mu");
    TheoremParams params;
    params.k = 1;
    expect_theorem(l, verify(x, "P25", kF2, params));
}

void cp2(Ledger& l) {
    const auto x = entry("CP2_9").complex;
    l.equal(face_numbers(x), ints({9, 36, 84, 90, 36}), "f");
    l.equal(neighbourliness(x), 3, "neighbourliness");
    for (FieldSpec field : {kQ, kF2, kF3}) {
        l.equal(betti(x, field).betti, std::vector<long>{1, 0, 1, 0, 1}, "beta over " + field.name());
    }
    const auto r = verify(x, "L10", kQ);
    expect_theorem(l, r);
    l.expect(tight_direct(x, kQ).tight, "tight_direct over Q");
}

void p24(Ledger& l) {
    const auto m13 = p24_screen(2, 6, 13);
    const auto m14 = p24_screen(2, 6, 14);
    l.expect(!m13.admissible(), "m = 13 rejected");
    l.expect(!m13.integral && !m13.vertex_bound, "m = 13 fails both conditions");
    l.expect(m14.admissible(), "m = 14 admitted");
    l.expect(m14.beta && *m14.beta == 1, "m = 14 gives beta = 1");
}

struct Criterion {
    int id;
    const char* title;
    double limit;
    std::function<void(Ledger&)> body;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all{
        {1, "standard spheres d = 0..6", 10, sphere_battery},
        {2, "7-vertex torus", 5, torus},
        {3, "6-vertex RP^2", 5, rp2},
        {4, "direct vs mu tightness", 120, equivalence},
        {5, "g-vector deltas of 200 random moves", 30, flip_moves},
        {6, "stellated sphere sigma relations", 300, p19},
        {7, "link g-vector identity on the corpus", 10, link_identity},
        {8, "binomial identity on a 13^3 grid", 1, binomial_identity},
        {9, "K^4_11", 600, k4},
        {10, "K^3_9", 120, k3},
        {11, "9-vertex CP^2", 600, cp2},
        {12, "arithmetic screen k=2, d=6", 1, p24},
    };
    return all;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::vector<int>& which, std::ostream* log) {
    std::vector<CriterionResult> out;
    for (const auto& c : criteria()) {
        if (!which.empty() && std::find(which.begin(), which.end(), c.id) == which.end()) continue;
        CriterionResult r;
        r.id = c.id;
        r.title = c.title;
        r.limit_seconds = c.limit;
        Ledger ledger;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(ledger);
        } catch (const std::exception& e) {
            ledger.expect(false, std::string("exception: ") + e.what());
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        ledger.expect(r.seconds < r.limit_seconds, "time limit exceeded");
        r.passed = ledger.ok();
        r.detail = ledger.detail();
        if (log) *log << format_result(r) << std::endl;
        out.push_back(std::move(r));
    }
    return out;
}

std::string format_result(const CriterionResult& r) {
    char time[64];
    std::snprintf(time, sizeof time, "(%.2f s / %g s)", r.seconds, r.limit_seconds);
    std::string s = std::string(r.passed ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.title + " " + time;
    if (!r.detail.empty()) s += ": " + r.detail;
    return s;
}

}  // namespace tightcx

#include "tightcx/theorems.hpp"

#include <algorithm>

#include "tightcx/errors.hpp"
#include "tightcx/membership.hpp"
#include "tightcx/tightness.hpp"

namespace tightcx {

namespace {

template <typename T>
Rational q(const T& z) {
    return Rational(z);
}
Rational ratio(const Integer& a, const Integer& b) { return make_rational(a, b); }

class Builder {
public:
    explicit Builder(std::string id) { r_.id = std::move(id); }

    // Records a hypothesis; returns ok so callers can chain early exits.
    bool hypothesis(bool ok, const std::string& text, bool asserted = false) {
        r_.hypotheses.push_back((ok ? (asserted ? "asserted: " : "checked: ") : "failed: ") + text);
        return ok;
    }
    void check(std::string label, Rational lhs, Relation rel, Rational rhs) {
        const bool holds = compare(lhs, rel, rhs);
        r_.checks.push_back({std::move(label), std::move(lhs), std::move(rhs), rel, holds});
    }
    void value(std::string name, std::string v) { r_.values.emplace_back(std::move(name), std::move(v)); }
    TheoremReport done(bool satisfied) {
        r_.hypotheses_satisfied = satisfied;
        if (!satisfied) r_.checks.clear();
        return std::move(r_);
    }

private:
    TheoremReport r_;
};

std::string idx(const char* name, int i) { return std::string(name) + "_" + std::to_string(i); }

bool is_standard_sphere(const Complex& x) {
    const int d = x.dim();
    return d >= 0 && x.num_vertices() == d + 2 && x.facets().size() == static_cast<std::size_t>(d) + 2;
}

bool closed_connected(Builder& b, const Complex& m) {
    const auto s = structure_report(m);
    return b.hypothesis(s.closed && s.connected, "connected closed complex");
}

bool in_class(Builder& b, const Complex& m, int k, ClassKind kind, std::size_t budget) {
    MembershipVerdict v;
    try {
        v = class_membership(m, k, kind, budget);
    } catch (const Error& e) {
        return b.hypothesis(false, "membership in " + to_string(kind) + "_" + std::to_string(k) + ": " + e.what());
    }
    const std::string what = "member of " + to_string(kind) + "_" + std::to_string(k) + "(" +
                             std::to_string(m.dim()) + ")";
    if (v.verdict == Verdict::Yes) return b.hypothesis(true, what + " (every vertex link certified)");
    return b.hypothesis(false, what + ": " + to_string(v.verdict) + (v.reason.empty() ? "" : ", " + v.reason));
}

bool neighbourly(Builder& b, const Complex& m, int l) {
    return b.hypothesis(is_neighbourly(m, l), std::to_string(l) + "-neighbourly");
}

bool orientable_closed_manifold(Builder& b, const Complex& m, FieldSpec field) {
    if (!b.hypothesis(is_homology_manifold(m, field), "closed " + field.name() + "-homology manifold "
                                                      "(links are homology spheres)")) {
        return false;
    }
    b.hypothesis(true, "triangulates a closed manifold", true);
    return closed_connected(b, m) && b.hypothesis(betti(m, field).betti.back() == 1, field.name() + "-orientable");
}

// sum_{i=lo}^{l} (-1)^{l-i} v_i
template <typename V>
Rational alternating(const V& v, int lo, int l) {
    Rational s = 0;
    for (int i = lo; i <= l; ++i) {
        const Rational term = q(v[static_cast<std::size_t>(i)]);
        s += ((l - i) % 2 == 0) ? term : Rational(-term);
    }
    return s;
}

TheoremReport verify_p19(const Complex& s, FieldSpec field, const TheoremParams& p) {
    Builder b("P19");
    const int k = p.k.value_or(1);
    const int d = s.dim();
    bool ok = b.hypothesis(k >= 1, "k >= 1") && b.hypothesis(d >= 2 * k - 1, "d >= 2k-1");
    if (ok && p.certificate) {
        const auto& c = *p.certificate;
        ok = b.hypothesis(certificate_valid(c), "certificate replays") &&
             b.hypothesis(is_standard_sphere(c.start), "certificate starts at a standard sphere") &&
             b.hypothesis(c.end == s, "certificate ends at the input") &&
             b.hypothesis(c.max_index < k, "every move has index < k");
    } else if (ok) {
        try {
            const auto r = stellated_reduction(s, k, p.budget);
            ok = b.hypothesis(r.verdict == Verdict::Yes,
                              std::to_string(k) + "-stellated by reduction search (" + to_string(r.verdict) + ")");
        } catch (const Error& e) {
            ok = b.hypothesis(false, std::string("k-stellated: ") + e.what());
        }
    }
    if (!ok) return b.done(false);

    const auto sigma = sigma_vector(s, field, p.sweep);
    const auto g = g_vector(s);
    const long m = s.num_vertices();
    b.value("sigma", format_tuple(sigma));
    b.value("g", format_tuple(g.entries()));
    const Rational scale = make_rational(Integer(m + 1), Integer(d + 3));
    auto rhs = [&](int l) -> Rational {
        Rational t = 0;
        for (int i = 0; i <= l + 1; ++i) {
            const Rational term = ratio(g.at(i), binomial(d + 2, i));
            t += ((l + 1 - i) % 2 == 0) ? term : Rational(-term);
        }
        return scale * t;
    };
    for (int i = k; i <= d - k - 1; ++i) b.check("(a) " + idx("sigma", i), sigma[static_cast<std::size_t>(i)], Relation::Eq, 0);
    for (int l = 0; l <= k - 2; ++l) b.check("(b) l=" + std::to_string(l), alternating(sigma, 0, l), Relation::Le, rhs(l));
    for (int l = k - 1; l <= d - k - 1; ++l) {
        if (l < 0) continue;
        b.check("(c) l=" + std::to_string(l), alternating(sigma, 0, l), Relation::Eq, rhs(l));
    }
    return b.done(true);
}

TheoremReport verify_p20(const Complex& m, FieldSpec field, const TheoremParams& p) {
    Builder b("P20");
    const int k = p.k.value_or(1);
    const int d = m.dim();
    const bool ok = b.hypothesis(d >= 2 * k && k >= 1, "d >= 2k >= 2") && closed_connected(b, m) &&
                    neighbourly(b, m, 2) && in_class(b, m, k, ClassKind::W, p.budget);
    if (!ok) return b.done(false);
    const auto mu = mu_vector(m, field, p.sweep);
    const auto g = g_vector(m);
    b.value("mu", format_tuple(mu));
    b.value("g", format_tuple(g.entries()));
    for (int i = k + 1; i <= d - k - 1; ++i) b.check("(a) " + idx("mu", i), mu[static_cast<std::size_t>(i)], Relation::Eq, 0);
    for (int l = 1; l <= d - k - 1; ++l) {
        const Rational rhs = ratio(g.at(l + 1), binomial(d + 2, l + 1));
        if (l <= k - 1) b.check("(b) l=" + std::to_string(l), alternating(mu, 1, l), Relation::Le, rhs);
        if (l >= k) b.check("(c) l=" + std::to_string(l), alternating(mu, 1, l), Relation::Eq, rhs);
    }
    return b.done(true);
}

TheoremReport verify_p21(const Complex& m, FieldSpec field, const TheoremParams& p) {
    Builder b("P21");
    const int k = p.k.value_or(1);
    const int d = m.dim();
    const bool ok = b.hypothesis(k >= 0, "k >= 0") && closed_connected(b, m) && neighbourly(b, m, 2) &&
                    in_class(b, m, k, ClassKind::W, p.budget);
    if (!ok) return b.done(false);
    const auto beta = betti(m, field).betti;
    const auto g = g_vector(m);
    b.value("beta", format_tuple(beta));
    b.value("g", format_tuple(g.entries()));
    auto lhs = [&](int l) { return q(g.at(l + 1)); };
    auto rhs = [&](int l) -> Rational { return q(binomial(d + 2, l + 1)) * alternating(beta, 1, l); };
    if (d == 2 * k) {
        for (int l = 1; l <= k - 1; ++l) b.check("(a) l=" + std::to_string(l), lhs(l), Relation::Ge, rhs(l));
    }
    if (d >= 2 * k + 1) {
        for (int l = 1; l <= k; ++l) b.check("(b) l=" + std::to_string(l), lhs(l), Relation::Ge, rhs(l));
    }
    if (d >= 2 * k + 2) {
        for (int l = k; l <= d - k - 1; ++l) {
            if (l >= 1) b.check("(c) l=" + std::to_string(l), lhs(l), Relation::Eq, rhs(l));
        }
        for (int i = k + 1; i <= d - k - 1; ++i) b.check("(d) " + idx("beta", i), beta[static_cast<std::size_t>(i)], Relation::Eq, 0);
    }
    return b.done(true);
}

TheoremReport verify_p23(const Complex& m, const TheoremParams& p) {
    Builder b("P23");
    const int d = m.dim();
    const FieldSpec f2 = FieldSpec::prime(2);
    const bool ok = b.hypothesis(d >= 3, "d >= 3") && closed_connected(b, m) &&
                    b.hypothesis(is_homology_manifold(m, f2), "closed F2-homology manifold") &&
                    b.hypothesis(true, "triangulates a closed manifold", true);
    if (!ok) return b.done(false);
    const long beta1 = betti(m, f2).betti[1];
    const auto f = f_vector(m);
    const Integer f0 = f.at(0);
    b.value("beta_1(F2)", std::to_string(beta1));
    b.value("f", format_tuple(std::vector<Integer>(f.entries().begin() + 1, f.entries().end())));
    bool all_equal_a = true;
    for (int j = 1; j <= d; ++j) {
        const Integer bound = j < d ? Integer(binomial(d + 1, j) * f0 + j * binomial(d + 2, j + 1) * (beta1 - 1))
                                    : Integer(Integer(d) * f0 + Integer((d - 1) * (d + 2)) * (beta1 - 1));
        b.check("(a) " + idx("f", j), q(f.at(j)), Relation::Ge, q(bound));
        all_equal_a = all_equal_a && f.at(j) == bound;
    }
    const Integer lhs_b = binomial(mpz_class(f0 - d - 1).get_si(), 2);
    const Integer rhs_b = binomial(d + 2, 2) * beta1;
    b.check("(b) C(f_0-d-1, 2) vs C(d+2, 2) beta_1", q(lhs_b), Relation::Ge, q(rhs_b));
    b.value("equality in (a)", all_equal_a ? "all j" : "not for all j");
    b.value("equality in (b)", lhs_b == rhs_b ? "yes" : "no");

    if (d >= 4) {
        // Equality cases: (a) exactly for W_1(d), (b) exactly for 2-neighbourly members.
        const auto v = class_membership(m, 1, ClassKind::W, p.budget);
        if (v.verdict == Verdict::Unknown) {
            b.value("W_1 membership", "unknown within budget; equality cases not evaluated");
        } else {
            const bool member = v.verdict == Verdict::Yes;
            b.value("W_1 membership", member ? "yes" : "no");
            b.check("equality in (a) <=> member of W_1", all_equal_a ? 1 : 0, Relation::Eq, member ? 1 : 0);
            const bool nb = is_neighbourly(m, 2);
            b.check("equality in (b) <=> 2-neighbourly member of W_1", lhs_b == rhs_b ? 1 : 0, Relation::Eq,
                    (member && nb) ? 1 : 0);
        }
    }
    return b.done(true);
}

TheoremReport verify_p24(const Complex& m, const TheoremParams& p) {
    Builder b("P24");
    const int k = p.k.value_or(2);
    const int d = m.dim();
    const bool ok = b.hypothesis(k >= 2 && d >= 2 * k + 2, "k >= 2 and d >= 2k+2") && closed_connected(b, m) &&
                    neighbourly(b, m, k + 1) && b.hypothesis(!is_standard_sphere(m), "not the standard sphere") &&
                    in_class(b, m, k, ClassKind::W, p.budget);
    if (!ok) return b.done(false);
    const auto screen = p24_screen(k, d, m.num_vertices());
    b.check("C(d+2,k+1) divides C(m+k-d-2,k+1)", q(Integer(screen.numerator % screen.denominator)), Relation::Eq, 0);
    b.check("m >= 2d+4-k", m.num_vertices(), Relation::Ge, 2 * d + 4 - k);
    const Integer beta = screen.numerator / screen.denominator;
    b.value("beta", to_string(beta));
    for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)}) {
        const auto bt = betti(m, f).betti;
        for (int i = 0; i <= d; ++i) {
            Integer expected = (i == 0 || i == d) ? 1 : ((i == k || i == d - k) ? beta : 0);
            b.check(idx("beta", i) + " over " + f.name(), bt[static_cast<std::size_t>(i)], Relation::Eq, q(expected));
        }
    }
    return b.done(true);
}

TheoremReport verify_p25(const Complex& m, FieldSpec field, const TheoremParams& p) {
    Builder b("P25");
    const int k = p.k.value_or(1);
    const int d = m.dim();
    const bool ok = b.hypothesis(k >= 0 && k <= d, "0 <= k <= d") && closed_connected(b, m) &&
                    neighbourly(b, m, k + 1) && in_class(b, m, k, ClassKind::W, p.budget) &&
                    b.hypothesis(betti(m, field).betti.back() == 1, field.name() + "-orientable");
    if (!ok) return b.done(false);
    const auto t = tight_mu(m, field, p.sweep);
    b.value("mu", format_tuple(t.mu));
    b.value("beta", format_tuple(t.betti.betti));
    if (d != 2 * k + 1) {
        b.check("(a) tight", t.tight ? 1 : 0, Relation::Eq, 1);
    } else {
        const long n = m.num_vertices();
        const Rational required = ratio(binomial(n - k - 3, k + 1), binomial(2 * k + 3, k + 1));
        const long beta_k = t.betti.betti[static_cast<std::size_t>(k)];
        b.value("required " + idx("beta", k), to_string(required));
        b.value(idx("beta", k), std::to_string(beta_k));
        b.check("(b) tight <=> beta_k = C(n-k-3,k+1)/C(2k+3,k+1)", t.tight ? 1 : 0, Relation::Eq,
                Rational(beta_k) == required ? 1 : 0);
    }
    return b.done(true);
}

TheoremReport verify_l22(const Complex& s, FieldSpec field, const TheoremParams& p) {
    Builder b("L2.2");
    const int d = s.dim();
    const bool ok = b.hypothesis(d >= 2, "d >= 2") &&
                    b.hypothesis(is_homology_manifold(s, field) && is_homology_sphere(s, field),
                                 field.name() + "-homology sphere");
    if (!ok) return b.done(false);
    const auto sigma = sigma_vector(s, field, p.sweep);
    b.value("sigma", format_tuple(sigma));
    auto at = [&](int i) { return sigma[static_cast<std::size_t>(i)]; };
    for (int i = 1; i < d - 1; ++i) b.check(idx("sigma", d - 1 - i) + " = " + idx("sigma", i), at(d - 1 - i), Relation::Eq, at(i));
    b.check(idx("sigma", d - 1) + " = sigma_0 + 1", at(d - 1), Relation::Eq, at(0) + 1);
    b.check(idx("sigma", d) + " = 1", at(d), Relation::Eq, 1);
    return b.done(true);
}

TheoremReport verify_t23(const Complex& m, FieldSpec field, const TheoremParams& p) {
    Builder b("T2.3");
    const bool ok = b.hypothesis(is_homology_manifold(m, field), "closed " + field.name() + "-homology manifold");
    if (!ok) return b.done(false);
    const auto mu = mu_vector(m, field, p.sweep);
    b.value("mu", format_tuple(mu));
    const int d = m.dim();
    for (int i = 0; i <= d; ++i) {
        b.check(idx("mu", d - i) + " = " + idx("mu", i), mu[static_cast<std::size_t>(d - i)], Relation::Eq,
                mu[static_cast<std::size_t>(i)]);
    }
    return b.done(true);
}

TheoremReport verify_l4(const Complex& x) {
    Builder b("L4");
    const int d = x.dim();
    if (!b.hypothesis(d >= 0, "nonempty complex")) return b.done(false);
    const auto g = g_vector(x);
    std::vector<Integer> sums(static_cast<std::size_t>(d) + 1, 0);
    for (int v = 0; v < x.num_vertices(); ++v) {
        const auto gl = g_from_f(f_vector(vertex_link(x, v)), d - 1);
        for (int j = 0; j <= d; ++j) sums[static_cast<std::size_t>(j)] += gl.at(j);
    }
    for (int j = 0; j <= d; ++j) {
        const Integer rhs = Integer(d + 2 - j) * g.at(j) + Integer(j + 1) * g.at(j + 1);
        b.check("j=" + std::to_string(j), q(sums[static_cast<std::size_t>(j)]), Relation::Eq, q(rhs));
    }
    return b.done(true);
}

TheoremReport verify_l9(const Complex& x, FieldSpec field, const TheoremParams& p) {
    Builder b("L9");
    const int l = p.l.value_or(neighbourliness(x) - 1);
    const bool ok = b.hypothesis(l >= 1, "l >= 1") && neighbourly(b, x, l + 1);
    if (!ok) return b.done(false);
    b.value("l", std::to_string(l));
    const auto beta = betti(x, field).betti;
    const auto mu = mu_vector(x, field, p.sweep);
    for (int i = 1; i <= std::min(l - 1, x.dim()); ++i) {
        b.check(idx("beta", i), beta[static_cast<std::size_t>(i)], Relation::Eq, 0);
        b.check(idx("mu", i), mu[static_cast<std::size_t>(i)], Relation::Eq, 0);
    }
    return b.done(true);
}

TheoremReport verify_l10(const Complex& m, FieldSpec field, const TheoremParams& p) {
    Builder b("L10");
    const int d = m.dim();
    const int k = d / 2;
    const bool ok = b.hypothesis(d >= 2 && d % 2 == 0, "even dimension 2k with k >= 1") &&
                    neighbourly(b, m, k + 1) && orientable_closed_manifold(b, m, field);
    if (!ok) return b.done(false);
    const auto t = tight_mu(m, field, p.sweep);
    b.value("mu", format_tuple(t.mu));
    b.value("beta", format_tuple(t.betti.betti));
    b.check("tight", t.tight ? 1 : 0, Relation::Eq, 1);
    return b.done(true);
}

TheoremReport verify_euler_k(const Complex& m, const TheoremParams& p) {
    Builder b("EULER-K");
    const int d = m.dim();
    const int k = p.k.value_or(1);
    const bool ok = b.hypothesis(d % 2 == 0 && d >= 2 * k && k >= 0, "even d >= 2k") && closed_connected(b, m) &&
                    in_class(b, m, k, ClassKind::K, p.budget);
    if (!ok) return b.done(false);
    const Integer chi = euler_characteristic(m);
    const auto g = g_vector(m);
    const Integer sign = (k % 2 == 0) ? 1 : -1;
    b.value("chi", to_string(chi));
    b.check("(-1)^k C(d+2,k+1)(chi-2) = 2 g_{k+1}", q(sign * binomial(d + 2, k + 1) * (chi - 2)), Relation::Eq,
            q(2 * g.at(k + 1)));
    return b.done(true);
}

}  // namespace

std::string to_string(Relation r) {
    switch (r) {
        case Relation::Le: return "<=";
        case Relation::Eq: return "=";
        case Relation::Ge: return ">=";
    }
    return "=";
}

bool compare(const Rational& lhs, Relation r, const Rational& rhs) {
    switch (r) {
        case Relation::Le: return lhs <= rhs;
        case Relation::Eq: return lhs == rhs;
        case Relation::Ge: return lhs >= rhs;
    }
    return false;
}

bool TheoremReport::holds() const {
    return hypotheses_satisfied &&
           std::all_of(checks.begin(), checks.end(), [](const TheoremCheck& c) { return c.holds; });
}

const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids{"P19", "P20", "P21", "P23", "P24",     "P25", "L2.2",
                                              "T2.3", "L4",  "L9",  "L10", "EULER-K", "EQ12"};
    return ids;
}

TheoremReport verify(const Complex& m, std::string_view id, FieldSpec field, const TheoremParams& params) {
    if (id == "P19") return verify_p19(m, field, params);
    if (id == "P20") return verify_p20(m, field, params);
    if (id == "P21") return verify_p21(m, field, params);
    if (id == "P23") return verify_p23(m, params);
    if (id == "P24") return verify_p24(m, params);
    if (id == "P25") return verify_p25(m, field, params);
    if (id == "L2.2") return verify_l22(m, field, params);
    if (id == "T2.3") return verify_t23(m, field, params);
    if (id == "L4") return verify_l4(m);
    if (id == "L9") return verify_l9(m, field, params);
    if (id == "L10") return verify_l10(m, field, params);
    if (id == "EULER-K") return verify_euler_k(m, params);
    if (id == "EQ12") return verify_eq12(params.grid);
    std::string known;
    for (const auto& s : theorem_ids()) known += (known.empty() ? "" : ", ") + s;
    throw UnknownTheoremError("unknown theorem '" + std::string(id) + "' (known: " + known + ")");
}

TheoremReport verify_eq12(int n) {
    Builder b("EQ12");
    if (!b.hypothesis(n >= 0, "grid bound n >= 0")) return b.done(false);
    long total = 0;
    long passing = 0;
    for (int p = 0; p <= n; ++p) {
        for (int qq = 0; qq <= n; ++qq) {
            for (int r = 0; r <= n; ++r) {
                Rational lhs = 0;
                for (int i = 0; i <= p; ++i) lhs += ratio(binomial(p, i), binomial(p + qq + r, r + i));
                const Rational rhs = make_rational(Integer(p + qq + r + 1), Integer(qq + r + 1)) /
                                     Rational(binomial(qq + r, r));
                ++total;
                if (lhs == rhs) ++passing;
            }
        }
    }
    b.value("grid", "0 <= p, q, r <= " + std::to_string(n));
    b.check("grid points where the identity holds", passing, Relation::Eq, total);
    return b.done(true);
}

P24Screen p24_screen(int k, int d, int m) {
    P24Screen s;
    s.numerator = binomial(m + k - d - 2, k + 1);
    s.denominator = binomial(d + 2, k + 1);
    s.integral = s.denominator != 0 && s.numerator % s.denominator == 0;
    s.vertex_bound = m >= 2 * d + 4 - k;
    if (s.integral && s.numerator > 0) s.beta = s.numerator / s.denominator;
    return s;
}

}  // namespace tightcx

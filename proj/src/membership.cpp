#include "tightcx/membership.hpp"

#include <algorithm>

#include "tightcx/errors.hpp"
#include "tightcx/parallel.hpp"

namespace tightcx {

namespace {

// Codimension-one intersections of f with the earlier facets, and whether
// every intersection lies in one of them.
bool shelling_step_ok(Mask f, const std::vector<Mask>& earlier) {
    if (earlier.empty()) return true;
    const int ridge = popcount(f) - 1;
    std::vector<Mask> ridges;
    for (Mask g : earlier) {
        const Mask c = f & g;
        if (popcount(c) == ridge) ridges.push_back(c);
    }
    if (ridges.empty()) return false;
    for (Mask g : earlier) {
        const Mask c = f & g;
        if (!std::any_of(ridges.begin(), ridges.end(), [c](Mask r) { return is_subset(c, r); })) return false;
    }
    return true;
}

}  // namespace

bool k_stacked_ball_check(const Complex& ball, int k) {
    const auto ridges = boundary_ridges(ball);
    if (ridges.empty()) throw StructureError("a ball candidate needs a nonempty boundary");
    if (!structure_report(ball).weak_pseudomanifold) throw StructureError("not a weak pseudomanifold");
    const int top = stacked_boundary_dim(ball.dim(), k);
    for (int i = 0; i <= top; ++i) {
        for (Mask f : ball.faces(i)) {
            if (!std::any_of(ridges.begin(), ridges.end(), [f](Mask r) { return is_subset(f, r); })) return false;
        }
    }
    return true;
}

bool k_stacked_sphere_check(const Complex& sphere, int k, const Complex& ball) {
    if (ball.dim() != sphere.dim() + 1) {
        throw PreconditionError("witness ball has dimension " + std::to_string(ball.dim()) + ", expected " +
                                std::to_string(sphere.dim() + 1));
    }
    if (!is_pure(ball)) return false;
    const auto s = structure_report(ball);
    if (!s.weak_pseudomanifold) return false;
    const Complex bd = boundary_complex(ball);
    if (!(bd == sphere)) return false;
    return k_stacked_ball_check(ball, k);
}

bool is_shelling(const Complex& ball, const std::vector<Mask>& order) {
    std::vector<Mask> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != ball.facets() || !is_pure(ball)) return false;
    std::vector<Mask> earlier;
    for (Mask f : order) {
        if (!shelling_step_ok(f, earlier)) return false;
        earlier.push_back(f);
    }
    return true;
}

ShellingResult shelling_search(const Complex& ball, std::size_t budget) {
    ShellingResult result;
    if (!is_pure(ball)) {
        result.verdict = Verdict::No;
        return result;
    }
    const auto& facets = ball.facets();
    const std::size_t n = facets.size();
    std::vector<bool> used(n, false);
    std::vector<Mask> order;
    bool exhausted_budget = false;

    auto dfs = [&](auto&& self) -> bool {
        if (order.size() == n) return true;
        for (std::size_t i = 0; i < n; ++i) {
            if (used[i] || !shelling_step_ok(facets[i], order)) continue;
            if (result.states >= budget) {
                exhausted_budget = true;
                return false;
            }
            ++result.states;
            used[i] = true;
            order.push_back(facets[i]);
            if (self(self)) return true;
            order.pop_back();
            used[i] = false;
            if (exhausted_budget) return false;
        }
        return false;
    };
    if (dfs(dfs)) {
        result.verdict = Verdict::Yes;
        result.order = order;
    } else {
        result.verdict = exhausted_budget ? Verdict::Unknown : Verdict::No;
    }
    return result;
}

StackedBall stacked_ball_from_certificate(const FlipCertificate& forward) {
    const Complex& start = forward.start;
    const int d = start.dim();
    if (d < 0 || start.num_vertices() != d + 2 || start.facets().size() != static_cast<std::size_t>(d) + 2) {
        throw PreconditionError("the certificate must start at a standard sphere");
    }
    std::vector<std::vector<std::string>> pieces{start.labels()};
    for (const auto& m : forward.moves) {
        std::vector<std::string> f = m.alpha;
        f.insert(f.end(), m.beta.begin(), m.beta.end());
        pieces.push_back(std::move(f));
    }
    StackedBall out;
    out.ball = Complex::from_facets(pieces);
    for (const auto& p : pieces) out.shelling.push_back(out.ball.mask_of(p));
    return out;
}

std::string to_string(ClassKind c) { return c == ClassKind::W ? "W" : "K"; }

MembershipVerdict class_membership(const Complex& m, int k, ClassKind kind, std::size_t budget,
                                   const std::map<std::string, Complex>& witnesses) {
    const auto s = structure_report(m);
    if (!s.closed || !s.connected) throw HypothesisError("class membership needs a connected closed complex");
    const int d = m.dim();
    if (k < 0 || k > d) throw PreconditionError("k must satisfy 0 <= k <= d");

    const std::size_t n = static_cast<std::size_t>(m.num_vertices());
    MembershipVerdict out;
    out.links.resize(n);
    std::vector<std::size_t> spent(n, 0);

    parallel_chunks(n, n, [&](std::size_t begin, std::size_t end, std::size_t) {
        for (std::size_t v = begin; v < end; ++v) {
            LinkCertificate& lc = out.links[v];
            lc.vertex = m.labels()[v];
            const Complex link = vertex_link(m, static_cast<int>(v));

            if (kind == ClassKind::K) {
                if (auto it = witnesses.find(lc.vertex); it != witnesses.end()) {
                    lc.ball = it->second;
                    const bool ok = k_stacked_sphere_check(link, k, it->second);
                    lc.verdict = ok ? Verdict::Yes : Verdict::Unknown;
                    if (!ok) lc.reason = "supplied witness is not a k-stacked ball bounded by the link";
                    continue;
                }
            }

            ReductionResult r;
            try {
                r = stellated_reduction(link, k, budget);
            } catch (const StructureError& e) {
                lc.verdict = Verdict::No;
                lc.reason = std::string("link is not a sphere: ") + e.what();
                continue;
            }
            spent[v] = r.states;

            if (kind == ClassKind::W) {
                lc.verdict = r.verdict;
                lc.reason = r.reason;
                if (r.verdict == Verdict::Yes) lc.flips = r.certificate;
                continue;
            }

            // K: derive a witness ball from the stellated certificate.
            if (r.verdict != Verdict::Yes) {
                lc.verdict = Verdict::Unknown;
                lc.reason = "no witness ball: " + (r.reason.empty() ? to_string(r.verdict) : r.reason);
                continue;
            }
            lc.flips = r.certificate;
            if (link.dim() < 2 * k - 1) {
                lc.verdict = Verdict::Unknown;
                lc.reason = "link dimension below 2k-1, no ball can be derived from the flip certificate";
                continue;
            }
            const auto ball = stacked_ball_from_certificate(r.certificate.reversed());
            lc.ball = ball.ball;
            if (k_stacked_sphere_check(link, k, ball.ball)) {
                lc.verdict = Verdict::Yes;
            } else {
                lc.verdict = Verdict::Unknown;
                lc.reason = "derived ball failed the k-stacked check";
            }
        }
    });

    bool any_no = false;
    bool all_yes = true;
    for (std::size_t v = 0; v < n; ++v) {
        out.states += spent[v];
        any_no = any_no || out.links[v].verdict == Verdict::No;
        all_yes = all_yes && out.links[v].verdict == Verdict::Yes;
    }
    out.verdict = any_no ? Verdict::No : (all_yes ? Verdict::Yes : Verdict::Unknown);
    if (any_no) {
        out.reason = "some vertex link is not a sphere";
    } else if (!all_yes) {
        out.reason = "some vertex link could not be certified";
    }
    return out;
}

}  // namespace tightcx

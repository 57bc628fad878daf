#include "tightcx/tightness.hpp"

#include <algorithm>
#include <atomic>

#include "tightcx/errors.hpp"
#include "tightcx/parallel.hpp"

namespace tightcx {

namespace {

void check_sweep(int m, const SweepOptions& options) {
    if (options.cap > kMaxSweepCap || m > options.cap) {
        throw CapacityError("exhaustive injectivity check over " + std::to_string(m) +
                            " vertices exceeds the cap of " + std::to_string(std::min(options.cap, kMaxSweepCap)) +
                            "; raise it with --cap (at most " + std::to_string(kMaxSweepCap) + ")");
    }
}

std::vector<Mask> subsets_of_size(Mask set, int r) {
    std::vector<Mask> out;
    for_each_subset_of_size(set, r, [&](Mask a) { out.push_back(a); });
    return out;
}

// For each degree j, whether every induced inclusion is injective on H_j.
std::vector<bool> injective_by_degree(const Complex& x, FieldSpec field) {
    const ChainIndex index(x);
    const auto full = index.boundary_ranks(~Mask{0}, 0, field);
    const std::size_t width = static_cast<std::size_t>(std::max(x.dim(), 0)) + 1;
    const std::size_t total = std::size_t{1} << x.num_vertices();
    const std::size_t chunks = std::min<std::size_t>(total, 256);
    std::vector<std::vector<char>> partial(chunks, std::vector<char>(width, 1));
    parallel_chunks(total, chunks, [&](std::size_t begin, std::size_t end, std::size_t c) {
        for (std::size_t a = begin; a < end; ++a) {
            const auto inj = inclusion_injective_all(index, full, static_cast<Mask>(a), field);
            for (std::size_t j = 0; j < width; ++j) {
                if (!inj[j]) partial[c][j] = 0;
            }
        }
    });
    std::vector<bool> out(width, true);
    for (const auto& p : partial) {
        for (std::size_t j = 0; j < width; ++j) out[j] = out[j] && p[j];
    }
    return out;
}

}  // namespace

DirectTightness tight_direct(const Complex& x, FieldSpec field, SweepOptions options) {
    DirectTightness out;
    const int m = x.num_vertices();
    check_sweep(m, options);
    if (!is_connected(x)) {
        out.reason = "not connected";
        return out;
    }
    const ChainIndex index(x);
    const auto full = index.boundary_ranks(~Mask{0}, 0, field);
    const Mask all = x.vertex_mask();

    for (int r = 1; r < m; ++r) {
        const auto level = subsets_of_size(all, r);
        const std::size_t chunks = std::min<std::size_t>(level.size(), 256);
        // Smallest failing (position in level, degree), encoded as position * 64 + degree.
        std::atomic<std::size_t> best{SIZE_MAX};
        parallel_chunks(level.size(), chunks, [&](std::size_t begin, std::size_t end, std::size_t) {
            for (std::size_t p = begin; p < end; ++p) {
                if (p * 64 >= best.load(std::memory_order_relaxed)) return;
                const auto inj = inclusion_injective_all(index, full, level[p], field);
                for (std::size_t j = 0; j < inj.size(); ++j) {
                    if (inj[j]) continue;
                    const std::size_t code = p * 64 + j;
                    std::size_t cur = best.load();
                    while (code < cur && !best.compare_exchange_weak(cur, code)) {
                    }
                    return;
                }
            }
        });
        if (best.load() != SIZE_MAX) {
            const std::size_t code = best.load();
            out.witness = InjectivityWitness{x.labels_of(level[code / 64]), static_cast<int>(code % 64)};
            out.reason = "H_" + std::to_string(code % 64) + " of the induced subcomplex on " +
                         format_tuple(out.witness->subset) + " does not inject";
            return out;
        }
    }
    out.tight = true;
    return out;
}

TightnessReport tight_mu(const Complex& x, FieldSpec field, SweepOptions options, bool cross_check) {
    TightnessReport r;
    r.field = field;
    r.two_neighbourly = x.num_vertices() > 0 && is_neighbourly(x, 2);
    r.betti = betti(x, field);
    r.mu = mu_vector(x, field, options);
    r.mu_equals_beta = r.mu.size() == r.betti.betti.size();
    for (std::size_t i = 0; r.mu_equals_beta && i < r.mu.size(); ++i) {
        r.mu_equals_beta = r.mu[i] == Rational(r.betti.betti[i]);
    }
    r.tight = r.two_neighbourly && r.mu_equals_beta;
    if (cross_check) r.direct = tight_direct(x, field, options);
    return r;
}

bool is_homology_manifold(const Complex& x, FieldSpec field) {
    const auto s = structure_report(x);
    if (!s.closed || !s.pseudomanifold) return false;
    for (int v = 0; v < x.num_vertices(); ++v) {
        if (!is_homology_sphere(vertex_link(x, v), field)) return false;
    }
    return true;
}

MorseReport morse_report(const Complex& x, FieldSpec field, SweepOptions options) {
    if (x.num_vertices() == 0 || !is_neighbourly(x, 2)) {
        throw HypothesisError("the averaged Morse relations need a 2-neighbourly complex");
    }
    check_sweep(x.num_vertices(), options);
    MorseReport r;
    r.field = field;
    r.betti = betti(x, field);
    r.mu = mu_vector(x, field, options);
    const int d = x.dim();
    const auto inj = injective_by_degree(x, field);

    Rational alt_mu = 0;
    Integer alt_beta = 0;
    r.all_hold = true;
    for (int j = 0; j <= d; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        MorseDegree g;
        g.j = j;
        alt_mu = r.mu[ju] - alt_mu;
        alt_beta = Integer(r.betti.betti[ju]) - alt_beta;
        g.alt_mu = alt_mu;
        g.alt_beta = alt_beta;
        g.strong_inequality = alt_mu >= Rational(alt_beta);
        g.strong_equality = alt_mu == Rational(alt_beta);
        g.weak_inequality = r.mu[ju] >= Rational(r.betti.betti[ju]);
        g.weak_equality = r.mu[ju] == Rational(r.betti.betti[ju]);
        g.injective = inj[ju];
        const bool below = j == 0 || inj[ju - 1];
        g.strong_equivalence = g.strong_equality == g.injective;
        g.weak_equivalence = g.weak_equality == (g.injective && below);
        r.all_hold = r.all_hold && g.strong_inequality && g.weak_inequality && g.strong_equivalence &&
                     g.weak_equivalence;
        r.degrees.push_back(g);
    }
    r.top_equality = r.degrees.back().strong_equality;
    r.all_hold = r.all_hold && r.top_equality;

    r.duality_applicable = r.betti.betti.back() == 1 && is_homology_manifold(x, field);
    if (r.duality_applicable) {
        r.beta_duality = true;
        r.mu_duality = true;
        for (int j = 0; j <= d; ++j) {
            const auto a = static_cast<std::size_t>(j);
            const auto b = static_cast<std::size_t>(d - j);
            r.beta_duality = r.beta_duality && r.betti.betti[a] == r.betti.betti[b];
            r.mu_duality = r.mu_duality && r.mu[a] == r.mu[b];
        }
        r.all_hold = r.all_hold && r.beta_duality && r.mu_duality;
    }
    return r;
}

}  // namespace tightcx

#include "tightcx/sigma_mu.hpp"

#include <algorithm>

#include "tightcx/errors.hpp"
#include "tightcx/parallel.hpp"

namespace tightcx {

namespace {

void check_cap(int m, const SweepOptions& options, const char* what) {
    if (options.cap > kMaxSweepCap) {
        throw CapacityError("sweep cap " + std::to_string(options.cap) + " exceeds the hard limit " +
                            std::to_string(kMaxSweepCap));
    }
    if (m > options.cap) {
        throw CapacityError(std::string(what) + " needs an exhaustive sweep over " + std::to_string(m) +
                            " vertices, above the cap of " + std::to_string(options.cap) +
                            "; raise it with --cap (at most " + std::to_string(kMaxSweepCap) + ")");
    }
}

std::size_t chunk_count(std::size_t total) { return std::min<std::size_t>(total, 256); }

using Table = std::vector<std::vector<long long>>;

void add_into(Table& into, const Table& from) {
    for (std::size_t j = 0; j < into.size(); ++j) {
        for (std::size_t i = 0; i < into[j].size(); ++i) into[j][i] += from[j][i];
    }
}

}  // namespace

std::vector<std::vector<long long>> reduced_betti_sums(const Complex& x, FieldSpec field, SweepOptions options) {
    const int m = x.num_vertices();
    check_cap(m, options, "sigma-vector");
    const std::size_t width = static_cast<std::size_t>(std::max(x.dim(), 0)) + 1;
    const ChainIndex index(x);
    const std::size_t total = std::size_t{1} << m;
    const std::size_t chunks = chunk_count(total);

    std::vector<Table> partial(chunks, Table(static_cast<std::size_t>(m) + 1, std::vector<long long>(width, 0)));
    parallel_chunks(total, chunks, [&](std::size_t begin, std::size_t end, std::size_t c) {
        Table& local = partial[c];
        for (std::size_t g = begin; g < end; ++g) {
            const Mask a = gray_code(g);
            const auto reduced = reduce_betti(index.betti(a, 0, field));
            auto& row = local[static_cast<std::size_t>(popcount(a))];
            for (std::size_t i = 0; i < width && i < reduced.size(); ++i) row[i] += reduced[i];
        }
    });

    Table sums(static_cast<std::size_t>(m) + 1, std::vector<long long>(width, 0));
    for (const auto& p : partial) add_into(sums, p);
    return sums;
}

RationalVector sigma_vector(const Complex& x, FieldSpec field, SweepOptions options) {
    const int m = x.num_vertices();
    const auto sums = reduced_betti_sums(x, field, options);
    const std::size_t width = sums.front().size();
    RationalVector sigma(width, Rational(0));
    for (int j = 0; j <= m; ++j) {
        const Integer weight = binomial(m, j);
        for (std::size_t i = 0; i < width; ++i) {
            sigma[i] += make_rational(Integer(static_cast<long>(sums[static_cast<std::size_t>(j)][i])), weight);
        }
    }
    return sigma;
}

RationalVector mu_vector(const Complex& x, FieldSpec field, SweepOptions options) {
    const int m = x.num_vertices();
    if (m == 0) throw PreconditionError("mu-vector of the empty complex is undefined");
    const int d = x.dim();
    RationalVector link_sum(static_cast<std::size_t>(d) + 1, Rational(0));
    for (int v = 0; v < m; ++v) {
        const Complex link = vertex_link(x, v);
        check_cap(link.num_vertices(), options, "mu-vector link");
        const auto sigma = sigma_vector(link, field, options);
        for (std::size_t i = 0; i < sigma.size() && i + 1 < link_sum.size(); ++i) link_sum[i + 1] += sigma[i];
    }
    RationalVector mu(static_cast<std::size_t>(d) + 1, Rational(0));
    mu[0] = 1;
    for (int i = 1; i <= d; ++i) {
        mu[static_cast<std::size_t>(i)] = link_sum[static_cast<std::size_t>(i)] / Rational(m);
        if (i == 1) mu[1] += 1;
    }
    return mu;
}

RationalVector mu_via_relative(const Complex& x, FieldSpec field, SweepOptions options) {
    if (!is_neighbourly(x, 2)) throw PreconditionError("the relative mu formula needs a 2-neighbourly complex");
    const int m = x.num_vertices();
    if (m == 0) throw PreconditionError("mu-vector of the empty complex is undefined");
    check_cap(m, options, "relative mu-vector");
    const int d = x.dim();
    const std::size_t width = static_cast<std::size_t>(d) + 1;
    const ChainIndex index(x);
    const std::size_t total = std::size_t{1} << m;
    const std::size_t chunks = chunk_count(total);

    // sums[j][i] = sum over pairs A ⋖ B with |B| = j of beta_i(X[B], X[A]).
    std::vector<Table> partial(chunks, Table(static_cast<std::size_t>(m) + 1, std::vector<long long>(width, 0)));
    parallel_chunks(total, chunks, [&](std::size_t begin, std::size_t end, std::size_t c) {
        Table& local = partial[c];
        for (std::size_t g = begin; g < end; ++g) {
            const Mask b = gray_code(g);
            if (b == 0) continue;
            auto& row = local[static_cast<std::size_t>(popcount(b))];
            for (Mask r = b; r; r &= r - 1) {
                const Mask a = b & ~(r & (~r + 1));
                const auto rel = index.betti(b, a, field);
                for (std::size_t i = 0; i < width && i < rel.size(); ++i) row[i] += rel[i];
            }
        }
    });
    Table sums(static_cast<std::size_t>(m) + 1, std::vector<long long>(width, 0));
    for (const auto& p : partial) add_into(sums, p);

    RationalVector mu(width, Rational(0));
    for (int j = 1; j <= m; ++j) {
        const Integer weight = binomial(m - 1, j - 1) * m;
        for (std::size_t i = 0; i < width; ++i) {
            mu[i] += make_rational(Integer(static_cast<long>(sums[static_cast<std::size_t>(j)][i])), weight);
        }
    }
    return mu;
}

}  // namespace tightcx

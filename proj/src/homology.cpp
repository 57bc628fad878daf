#include "tightcx/homology.hpp"

#include <algorithm>
#include <cctype>

#include "tightcx/errors.hpp"

namespace tightcx {

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t q = 2; q * q <= p; ++q) {
        if (p % q == 0) return false;
    }
    return true;
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 32) || !is_prime(p)) {
        throw FieldError(std::to_string(p) + " is not a prime below 2^32");
    }
    return FieldSpec(static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::parse(std::string_view text) {
    std::string s(text);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "q" || s == "rationals") return rationals();
    if (s.size() >= 2 && (s[0] == 'f' || s[0] == 'z') &&
        std::all_of(s.begin() + 1, s.end(), [](unsigned char c) { return std::isdigit(c); }) && s.size() < 12) {
        return prime(std::stoull(s.substr(1)));
    }
    throw FieldError("unknown field '" + std::string(text) + "' (expected q or f<prime>)");
}

std::string FieldSpec::name() const { return is_rational() ? "Q" : "F" + std::to_string(p_); }
std::string FieldSpec::key() const { return is_rational() ? "q" : "f" + std::to_string(p_); }

std::vector<long> reduce_betti(std::vector<long> betti) {
    if (betti.empty()) betti.push_back(0);
    // beta_0(∅) = 0 as an unreduced number, so beta_0 - 1 yields the -1 convention.
    betti[0] -= 1;
    return betti;
}

std::size_t boundary_rank(const SparseMatrix& m, FieldSpec field) {
    if (m.rows.empty() || m.cols == 0) return 0;
    if (field.is_rational()) return rank_rational(m);
    return rank_mod_p(m, field.characteristic());
}

ChainIndex::ChainIndex(const Complex& x) : dim_(x.dim()) {
    if (dim_ < 0) return;
    faces_.resize(static_cast<std::size_t>(dim_) + 1);
    boundary_.resize(static_cast<std::size_t>(dim_) + 1);
    for (int i = 0; i <= dim_; ++i) faces_[static_cast<std::size_t>(i)] = x.faces(i);
    for (int i = 1; i <= dim_; ++i) {
        const auto& lower = faces_[static_cast<std::size_t>(i) - 1];
        auto& bd = boundary_[static_cast<std::size_t>(i)];
        bd.reserve(faces_[static_cast<std::size_t>(i)].size() * static_cast<std::size_t>(i + 1));
        for (Mask f : faces_[static_cast<std::size_t>(i)]) {
            for (Mask r = f; r; r &= r - 1) {
                const Mask sub = f & ~(r & (~r + 1));
                const auto it = std::lower_bound(lower.begin(), lower.end(), sub);
                bd.push_back(static_cast<std::uint32_t>(it - lower.begin()));
            }
        }
    }
}

std::vector<std::size_t> ChainIndex::chain_dims(Mask within, Mask excluded) const {
    std::vector<std::size_t> out(static_cast<std::size_t>(std::max(dim_, 0)) + 1, 0);
    for (int i = 0; i <= dim_; ++i) {
        for (Mask f : faces_[static_cast<std::size_t>(i)]) {
            if (is_subset(f, within) && !is_subset(f, excluded)) ++out[static_cast<std::size_t>(i)];
        }
    }
    return out;
}

std::vector<std::size_t> ChainIndex::boundary_ranks(Mask within, Mask excluded, FieldSpec field) const {
    std::vector<std::size_t> ranks(static_cast<std::size_t>(std::max(dim_, 0)) + 2, 0);
    if (dim_ < 1) return ranks;

    // local[i][k] = position of face k of dimension i in the selected complex, or -1.
    std::vector<std::vector<std::int32_t>> local(static_cast<std::size_t>(dim_) + 1);
    std::vector<std::vector<std::uint32_t>> selected(static_cast<std::size_t>(dim_) + 1);
    for (int i = 0; i <= dim_; ++i) {
        const auto& fs = faces_[static_cast<std::size_t>(i)];
        auto& loc = local[static_cast<std::size_t>(i)];
        loc.assign(fs.size(), -1);
        std::int32_t next = 0;
        for (std::size_t k = 0; k < fs.size(); ++k) {
            if (is_subset(fs[k], within) && !is_subset(fs[k], excluded)) {
                loc[k] = next++;
                selected[static_cast<std::size_t>(i)].push_back(static_cast<std::uint32_t>(k));
            }
        }
    }

    SparseMatrix m;
    for (int i = 1; i <= dim_; ++i) {
        const auto& rows = selected[static_cast<std::size_t>(i)];
        const auto& lower_loc = local[static_cast<std::size_t>(i) - 1];
        const auto& bd = boundary_[static_cast<std::size_t>(i)];
        m.cols = selected[static_cast<std::size_t>(i) - 1].size();
        m.rows.assign(rows.size(), {});
        if (rows.empty() || m.cols == 0) continue;
        const std::size_t stride = static_cast<std::size_t>(i) + 1;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            auto& row = m.rows[r];
            const std::uint32_t* b = bd.data() + rows[r] * stride;
            // b[k] is the face with the k-th vertex removed; sign (-1)^k.
            for (std::size_t k = 0; k < stride; ++k) {
                const std::int32_t c = lower_loc[b[k]];
                if (c >= 0) row.emplace_back(static_cast<std::uint32_t>(c), (k % 2 == 0) ? 1 : -1);
            }
            std::sort(row.begin(), row.end());
        }
        ranks[static_cast<std::size_t>(i)] = boundary_rank(m, field);
    }
    return ranks;
}

std::vector<long> ChainIndex::betti(Mask within, Mask excluded, FieldSpec field) const {
    const auto dims = chain_dims(within, excluded);
    const auto ranks = boundary_ranks(within, excluded, field);
    std::vector<long> out(dims.size(), 0);
    if (dim_ < 0) return out;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        out[i] = static_cast<long>(dims[i]) - static_cast<long>(ranks[i]) - static_cast<long>(ranks[i + 1]);
    }
    return out;
}

BettiTable betti(const Complex& x, FieldSpec field) {
    const ChainIndex index(x);
    BettiTable t;
    t.betti = index.betti(x.vertex_mask(), 0, field);
    t.reduced = reduce_betti(t.betti);
    return t;
}

std::vector<long> relative_betti(const Complex& x, Mask a, FieldSpec field) {
    const ChainIndex index(x);
    return index.betti(x.vertex_mask(), a & x.vertex_mask(), field);
}

std::vector<long> relative_betti(const Complex& x, const std::vector<std::string>& a, FieldSpec field) {
    Mask m = 0;
    for (const auto& l : a) {
        if (auto i = x.find(l)) m |= bit(*i);
    }
    return relative_betti(x, m, field);
}

std::vector<bool> inclusion_injective_all(const ChainIndex& index, const std::vector<std::size_t>& full_ranks,
                                          Mask a, FieldSpec field) {
    const int d = std::max(index.dim(), 0);
    std::vector<bool> out(static_cast<std::size_t>(d) + 1, true);
    if (index.dim() < 0) return out;
    const Mask everything = ~Mask{0};
    const auto sub_ranks = index.boundary_ranks(a, 0, field);
    const auto rel_ranks = index.boundary_ranks(everything, a, field);
    for (int j = 0; j <= d; ++j) {
        const std::size_t k = static_cast<std::size_t>(j) + 1;
        // dim(Z_j(Y) ∩ B_j(X)) versus dim B_j(Y); the former always contains the latter.
        out[static_cast<std::size_t>(j)] = full_ranks[k] - rel_ranks[k] == sub_ranks[k];
    }
    return out;
}

bool inclusion_injective(const Complex& x, Mask a, int j, FieldSpec field) {
    if (j < 0 || j > x.dim()) return true;
    const ChainIndex index(x);
    const auto full = index.boundary_ranks(~Mask{0}, 0, field);
    return inclusion_injective_all(index, full, a & x.vertex_mask(), field)[static_cast<std::size_t>(j)];
}

bool inclusion_injective(const Complex& x, const std::vector<std::string>& a, int j, FieldSpec field) {
    Mask m = 0;
    for (const auto& l : a) {
        if (auto i = x.find(l)) m |= bit(*i);
    }
    return inclusion_injective(x, m, j, field);
}

bool orientable(const Complex& x, FieldSpec field) {
    const auto s = structure_report(x);
    if (!s.closed || !s.connected) throw PreconditionError("orientability needs a connected closed complex");
    return betti(x, field).betti.back() == 1;
}

bool is_homology_sphere(const Complex& x, FieldSpec field) {
    const auto t = betti(x, field);
    if (x.dim() < 0) return true;
    for (int i = 0; i <= x.dim(); ++i) {
        const long expected = (i == x.dim()) ? 1 : 0;
        if (t.reduced[static_cast<std::size_t>(i)] != expected) return false;
    }
    return true;
}

}  // namespace tightcx

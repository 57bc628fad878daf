#include "tightcx/linalg.hpp"

#include <gmpxx.h>

#include <bit>
#include <numeric>
#include <stdexcept>

namespace tightcx {

namespace {

struct Overflow {};

// Checked 64-bit arithmetic for the fraction-free engine.
struct CheckedInt {
    using value_type = std::int64_t;

    static std::int64_t mul(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static std::int64_t sub(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
    static std::int64_t div(std::int64_t a, std::int64_t b) { return a / b; }
    static bool is_zero(std::int64_t a) { return a == 0; }
    static bool is_unit(std::int64_t a) { return a == 1 || a == -1; }
    static std::int64_t abs(std::int64_t a) {
        if (a == INT64_MIN) throw Overflow{};
        return a < 0 ? -a : a;
    }
};

struct BigInt {
    using value_type = mpz_class;

    static mpz_class mul(const mpz_class& a, const mpz_class& b) { return a * b; }
    static mpz_class sub(const mpz_class& a, const mpz_class& b) { return a - b; }
    static mpz_class gcd(const mpz_class& a, const mpz_class& b) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return g;
    }
    static mpz_class div(const mpz_class& a, const mpz_class& b) { return a / b; }
    static bool is_zero(const mpz_class& a) { return a == 0; }
    static bool is_unit(const mpz_class& a) { return a == 1 || a == -1; }
    static mpz_class abs(const mpz_class& a) { return ::abs(a); }
};

// Row echelon over Z without division: only the leading column of each
// incoming row is cleared against stored pivots, which is enough for rank.
template <typename Arith>
std::size_t fraction_free_rank(const SparseMatrix& m) {
    using T = typename Arith::value_type;
    using Row = std::vector<std::pair<std::uint32_t, T>>;

    std::vector<Row> pivots(m.cols);
    std::vector<bool> has_pivot(m.cols, false);
    std::size_t rank = 0;
    Row scratch;

    for (const auto& input : m.rows) {
        Row row;
        row.reserve(input.size());
        for (auto [c, v] : input) {
            if (v != 0) row.emplace_back(c, T(v));
        }
        while (!row.empty()) {
            const std::uint32_t lead = row.front().first;
            if (!has_pivot[lead]) {
                // Normalise by content so later eliminations stay small.
                T content = Arith::abs(row.front().second);
                for (const auto& e : row) content = Arith::gcd(content, Arith::abs(e.second));
                if (!Arith::is_unit(content)) {
                    for (auto& e : row) e.second = Arith::div(e.second, content);
                }
                pivots[lead] = std::move(row);
                has_pivot[lead] = true;
                ++rank;
                break;
            }
            const Row& piv = pivots[lead];
            const T a = row.front().second;
            const T p = piv.front().second;
            T g = Arith::gcd(Arith::abs(a), Arith::abs(p));
            const T row_scale = Arith::div(p, g);
            const T piv_scale = Arith::div(a, g);

            // row <- row_scale * row - piv_scale * piv
            scratch.clear();
            std::size_t i = 0, j = 0;
            while (i < row.size() || j < piv.size()) {
                if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
                    scratch.emplace_back(row[i].first, Arith::mul(row_scale, row[i].second));
                    ++i;
                } else if (i == row.size() || piv[j].first < row[i].first) {
                    scratch.emplace_back(piv[j].first, Arith::sub(T(0), Arith::mul(piv_scale, piv[j].second)));
                    ++j;
                } else {
                    T v = Arith::sub(Arith::mul(row_scale, row[i].second), Arith::mul(piv_scale, piv[j].second));
                    if (!Arith::is_zero(v)) scratch.emplace_back(row[i].first, std::move(v));
                    ++i;
                    ++j;
                }
            }
            row.swap(scratch);
        }
    }
    return rank;
}

}  // namespace

std::size_t rank_gf2(const SparseMatrix& m) {
    const std::size_t words = (m.cols + 63) / 64;
    if (words == 0) return 0;
    std::vector<std::uint64_t> pivots;  // pivot rows, packed
    std::vector<std::int64_t> pivot_of(m.cols, -1);
    std::vector<std::uint64_t> row(words);
    std::size_t rank = 0;

    for (const auto& input : m.rows) {
        std::fill(row.begin(), row.end(), 0);
        for (auto [c, v] : input) {
            if (v & 1) row[c / 64] ^= std::uint64_t{1} << (c % 64);
        }
        for (std::size_t w = 0; w < words;) {
            if (row[w] == 0) {
                ++w;
                continue;
            }
            const std::size_t col = w * 64 + static_cast<std::size_t>(std::countr_zero(row[w]));
            const std::int64_t p = pivot_of[col];
            if (p < 0) {
                pivot_of[col] = static_cast<std::int64_t>(rank);
                pivots.insert(pivots.end(), row.begin(), row.end());
                ++rank;
                break;
            }
            const std::uint64_t* prow = pivots.data() + static_cast<std::size_t>(p) * words;
            for (std::size_t k = w; k < words; ++k) row[k] ^= prow[k];
        }
    }
    return rank;
}

std::size_t rank_mod_p(const SparseMatrix& m, std::uint32_t p) {
    if (p == 2) return rank_gf2(m);
    using Row = std::vector<std::pair<std::uint32_t, std::uint64_t>>;
    const std::uint64_t mod = p;
    auto inverse = [mod](std::uint64_t a) {
        std::uint64_t result = 1, base = a % mod, e = mod - 2;
        while (e) {
            if (e & 1) result = result * base % mod;
            base = base * base % mod;
            e >>= 1;
        }
        return result;
    };

    std::vector<Row> pivots(m.cols);
    std::vector<bool> has_pivot(m.cols, false);
    std::size_t rank = 0;
    Row scratch;
    for (const auto& input : m.rows) {
        Row row;
        for (auto [c, v] : input) {
            std::int64_t r = v % static_cast<std::int64_t>(mod);
            if (r < 0) r += static_cast<std::int64_t>(mod);
            if (r != 0) row.emplace_back(c, static_cast<std::uint64_t>(r));
        }
        while (!row.empty()) {
            const std::uint32_t lead = row.front().first;
            if (!has_pivot[lead]) {
                const std::uint64_t inv = inverse(row.front().second);
                for (auto& e : row) e.second = e.second * inv % mod;
                pivots[lead] = std::move(row);
                has_pivot[lead] = true;
                ++rank;
                break;
            }
            const Row& piv = pivots[lead];  // leading entry is 1
            const std::uint64_t factor = row.front().second;
            scratch.clear();
            std::size_t i = 0, j = 0;
            while (i < row.size() || j < piv.size()) {
                if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
                    scratch.push_back(row[i++]);
                } else if (i == row.size() || piv[j].first < row[i].first) {
                    scratch.emplace_back(piv[j].first, (mod - factor * piv[j].second % mod) % mod);
                    ++j;
                } else {
                    const std::uint64_t v = (row[i].second + mod - factor * piv[j].second % mod) % mod;
                    if (v != 0) scratch.emplace_back(row[i].first, v);
                    ++i;
                    ++j;
                }
            }
            row.swap(scratch);
        }
    }
    return rank;
}

std::size_t rank_rational(const SparseMatrix& m) {
    try {
        return fraction_free_rank<CheckedInt>(m);
    } catch (const Overflow&) {
        return fraction_free_rank<BigInt>(m);
    }
}

std::size_t rank_rational_bigint(const SparseMatrix& m) { return fraction_free_rank<BigInt>(m); }

}  // namespace tightcx

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace tightcx {

/// Sparse matrix with small signed entries (boundary matrices carry ±1).
/// Each row is a list of (column, value) pairs sorted by column.
struct SparseMatrix {
    std::size_t cols = 0;
    std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> rows;
};

/// Rank over GF(2) using bit-packed row reduction.
std::size_t rank_gf2(const SparseMatrix& m);

/// Rank over Z/p for a prime p < 2^32.
std::size_t rank_mod_p(const SparseMatrix& m, std::uint32_t p);

/// Rank over Q by fraction-free integer elimination. Entries are kept in
/// 64-bit integers with overflow checks; on overflow the whole elimination
/// is redone with arbitrary-precision integers.
std::size_t rank_rational(const SparseMatrix& m);

/// Same computation, always on arbitrary-precision integers.
std::size_t rank_rational_bigint(const SparseMatrix& m);

}  // namespace tightcx

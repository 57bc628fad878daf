#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace tightcx {

/// A face is a set of vertex indices in [0, 64) packed into one word.
using Mask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline int popcount(Mask m) { return std::popcount(m); }

/// Dimension of a face: popcount - 1, so the empty face has dimension -1.
inline int face_dim(Mask m) { return std::popcount(m) - 1; }

inline bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

inline Mask bit(int i) { return Mask{1} << i; }

/// Mask with the lowest n bits set; valid for 0 <= n <= 64.
inline Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Indices of the set bits in ascending order.
inline std::vector<int> bit_indices(Mask m) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(std::popcount(m)));
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

/// Deposit the low bits of `packed` into the positions set in `where`
/// (software pdep). Used to map a subset of k positions onto k chosen vertices.
inline Mask deposit_bits(Mask packed, Mask where) {
    Mask out = 0;
    for (Mask b = 1; where; b <<= 1) {
        Mask low = where & (~where + 1);
        if (packed & b) out |= low;
        where &= where - 1;
    }
    return out;
}

/// Calls fn(sub) for every r-element subset of `set`, in increasing order of
/// the packed index (Gosper's hack on the compressed positions).
template <typename Fn>
void for_each_subset_of_size(Mask set, int r, Fn&& fn) {
    const int n = std::popcount(set);
    if (r < 0 || r > n) return;
    if (r == 0) {
        fn(Mask{0});
        return;
    }
    const Mask limit = n >= 64 ? 0 : (Mask{1} << n);
    Mask comb = low_bits(r);
    while (true) {
        fn(deposit_bits(comb, set));
        const Mask c = comb & (~comb + 1);
        const Mask rr = comb + c;
        if (rr == 0) break;
        comb = (((rr ^ comb) >> 2) / c) | rr;
        if (limit != 0 && comb >= limit) break;
    }
}

/// Reflected binary Gray code of i; consecutive codes differ in one bit.
inline Mask gray_code(Mask i) { return i ^ (i >> 1); }

}  // namespace tightcx

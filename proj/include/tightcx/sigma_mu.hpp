#pragma once

#include <vector>

#include "tightcx/complex.hpp"
#include "tightcx/exact.hpp"
#include "tightcx/homology.hpp"

namespace tightcx {

inline constexpr int kDefaultSweepCap = 16;
inline constexpr int kMaxSweepCap = 22;

/// Limits for exhaustive subset sweeps. `cap` bounds the vertex count of
/// every complex whose 2^m induced subcomplexes are enumerated.
struct SweepOptions {
    int cap = kDefaultSweepCap;
};

/// sums[j][i] = sum over all j-subsets A of V(X) of beta~_i(X[A]), for
/// j = 0..m and i = 0..max(d, 0). Subsets are visited in Gray-code order,
/// split into fixed chunks whose integer partial sums are merged in order.
std::vector<std::vector<long long>> reduced_betti_sums(const Complex& x, FieldSpec field,
                                                       SweepOptions options = {});

/// sigma_i = sum_j sums[j][i] / C(m, j). Throws CapacityError when m > cap.
RationalVector sigma_vector(const Complex& x, FieldSpec field, SweepOptions options = {});

/// mu_0 = 1, mu_i = delta_{i1} + (1/m) sum_x sigma_{i-1}(lk x) for 1 <= i <= d.
RationalVector mu_vector(const Complex& x, FieldSpec field, SweepOptions options = {});

/// The relative-homology expression for mu of a 2-neighbourly complex:
/// mu_i = (1/m) sum_{j=1}^m 1/C(m-1, j-1) sum_{A ⋖ B, |B| = j} beta_i(X[B], X[A]).
/// Throws PreconditionError unless x is 2-neighbourly.
RationalVector mu_via_relative(const Complex& x, FieldSpec field, SweepOptions options = {});

}  // namespace tightcx

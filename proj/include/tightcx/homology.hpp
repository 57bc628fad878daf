#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tightcx/complex.hpp"
#include "tightcx/linalg.hpp"

namespace tightcx {

/// Coefficient field: the rationals or a prime field F_p.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(0); }
    /// Throws FieldError unless p is a prime below 2^32.
    static FieldSpec prime(std::uint64_t p);
    /// Accepts "q", "f2", "f3", ..., "fP" (also "z2", "zP"), case-insensitive.
    static FieldSpec parse(std::string_view text);

    FieldSpec() = default;
    bool is_rational() const { return p_ == 0; }
    std::uint32_t characteristic() const { return p_; }
    /// "Q" or "F<p>".
    std::string name() const;
    /// "q" or "f<p>", the CLI spelling.
    std::string key() const;

    friend bool operator==(FieldSpec, FieldSpec) = default;

private:
    explicit FieldSpec(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
};

/// Unreduced and reduced Betti numbers, indices 0..d (at least index 0).
struct BettiTable {
    std::vector<long> betti;
    std::vector<long> reduced;
};

/// Reduced Betti numbers from unreduced ones. This is the single place that
/// encodes the empty-complex convention: beta~_0(∅) = -1, beta~_i(∅) = 0.
std::vector<long> reduce_betti(std::vector<long> betti);

/**
 * Face lists of a complex together with boundary incidences, shared by every
 * homology computation on its induced subcomplexes and induced pairs.
 *
 * A chain complex is selected by two vertex sets: it consists of the faces f
 * with f ⊆ within and f ⊄ excluded. With excluded = 0 this is X[within];
 * with excluded ⊆ within it is the relative complex C(X[within]) / C(X[excluded]).
 * Orientation: vertices in ascending index order, boundary sign (-1)^position.
 */
class ChainIndex {
public:
    explicit ChainIndex(const Complex& x);

    int dim() const { return dim_; }
    const std::vector<Mask>& faces(int i) const { return faces_[static_cast<std::size_t>(i)]; }

    /// Ranks of the boundary maps ∂_i : C_i -> C_{i-1} for i = 0..dim+1
    /// (entries 0 and dim+1 are always zero).
    std::vector<std::size_t> boundary_ranks(Mask within, Mask excluded, FieldSpec field) const;
    /// Number of faces per dimension 0..dim in the selected chain complex.
    std::vector<std::size_t> chain_dims(Mask within, Mask excluded) const;
    /// Betti numbers of the selected chain complex, indices 0..max(dim, 0).
    std::vector<long> betti(Mask within, Mask excluded, FieldSpec field) const;

private:
    int dim_ = -1;
    std::vector<std::vector<Mask>> faces_;
    // boundary_[i] holds, for each i-face, the indices of its (i+1) facets in faces_[i-1].
    std::vector<std::vector<std::uint32_t>> boundary_;
};

/// Rank of a ±1 boundary matrix over the given field.
std::size_t boundary_rank(const SparseMatrix& m, FieldSpec field);

BettiTable betti(const Complex& x, FieldSpec field);

/// beta_i(X, X[A]) for i = 0..d, A intersected with V(X).
std::vector<long> relative_betti(const Complex& x, Mask a, FieldSpec field);
std::vector<long> relative_betti(const Complex& x, const std::vector<std::string>& a, FieldSpec field);

/// Whether H_j(X[A]) -> H_j(X) is injective, via
/// dim(Z_j(Y) ∩ B_j(X)) = rank ∂_{j+1}(X) - rank ∂_{j+1}(X, Y) compared with
/// dim B_j(Y) = rank ∂_{j+1}(Y).
bool inclusion_injective(const Complex& x, Mask a, int j, FieldSpec field);
bool inclusion_injective(const Complex& x, const std::vector<std::string>& a, int j, FieldSpec field);

/// Per-degree injectivity of H_j(X[A]) -> H_j(X) for j = 0..d, reusing a
/// prepared index and the ranks of X's own boundary maps.
std::vector<bool> inclusion_injective_all(const ChainIndex& index, const std::vector<std::size_t>& full_ranks,
                                          Mask a, FieldSpec field);

/// beta_d(X) = 1 for a connected closed complex. Throws PreconditionError
/// otherwise.
bool orientable(const Complex& x, FieldSpec field);

/// Whether x has the Betti numbers of a sphere of its own dimension over
/// the field (the empty complex counts as the (-1)-sphere).
bool is_homology_sphere(const Complex& x, FieldSpec field);

}  // namespace tightcx

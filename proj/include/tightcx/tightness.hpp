#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tightcx/complex.hpp"
#include "tightcx/homology.hpp"
#include "tightcx/sigma_mu.hpp"

namespace tightcx {

/// An induced subcomplex X[A] whose inclusion is not injective on H_degree.
struct InjectivityWitness {
    std::vector<std::string> subset;
    int degree = 0;
};

struct DirectTightness {
    bool tight = false;
    std::optional<InjectivityWitness> witness;
    std::string reason;
};

/// Tightness by definition: X connected and H_j(X[A]) -> H_j(X) injective
/// for every vertex set A and 0 <= j <= d. Subsets are scanned by
/// (cardinality, mask) and the first failure in that order is returned.
/// Throws CapacityError when m exceeds the sweep cap.
DirectTightness tight_direct(const Complex& x, FieldSpec field, SweepOptions options = {});

struct TightnessReport {
    FieldSpec field;
    bool two_neighbourly = false;
    RationalVector mu;
    BettiTable betti;
    bool mu_equals_beta = false;
    /// Decision of the mu criterion: 2-neighbourly and mu = beta.
    bool tight = false;
    /// Filled when the direct check is requested as a cross-check.
    std::optional<DirectTightness> direct;
};

/// Tightness through the mu-vector criterion; with `cross_check` the
/// direct definition is evaluated as well.
TightnessReport tight_mu(const Complex& x, FieldSpec field, SweepOptions options = {}, bool cross_check = false);

/// Per-degree quantities of the averaged Morse relations.
struct MorseDegree {
    int j = 0;
    Rational alt_mu;   // sum_{i<=j} (-1)^{j-i} mu_i
    Integer alt_beta;  // sum_{i<=j} (-1)^{j-i} beta_i
    bool strong_inequality = false;  // alt_mu >= alt_beta
    bool strong_equality = false;
    bool weak_inequality = false;  // mu_j >= beta_j
    bool weak_equality = false;
    bool injective = false;  // H_j(X[A]) -> H_j(X) injective for every A
    /// strong_equality <=> injective in degree j
    bool strong_equivalence = false;
    /// weak_equality <=> injective in degrees j and j-1
    bool weak_equivalence = false;
};

struct MorseReport {
    FieldSpec field;
    RationalVector mu;
    BettiTable betti;
    std::vector<MorseDegree> degrees;
    bool top_equality = false;
    /// Duality applies to closed homology manifolds with beta_d = 1.
    bool duality_applicable = false;
    bool beta_duality = false;
    bool mu_duality = false;
    bool all_hold = false;
};

/// Evaluates the averaged Morse inequalities, their equality cases against
/// an exhaustive injectivity sweep, and the duality statements. Throws
/// HypothesisError unless x is 2-neighbourly.
MorseReport morse_report(const Complex& x, FieldSpec field, SweepOptions options = {});

/// Closed pseudomanifold whose vertex links are homology spheres over the field.
bool is_homology_manifold(const Complex& x, FieldSpec field);

}  // namespace tightcx

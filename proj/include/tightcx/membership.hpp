#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tightcx/complex.hpp"
#include "tightcx/flips.hpp"

namespace tightcx {

/// Highest face dimension that must lie on the boundary of a k-stacked ball
/// of dimension e. A d-sphere bounds an (e = d+1)-ball, and "codimension at
/// least k+1 in the ball" means dimension at most e - k - 1 = d - k.
inline int stacked_boundary_dim(int ball_dim, int k) { return ball_dim - k - 1; }

/// Whether every face of B of dimension <= dim(B) - k - 1 lies in ∂B.
/// Throws StructureError unless B is a pure weak pseudomanifold with
/// nonempty boundary.
bool k_stacked_ball_check(const Complex& ball, int k);

/// Whether ∂B equals S (same labels) and B is a k-stacked ball.
/// Throws PreconditionError if dim B != dim S + 1.
bool k_stacked_sphere_check(const Complex& sphere, int k, const Complex& ball);

/// Whether `order` (facets of B) is a shelling: each facet meets the union
/// of the earlier ones in a nonempty pure complex of codimension one.
bool is_shelling(const Complex& ball, const std::vector<Mask>& order);

struct ShellingResult {
    Verdict verdict = Verdict::Unknown;
    std::vector<Mask> order;
    std::size_t states = 0;
};

/// Depth-first search for a shelling order; No only after a complete search.
ShellingResult shelling_search(const Complex& ball, std::size_t budget);

/// A ball bounded by the end of a flip sequence that starts at a standard
/// sphere: the full simplex on the start's vertices, then closure(alpha ⊔ beta)
/// for each move in order. For a sequence of moves of index < k and
/// d >= 2k-1 this is a k-stacked ball, and the facet order is a shelling.
struct StackedBall {
    Complex ball;
    std::vector<Mask> shelling;
};
StackedBall stacked_ball_from_certificate(const FlipCertificate& forward);

enum class ClassKind { W, K };
std::string to_string(ClassKind c);

struct LinkCertificate {
    std::string vertex;
    Verdict verdict = Verdict::Unknown;
    std::optional<FlipCertificate> flips;
    std::optional<Complex> ball;
    std::string reason;
};

struct MembershipVerdict {
    Verdict verdict = Verdict::Unknown;
    std::vector<LinkCertificate> links;
    std::size_t states = 0;
    std::string reason;
};

/**
 * W_k(d): every vertex link is reduced to a standard sphere by moves of
 * index > d-1-k. K_k(d): every link must come with a k-stacked witness
 * ball, taken from `witnesses` (keyed by vertex label) or, when
 * d-1 >= 2k-1, built from a W certificate. A link whose search fails
 * leaves the verdict Unknown unless the link is provably not a sphere.
 * Throws HypothesisError unless M is connected and closed.
 */
MembershipVerdict class_membership(const Complex& m, int k, ClassKind kind, std::size_t budget,
                                   const std::map<std::string, Complex>& witnesses = {});

}  // namespace tightcx

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tightcx/complex.hpp"

namespace tightcx {

/// A bistellar move alpha -> beta on labelled faces. Its index is dim(beta);
/// an index-0 move introduces beta's single label as a new vertex.
struct BistellarMove {
    std::vector<std::string> alpha;
    std::vector<std::string> beta;

    int index() const { return static_cast<int>(beta.size()) - 1; }
    BistellarMove reversed() const { return {beta, alpha}; }

    friend bool operator==(const BistellarMove&, const BistellarMove&) = default;
};

/// Replayable flip sequence. `end` is the result of applying `moves` to
/// `start` in order; `max_index` is -1 for an empty sequence.
struct FlipCertificate {
    Complex start;
    std::vector<BistellarMove> moves;
    Complex end;
    int max_index = -1;

    /// The sequence run backwards: from `end` to `start` by reverse moves.
    FlipCertificate reversed() const;
};

/**
 * Whether alpha -> beta is a bistellar move of X.
 *
 * For index t >= 1 the faces of X inside alpha ⊔ beta must be exactly
 * closure(alpha) * ∂beta (all labels present, beta missing, every
 * alpha ⊔ beta \ {b} a facet) and no other facet may contain alpha. For
 * t = 0, alpha must be a d-dimensional facet and beta a label not in X.
 */
bool is_valid_move(const Complex& x, const BistellarMove& move);

/// Removes the faces containing alpha and adds ∂alpha * closure(beta).
/// Throws MoveError when the move is not valid.
Complex apply_move(const Complex& x, const BistellarMove& move);

struct MoveEnumeration {
    /// Moves of index 1..d, ordered by (index, alpha mask, beta mask).
    std::vector<BistellarMove> proper;
    /// Facets where a 0-move with a fresh vertex may be applied.
    std::vector<std::vector<std::string>> zero_move_sites;
};

/// All moves of index >= 1 and all 0-move sites. Throws StructureError if
/// x is not pure.
MoveEnumeration enumerate_moves(const Complex& x);

/// Smallest "vN" (N >= 1) that is not a label of x.
std::string fresh_label(const Complex& x);

/// Re-applies every move from `start`, checking each step; throws MoveError
/// on the first invalid move and returns the final complex.
Complex replay(const Complex& start, const std::vector<BistellarMove>& moves);
/// Whether the certificate replays to its recorded end and max_index.
bool certificate_valid(const FlipCertificate& cert);

/**
 * Starts from S^d_{d+2} and applies n_moves moves of index < k, each chosen
 * uniformly among the 0-move sites and the proper moves of admissible index
 * (mt19937_64 seeded with `seed`). Stops early, with a shorter certificate,
 * when no move is available or the vertex limit would be exceeded.
 */
FlipCertificate random_stellated_sphere(int d, int k, int n_moves, std::uint64_t seed);

enum class Verdict { Yes, No, Unknown };
std::string to_string(Verdict v);

struct ReductionResult {
    Verdict verdict = Verdict::Unknown;
    /// On Yes: moves of index > d - k taking X to a standard sphere. Its
    /// reversal starts at S^d_{d+2} and uses moves of index < k only.
    FlipCertificate certificate;
    std::size_t states = 0;
    std::string reason;
};

/**
 * Searches for a reduction of X to the boundary of a simplex using moves of
 * index > d - k. Best-first search over facet sets ordered by
 * (vertex count, facet count, discovery order) with a visited set; the
 * budget bounds the number of expanded states. The answer is No only when
 * the reachable state space is exhausted, which needs k <= d so that no
 * vertex can be added. Throws StructureError when X is not a closed
 * pseudomanifold with the Euler characteristic of a d-sphere.
 */
ReductionResult stellated_reduction(const Complex& x, int k, std::size_t budget);

}  // namespace tightcx

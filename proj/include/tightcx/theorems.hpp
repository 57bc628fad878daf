#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tightcx/complex.hpp"
#include "tightcx/flips.hpp"
#include "tightcx/homology.hpp"
#include "tightcx/sigma_mu.hpp"

namespace tightcx {

enum class Relation { Le, Eq, Ge };
std::string to_string(Relation r);
bool compare(const Rational& lhs, Relation r, const Rational& rhs);

/// One claimed relation lhs (rel) rhs, evaluated exactly.
struct TheoremCheck {
    std::string label;
    Rational lhs;
    Rational rhs;
    Relation relation = Relation::Eq;
    bool holds = false;
};

struct TheoremReport {
    std::string id;
    bool hypotheses_satisfied = false;
    /// How each hypothesis was established ("checked: ...", "asserted: ...",
    /// or "failed: ...").
    std::vector<std::string> hypotheses;
    std::vector<TheoremCheck> checks;
    /// Derived quantities worth reporting (name, value).
    std::vector<std::pair<std::string, std::string>> values;

    /// Hypotheses hold and every check holds.
    bool holds() const;
};

struct TheoremParams {
    /// The class index k of the theorem; unset picks a default per theorem.
    std::optional<int> k;
    /// l for L9; unset uses the largest l the neighbourliness allows.
    std::optional<int> l;
    /// Flip certificate establishing k-stellatedness for P19.
    std::optional<FlipCertificate> certificate;
    /// State budget for flip and membership searches.
    std::size_t budget = 100000;
    SweepOptions sweep;
    /// Grid bound for EQ12.
    int grid = 12;
};

/// Identifiers accepted by verify().
const std::vector<std::string>& theorem_ids();

/**
 * Checks a named theorem on M. Hypotheses are established computationally
 * where possible (closedness, neighbourliness, link reductions); if one
 * fails, hypotheses_satisfied is false and no claim is evaluated. EQ12
 * ignores M. Throws UnknownTheoremError for other ids.
 */
TheoremReport verify(const Complex& m, std::string_view id, FieldSpec field, const TheoremParams& params = {});

/// The binomial identity
/// sum_{i=0}^p C(p,i)/C(p+q+r, r+i) = (p+q+r+1)/(q+r+1) / C(q+r, r)
/// on the grid 0 <= p, q, r <= n.
TheoremReport verify_eq12(int n);

/// Arithmetic consequences for W*_k(d) with k >= 2, d >= 2k+2 and m vertices.
struct P24Screen {
    Integer numerator;    // C(m+k-d-2, k+1)
    Integer denominator;  // C(d+2, k+1)
    bool integral = false;
    bool vertex_bound = false;  // m >= 2d+4-k
    /// beta when integral and positive.
    std::optional<Integer> beta;
    bool admissible() const { return integral && vertex_bound && beta.has_value(); }
};
P24Screen p24_screen(int k, int d, int m);

}  // namespace tightcx

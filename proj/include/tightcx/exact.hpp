#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

namespace tightcx {

using Integer = mpz_class;
using Rational = mpq_class;

/// Binomial coefficient C(n, k) with the counting convention: zero whenever
/// k < 0, n < 0 or k > n.
inline Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Integer(0);
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Vector of exact rationals, used for sigma- and mu-vectors (indices 0..d).
using RationalVector = std::vector<Rational>;

/// Formats a sequence as "(a, b, c)".
template <typename Seq>
std::string format_tuple(const Seq& seq) {
    std::string out = "(";
    bool first = true;
    for (const auto& x : seq) {
        if (!first) out += ", ";
        first = false;
        if constexpr (std::is_convertible_v<decltype(x), std::string>) {
            out += x;
        } else if constexpr (requires { to_string(x); }) {
            out += to_string(x);
        } else {
            out += std::to_string(x);
        }
    }
    return out + ")";
}

}  // namespace tightcx

#pragma once

#include "twobridge/rational.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace twobridge {

// Continued fraction under the minus convention:
//   [c1, c2, ..., cm] = 1/(c1 - 1/(c2 - ... - 1/cm)).
// EvenType: [2a1, ..., 2al, c] with every entry but the last even, c odd, c != +-1.
// PType(p): [p*k1, 2*m1, p*k2, ..., p*k_{q+1}], odd positions nonzero multiples
// of p, even positions nonzero even integers, odd length.
struct ContinuedFraction {
    enum class Kind { EvenType, PType };

    Kind kind = Kind::EvenType;
    long p = 0; // set for PType only
    std::vector<mpz_class> entries;

    // Text like "[3,2,3,2,-3]".
    std::string str() const;
};

// Parses "[3,2,3,2,-3]" (brackets optional) into an entry list.
std::vector<mpz_class> parse_cf_entries(const std::string& text);

// Entry-list evaluation; throws DegenerateFraction on a zero denominator.
Rational cf_eval_entries(const std::vector<mpz_class>& entries);
Rational cf_eval(const ContinuedFraction& cf);

// The unique even-type expansion of beta/alpha (alpha, beta odd, coprime,
// 0 < |beta| < alpha).
ContinuedFraction even_cf(const Rational& r);

// Decides membership of K(r) in H(p) by the recursive admissibility rules on
// the even-type expansion.
bool is_p_admissible(const Rational& r, long p);

// Constructs a PType expansion of r, or nullopt when r is not p-admissible.
// The construction is verified by re-evaluating the result against r.
std::optional<ContinuedFraction> to_p_expansion(const Rational& r, long p);

// Reduces every multiple-of-p entry mod 4p into {p,2p,3p} (0 triggering a
// merge), merging zero entries to a fixpoint. Output entries satisfy
// k_j in {1,2,3} and m_j != 0, or the result is a base case [0],[p],[2p],[3p].
// Preserves the knot type, not the continued-fraction value.
ContinuedFraction normalize_mod4(const ContinuedFraction& cf, long p);

} // namespace twobridge

#pragma once

#include "twobridge/intpoly.hpp"
#include "twobridge/matrix.hpp"
#include "twobridge/rational.hpp"
#include "twobridge/ring.hpp"

#include <map>
#include <vector>

namespace twobridge {

// One letter of the bridge word: x or y with exponent +-1.
struct BridgeLetter {
    bool is_x;
    int exponent;
    auto operator<=>(const BridgeLetter&) const = default;
};

// W = x^e1 y^e2 x^e3 ... of length alpha-1, e_k = (-1)^floor(k*beta/alpha).
struct BridgeWord {
    std::vector<BridgeLetter> letters;
    mpz_class alpha, beta;
};

BridgeWord build_word(const Rational& r);

// The (1,1) entry a(z) of rho(W) over Z[z], with rho(x) = [[1,1],[0,1]] and
// rho(y) = [[1,0],[z,1]]. Monic of degree (alpha-1)/2 with a(0) = 1.
IntPoly rep_polynomial(const Rational& r);

// a_n(z) = sum_{k=0}^n binom(n+k, 2k) z^k; equals rep_polynomial(1/(2n+1)).
IntPoly a_n_closed(int n);

// chi_s for every odd divisor s >= 3 of p, by recursive exact division of
// a_{(s-1)/2} by the chi of proper divisors. chi_p itself is included.
std::map<long, IntPoly> chi_tower(long p);

// Entries of (XY)^k = [[a,b],[c,d]] over the ring, X = rho(x), Y = rho(y) at
// z = s0.
struct XYEntries {
    long k;
    RingElement a, b, c, d;
};

XYEntries xy_entries(long k, const RingPtr& ring);

// b_k = sum_{j=0}^{k-1} binom(k+j, 2j+1) s0^j; equals xy_entries(k, ring).b.
RingElement b_k_closed(long k, const RingPtr& ring);

// Companion matrix of monic theta: subdiagonal ones, negated non-leading
// coefficients in the last column.
MatD companion_matrix(const IntPoly& theta);

} // namespace twobridge

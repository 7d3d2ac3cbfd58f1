#pragma once

#include "twobridge/intpoly.hpp"
#include "twobridge/rational.hpp"

#include <optional>

namespace twobridge {

struct SWVerdict {
    bool pow2_ok = false;        // |D(1)| == 2^d
    std::optional<mpz_class> N;  // present when |D(-1)| == 2^d N^2 exactly
};

struct TotalResult {
    IntPoly D;  // canonical: nonzero constant term, D(1) > 0
    IntPoly theta;
    int d = 0;
    mpz_class at_1, at_neg1;
    SWVerdict sw_verdict;
};

// D = det Psi(dR/dx) / det(Psi(y) - I) over the 2d-dimensional representation
// Psi(x) = [[E,E],[0,E]] t, Psi(y) = [[E,0],[C,E]] t with C the companion
// matrix of theta; denominator (t-1)^(2d). theta must be monic, squarefree,
// and divide rep_polynomial(r). With cross_check the d x d route (substitute
// C into the ring-valued coefficients, then take the determinant) must agree.
TotalResult total_twisted(const Rational& r, const IntPoly& theta, bool cross_check = false);

// theta = rep_polynomial(r)
TotalResult total_twisted(const Rational& r);

// D for K(1/p) twisted by chi_q, q | p, via the torus closed forms:
// proper divisors reduce to total_torus(q, q); prime p is
// (1+t^2)(1+t^(4n+2))^(n-1); composite p divides that product by the
// proper-divisor values.
IntPoly total_torus(long p, long q_divisor);

SWVerdict silver_williams_check(const TotalResult& res);

} // namespace twobridge

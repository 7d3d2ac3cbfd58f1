#pragma once

#include "twobridge/laurent.hpp"
#include "twobridge/matrix.hpp"
#include "twobridge/parabolic.hpp"
#include "twobridge/rational.hpp"

#include <utility>
#include <vector>

namespace twobridge {

// Word in the free group on x, y; every letter carries exponent +-1.
using Word = std::vector<BridgeLetter>;

Word free_reduce(Word w);

// Relator W x W^-1 y^-1 of the two-generator presentation; freely reduced.
Word relator_word(const BridgeWord& w);

// Integer combination of freely reduced words; no zero coefficients,
// no duplicate words.
struct GroupRingElement {
    std::vector<std::pair<mpz_class, Word>> terms;
};

GroupRingElement fox_derivative(const Word& rel, char gen);

// Phi sends x -> rho(x) t, y -> rho(y) t and extends linearly.
Mat2<LaurentPoly> phi_image(const GroupRingElement& e, const RingPtr& ring);

enum class SignEpsilon { Plus, Minus, Unresolved };

struct TwistedResult {
    LaurentPoly delta;   // canonical: lowest exponent 0
    RingPtr ring;
    Rational r;
    SignEpsilon sign_epsilon = SignEpsilon::Unresolved;
};

// delta = det Phi(dR/dx) / det(Phi(y) - I), denominator (t-1)^2.
// The division is exact exactly when theta divides rep_polynomial(r).
TwistedResult twisted_alexander(const Rational& r, const IntPoly& theta);

// b_1 + b_2 t^2 + ... + b_n t^(2n-2) + b_n t^2n + ... + b_1 t^(4n-2),
// the torus-knot value for r = 1/p over a ring with modulus chi_q, q | p.
LaurentPoly twisted_alexander_torus(long p, const RingPtr& ring);

// lambda = delta_{K(r)} / delta_{K(1/p)} over Z[z]/chi_q, canonicalized and
// sign-normalized so lambda(1) = +1. q_divisor = 0 selects q = p.
LaurentPoly lambda(const Rational& r, long p, long q_divisor = 0);

// 1 - t + t^2 - ... + t^(q-1)
IntPoly classical_alexander_torus(long q);

struct TheoremAReport {
    RingPtr ring;
    RingElement delta_at_1;     // eps * delta(1); equals -2/s0
    RingElement delta_at_neg1;  // eps * delta(-1)
    RingElement lambda_at_1;    // equals 1
    RingElement lambda_at_neg1;
    RingElement mu_value;
    bool mu_squared_match = false;
};

// Resolves eps by eps*delta(1) = -2/s0, then checks
// eps*delta(-1) = -2/s0 * mu^2 and lambda(-1) = mu^2.
TheoremAReport theorem_a_check(const Rational& r, long p, long q_divisor = 0);

} // namespace twobridge

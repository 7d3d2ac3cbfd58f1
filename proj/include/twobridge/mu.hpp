#pragma once

#include "twobridge/contfrac.hpp"
#include "twobridge/rational.hpp"
#include "twobridge/ring.hpp"

#include <string>
#include <vector>

namespace twobridge {

// Weight table: sigma(1,.) = (4,-8,-4,-8), sigma(2,.) = (8,8,-8,-8),
// sigma(3,.) = (4,8,4,-8) indexed by M = 0..3.
int sigma(int k, int M);

// Recursion tree node; children are r' (last pair dropped) then r^ (last
// pair merged). Values rendered as text so callers can print or serialize.
struct MuTraceNode {
    std::string label;     // "r", "r'", "r^"
    std::string fraction;  // mod-4 normal form at this node
    std::string nu;        // weight on the r' branch; empty at leaves
    std::string value;
    std::vector<MuTraceNode> children;
};

// mu[0] = 0, mu[p] = mu[2p] = mu[3p] = -1,
// mu(r) = nu mu(r') + mu(r^) with nu = m_q b_n sigma(k_{q+1}, M),
// M = sum of the k_j (mod 4) of the normalized fraction.
// Normalizes mod 4 before every step.
RingElement mu(const ContinuedFraction& cf, long p, const RingPtr& ring,
               MuTraceNode* trace = nullptr);
RingElement mu(const Rational& r, long p, const RingPtr& ring,
               MuTraceNode* trace = nullptr);

// Checks the closed forms for mu on [ap,2m,bp] and [p,2m1,ap,2m2,ap]
// against the recursion for m, m1, m2 in {-3..3} \ {0}.
bool mu_closed_forms_check(long p, const RingPtr& ring,
                           std::string* report = nullptr);

struct MuScanHit {
    Rational r;
    ContinuedFraction normal_form;
};

// All p-admissible knot fractions with alpha <= max_alpha and mu = -1,
// with their mod-4 normal forms.
std::vector<MuScanHit> mu_minus_one_scan(long p, long max_alpha);

} // namespace twobridge

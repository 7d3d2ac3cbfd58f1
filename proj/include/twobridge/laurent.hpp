#pragma once

#include "twobridge/intpoly.hpp"
#include "twobridge/ring.hpp"

#include <string>
#include <vector>

namespace twobridge {

// Laurent polynomial in t with coefficients in a quotient ring.
// coeffs ascend from lowest_exponent and end nonzero; zero is empty coeffs with
// lowest_exponent 0.
struct LaurentPoly {
    RingPtr ring;
    long lowest_exponent = 0;
    std::vector<RingElement> c;

    static LaurentPoly zero(const RingPtr& ring);
    static LaurentPoly make(const RingPtr& ring, long low, std::vector<RingElement> coeffs);

    bool is_zero() const { return c.empty(); }
    long highest_exponent() const { return lowest_exponent + static_cast<long>(c.size()) - 1; }
    RingElement coeff(long e) const;

    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const RingElement& k) const;

    // Multiplies by t^k.
    LaurentPoly shifted(long k) const;
    // Same coefficients with lowest_exponent 0.
    LaurentPoly canonical() const;

    // Text like "-(4 + s0^2) + 4*t - (4 + s0^2)*t^2"; ring coefficients with more
    // than one term are parenthesized.
    std::string str(const std::string& var = "t", const std::string& ring_var = "s0") const;
};

// Laurent polynomial with integer coefficients placed at exponents low, low+1, ...
LaurentPoly lp_from_ints(const RingPtr& ring, long low, const std::vector<long>& coeffs);
// Integer polynomial in t viewed over the ring, lowest exponent 0.
LaurentPoly lp_from_intpoly(const RingPtr& ring, const IntPoly& p);

// Exact quotient a / b, canonicalized to lowest_exponent 0 (the unit-power part
// of the quotient is discarded). Throws InexactDivision when b does not divide a.
LaurentPoly laurent_exact_div(const LaurentPoly& a, const LaurentPoly& b);

// Evaluation at t = 1 or t = -1 only.
RingElement laurent_eval(const LaurentPoly& p, int t);

// Equality up to multiplication by a unit +-t^k.
bool laurent_eq_up_to_unit(const LaurentPoly& a, const LaurentPoly& b);

} // namespace twobridge

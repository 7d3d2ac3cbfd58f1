#pragma once

#include <gmpxx.h>

#include <string>

namespace twobridge {

// Reduced fraction with positive denominator. numerator may be negative.
struct Rational {
    mpz_class num;
    mpz_class den;

    Rational() : num(0), den(1) {}
    Rational(mpz_class n, mpz_class d);
    Rational(long n, long d) : Rational(mpz_class(n), mpz_class(d)) {}

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return num * o.den < o.num * den; }

    std::string str() const;
};

// Parses "beta/alpha"; also accepts a bare integer as n/1.
Rational parse_rational(const std::string& text);

// alpha, beta odd and coprime with 0 < |beta| < alpha (continued-fraction domain).
bool is_valid_cf_rational(const Rational& r);

// Additionally requires beta > 0 (the 2-bridge parameter range 0 < r < 1).
bool is_valid_knot_rational(const Rational& r);

// Throwing variants used at API boundaries.
void require_cf_rational(const Rational& r);
void require_knot_rational(const Rational& r);

} // namespace twobridge

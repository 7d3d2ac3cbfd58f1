#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace twobridge {

// Integer polynomial, ascending coefficients, index = degree.
// Leading coefficient nonzero unless the zero polynomial (empty list).
struct IntPoly {
    std::vector<mpz_class> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs) : c(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<long> coeffs);

    void trim();
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for zero
    bool is_monic() const { return !c.empty() && c.back() == 1; }
    const mpz_class& leading() const { return c.back(); }
    mpz_class coeff(int i) const { return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : mpz_class(0); }

    bool operator==(const IntPoly& o) const { return c == o.c; }
    bool operator!=(const IntPoly& o) const { return c != o.c; }

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const mpz_class& k) const;

    mpz_class eval(const mpz_class& x) const;
    IntPoly derivative() const;
    IntPoly dilate(int k) const;  // substitutes t -> t^k
    IntPoly pow(unsigned e) const;

    // Ascending text with explicit signs, e.g. "1 - 4*t + t^2".
    std::string str(const std::string& var = "t") const;
};

// Exact product (alias kept as the public operation name).
IntPoly poly_mul(const IntPoly& p, const IntPoly& q);

// Quotient h with p = q*h exactly; throws InexactDivision otherwise.
IntPoly poly_exact_div(const IntPoly& p, const IntPoly& q);

// Remainder of p modulo monic q.
IntPoly poly_mod_monic(const IntPoly& p, const IntPoly& q);

// gcd over Q up to scalar, returned primitive with positive leading
// coefficient. Only the degree is contractually meaningful.
IntPoly poly_gcd(IntPoly a, IntPoly b);

// Equality up to an overall sign and a power of the variable.
bool poly_eq_up_to_unit(const IntPoly& a, const IntPoly& b);

} // namespace twobridge

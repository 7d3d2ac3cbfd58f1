#pragma once

#include "twobridge/intpoly.hpp"

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace twobridge {

// Z[z]/(modulus), modulus monic of degree d >= 1.
struct QuotientRing {
    IntPoly modulus;
    int d;

    static std::shared_ptr<const QuotientRing> make(IntPoly modulus);

private:
    explicit QuotientRing(IntPoly m) : modulus(std::move(m)), d(modulus.degree()) {}
};

using RingPtr = std::shared_ptr<const QuotientRing>;

// Canonical representative of degree < d; coeffs always has size d.
struct RingElement {
    RingPtr ring;
    std::vector<mpz_class> c;

    bool is_zero() const;
    bool operator==(const RingElement& o) const;
    bool operator!=(const RingElement& o) const { return !(*this == o); }

    RingElement operator-() const;
    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator*(const RingElement& o) const;
    RingElement operator*(const mpz_class& k) const;
    RingElement& operator+=(const RingElement& o);
    RingElement& operator-=(const RingElement& o);

    // Text in the generator symbol, ascending: "-25 - 32*s0 - 8*s0^2".
    std::string str(const std::string& var = "s0") const;
    // True when the representative is a constant integer.
    bool is_constant() const;
};

RingElement re_zero(const RingPtr& ring);
RingElement re_one(const RingPtr& ring);
RingElement re_int(const RingPtr& ring, const mpz_class& k);
RingElement re_int(const RingPtr& ring, long k);
// The class of the generator z (the algebraic number s0).
RingElement re_s0(const RingPtr& ring);
// Reduction of an arbitrary integer polynomial in the generator.
RingElement re_from_poly(const RingPtr& ring, const IntPoly& p);

// Reduces a raw ascending coefficient list modulo the ring modulus.
RingElement ring_reduce(const std::vector<mpz_class>& raw, const RingPtr& ring);

// Multiplicative inverse with integer representative; throws NotInvertible.
RingElement ring_inverse(const RingElement& e);
std::optional<RingElement> ring_inverse_opt(const RingElement& e);

} // namespace twobridge

#include "twobridge/ring.hpp"

#include "twobridge/errors.hpp"
#include "twobridge/qlift.hpp"

#include <algorithm>

namespace twobridge {

namespace {

void check_same_ring(const RingElement& a, const RingElement& b) {
    if (!a.ring || !b.ring || !(a.ring == b.ring || a.ring->modulus == b.ring->modulus))
        throw InternalVerificationFailure("ring mismatch in element arithmetic");
}

} // namespace

std::shared_ptr<const QuotientRing> QuotientRing::make(IntPoly modulus) {
    if (modulus.degree() < 1) throw InvalidInput("ring modulus must have degree >= 1");
    if (!modulus.is_monic()) throw InvalidInput("ring modulus must be monic");
    return std::shared_ptr<const QuotientRing>(new QuotientRing(std::move(modulus)));
}

bool RingElement::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const mpz_class& v) { return v == 0; });
}

bool RingElement::operator==(const RingElement& o) const {
    check_same_ring(*this, o);
    return c == o.c;
}

RingElement RingElement::operator-() const {
    RingElement r = *this;
    for (auto& v : r.c) v = -v;
    return r;
}

RingElement RingElement::operator+(const RingElement& o) const {
    RingElement r = *this;
    r += o;
    return r;
}

RingElement RingElement::operator-(const RingElement& o) const {
    RingElement r = *this;
    r -= o;
    return r;
}

RingElement& RingElement::operator+=(const RingElement& o) {
    check_same_ring(*this, o);
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
    check_same_ring(*this, o);
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
}

RingElement RingElement::operator*(const RingElement& o) const {
    check_same_ring(*this, o);
    const int d = ring->d;
    std::vector<mpz_class> raw(2 * d - 1, mpz_class(0));
    for (int i = 0; i < d; ++i) {
        if (c[i] == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (o.c[j] == 0) continue;
            raw[i + j] += c[i] * o.c[j];
        }
    }
    return ring_reduce(raw, ring);
}

RingElement RingElement::operator*(const mpz_class& k) const {
    RingElement r = *this;
    for (auto& v : r.c) v *= k;
    return r;
}

std::string RingElement::str(const std::string& var) const {
    IntPoly p;
    p.c = c;
    p.trim();
    return p.str(var);
}

bool RingElement::is_constant() const {
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return false;
    return true;
}

RingElement re_zero(const RingPtr& ring) {
    return RingElement{ring, std::vector<mpz_class>(ring->d, mpz_class(0))};
}

RingElement re_one(const RingPtr& ring) { return re_int(ring, 1); }

RingElement re_int(const RingPtr& ring, const mpz_class& k) {
    RingElement r = re_zero(ring);
    r.c[0] = k;
    return r;
}

RingElement re_int(const RingPtr& ring, long k) { return re_int(ring, mpz_class(k)); }

RingElement re_s0(const RingPtr& ring) {
    return ring_reduce({mpz_class(0), mpz_class(1)}, ring);
}

RingElement re_from_poly(const RingPtr& ring, const IntPoly& p) {
    return ring_reduce(p.c, ring);
}

RingElement ring_reduce(const std::vector<mpz_class>& raw, const RingPtr& ring) {
    IntPoly p;
    p.c = raw;
    p.trim();
    IntPoly r = poly_mod_monic(p, ring->modulus);
    RingElement e = {ring, std::vector<mpz_class>(ring->d, mpz_class(0))};
    for (size_t i = 0; i < r.c.size(); ++i) e.c[i] = r.c[i];
    return e;
}

std::optional<RingElement> ring_inverse_opt(const RingElement& e) {
    if (e.is_zero()) return std::nullopt;
    auto inv = qlift::inverse(qlift::lift(e), e.ring->modulus);
    if (!inv) return std::nullopt;
    return qlift::to_elem(*inv, e.ring); // nullopt when the inverse is not integral
}

RingElement ring_inverse(const RingElement& e) {
    auto inv = ring_inverse_opt(e);
    if (!inv) throw NotInvertible("element has no integer inverse in the quotient ring");
    return *inv;
}

} // namespace twobridge

#include "twobridge/laurent.hpp"

#include "twobridge/errors.hpp"
#include "twobridge/qlift.hpp"

#include <algorithm>

namespace twobridge {

namespace {

void check_same_ring(const LaurentPoly& a, const LaurentPoly& b) {
    if (!a.ring || !b.ring || !(a.ring == b.ring || a.ring->modulus == b.ring->modulus))
        throw InternalVerificationFailure("ring mismatch in Laurent arithmetic");
}

int nonzero_terms(const RingElement& e) {
    int n = 0;
    for (const auto& v : e.c)
        if (v != 0) ++n;
    return n;
}

bool all_terms_negative(const RingElement& e) {
    bool any = false;
    for (const auto& v : e.c) {
        if (v > 0) return false;
        if (v < 0) any = true;
    }
    return any;
}

} // namespace

LaurentPoly LaurentPoly::zero(const RingPtr& ring) { return LaurentPoly{ring, 0, {}}; }

LaurentPoly LaurentPoly::make(const RingPtr& ring, long low, std::vector<RingElement> coeffs) {
    size_t lead = 0;
    while (lead < coeffs.size() && coeffs[lead].is_zero()) ++lead;
    if (lead == coeffs.size()) return zero(ring);
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(lead));
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    return LaurentPoly{ring, low + static_cast<long>(lead), std::move(coeffs)};
}

RingElement LaurentPoly::coeff(long e) const {
    if (is_zero() || e < lowest_exponent || e > highest_exponent()) return re_zero(ring);
    return c[static_cast<size_t>(e - lowest_exponent)];
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    check_same_ring(*this, o);
    if (lowest_exponent != o.lowest_exponent && !is_zero()) return false;
    return c == o.c;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& v : r.c) v = -v;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    check_same_ring(*this, o);
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    long low = std::min(lowest_exponent, o.lowest_exponent);
    long high = std::max(highest_exponent(), o.highest_exponent());
    std::vector<RingElement> sum(static_cast<size_t>(high - low + 1), re_zero(ring));
    for (size_t i = 0; i < c.size(); ++i)
        sum[static_cast<size_t>(lowest_exponent - low) + i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i)
        sum[static_cast<size_t>(o.lowest_exponent - low) + i] += o.c[i];
    return make(ring, low, std::move(sum));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_same_ring(*this, o);
    if (is_zero() || o.is_zero()) return zero(ring);
    std::vector<RingElement> prod(c.size() + o.c.size() - 1, re_zero(ring));
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        for (size_t j = 0; j < o.c.size(); ++j) {
            if (o.c[j].is_zero()) continue;
            prod[i + j] += c[i] * o.c[j];
        }
    }
    return make(ring, lowest_exponent + o.lowest_exponent, std::move(prod));
}

LaurentPoly LaurentPoly::operator*(const RingElement& k) const {
    std::vector<RingElement> prod;
    prod.reserve(c.size());
    for (const auto& v : c) prod.push_back(v * k);
    return make(ring, lowest_exponent, std::move(prod));
}

LaurentPoly LaurentPoly::shifted(long k) const {
    if (is_zero()) return *this;
    LaurentPoly r = *this;
    r.lowest_exponent += k;
    return r;
}

LaurentPoly LaurentPoly::canonical() const {
    LaurentPoly r = *this;
    r.lowest_exponent = 0;
    return r;
}

std::string LaurentPoly::str(const std::string& var, const std::string& ring_var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (size_t i = 0; i < c.size(); ++i) {
        const RingElement& e = c[i];
        if (e.is_zero()) continue;
        long exp = lowest_exponent + static_cast<long>(i);
        bool neg = false;
        bool is_one = false;
        std::string body;
        if (e.is_constant()) {
            mpz_class v = e.c[0];
            neg = v < 0;
            mpz_class av = abs(v);
            is_one = av == 1;
            body = av.get_str();
        } else if (all_terms_negative(e)) {
            neg = true;
            RingElement m = -e;
            body = nonzero_terms(m) > 1 ? "(" + m.str(ring_var) + ")" : m.str(ring_var);
        } else {
            body = nonzero_terms(e) > 1 ? "(" + e.str(ring_var) + ")" : e.str(ring_var);
        }
        std::string term;
        if (exp == 0) {
            term = body;
        } else {
            std::string vp = exp == 1 ? var : var + "^" + std::to_string(exp);
            term = is_one ? vp : body + "*" + vp;
        }
        if (first) {
            out = (neg ? "-" : "") + term;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + term;
        }
    }
    return out;
}

LaurentPoly lp_from_ints(const RingPtr& ring, long low, const std::vector<long>& coeffs) {
    std::vector<RingElement> v;
    v.reserve(coeffs.size());
    for (long k : coeffs) v.push_back(re_int(ring, k));
    return LaurentPoly::make(ring, low, std::move(v));
}

LaurentPoly lp_from_intpoly(const RingPtr& ring, const IntPoly& p) {
    std::vector<RingElement> v;
    v.reserve(p.c.size());
    for (const auto& k : p.c) v.push_back(re_int(ring, k));
    return LaurentPoly::make(ring, 0, std::move(v));
}

LaurentPoly laurent_exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    check_same_ring(a, b);
    if (b.is_zero()) throw InexactDivision("division by zero Laurent polynomial");
    if (a.is_zero()) return LaurentPoly::zero(a.ring);
    const size_t n = a.c.size(), m = b.c.size();
    if (n < m) throw InexactDivision("divisor has more terms than dividend");
    const IntPoly& theta = a.ring->modulus;
    std::vector<qlift::QPoly> W(n), B(m);
    for (size_t i = 0; i < n; ++i) W[i] = qlift::lift(a.c[i]);
    for (size_t i = 0; i < m; ++i) B[i] = qlift::lift(b.c[i]);
    auto linv = qlift::inverse(B[m - 1], theta);
    if (!linv) throw InexactDivision("divisor leading coefficient is a zero divisor");
    const size_t qn = n - m + 1;
    std::vector<RingElement> quot(qn, re_zero(a.ring));
    for (size_t j = qn; j-- > 0;) {
        qlift::QPoly qc = qlift::mul(W[j + m - 1], *linv, theta);
        auto e = qlift::to_elem(qc, a.ring);
        if (!e) throw InexactDivision("quotient is not integral");
        quot[j] = *e;
        if (qlift::is_zero(qc)) continue;
        for (size_t i = 0; i < m; ++i) W[j + i] = qlift::sub(W[j + i], qlift::mul(qc, B[i], theta));
    }
    for (size_t i = 0; i + 1 < m; ++i)
        if (!qlift::is_zero(W[i])) throw InexactDivision("nonzero remainder in Laurent division");
    return LaurentPoly::make(a.ring, 0, std::move(quot)).canonical();
}

RingElement laurent_eval(const LaurentPoly& p, int t) {
    if (t != 1 && t != -1) throw InvalidInput("Laurent evaluation supported only at t = 1 or t = -1");
    RingElement sum = re_zero(p.ring);
    for (size_t i = 0; i < p.c.size(); ++i) {
        long exp = p.lowest_exponent + static_cast<long>(i);
        if (t == -1 && (exp % 2 != 0)) sum -= p.c[i];
        else sum += p.c[i];
    }
    return sum;
}

bool laurent_eq_up_to_unit(const LaurentPoly& a, const LaurentPoly& b) {
    check_same_ring(a, b);
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.c.size() != b.c.size()) return false;
    bool plus = true, minus = true;
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] != b.c[i]) plus = false;
        if (a.c[i] != -b.c[i]) minus = false;
        if (!plus && !minus) return false;
    }
    return plus || minus;
}

} // namespace twobridge

#include "twobridge/qlift.hpp"

namespace twobridge::qlift {

namespace {

// Division with remainder over Q[z]; divisor nonzero.
void qdivmod(QPoly a, const QPoly& b, QPoly& quot, QPoly& rem) {
    quot.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, mpq_class(0));
    while (a.size() >= b.size() && !a.empty()) {
        mpq_class u = a.back() / b.back();
        size_t shift = a.size() - b.size();
        quot[shift] = u;
        for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= u * b[j];
        trim(a);
    }
    trim(quot);
    rem = std::move(a);
}

} // namespace

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

bool is_zero(const QPoly& p) {
    for (const auto& v : p)
        if (v != 0) return false;
    return true;
}

QPoly lift(const RingElement& e) {
    QPoly r;
    r.reserve(e.c.size());
    for (const auto& v : e.c) r.emplace_back(v);
    trim(r);
    return r;
}

QPoly reduce(QPoly raw, const IntPoly& modulus) {
    trim(raw);
    QPoly m;
    m.reserve(modulus.c.size());
    for (const auto& v : modulus.c) m.emplace_back(v);
    QPoly quot, rem;
    if (raw.size() < m.size()) return raw;
    qdivmod(std::move(raw), m, quot, rem);
    return rem;
}

QPoly sub(const QPoly& a, const QPoly& b) {
    QPoly r = a;
    if (b.size() > r.size()) r.resize(b.size(), mpq_class(0));
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

QPoly mul(const QPoly& a, const QPoly& b, const IntPoly& modulus) {
    if (a.empty() || b.empty()) return {};
    QPoly prod(a.size() + b.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
    return reduce(std::move(prod), modulus);
}

std::optional<QPoly> inverse(const QPoly& a, const IntPoly& modulus) {
    if (is_zero(a)) return std::nullopt;
    // Extended Euclid on (modulus, a), tracking only the coefficient of a.
    QPoly r0;
    r0.reserve(modulus.c.size());
    for (const auto& v : modulus.c) r0.emplace_back(v);
    QPoly r1 = a;
    trim(r1);
    QPoly u0{}, u1{mpq_class(1)};
    while (!r1.empty()) {
        QPoly q, rem;
        qdivmod(r0, r1, q, rem);
        // u2 = u0 - q*u1
        QPoly prod;
        if (!q.empty() && !u1.empty()) {
            prod.assign(q.size() + u1.size() - 1, mpq_class(0));
            for (size_t i = 0; i < q.size(); ++i)
                for (size_t j = 0; j < u1.size(); ++j) prod[i + j] += q[i] * u1[j];
        }
        QPoly u2 = sub(u0, prod);
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r0.size() != 1) return std::nullopt; // nonconstant gcd: zero divisor
    QPoly inv = std::move(u0);
    for (auto& v : inv) v /= r0[0];
    return reduce(std::move(inv), modulus);
}

std::optional<RingElement> to_elem(const QPoly& p, const RingPtr& ring) {
    std::vector<mpz_class> coeffs(ring->d, mpz_class(0));
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i].get_den() != 1) return std::nullopt;
        if (i >= coeffs.size()) {
            if (p[i] != 0) return std::nullopt;
            continue;
        }
        coeffs[i] = p[i].get_num();
    }
    return RingElement{ring, std::move(coeffs)};
}

} // namespace twobridge::qlift

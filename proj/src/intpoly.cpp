#include "twobridge/intpoly.hpp"

#include "twobridge/errors.hpp"

#include <algorithm>

namespace twobridge {

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    trim();
}

void IntPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& v : r.c) v = -v;
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly r;
    r.c.resize(std::max(c.size(), o.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) {
        if (i < c.size()) r.c[i] += c[i];
        if (i < o.c.size()) r.c[i] += o.c[i];
    }
    r.trim();
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    IntPoly r;
    r.c.assign(c.size() + o.c.size() - 1, mpz_class(0));
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (size_t j = 0; j < o.c.size(); ++j) {
            if (o.c[j] == 0) continue;
            r.c[i + j] += c[i] * o.c[j];
        }
    }
    r.trim();
    return r;
}

IntPoly IntPoly::operator*(const mpz_class& k) const {
    if (k == 0) return IntPoly();
    IntPoly r = *this;
    for (auto& v : r.c) v *= k;
    return r;
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::derivative() const {
    IntPoly r;
    for (size_t i = 1; i < c.size(); ++i) r.c.push_back(c[i] * static_cast<long>(i));
    r.trim();
    return r;
}

IntPoly IntPoly::dilate(int k) const {
    if (is_zero()) return IntPoly();
    IntPoly r;
    r.c.assign(static_cast<size_t>(degree()) * k + 1, mpz_class(0));
    for (size_t i = 0; i < c.size(); ++i) r.c[i * k] = c[i];
    r.trim();
    return r;
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly r{1};
    IntPoly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        mpz_class a = abs(c[i]);
        bool neg = c[i] < 0;
        std::string term;
        if (i == 0) {
            term = a.get_str();
        } else {
            std::string power = (i == 1) ? var : var + "^" + std::to_string(i);
            term = (a == 1) ? power : a.get_str() + "*" + power;
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

IntPoly poly_mul(const IntPoly& p, const IntPoly& q) { return p * q; }

IntPoly poly_exact_div(const IntPoly& p, const IntPoly& q) {
    if (q.is_zero()) throw InexactDivision("division by zero polynomial");
    if (p.is_zero()) return IntPoly();
    if (p.degree() < q.degree()) throw InexactDivision("degree of divisor exceeds dividend");
    std::vector<mpz_class> rem = p.c;
    std::vector<mpz_class> quot(p.c.size() - q.c.size() + 1, mpz_class(0));
    const auto& qc = q.c;
    for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
        mpz_class& lead = rem[i + qc.size() - 1];
        if (lead == 0) continue;
        mpz_class u, r;
        mpz_fdiv_qr(u.get_mpz_t(), r.get_mpz_t(), lead.get_mpz_t(), qc.back().get_mpz_t());
        if (r != 0) throw InexactDivision("nonzero remainder in polynomial division");
        quot[i] = u;
        for (size_t j = 0; j < qc.size(); ++j) rem[i + j] -= u * qc[j];
    }
    for (const auto& v : rem)
        if (v != 0) throw InexactDivision("nonzero remainder in polynomial division");
    IntPoly h;
    h.c = std::move(quot);
    h.trim();
    return h;
}

IntPoly poly_mod_monic(const IntPoly& p, const IntPoly& q) {
    if (!q.is_monic()) throw InvalidInput("modulus must be monic");
    std::vector<mpz_class> rem = p.c;
    int d = q.degree();
    for (int i = static_cast<int>(rem.size()) - 1; i >= d; --i) {
        mpz_class u = rem[i];
        if (u == 0) continue;
        for (int j = 0; j <= d; ++j) rem[i - d + j] -= u * q.c[j];
    }
    rem.resize(std::min<size_t>(rem.size(), d));
    IntPoly r;
    r.c = std::move(rem);
    r.trim();
    return r;
}

namespace {

mpz_class content(const IntPoly& p) {
    mpz_class g(0);
    for (const auto& v : p.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
}

IntPoly primitive(IntPoly p) {
    mpz_class g = content(p);
    if (g > 1)
        for (auto& v : p.c) v /= g;
    if (!p.is_zero() && p.leading() < 0)
        for (auto& v : p.c) v = -v;
    return p;
}

// Pseudo-remainder of a by b (b nonzero, deg a >= deg b allowed to fail softly).
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
    int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        int shift = a.degree() - db;
        mpz_class lead = a.leading();
        IntPoly scaled = a * b.leading();
        IntPoly sub;
        sub.c.assign(shift, mpz_class(0));
        for (const auto& v : b.c) sub.c.push_back(v * lead);
        sub.trim();
        a = scaled - sub;
    }
    return a;
}

} // namespace

IntPoly poly_gcd(IntPoly a, IntPoly b) {
    a = primitive(std::move(a));
    b = primitive(std::move(b));
    while (!b.is_zero()) {
        IntPoly r = primitive(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool poly_eq_up_to_unit(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    auto strip = [](const IntPoly& p) {
        size_t v = 0;
        while (v < p.c.size() && p.c[v] == 0) ++v;
        IntPoly r;
        r.c.assign(p.c.begin() + v, p.c.end());
        return r;
    };
    IntPoly sa = strip(a), sb = strip(b);
    return sa == sb || sa == -sb;
}

} // namespace twobridge

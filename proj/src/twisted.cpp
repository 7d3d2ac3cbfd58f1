#include "twobridge/twisted.hpp"

#include "twobridge/contfrac.hpp"
#include "twobridge/errors.hpp"
#include "twobridge/mu.hpp"

#include <map>

namespace twobridge {

namespace {

Mat2<RingElement> rho_letter(const BridgeLetter& l, const RingPtr& ring) {
    RingElement one = re_one(ring), zero = re_zero(ring);
    if (l.is_x) return {one, re_int(ring, l.exponent), zero, one};
    RingElement s = re_s0(ring);
    return {one, zero, l.exponent == 1 ? s : -s, one};
}

Mat2<RingElement> ring_identity(const RingPtr& ring) {
    return {re_one(ring), re_zero(ring), re_zero(ring), re_one(ring)};
}

// Phi(dR/dx) for the relator, walking prefixes once. Every prefix image is
// a ring matrix times a single power of t, so the accumulator is indexed by
// that exponent.
Mat2<LaurentPoly> fox_x_image(const Word& rel, const RingPtr& ring) {
    std::map<long, Mat2<RingElement>> slots;
    auto add = [&](long tau, const Mat2<RingElement>& m, int sign) {
        RingElement zero = re_zero(ring);
        auto [it, fresh] = slots.try_emplace(tau, Mat2<RingElement>{zero, zero, zero, zero});
        Mat2<RingElement>& v = it->second;
        if (sign > 0) {
            v.a += m.a;
            v.b += m.b;
            v.c += m.c;
            v.d += m.d;
        } else {
            v.a -= m.a;
            v.b -= m.b;
            v.c -= m.c;
            v.d -= m.d;
        }
    };
    Mat2<RingElement> pre = ring_identity(ring);
    long tau = 0;
    for (const auto& l : rel) {
        if (l.is_x && l.exponent == 1) {
            add(tau, pre, 1);
            pre = mat_mul(pre, rho_letter(l, ring));
            ++tau;
        } else if (l.is_x) {
            pre = mat_mul(pre, rho_letter(l, ring));
            --tau;
            add(tau, pre, -1);
        } else {
            pre = mat_mul(pre, rho_letter(l, ring));
            tau += l.exponent;
        }
    }
    LaurentPoly z = LaurentPoly::zero(ring);
    if (slots.empty()) return {z, z, z, z};
    long lo = slots.begin()->first;
    long hi = slots.rbegin()->first;
    size_t span = static_cast<size_t>(hi - lo + 1);
    std::vector<RingElement> ca(span, re_zero(ring)), cb = ca, cc = ca, cd = ca;
    for (const auto& [e, m] : slots) {
        size_t i = static_cast<size_t>(e - lo);
        ca[i] = m.a;
        cb[i] = m.b;
        cc[i] = m.c;
        cd[i] = m.d;
    }
    return {LaurentPoly::make(ring, lo, std::move(ca)),
            LaurentPoly::make(ring, lo, std::move(cb)),
            LaurentPoly::make(ring, lo, std::move(cc)),
            LaurentPoly::make(ring, lo, std::move(cd))};
}

} // namespace

Word free_reduce(Word w) {
    Word out;
    out.reserve(w.size());
    for (const auto& l : w) {
        if (!out.empty() && out.back().is_x == l.is_x && out.back().exponent == -l.exponent)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word relator_word(const BridgeWord& w) {
    Word rel;
    rel.reserve(2 * w.letters.size() + 2);
    rel.insert(rel.end(), w.letters.begin(), w.letters.end());
    rel.push_back({true, 1});
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        rel.push_back({it->is_x, -it->exponent});
    rel.push_back({false, -1});
    return rel;
}

GroupRingElement fox_derivative(const Word& rel, char gen) {
    if (gen != 'x' && gen != 'y') throw InvalidInput("fox_derivative generator must be 'x' or 'y'");
    bool want_x = gen == 'x';
    std::map<Word, mpz_class> acc;
    Word prefix;
    prefix.reserve(rel.size());
    for (const auto& l : rel) {
        if (l.exponent != 1 && l.exponent != -1)
            throw InvalidInput("fox_derivative letters must have exponent +-1");
        if (l.is_x == want_x) {
            if (l.exponent == 1) {
                acc[free_reduce(prefix)] += 1;
            } else {
                Word w = prefix;
                w.push_back(l);
                acc[free_reduce(std::move(w))] -= 1;
            }
        }
        prefix.push_back(l);
    }
    GroupRingElement out;
    for (auto& [w, c] : acc)
        if (c != 0) out.terms.emplace_back(c, w);
    return out;
}

Mat2<LaurentPoly> phi_image(const GroupRingElement& e, const RingPtr& ring) {
    LaurentPoly z = LaurentPoly::zero(ring);
    Mat2<LaurentPoly> out{z, z, z, z};
    for (const auto& [coeff, w] : e.terms) {
        Mat2<RingElement> m = ring_identity(ring);
        long tau = 0;
        for (const auto& l : w) {
            m = mat_mul(m, rho_letter(l, ring));
            tau += l.exponent;
        }
        RingElement k = re_int(ring, coeff);
        out.a = out.a + LaurentPoly::make(ring, tau, {m.a * k});
        out.b = out.b + LaurentPoly::make(ring, tau, {m.b * k});
        out.c = out.c + LaurentPoly::make(ring, tau, {m.c * k});
        out.d = out.d + LaurentPoly::make(ring, tau, {m.d * k});
    }
    return out;
}

TwistedResult twisted_alexander(const Rational& r, const IntPoly& theta) {
    require_knot_rational(r);
    RingPtr ring = QuotientRing::make(theta);
    Mat2<LaurentPoly> A = fox_x_image(relator_word(build_word(r)), ring);
    LaurentPoly num = A.a * A.d - A.b * A.c;
    LaurentPoly den = lp_from_ints(ring, 0, {1, -2, 1});
    TwistedResult out;
    out.ring = ring;
    out.r = r;
    try {
        out.delta = laurent_exact_div(num, den);
    } catch (const InexactDivision&) {
        throw InexactDivision(
            "division by (t-1)^2 is not exact; the modulus does not divide the "
            "representation polynomial of " +
            r.str());
    }
    if (auto inv = ring_inverse_opt(re_s0(ring))) {
        RingElement target = *inv * mpz_class(-2);
        RingElement v = laurent_eval(out.delta, 1);
        if (v == target)
            out.sign_epsilon = SignEpsilon::Plus;
        else if (v == -target)
            out.sign_epsilon = SignEpsilon::Minus;
    }
    return out;
}

LaurentPoly twisted_alexander_torus(long p, const RingPtr& ring) {
    if (p < 3 || p % 2 == 0) throw InvalidInput("torus parameter must be odd and at least 3");
    long n = (p - 1) / 2;
    std::vector<RingElement> coeffs(static_cast<size_t>(4 * n - 1), re_zero(ring));
    for (long k = 1; k <= n; ++k) {
        RingElement b = xy_entries(k, ring).b;
        coeffs[static_cast<size_t>(2 * k - 2)] = b;
        coeffs[static_cast<size_t>(4 * n - 2 * k)] = b;
    }
    return LaurentPoly::make(ring, 0, std::move(coeffs));
}

LaurentPoly lambda(const Rational& r, long p, long q_divisor) {
    long q = q_divisor == 0 ? p : q_divisor;
    require_knot_rational(r);
    auto tower = chi_tower(p);
    auto it = tower.find(q);
    if (it == tower.end()) throw InvalidInput("q must be an odd divisor of p, at least 3");
    if (!is_p_admissible(r, p))
        throw NotInHp(r.str() + " is not " + std::to_string(p) + "-admissible");
    RingPtr ring = QuotientRing::make(it->second);
    TwistedResult num = twisted_alexander(r, it->second);
    LaurentPoly lam = laurent_exact_div(num.delta, twisted_alexander_torus(p, ring));
    RingElement v1 = laurent_eval(lam, 1);
    if (v1 == re_one(ring)) return lam;
    if (v1 == -re_one(ring)) return -lam;
    throw InternalVerificationFailure("quotient invariant is not a unit at t = 1");
}

IntPoly classical_alexander_torus(long q) {
    if (q < 3 || q % 2 == 0) throw InvalidInput("torus parameter must be odd and at least 3");
    std::vector<mpz_class> c(static_cast<size_t>(q));
    for (long k = 0; k < q; ++k) c[static_cast<size_t>(k)] = k % 2 == 0 ? 1 : -1;
    return IntPoly(std::move(c));
}

TheoremAReport theorem_a_check(const Rational& r, long p, long q_divisor) {
    long q = q_divisor == 0 ? p : q_divisor;
    auto tower = chi_tower(p);
    auto it = tower.find(q);
    if (it == tower.end()) throw InvalidInput("q must be an odd divisor of p, at least 3");
    auto expansion = to_p_expansion(r, p);
    if (!expansion)
        throw NotInHp(r.str() + " is not " + std::to_string(p) + "-admissible");
    RingPtr ring = QuotientRing::make(it->second);
    TwistedResult tw = twisted_alexander(r, it->second);
    if (tw.sign_epsilon == SignEpsilon::Unresolved)
        throw SignUnresolvable("neither sign of the twisted polynomial matches -2/s0 at t = 1");
    mpz_class eps = tw.sign_epsilon == SignEpsilon::Plus ? 1 : -1;
    TheoremAReport rep;
    rep.ring = ring;
    rep.delta_at_1 = laurent_eval(tw.delta, 1) * eps;
    rep.delta_at_neg1 = laurent_eval(tw.delta, -1) * eps;
    LaurentPoly lam = lambda(r, p, q);
    rep.lambda_at_1 = laurent_eval(lam, 1);
    rep.lambda_at_neg1 = laurent_eval(lam, -1);
    rep.mu_value = mu(*expansion, p, ring);
    RingElement msq = rep.mu_value * rep.mu_value;
    RingElement target = ring_inverse(re_s0(ring)) * mpz_class(-2) * msq;
    rep.mu_squared_match = rep.delta_at_neg1 == target && rep.lambda_at_neg1 == msq;
    return rep;
}

} // namespace twobridge

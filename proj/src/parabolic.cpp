#include "twobridge/parabolic.hpp"

#include "twobridge/errors.hpp"

namespace twobridge {

BridgeWord build_word(const Rational& r) {
    require_knot_rational(r);
    if (!mpz_fits_ulong_p(r.den.get_mpz_t()))
        throw InvalidInput("alpha too large to build the bridge word");
    unsigned long alpha = mpz_get_ui(r.den.get_mpz_t());
    BridgeWord w;
    w.alpha = r.den;
    w.beta = r.num;
    w.letters.reserve(alpha - 1);
    for (unsigned long k = 1; k < alpha; ++k) {
        mpz_class f;
        mpz_class kb = mpz_class(k) * r.num;
        mpz_fdiv_q(f.get_mpz_t(), kb.get_mpz_t(), r.den.get_mpz_t());
        int e = mpz_odd_p(f.get_mpz_t()) ? -1 : 1;
        w.letters.push_back({k % 2 == 1, e});
    }
    return w;
}

IntPoly rep_polynomial(const Rational& r) {
    BridgeWord w = build_word(r);
    const IntPoly one{1}, z{0, 1};
    Mat2<IntPoly> m{one, IntPoly{}, IntPoly{}, one};
    for (const BridgeLetter& l : w.letters) {
        Mat2<IntPoly> g;
        if (l.is_x)
            g = {one, l.exponent == 1 ? one : -one, IntPoly{}, one};
        else
            g = {one, IntPoly{}, l.exponent == 1 ? z : -z, one};
        m = mat_mul(m, g);
    }
    IntPoly a = m.a;
    mpz_class n2 = (w.alpha - 1) / 2;
    if (a.degree() != n2 || !a.is_monic())
        throw InternalVerificationFailure("representation polynomial has wrong shape");
    return a;
}

IntPoly a_n_closed(int n) {
    if (n < 1) throw InvalidInput("a_n requires n >= 1");
    std::vector<mpz_class> c(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        mpz_bin_uiui(c[static_cast<size_t>(k)].get_mpz_t(), static_cast<unsigned long>(n + k),
                     static_cast<unsigned long>(2 * k));
    return IntPoly(std::move(c));
}

std::map<long, IntPoly> chi_tower(long p) {
    if (p < 3 || p % 2 == 0) throw InvalidInput("p must be an odd integer >= 3");
    std::map<long, IntPoly> tower;
    for (long s = 3; s <= p; s += 2) {
        if (p % s != 0) continue;
        IntPoly chi = a_n_closed(static_cast<int>((s - 1) / 2));
        for (const auto& [u, chi_u] : tower)
            if (s % u == 0) chi = poly_exact_div(chi, chi_u);
        tower.emplace(s, std::move(chi));
    }
    return tower;
}

XYEntries xy_entries(long k, const RingPtr& ring) {
    if (k < 0) throw InvalidInput("xy_entries requires k >= 0");
    RingElement s = re_s0(ring), one = re_one(ring);
    XYEntries e{0, one, re_zero(ring), re_zero(ring), one};
    for (long i = 0; i < k; ++i) {
        RingElement a = e.a + s * e.a + s * e.b; // (1+s0)a + s0 b
        RingElement b = e.a + e.b;
        RingElement c = e.c + s * e.c + s * e.d;
        RingElement d = e.c + e.d;
        e = {i + 1, std::move(a), std::move(b), std::move(c), std::move(d)};
    }
    if (e.a * e.d - e.b * e.c != one)
        throw InternalVerificationFailure("power of XY lost unit determinant");
    return e;
}

RingElement b_k_closed(long k, const RingPtr& ring) {
    if (k < 1) throw InvalidInput("b_k requires k >= 1");
    std::vector<mpz_class> c(static_cast<size_t>(k));
    for (long j = 0; j < k; ++j)
        mpz_bin_uiui(c[static_cast<size_t>(j)].get_mpz_t(), static_cast<unsigned long>(k + j),
                     static_cast<unsigned long>(2 * j + 1));
    return re_from_poly(ring, IntPoly(std::move(c)));
}

MatD companion_matrix(const IntPoly& theta) {
    if (!theta.is_monic() || theta.degree() < 1)
        throw InvalidInput("companion matrix requires a monic polynomial of degree >= 1");
    size_t d = static_cast<size_t>(theta.degree());
    MatD m(d, std::vector<IntPoly>(d));
    for (size_t i = 0; i < d; ++i) {
        if (i + 1 < d) m[i + 1][i] = IntPoly{1};
        m[i][d - 1] = IntPoly(std::vector<mpz_class>{-theta.c[i]});
    }
    return m;
}

} // namespace twobridge

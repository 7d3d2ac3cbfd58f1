#include "twobridge/total.hpp"

#include "twobridge/errors.hpp"
#include "twobridge/matrix.hpp"
#include "twobridge/parabolic.hpp"
#include "twobridge/twisted.hpp"

#include <map>
#include <vector>

namespace twobridge {

namespace {

using ZMat = std::vector<std::vector<mpz_class>>;

ZMat zmat_zero(size_t n) { return ZMat(n, std::vector<mpz_class>(n)); }

ZMat zmat_identity(size_t n) {
    ZMat m = zmat_zero(n);
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

ZMat zmat_mul(const ZMat& a, const ZMat& b) {
    size_t n = a.size();
    ZMat out = zmat_zero(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

// Psi letter images without the t factor; the exponent is tracked separately.
struct PsiLetters {
    ZMat x, x_inv, y, y_inv;
};

PsiLetters psi_letters(const ZMat& companion) {
    size_t d = companion.size();
    size_t n = 2 * d;
    PsiLetters out{zmat_identity(n), zmat_identity(n), zmat_identity(n), zmat_identity(n)};
    for (size_t i = 0; i < d; ++i) {
        out.x[i][d + i] = 1;
        out.x_inv[i][d + i] = -1;
        for (size_t j = 0; j < d; ++j) {
            out.y[d + i][j] = companion[i][j];
            out.y_inv[d + i][j] = -companion[i][j];
        }
    }
    return out;
}

// Accumulates Psi(dR/dx) as a map from t exponent to integer matrix.
std::map<long, ZMat> psi_fox_slots(const Word& rel, const PsiLetters& ims, size_t n) {
    std::map<long, ZMat> slots;
    auto add = [&](long tau, const ZMat& m, int sign) {
        auto [it, fresh] = slots.try_emplace(tau, zmat_zero(n));
        ZMat& v = it->second;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (sign > 0)
                    v[i][j] += m[i][j];
                else
                    v[i][j] -= m[i][j];
    };
    ZMat pre = zmat_identity(n);
    long tau = 0;
    for (const auto& l : rel) {
        if (l.is_x && l.exponent == 1) {
            add(tau, pre, 1);
            pre = zmat_mul(pre, ims.x);
            ++tau;
        } else if (l.is_x) {
            pre = zmat_mul(pre, ims.x_inv);
            --tau;
            add(tau, pre, -1);
        } else {
            pre = zmat_mul(pre, l.exponent == 1 ? ims.y : ims.y_inv);
            tau += l.exponent;
        }
    }
    return slots;
}

// Canonical form: strip the power of t, then fix the sign so D(1) > 0.
IntPoly canonical_total(IntPoly D) {
    size_t low = 0;
    while (low < D.c.size() && D.c[low] == 0) ++low;
    if (low > 0 && low < D.c.size()) D.c.erase(D.c.begin(), D.c.begin() + static_cast<long>(low));
    if (D.eval(1) < 0) D = -D;
    return D;
}

IntPoly det_over_slots(const std::map<long, ZMat>& slots, size_t n) {
    if (slots.empty()) return IntPoly{};
    long lo = slots.begin()->first;
    long hi = slots.rbegin()->first;
    size_t span = static_cast<size_t>(hi - lo + 1);
    MatD m(n, std::vector<IntPoly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            std::vector<mpz_class> coeffs(span);
            for (const auto& [e, zm] : slots) coeffs[static_cast<size_t>(e - lo)] = zm[i][j];
            m[i][j] = IntPoly(std::move(coeffs));
        }
    return matd_det(std::move(m));
}

ZMat companion_zmat(const IntPoly& theta) {
    MatD c = companion_matrix(theta);
    size_t d = c.size();
    ZMat out = zmat_zero(d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) out[i][j] = c[i][j].coeff(0);
    return out;
}

// d x d route: substitute the companion matrix into the ring coefficients of
// the ring-valued twisted polynomial, then take one determinant.
IntPoly total_substitute(const Rational& r, const IntPoly& theta) {
    auto tw = twisted_alexander(r, theta);
    size_t d = static_cast<size_t>(theta.degree());
    ZMat c = companion_zmat(theta);
    std::vector<ZMat> cpow{zmat_identity(d)};
    for (size_t u = 1; u < d; ++u) cpow.push_back(zmat_mul(cpow.back(), c));
    size_t span = tw.delta.c.size();
    MatD m(d, std::vector<IntPoly>(d));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            std::vector<mpz_class> coeffs(span);
            for (size_t k = 0; k < span; ++k) {
                const RingElement& e = tw.delta.c[k];
                mpz_class v = 0;
                for (size_t u = 0; u < e.c.size(); ++u) v += e.c[u] * cpow[u][i][j];
                coeffs[k] = v;
            }
            m[i][j] = IntPoly(std::move(coeffs));
        }
    return canonical_total(matd_det(std::move(m)));
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

IntPoly one_plus_tpow(long e) {
    std::vector<mpz_class> c(static_cast<size_t>(e + 1));
    c.front() = 1;
    c.back() = 1;
    return IntPoly(std::move(c));
}

} // namespace

TotalResult total_twisted(const Rational& r, const IntPoly& theta, bool cross_check) {
    require_knot_rational(r);
    if (theta.degree() < 1 || !theta.is_monic())
        throw InvalidInput("theta must be monic of degree at least 1");
    if (poly_gcd(theta, theta.derivative()).degree() > 0)
        throw NonSquarefreeTheta("theta has a repeated root");
    if (!poly_mod_monic(rep_polynomial(r), theta).is_zero())
        throw InexactDivision("theta does not divide the representation polynomial of " + r.str());
    size_t d = static_cast<size_t>(theta.degree());
    ZMat c = companion_zmat(theta);
    Word rel = relator_word(build_word(r));
    IntPoly det = det_over_slots(psi_fox_slots(rel, psi_letters(c), 2 * d), 2 * d);
    IntPoly den = IntPoly{-1, 1}.pow(static_cast<unsigned>(2 * d));
    TotalResult out;
    out.D = canonical_total(poly_exact_div(det, den));
    out.theta = theta;
    out.d = static_cast<int>(d);
    out.at_1 = out.D.eval(1);
    out.at_neg1 = out.D.eval(-1);
    out.sw_verdict = silver_williams_check(out);
    if (cross_check && out.D != total_substitute(r, theta))
        throw InternalVerificationFailure("2d-dimensional and substituted routes disagree for " +
                                          r.str());
    return out;
}

TotalResult total_twisted(const Rational& r) {
    require_knot_rational(r);
    return total_twisted(r, rep_polynomial(r));
}

IntPoly total_torus(long p, long q_divisor) {
    auto tower = chi_tower(p);
    auto it = tower.find(q_divisor);
    if (it == tower.end())
        throw InvalidInput("q must be an odd divisor of p, at least 3");
    long n = (p - 1) / 2;
    if (q_divisor < p) {
        long v = p / q_divisor;
        std::vector<mpz_class> alt(static_cast<size_t>(2 * q_divisor * (v - 1) + 1));
        for (long k = 0; k < v; ++k) alt[static_cast<size_t>(2 * q_divisor * k)] = k % 2 == 0 ? 1 : -1;
        return IntPoly(std::move(alt)).pow(static_cast<unsigned>(it->second.degree())) *
               total_torus(q_divisor, q_divisor);
    }
    IntPoly full = one_plus_tpow(2) * one_plus_tpow(4 * n + 2).pow(static_cast<unsigned>(n - 1));
    if (is_prime(p)) return full;
    for (const auto& [u, chi] : tower)
        if (u < p) full = poly_exact_div(full, total_torus(p, u));
    return full;
}

SWVerdict silver_williams_check(const TotalResult& res) {
    SWVerdict v;
    mpz_class pow2 = mpz_class(1) << res.d;
    v.pow2_ok = abs(res.at_1) == pow2;
    mpz_class a = abs(res.at_neg1);
    if (a % pow2 == 0) {
        mpz_class q = a / pow2;
        if (mpz_perfect_square_p(q.get_mpz_t())) {
            mpz_class root;
            mpz_sqrt(root.get_mpz_t(), q.get_mpz_t());
            v.N = root;
        }
    }
    return v;
}

} // namespace twobridge

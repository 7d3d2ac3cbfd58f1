#include "doctest.h"

#include "twobridge/errors.hpp"
#include "twobridge/parabolic.hpp"

#include <numeric>

using namespace twobridge;

namespace {

using M2 = Mat2<RingElement>;

M2 ident(const RingPtr& r) { return {re_one(r), re_zero(r), re_zero(r), re_one(r)}; }

M2 x_mat(const RingPtr& r) { return {re_one(r), re_one(r), re_zero(r), re_one(r)}; }

M2 y_mat(const RingPtr& r) { return {re_one(r), re_zero(r), re_s0(r), re_one(r)}; }

M2 mat_pow(M2 base, long e, const RingPtr& r) {
    M2 acc = ident(r);
    for (long i = 0; i < e; ++i) acc = mat_mul(acc, base);
    return acc;
}

M2 scale(const M2& m, const RingElement& k) {
    return {m.a * k, m.b * k, m.c * k, m.d * k};
}

long phi(long n) {
    long result = n;
    for (long q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        while (n % q == 0) n /= q;
        result -= result / q;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::string word_str(const BridgeWord& w) {
    std::string s;
    for (const auto& l : w.letters) {
        s += l.is_x ? 'x' : 'y';
        if (l.exponent == -1) s += '-';
    }
    return s;
}

} // namespace

TEST_CASE("bridge words") {
    CHECK(word_str(build_word(Rational(1, 3))) == "xy");
    CHECK(word_str(build_word(Rational(3, 5))) == "xy-x-y");
    CHECK(word_str(build_word(Rational(3, 7))) == "xyx-y-xy");
    CHECK(word_str(build_word(Rational(1, 5))) == "xyxy");
    BridgeWord w = build_word(Rational(19, 45));
    CHECK(w.letters.size() == 44);
    CHECK(w.letters.front().exponent == 1);
    CHECK(w.letters.front().is_x);
    for (size_t i = 0; i < w.letters.size(); ++i) CHECK(w.letters[i].is_x == (i % 2 == 0));
    CHECK_THROWS_AS(build_word(Rational(-3, 5)), InvalidRational);
    CHECK_THROWS_AS(build_word(Rational(2, 5)), InvalidRational);
}

TEST_CASE("representation polynomials") {
    CHECK(rep_polynomial(Rational(1, 3)) == IntPoly{1, 1});
    CHECK(rep_polynomial(Rational(3, 5)) == IntPoly{1, -1, 1});
    CHECK(rep_polynomial(Rational(3, 7)) == IntPoly{1, 2, 1, 1});
    for (int n = 1; n <= 8; ++n)
        CHECK(rep_polynomial(Rational(1, 2 * n + 1)) == a_n_closed(n));
    for (long a : {9L, 45L, 69L, 213L}) {
        for (long b = 1; b < a; b += 2) {
            Rational r(b, a);
            if (r.den != a) continue; // not reduced
            IntPoly ap = rep_polynomial(r);
            CHECK(ap.coeff(0) == 1);
            CHECK(ap.is_monic());
            CHECK(ap.degree() == (a - 1) / 2);
        }
    }
}

TEST_CASE("closed-form torus polynomials") {
    CHECK(a_n_closed(1) == IntPoly{1, 1});
    CHECK(a_n_closed(2) == IntPoly{1, 3, 1});
    CHECK(a_n_closed(3) == IntPoly{1, 6, 5, 1});
    CHECK(a_n_closed(4) == IntPoly{1, 10, 15, 7, 1});
    CHECK_THROWS_AS(a_n_closed(0), InvalidInput);
}

TEST_CASE("chi tower") {
    auto t3 = chi_tower(3);
    REQUIRE(t3.size() == 1);
    CHECK(t3.at(3) == IntPoly{1, 1});
    auto t9 = chi_tower(9);
    REQUIRE(t9.size() == 2);
    CHECK(t9.at(3) == IntPoly{1, 1});
    CHECK(t9.at(9) == IntPoly{1, 9, 6, 1});
    auto t15 = chi_tower(15);
    REQUIRE(t15.size() == 3);
    CHECK(t15.at(3) == IntPoly{1, 1});
    CHECK(t15.at(5) == IntPoly{1, 3, 1});
    CHECK(t15.at(15) == IntPoly{1, 24, 26, 9, 1});
    auto t21 = chi_tower(21);
    REQUIRE(t21.size() == 3);
    CHECK(t21.at(7) == IntPoly{1, 6, 5, 1});
    CHECK(t21.at(21) == IntPoly{1, 48, 148, 146, 64, 13, 1});
    for (long p : {3L, 5L, 7L, 9L, 15L, 21L}) {
        auto tower = chi_tower(p);
        IntPoly prod{1};
        for (const auto& [s, chi] : tower) {
            CHECK(chi.degree() == phi(s) / 2);
            CHECK(chi.is_monic());
            CHECK(chi.coeff(0) == 1);
            prod = prod * chi;
        }
        CHECK(prod == a_n_closed(static_cast<int>((p - 1) / 2)));
    }
    CHECK_THROWS_AS(chi_tower(4), InvalidInput);
    CHECK_THROWS_AS(chi_tower(1), InvalidInput);
}

TEST_CASE("powers of XY and the closed form for b") {
    auto ring = QuotientRing::make(IntPoly{1, 3, 1});
    RingElement s = re_s0(ring), one = re_one(ring), zero = re_zero(ring);
    XYEntries e0 = xy_entries(0, ring);
    CHECK(e0.a == one);
    CHECK(e0.b == zero);
    CHECK(e0.c == zero);
    CHECK(e0.d == one);
    XYEntries e1 = xy_entries(1, ring);
    CHECK(e1.a == one + s);
    CHECK(e1.b == one);
    CHECK(e1.c == s);
    CHECK(e1.d == one);
    XYEntries e2 = xy_entries(2, ring);
    CHECK(e2.a == one + s * 3 + s * s);
    CHECK(e2.b == re_int(ring, 2) + s);
    CHECK(e2.c == s * 2 + s * s);
    CHECK(e2.d == one + s);
    auto ring7 = QuotientRing::make(IntPoly{1, 6, 5, 1});
    CHECK(b_k_closed(3, ring7) == re_from_poly(ring7, IntPoly{3, 4, 1}));
    CHECK(b_k_closed(1, ring7) == re_one(ring7));
    for (auto r : {ring, ring7}) {
        for (long k = 1; k <= 12; ++k) {
            XYEntries e = xy_entries(k, r);
            CHECK(b_k_closed(k, r) == e.b);
            // matrix power agrees with the entry recursion
            M2 m = mat_pow(mat_mul(x_mat(r), y_mat(r)), k, r);
            CHECK(m.a == e.a);
            CHECK(m.b == e.b);
            CHECK(m.c == e.c);
            CHECK(m.d == e.d);
        }
    }
}

TEST_CASE("entry recursions and partial sums for powers of XY") {
    for (long p : {3L, 5L, 7L, 9L, 15L}) {
        long n = (p - 1) / 2;
        for (const auto& [q, chi] : chi_tower(p)) {
            auto ring = QuotientRing::make(chi);
            RingElement s = re_s0(ring), one = re_one(ring);
            std::vector<XYEntries> e;
            for (long k = 0; k <= 2 * p; ++k) e.push_back(xy_entries(k, ring));
            for (long k = 1; k <= 2 * p; ++k) {
                CHECK(s * e[k].b == e[k].a - e[k - 1].a);
                CHECK(e[k].c == s * e[k].b);
                CHECK(e[k].a == s * e[k].b + e[k].d);
                CHECK(e[k].d == e[k - 1].a);
                CHECK(e[k].b == e[k - 1].b + e[k - 1].a);
                CHECK(e[k].c + e[k].d == e[k].a);
                RingElement asum = re_zero(ring);
                for (long j = 0; j < k; ++j) asum += e[j].a;
                CHECK(asum == e[k].b);
                if (k >= 2) {
                    CHECK(e[k].a == (re_int(ring, 2) + s) * e[k - 1].a - e[k - 2].a);
                    CHECK(s * e[k].b == (one + s) * e[k - 1].a - e[k - 2].a);
                }
            }
            // convolution identity for b_k up to k = n
            for (long k = 1; k <= n; ++k) {
                RingElement lhs = re_zero(ring);
                for (long i = 0; i + 1 <= k; ++i) lhs += e[i].a * e[k - 1 - i].a;
                for (long i = 0; i <= k; ++i) lhs -= e[i].b * e[k - i].c;
                CHECK(lhs == e[k].b);
            }
            // partial-sum identities at the torus order
            RingElement asum = re_zero(ring), bsum = re_zero(ring), csum = re_zero(ring),
                        dsum = re_zero(ring);
            for (long k = 0; k < n; ++k) asum += e[k].a;
            for (long k = 1; k <= n; ++k) {
                bsum += e[k].b;
                csum += e[k].c;
            }
            for (long k = 0; k <= n; ++k) dsum += e[k].d;
            CHECK(asum == e[n].b);
            CHECK(s * bsum == re_int(ring, -1));
            CHECK(bsum == e[n].b * e[n].b);
            CHECK(dsum == one + asum);
            CHECK(csum == re_int(ring, -1));
            CHECK(e[n].b * e[n].c * -1 == one);
        }
    }
}

TEST_CASE("torus-order matrix identities") {
    for (long p : {3L, 5L, 7L, 9L, 15L}) {
        long n = (p - 1) / 2;
        for (const auto& [q, chi] : chi_tower(p)) {
            auto ring = QuotientRing::make(chi);
            M2 X = x_mat(ring), Y = y_mat(ring), I = ident(ring);
            M2 XY = mat_mul(X, Y);
            M2 minusI = scale(I, re_int(ring, -1));
            CHECK(mat_pow(XY, p, ring) == minusI);
            XYEntries en = xy_entries(n, ring);
            M2 anti{re_zero(ring), en.b, en.c, re_zero(ring)};
            CHECK(mat_mul(mat_pow(XY, n, ring), X) == anti);
            CHECK(mat_mul(Y, mat_pow(XY, n, ring)) == anti);
        }
    }
}

TEST_CASE("partial-sum projection identities") {
    for (long p : {3L, 5L, 7L, 9L}) {
        long n = (p - 1) / 2;
        for (const auto& [q, chi] : chi_tower(p)) {
            auto ring = QuotientRing::make(chi);
            M2 X = x_mat(ring), Y = y_mat(ring), I = ident(ring);
            M2 YX = mat_mul(Y, X);
            RingElement bn = xy_entries(n, ring).b;
            RingElement four = re_int(ring, 4), eight = re_int(ring, 8);
            auto Q = [&](long k) {
                M2 acc = ident(ring), pw = ident(ring);
                for (long j = 1; j <= k; ++j) {
                    pw = mat_mul(pw, YX);
                    acc = mat_add(acc, pw);
                }
                return acc;
            };
            M2 ImY = mat_sub(I, Y), ImX = mat_sub(I, X);
            M2 IpY = mat_add(I, Y), IpX = mat_add(I, X);
            M2 yxn1 = mat_pow(YX, n + 1, ring);
            M2 zero2{re_zero(ring), re_zero(ring), re_zero(ring), re_zero(ring)};

            CHECK(mat_mul(mat_mul(mat_mul(ImY, Q(n)), Y), ImX) ==
                  scale(mat_mul(yxn1, ImX), re_int(ring, -1)));
            CHECK(mat_mul(mat_mul(mat_mul(ImY, Q(2 * n)), Y), ImX) == zero2);
            CHECK(mat_mul(mat_mul(mat_mul(ImY, Q(3 * n + 1)), Y), ImX) ==
                  scale(mat_mul(mat_pow(YX, 3 * n + 2, ring), ImX), re_int(ring, -1)));

            M2 lhs1 = mat_mul(mat_mul(mat_mul(IpY, Q(n)), Y), IpX);
            CHECK(lhs1 == mat_add(mat_mul(yxn1, IpX), scale(mat_add(Y, yxn1), four * bn)));

            M2 xyn_x = mat_mul(mat_pow(mat_mul(X, Y), n, ring), X);
            M2 ipxynx = mat_add(I, xyn_x);
            CHECK(mat_mul(lhs1, ipxynx) ==
                  mat_add(mat_mul(mat_mul(yxn1, IpX), ipxynx), scale(yxn1, eight * bn)));

            M2 lhs3 = mat_mul(mat_mul(mat_mul(IpY, Q(2 * n)), Y), IpX);
            CHECK(lhs3 == scale(yxn1, eight * bn));

            M2 yxn_y = mat_mul(mat_pow(YX, n, ring), Y);
            CHECK(mat_mul(lhs3, mat_add(I, yxn_y)) ==
                  scale(mat_sub(Y, yxn1), re_int(ring, -8) * bn));

            M2 lhs5 = mat_mul(mat_mul(mat_mul(IpY, Q(3 * n + 1)), Y), IpX);
            CHECK(mat_add(lhs5, mat_mul(yxn1, IpX)) ==
                  scale(mat_sub(Y, yxn1), re_int(ring, -4) * bn));
        }
    }
}

TEST_CASE("companion matrices") {
    MatD c1 = companion_matrix(IntPoly{1, 1});
    REQUIRE(c1.size() == 1);
    CHECK(c1[0][0] == IntPoly{-1});
    MatD c2 = companion_matrix(IntPoly{1, 3, 1});
    CHECK(c2[0][0].is_zero());
    CHECK(c2[0][1] == IntPoly{-1});
    CHECK(c2[1][0] == IntPoly{1});
    CHECK(c2[1][1] == IntPoly{-3});
    MatD c3 = companion_matrix(a_n_closed(3));
    CHECK(c3[0][2] == IntPoly{-1});
    CHECK(c3[1][2] == IntPoly{-6});
    CHECK(c3[2][2] == IntPoly{-5});
    CHECK_THROWS_AS(companion_matrix(IntPoly{2, 2}), InvalidInput);
    CHECK_THROWS_AS(companion_matrix(IntPoly{1}), InvalidInput);
    for (long p : {3L, 5L, 7L, 9L, 15L, 21L}) {
        for (const auto& [s, chi] : chi_tower(p)) {
            MatD c = companion_matrix(chi);
            size_t d = c.size();
            MatD m(d, std::vector<IntPoly>(d));
            for (size_t i = 0; i < d; ++i)
                for (size_t j = 0; j < d; ++j)
                    m[i][j] = (i == j ? IntPoly{0, 1} : IntPoly{}) - c[i][j];
            CHECK(matd_det(m) == chi);
        }
    }
}

#include "doctest.h"

#include "twobridge/errors.hpp"
#include "twobridge/intpoly.hpp"
#include "twobridge/laurent.hpp"
#include "twobridge/matrix.hpp"
#include "twobridge/qlift.hpp"
#include "twobridge/rational.hpp"
#include "twobridge/ring.hpp"

#include <random>

using namespace twobridge;

namespace {

RingPtr ring_of(std::initializer_list<long> modulus) {
    return QuotientRing::make(IntPoly(modulus));
}

const IntPoly CHI3{1, 1};
const IntPoly CHI5{1, 3, 1};
const IntPoly CHI7{1, 6, 5, 1};
const IntPoly CHI9{1, 9, 6, 1};
const IntPoly A4{1, 10, 15, 7, 1};

RingElement rnd_elem(const RingPtr& r, std::mt19937& gen) {
    std::uniform_int_distribution<long> dist(-9, 9);
    std::vector<mpz_class> c(r->d);
    for (auto& v : c) v = dist(gen);
    return RingElement{r, std::move(c)};
}

} // namespace

TEST_CASE("rational reduction and parsing") {
    Rational r(38, 90);
    CHECK(r.num == 19);
    CHECK(r.den == 45);
    CHECK(r.str() == "19/45");
    CHECK(parse_rational("19/45") == r);
    CHECK(parse_rational("7") == Rational(7, 1));
    CHECK(Rational(3, -5) == Rational(-3, 5));
    CHECK(Rational(-3, -5) == Rational(3, 5));
    CHECK_THROWS_AS(Rational(1, 0), InvalidRational);
    CHECK_THROWS_AS(parse_rational("x/y"), InvalidRational);
    CHECK(Rational(1, 3) < Rational(2, 5));
    CHECK(Rational(-1, 3) < Rational(1, 5));
}

TEST_CASE("rational knot-parameter validation") {
    CHECK(is_valid_cf_rational(Rational(19, 45)));
    CHECK(is_valid_cf_rational(Rational(-3, 5)));
    CHECK(!is_valid_cf_rational(Rational(2, 5)));
    CHECK(!is_valid_cf_rational(Rational(3, 8)));
    CHECK(!is_valid_cf_rational(Rational(7, 5)));
    CHECK(!is_valid_cf_rational(Rational(0, 1)));
    CHECK(is_valid_knot_rational(Rational(3, 5)));
    CHECK(!is_valid_knot_rational(Rational(-3, 5)));
    CHECK_THROWS_AS(require_knot_rational(Rational(-3, 5)), InvalidRational);
    CHECK_NOTHROW(require_cf_rational(Rational(-3, 5)));
}

TEST_CASE("integer polynomial arithmetic") {
    IntPoly p{1, -4, 1};
    CHECK(p.degree() == 2);
    CHECK(p.str() == "1 - 4*t + t^2");
    CHECK(p.eval(1) == -2);
    CHECK(p.eval(-1) == 6);
    CHECK((IntPoly{1, 1} * IntPoly{1, 3, 1}) == IntPoly{1, 4, 4, 1});
    CHECK(CHI3 * CHI9 == A4);
    CHECK(poly_mul(CHI9, CHI3) == A4);
    CHECK((p * IntPoly{}).is_zero());
    CHECK((IntPoly{1, 2} + IntPoly{-1, -2}).is_zero());
    CHECK(-p == IntPoly{-1, 4, -1});
    CHECK(p * mpz_class(3) == IntPoly{3, -12, 3});
    CHECK(IntPoly{1, 0, 1}.dilate(3) == IntPoly{1, 0, 0, 0, 0, 0, 1});
    CHECK(IntPoly{1, 1}.pow(2) == IntPoly{1, 2, 1});
    CHECK(IntPoly{1, 1}.pow(0) == IntPoly{1});
    CHECK(CHI5.derivative() == IntPoly{3, 2});
    CHECK(IntPoly{0, 0, -1}.str() == "-t^2");
    CHECK(IntPoly{}.str() == "0");
}

TEST_CASE("exact polynomial division") {
    CHECK(poly_exact_div(A4, CHI3) == CHI9);
    CHECK(poly_exact_div(A4, CHI9) == CHI3);
    CHECK(poly_exact_div(A4, IntPoly{1}) == A4);
    CHECK(poly_exact_div(IntPoly{}, CHI3).is_zero());
    CHECK_THROWS_AS(poly_exact_div(IntPoly{1, 0, 1}, IntPoly{1, 1}), InexactDivision);
    CHECK_THROWS_AS(poly_exact_div(CHI3, A4), InexactDivision);
    CHECK_THROWS_AS(poly_exact_div(A4, IntPoly{}), InexactDivision);
    CHECK_THROWS_AS(poly_exact_div(IntPoly{2, 2}, IntPoly{4}), InexactDivision);
}

TEST_CASE("polynomial remainder, gcd, unit equality") {
    CHECK(poly_mod_monic(IntPoly{0, 0, 1}, CHI5) == IntPoly{-1, -3});
    CHECK(poly_mod_monic(IntPoly{0, 1}, CHI3) == IntPoly{-1});
    CHECK(poly_mod_monic(CHI5, CHI5).is_zero());
    CHECK(poly_gcd(A4, CHI3).degree() == 1);
    CHECK(poly_gcd(CHI3, CHI5).degree() == 0);
    CHECK(poly_gcd(CHI5 * CHI7, CHI5 * CHI3).degree() == 2);
    CHECK(poly_eq_up_to_unit(IntPoly{1, -4, 1}, IntPoly{0, 0, 0, -1, 4, -1}));
    CHECK(poly_eq_up_to_unit(IntPoly{}, IntPoly{}));
    CHECK(!poly_eq_up_to_unit(IntPoly{1, -4, 1}, IntPoly{1, 4, 1}));
}

TEST_CASE("quotient ring reduction") {
    auto r1 = ring_of({1, 1});
    auto r5 = ring_of({1, 3, 1});
    CHECK(re_s0(r1) == re_int(r1, -1));
    CHECK(re_from_poly(r5, IntPoly{0, 0, 1}) == RingElement{r5, {mpz_class(-1), mpz_class(-3)}});
    CHECK(re_s0(r5) * re_s0(r5) == re_from_poly(r5, IntPoly{-1, -3}));
    CHECK((re_one(r5) - re_one(r5)).is_zero());
    CHECK(re_int(r5, 7).is_constant());
    CHECK(!re_s0(r5).is_constant());
    CHECK_THROWS_AS(ring_of({2, 3}), InvalidInput); // non-monic modulus
    CHECK_THROWS_AS(ring_of({5}), InvalidInput);       // degree 0
    RingElement e = re_from_poly(ring_of({1, 6, 5, 1}), IntPoly{-25, -32, -8});
    CHECK(e.str() == "-25 - 32*s0 - 8*s0^2");
}

TEST_CASE("ring inverses") {
    auto r1 = ring_of({1, 1});
    auto r5 = ring_of({1, 3, 1});
    CHECK(ring_inverse(re_s0(r1)) == re_int(r1, -1));
    CHECK(ring_inverse(re_s0(r5)) == re_from_poly(r5, IntPoly{-3, -1}));
    CHECK(ring_inverse(re_s0(r5)) * re_s0(r5) == re_one(r5));
    CHECK_THROWS_AS(ring_inverse(re_int(r1, 2)), NotInvertible);
    CHECK_THROWS_AS(ring_inverse(re_zero(r5)), NotInvertible);
    CHECK(!ring_inverse_opt(re_int(r1, 2)).has_value());
    for (auto mod : {CHI3, CHI5, CHI7, CHI9}) {
        auto r = QuotientRing::make(mod);
        auto inv = ring_inverse(re_s0(r));
        CHECK(inv * re_s0(r) == re_one(r));
    }
}

TEST_CASE("ring axioms hold on random elements") {
    std::mt19937 gen(12345);
    for (auto mod : {CHI3, CHI5, CHI7, CHI9}) {
        auto r = QuotientRing::make(mod);
        for (int i = 0; i < 200; ++i) {
            RingElement a = rnd_elem(r, gen), b = rnd_elem(r, gen), c = rnd_elem(r, gen);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a + (-a) == re_zero(r));
            CHECK(a * re_one(r) == a);
            auto lifted = qlift::to_elem(qlift::lift(a), r);
            REQUIRE(lifted.has_value());
            CHECK(*lifted == a);
            auto inv = ring_inverse_opt(a);
            if (inv) CHECK(*inv * a == re_one(r));
        }
    }
}

TEST_CASE("laurent construction and normalization") {
    auto r = ring_of({1, 1});
    LaurentPoly p = lp_from_ints(r, 0, {1, -4, 1});
    CHECK(p.lowest_exponent == 0);
    CHECK(p.highest_exponent() == 2);
    CHECK(p.str() == "1 - 4*t + t^2");
    CHECK(lp_from_ints(r, -2, {1, 0, 1}).str() == "t^-2 + 1");
    CHECK(lp_from_ints(r, 0, {0, 0, 0}).is_zero());
    CHECK(lp_from_ints(r, -3, {0, 1, -4, 1, 0}) == p.shifted(-2));
    CHECK(p.shifted(5).canonical() == p);
    CHECK((p - p).is_zero());
    CHECK((p + (-p)).is_zero());
    CHECK(p.coeff(1) == re_int(r, -4));
    CHECK(p.coeff(7) == re_zero(r));
    CHECK(lp_from_intpoly(r, IntPoly{1, -4, 1}) == p);
    CHECK(LaurentPoly::zero(r).str() == "0");
}

TEST_CASE("laurent ring-coefficient printing") {
    auto r7 = ring_of({1, 6, 5, 1});
    RingElement k = -(re_int(r7, 4) + re_s0(r7) * re_s0(r7));
    LaurentPoly d = LaurentPoly::make(r7, 0, {k, re_int(r7, 4), k});
    CHECK(d.str() == "-(4 + s0^2) + 4*t - (4 + s0^2)*t^2");
    LaurentPoly s = LaurentPoly::make(r7, 1, {re_s0(r7)});
    CHECK(s.str() == "s0*t");
}

TEST_CASE("laurent evaluation at unit arguments") {
    auto r = ring_of({1, 1});
    LaurentPoly p = lp_from_ints(r, 0, {1, -4, 1});
    CHECK(laurent_eval(p, 1) == re_int(r, -2));
    CHECK(laurent_eval(p, -1) == re_int(r, 6));
    LaurentPoly lam = lp_from_ints(r, 0, {25, -72, 95, -72, 25});
    CHECK(laurent_eval(lam, 1) == re_int(r, 1));
    CHECK(laurent_eval(lam, -1) == re_int(r, 289));
    CHECK(laurent_eval(p.shifted(-1), -1) == re_int(r, -6));
    CHECK(laurent_eval(p.shifted(2), -1) == re_int(r, 6));
    CHECK_THROWS_AS(laurent_eval(p, 2), InvalidInput);
    CHECK_THROWS_AS(laurent_eval(p, 0), InvalidInput);
}

TEST_CASE("laurent multiplication and exact division") {
    auto r = ring_of({1, 1});
    LaurentPoly a = lp_from_ints(r, 0, {1, 0, 1});
    LaurentPoly b = lp_from_ints(r, 0, {1, -4, 1});
    LaurentPoly prod = a * b;
    CHECK(prod == lp_from_ints(r, 0, {1, -4, 2, -4, 1}));
    CHECK(laurent_exact_div(prod, b) == a);
    CHECK(laurent_exact_div(prod, a) == b);
    CHECK(laurent_exact_div(prod.shifted(-3), b) == a);
    LaurentPoly tm1sq = lp_from_ints(r, 0, {1, -2, 1});
    CHECK(laurent_exact_div(b * tm1sq, tm1sq) == b);
    CHECK_THROWS_AS(laurent_exact_div(a, lp_from_ints(r, 0, {1, 1})), InexactDivision);
    CHECK_THROWS_AS(laurent_exact_div(a, LaurentPoly::zero(r)), InexactDivision);
    CHECK(laurent_exact_div(LaurentPoly::zero(r), b).is_zero());
    CHECK(laurent_exact_div(lp_from_ints(r, 0, {4, 4}), lp_from_ints(r, 0, {2})) == lp_from_ints(r, 0, {2, 2}));
    CHECK_THROWS_AS(laurent_exact_div(lp_from_ints(r, 0, {1, 1}), lp_from_ints(r, 0, {2})), InexactDivision);
}

TEST_CASE("laurent equality up to units") {
    auto r = ring_of({1, 3, 1});
    LaurentPoly b = lp_from_ints(r, 0, {1, -4, 1});
    CHECK(laurent_eq_up_to_unit(b, -b));
    CHECK(laurent_eq_up_to_unit(b, b.shifted(7)));
    CHECK(laurent_eq_up_to_unit(b, (-b).shifted(-4)));
    CHECK(!laurent_eq_up_to_unit(b, lp_from_ints(r, 0, {1, 4, 1})));
    CHECK(laurent_eq_up_to_unit(LaurentPoly::zero(r), LaurentPoly::zero(r)));
    CHECK(!laurent_eq_up_to_unit(b, LaurentPoly::zero(r)));
}

TEST_CASE("laurent division round-trips on random data") {
    auto r5 = ring_of({1, 3, 1});
    std::mt19937 gen(777);
    std::uniform_int_distribution<long> deg(0, 8), shift(-5, 5);
    int done = 0;
    while (done < 150) {
        std::vector<RingElement> qc, bc;
        for (long i = 0; i <= deg(gen); ++i) qc.push_back(rnd_elem(r5, gen));
        for (long i = 0; i <= deg(gen); ++i) bc.push_back(rnd_elem(r5, gen));
        LaurentPoly q = LaurentPoly::make(r5, 0, qc);
        LaurentPoly b = LaurentPoly::make(r5, shift(gen), bc);
        if (q.is_zero() || b.is_zero()) continue;
        LaurentPoly prod = (q * b).shifted(shift(gen));
        CHECK(laurent_exact_div(prod, b) == q.canonical());
        ++done;
    }
}

TEST_CASE("integer polynomial division round-trips on random data") {
    std::mt19937 gen(888);
    std::uniform_int_distribution<long> deg(0, 10), coeff(-9, 9);
    int done = 0;
    while (done < 200) {
        std::vector<mpz_class> qc, bc;
        for (long i = 0; i <= deg(gen); ++i) qc.emplace_back(coeff(gen));
        for (long i = 0; i <= deg(gen); ++i) bc.emplace_back(coeff(gen));
        IntPoly q(qc), b(bc);
        if (b.is_zero()) continue;
        CHECK(poly_exact_div(q * b, b) == q);
        ++done;
    }
}

TEST_CASE("polynomial matrix determinants") {
    IntPoly t{0, 1}, one{1};
    MatD eye3 = {{one, IntPoly{}, IntPoly{}}, {IntPoly{}, one, IntPoly{}}, {IntPoly{}, IntPoly{}, one}};
    CHECK(matd_det(eye3) == one);
    IntPoly tm1{-1, 1};
    MatD diag4(4, std::vector<IntPoly>(4));
    for (int i = 0; i < 4; ++i) diag4[i][i] = tm1;
    CHECK(matd_det(diag4) == IntPoly{1, -4, 6, -4, 1});
    MatD m2 = {{t, one}, {one, t}};
    CHECK(matd_det(m2) == IntPoly{-1, 0, 1});
    MatD swap2 = {{IntPoly{}, one}, {one, IntPoly{}}};
    CHECK(matd_det(swap2) == IntPoly{-1});
    MatD cyc3 = {{IntPoly{}, one, IntPoly{}}, {IntPoly{}, IntPoly{}, one}, {one, IntPoly{}, IntPoly{}}};
    CHECK(matd_det(cyc3) == one);
    MatD sing = {{t, t}, {t, t}};
    CHECK(matd_det(sing).is_zero());
    MatD ints = {{IntPoly{1}, IntPoly{2}, IntPoly{3}}, {IntPoly{4}, IntPoly{5}, IntPoly{6}}, {IntPoly{7}, IntPoly{8}, IntPoly{10}}};
    CHECK(matd_det(ints) == IntPoly{-3});
    MatD bad = {{one}, {one, t}};
    CHECK_THROWS_AS(matd_det(bad), InvalidInput);
    CHECK(matd_det(MatD{}) == one);
}

TEST_CASE("two-by-two matrices over a ring") {
    auto r5 = ring_of({1, 3, 1});
    RingElement s = re_s0(r5), one = re_one(r5), zero = re_zero(r5);
    Mat2<RingElement> X{one, one, zero, one};
    Mat2<RingElement> Y{one, zero, s, one};
    Mat2<RingElement> XY = mat_mul(X, Y);
    CHECK(XY == (Mat2<RingElement>{one + s, one, s, one}));
    CHECK(mat_det(XY) == one);
    Mat2<RingElement> XY2 = mat_mul(XY, XY);
    CHECK(XY2.a == one + s * 3 + s * s);
    CHECK(XY2.b == re_int(r5, 2) + s);
    CHECK(XY2.c == s * 2 + s * s);
    CHECK(XY2.d == one + s);
    CHECK(mat_det(XY2) == one);
    CHECK(mat_sub(XY2, XY2) == (Mat2<RingElement>{zero, zero, zero, zero}));
    CHECK(mat_add(X, Y).a == one + one);
}

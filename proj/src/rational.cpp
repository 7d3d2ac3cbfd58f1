#include "twobridge/rational.hpp"

#include "twobridge/errors.hpp"

namespace twobridge {

Rational::Rational(mpz_class n, mpz_class d) : num(std::move(n)), den(std::move(d)) {
    if (den == 0) throw InvalidRational("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

std::string Rational::str() const {
    return num.get_str() + "/" + den.get_str();
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(mpz_class(text), mpz_class(1));
        mpz_class n(text.substr(0, slash));
        mpz_class d(text.substr(slash + 1));
        return Rational(std::move(n), std::move(d));
    } catch (const std::invalid_argument&) {
        throw InvalidRational("cannot parse rational: " + text);
    }
}

bool is_valid_cf_rational(const Rational& r) {
    if (r.num == 0) return false;
    if (mpz_even_p(r.num.get_mpz_t()) || mpz_even_p(r.den.get_mpz_t())) return false;
    mpz_class an = abs(r.num);
    return an < r.den; // reduced by construction, so coprime
}

bool is_valid_knot_rational(const Rational& r) {
    return is_valid_cf_rational(r) && r.num > 0;
}

void require_cf_rational(const Rational& r) {
    if (!is_valid_cf_rational(r))
        throw InvalidRational("need odd coprime beta/alpha with 0 < |beta| < alpha, got " + r.str());
}

void require_knot_rational(const Rational& r) {
    if (!is_valid_knot_rational(r))
        throw InvalidRational("need odd coprime beta/alpha with 0 < beta < alpha, got " + r.str());
}

} // namespace twobridge

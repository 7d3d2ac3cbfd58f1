#include "twobridge/mu.hpp"

#include "twobridge/errors.hpp"
#include "twobridge/parabolic.hpp"

#include <numeric>

namespace twobridge {

int sigma(int k, int M) {
    if (k < 1 || k > 3 || M < 0 || M > 3) throw InvalidInput("sigma arguments out of range");
    static const int table[3][4] = {{4, -8, -4, -8}, {8, 8, -8, -8}, {4, 8, 4, -8}};
    return table[k - 1][M];
}

namespace {

RingElement mu_impl(const ContinuedFraction& raw, long p, const RingPtr& ring,
                    const RingElement& bn, MuTraceNode* trace, const char* label) {
    ContinuedFraction cf = normalize_mod4(raw, p);
    const auto& E = cf.entries;
    if (trace) {
        trace->label = label;
        trace->fraction = cf.str();
    }
    if (E.size() == 1) {
        RingElement value = E[0] == 0 ? re_zero(ring) : re_int(ring, -1);
        if (trace) trace->value = value.str();
        return value;
    }
    size_t last = E.size() - 1;
    mpz_class ksum = 0;
    for (size_t i = 0; i <= last; i += 2) ksum += E[i] / p;
    int M = static_cast<int>(mpz_class(ksum % 4).get_si());
    int k_last = static_cast<int>(mpz_class(E[last] / p).get_si());
    RingElement nu = bn * (E[last - 1] / 2) * mpz_class(sigma(k_last, M));
    ContinuedFraction rprime{ContinuedFraction::Kind::PType, p,
                             std::vector<mpz_class>(E.begin(), E.end() - 2)};
    ContinuedFraction rhat = rprime;
    rhat.entries.back() += E[last];
    MuTraceNode* c1 = nullptr;
    MuTraceNode* c2 = nullptr;
    if (trace) {
        trace->nu = nu.str();
        trace->children.resize(2);
        c1 = &trace->children[0];
        c2 = &trace->children[1];
    }
    RingElement value = nu * mu_impl(rprime, p, ring, bn, c1, "r'") +
                        mu_impl(rhat, p, ring, bn, c2, "r^");
    if (trace) trace->value = value.str();
    return value;
}

} // namespace

RingElement mu(const ContinuedFraction& cf, long p, const RingPtr& ring, MuTraceNode* trace) {
    if (cf.kind != ContinuedFraction::Kind::PType || cf.p != p)
        throw InvalidInput("mu expects a p-expansion for the same p");
    RingElement bn = xy_entries((p - 1) / 2, ring).b;
    return mu_impl(cf, p, ring, bn, trace, "r");
}

RingElement mu(const Rational& r, long p, const RingPtr& ring, MuTraceNode* trace) {
    auto expansion = to_p_expansion(r, p);
    if (!expansion)
        throw NotInHp(r.str() + " is not " + std::to_string(p) + "-admissible");
    return mu(*expansion, p, ring, trace);
}

bool mu_closed_forms_check(long p, const RingPtr& ring, std::string* report) {
    RingElement b = xy_entries((p - 1) / 2, ring).b;
    RingElement one = re_one(ring);
    auto pexp = [&](std::initializer_list<long> mults) {
        ContinuedFraction cf;
        cf.kind = ContinuedFraction::Kind::PType;
        cf.p = p;
        bool k_slot = true;
        for (long v : mults) {
            cf.entries.emplace_back(k_slot ? v * p : 2 * v);
            k_slot = !k_slot;
        }
        return cf;
    };
    auto fail = [&](const std::string& what) {
        if (report) *report = "closed form mismatch at " + what;
        return false;
    };
    for (long m = -3; m <= 3; ++m) {
        if (m == 0) continue;
        RingElement mb = b * mpz_class(m);
        if (mu(pexp({1, m, 1}), p, ring) != mb * 4 - one) return fail("[p,2m,p]");
        if (mu(pexp({1, m, 2}), p, ring) != mb * 8 - one) return fail("[p,2m,2p]");
        if (mu(pexp({1, m, 3}), p, ring) != -(mb * 4)) return fail("[p,2m,3p]");
        if (mu(pexp({2, m, 2}), p, ring) != -(mb * 8)) return fail("[2p,2m,2p]");
        if (mu(pexp({2, m, 3}), p, ring) != -(mb * 8) - one) return fail("[2p,2m,3p]");
        if (mu(pexp({3, m, 3}), p, ring) != -(mb * 4) - one) return fail("[3p,2m,3p]");
    }
    for (long m1 = -3; m1 <= 3; ++m1) {
        if (m1 == 0) continue;
        for (long m2 = -3; m2 <= 3; ++m2) {
            if (m2 == 0) continue;
            RingElement b2 = b * b;
            RingElement lhs1 = mu(pexp({1, m1, 1, m2, 1}), p, ring);
            if (lhs1 != b2 * mpz_class(-32 * m1 * m2) + b * mpz_class(8 * m1 + 8 * m2) - one)
                return fail("[p,2m1,p,2m2,p]");
            RingElement lhs2 = mu(pexp({1, m1, 2, m2, 2}), p, ring);
            if (lhs2 != b2 * mpz_class(64 * m1 * m2) - b * mpz_class(8 * m2) - one)
                return fail("[p,2m1,2p,2m2,2p]");
        }
    }
    return true;
}

std::vector<MuScanHit> mu_minus_one_scan(long p, long max_alpha) {
    std::vector<MuScanHit> hits;
    RingPtr ring = QuotientRing::make(chi_tower(p).at(p));
    RingElement minus_one = re_int(ring, -1);
    for (long alpha = 3; alpha <= max_alpha; alpha += 2) {
        for (long beta = 1; beta < alpha; beta += 2) {
            if (std::gcd(beta, alpha) != 1) continue;
            Rational r(beta, alpha);
            auto expansion = to_p_expansion(r, p);
            if (!expansion) continue;
            if (mu(*expansion, p, ring) == minus_one)
                hits.push_back({r, normalize_mod4(*expansion, p)});
        }
    }
    return hits;
}

} // namespace twobridge

#include "twobridge/contfrac.hpp"

#include "twobridge/errors.hpp"

#include <deque>
#include <sstream>

namespace twobridge {

namespace {

// Non-negative residue in [0, m).
mpz_class mod_pos(const mpz_class& x, const mpz_class& m) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

void require_odd_p(long p) {
    if (p < 3 || p % 2 == 0) throw InvalidInput("p must be an odd integer >= 3");
}

// Shared forward pass of the admissibility recursion. Each step consumes two
// entries and rewrites the next head; records (case, head, second) per step.
struct AdmStep {
    int rule; // 1, 2, 3
    mpz_class head;
    mpz_class second;
};

struct AdmResult {
    bool admissible = false;
    std::vector<AdmStep> steps;
    mpz_class final_head;
};

AdmResult admissibility_walk(const std::vector<mpz_class>& L, long p) {
    AdmResult res;
    const mpz_class twop = 2 * p;
    mpz_class h = L.front();
    size_t i = 0;
    while (true) {
        size_t rem = L.size() - i;
        if (rem == 1) {
            res.admissible = mod_pos(h, twop) == p;
            res.final_head = h;
            return res;
        }
        if (rem == 2) return res;
        mpz_class hm = mod_pos(h, twop);
        mpz_class delta;
        int rule;
        if (hm == 0) {
            delta = 0;
            rule = 1;
        } else if (hm == p + 1 && L[i + 1] == 2) {
            delta = p + 1;
            rule = 2;
        } else if (hm == p - 1 && L[i + 1] == -2) {
            delta = p - 1;
            rule = 3;
        } else {
            return res;
        }
        res.steps.push_back({rule, h, L[i + 1]});
        i += 2;
        h = L[i] - delta;
    }
}

void validate_ptype_entries(const std::vector<mpz_class>& E, long p, bool allow_zero) {
    if (E.empty() || E.size() % 2 == 0) throw InvalidInput("p-type fraction must have odd length");
    for (size_t i = 0; i < E.size(); ++i) {
        if (i % 2 == 0) {
            if (E[i] % p != 0) throw InvalidInput("odd-position entry is not a multiple of p");
        } else {
            if (mod_pos(E[i], 2) != 0) throw InvalidInput("even-position entry is not even");
        }
        if (!allow_zero && E[i] == 0) throw InvalidInput("zero entry in p-type fraction");
    }
}

} // namespace

std::string ContinuedFraction::str() const {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) out << ",";
        out << entries[i].get_str();
    }
    out << "]";
    return out.str();
}

std::vector<mpz_class> parse_cf_entries(const std::string& text) {
    std::string body = text;
    auto strip = [](std::string& s) {
        size_t a = s.find_first_not_of(" \t");
        size_t b = s.find_last_not_of(" \t");
        s = (a == std::string::npos) ? "" : s.substr(a, b - a + 1);
    };
    strip(body);
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') throw InvalidInput("unbalanced brackets in continued fraction");
        body = body.substr(1, body.size() - 2);
    }
    std::vector<mpz_class> out;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        strip(tok);
        if (tok.empty()) throw InvalidInput("empty entry in continued fraction");
        try {
            out.emplace_back(tok);
        } catch (const std::invalid_argument&) {
            throw InvalidInput("invalid integer in continued fraction: " + tok);
        }
    }
    if (out.empty()) throw InvalidInput("empty continued fraction");
    return out;
}

Rational cf_eval_entries(const std::vector<mpz_class>& entries) {
    if (entries.empty()) throw InvalidInput("empty continued fraction");
    mpz_class n = entries.back(), d = 1;
    for (size_t i = entries.size() - 1; i-- > 0;) {
        if (n == 0) throw DegenerateFraction("zero denominator in continued fraction");
        mpz_class nn = entries[i] * n - d;
        d = n;
        n = nn;
    }
    if (n == 0) throw DegenerateFraction("zero denominator in continued fraction");
    return Rational(d, n);
}

Rational cf_eval(const ContinuedFraction& cf) { return cf_eval_entries(cf.entries); }

ContinuedFraction even_cf(const Rational& r) {
    require_cf_rational(r);
    mpz_class num = r.num, den = r.den;
    std::vector<mpz_class> out;
    while (abs(num) != 1) {
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), den.get_mpz_t(), num.get_mpz_t());
        mpz_class e = (mod_pos(f, 2) == 0) ? f : f + 1;
        out.push_back(e);
        mpz_class nn = e * num - den;
        if (num < 0) nn = -nn;
        den = abs(num);
        num = nn;
    }
    out.push_back(den * num); // num is +-1; terminal c = den * sign(num)
    while (out.size() >= 2 && abs(out.back()) == 1) {
        mpz_class c = out.back();
        out.pop_back();
        out.back() += (c == 1) ? -1 : 1;
    }
    ContinuedFraction cf{ContinuedFraction::Kind::EvenType, 0, std::move(out)};
    if (cf_eval(cf) != r) throw InternalVerificationFailure("even expansion failed round-trip");
    return cf;
}

bool is_p_admissible(const Rational& r, long p) {
    require_odd_p(p);
    require_cf_rational(r);
    return admissibility_walk(even_cf(r).entries, p).admissible;
}

std::optional<ContinuedFraction> to_p_expansion(const Rational& r, long p) {
    require_odd_p(p);
    require_cf_rational(r);
    AdmResult walk = admissibility_walk(even_cf(r).entries, p);
    if (!walk.admissible) return std::nullopt;
    std::deque<mpz_class> E{walk.final_head};
    for (size_t s = walk.steps.size(); s-- > 0;) {
        const AdmStep& st = walk.steps[s];
        switch (st.rule) {
        case 1:
            E.push_front(st.second);
            E.push_front(st.head);
            break;
        case 2:
            E.front() += p;
            E.push_front(-2);
            E.push_front(st.head - 1);
            break;
        case 3:
            E.front() += p;
            E.push_front(2);
            E.push_front(st.head + 1);
            break;
        }
    }
    // Value-preserving merge [..., u, 0, v, ...] -> [..., u+v, ...] for interior
    // zeros created at the +p seams.
    for (size_t i = 1; i + 1 < E.size();) {
        if (E[i] == 0) {
            E[i - 1] += E[i + 1];
            E.erase(E.begin() + static_cast<long>(i), E.begin() + static_cast<long>(i) + 2);
            i = (i >= 2) ? i - 1 : 1; // merged entry may itself be zero
        } else {
            ++i;
        }
    }
    std::vector<mpz_class> entries(E.begin(), E.end());
    ContinuedFraction cf{ContinuedFraction::Kind::PType, p, std::move(entries)};
    try {
        validate_ptype_entries(cf.entries, p, false);
        mpz_class ksum = 0;
        for (size_t i = 0; i < cf.entries.size(); i += 2) ksum += cf.entries[i] / p;
        if (mod_pos(ksum, 2) != 1)
            throw InvalidInput("p-expansion parity violated");
        if (cf_eval(cf) != r) throw InvalidInput("p-expansion failed round-trip");
    } catch (const InvalidInput& e) {
        throw InternalVerificationFailure(std::string("constructed p-expansion is invalid: ") + e.what());
    }
    return cf;
}

ContinuedFraction normalize_mod4(const ContinuedFraction& cf, long p) {
    require_odd_p(p);
    if (cf.kind != ContinuedFraction::Kind::PType || cf.p != p)
        throw InvalidInput("normalize_mod4 requires a p-type fraction for the same p");
    validate_ptype_entries(cf.entries, p, true);
    std::vector<mpz_class> E = cf.entries;
    while (true) {
        for (size_t i = 0; i < E.size(); i += 2) E[i] = p * mod_pos(E[i] / p, 4);
        if (E.size() == 1) break;
        size_t z = 0;
        while (z < E.size() && E[z] != 0) ++z;
        if (z == E.size()) break;
        if (z == 0) {
            E.erase(E.begin(), E.begin() + 2);
        } else if (z + 1 == E.size()) {
            E.erase(E.end() - 2, E.end());
        } else {
            E[z - 1] += E[z + 1];
            E.erase(E.begin() + static_cast<long>(z), E.begin() + static_cast<long>(z) + 2);
        }
    }
    return ContinuedFraction{ContinuedFraction::Kind::PType, p, std::move(E)};
}

} // namespace twobridge

#include "twobridge/cli.hpp"

#include "twobridge/contfrac.hpp"
#include "twobridge/errors.hpp"
#include "twobridge/intpoly.hpp"
#include "twobridge/laurent.hpp"
#include "twobridge/mu.hpp"
#include "twobridge/parabolic.hpp"
#include "twobridge/rational.hpp"
#include "twobridge/ring.hpp"
#include "twobridge/total.hpp"
#include "twobridge/twisted.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace twobridge::cli {

namespace {

using nlohmann::json;

// Integers that fit a double-safe range stay JSON numbers; larger values
// become decimal strings so no reader silently rounds them.
json json_mpz(const mpz_class& v) {
    static const mpz_class lim = mpz_class(1) << 53;
    if (abs(v) <= lim && v.fits_slong_p()) return static_cast<long>(v.get_si());
    return v.get_str();
}

json json_coeffs(const std::vector<mpz_class>& c) {
    json a = json::array();
    for (const auto& v : c) a.push_back(json_mpz(v));
    return a;
}

json json_intpoly(const IntPoly& p) { return json_coeffs(p.c); }

json json_re(const RingElement& e) {
    std::vector<mpz_class> c = e.c;
    while (!c.empty() && c.back() == 0) c.pop_back();
    return json_coeffs(c);
}

json json_laurent(const LaurentPoly& p) {
    json coeffs = json::array();
    for (const auto& e : p.c) coeffs.push_back(json_re(e));
    return json{{"low", p.lowest_exponent}, {"coeffs", coeffs}};
}

json json_sw(const SWVerdict& v) {
    json n = nullptr;
    if (v.N) n = json_mpz(*v.N);
    return json{{"pow2_ok", v.pow2_ok}, {"N", n}};
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

IntPoly parse_theta(const std::string& text) {
    std::vector<mpz_class> c;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        try {
            c.emplace_back(item);
        } catch (const std::invalid_argument&) {
            throw InvalidInput("theta coefficients must be integers: '" + item + "'");
        }
    }
    if (c.empty()) throw InvalidInput("theta must have at least one coefficient");
    return IntPoly(std::move(c));
}

// A mu argument is either a knot fraction or a bracketed expansion.
ContinuedFraction parse_mu_fraction(const std::string& text, long p) {
    if (text.find('[') == std::string::npos) {
        Rational r = parse_rational(text);
        auto exp = to_p_expansion(r, p);
        if (!exp) throw NotInHp(r.str() + " is not " + std::to_string(p) + "-admissible");
        return *exp;
    }
    auto entries = parse_cf_entries(text);
    if (entries.size() % 2 == 0)
        throw InvalidInput("an expansion must have an odd number of entries");
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i % 2 == 0 && entries[i] % p != 0)
            throw InvalidInput("expansion entry " + entries[i].get_str() +
                               " is not a multiple of " + std::to_string(p));
        if (i % 2 == 1 && entries[i] % 2 != 0)
            throw InvalidInput("expansion entry " + entries[i].get_str() + " is not even");
    }
    return ContinuedFraction{ContinuedFraction::Kind::PType, p, std::move(entries)};
}

IntPoly tower_modulus(long p, long q) {
    auto tower = chi_tower(p);
    auto it = tower.find(q);
    if (it == tower.end())
        throw InvalidInput("q = " + std::to_string(q) + " is not an odd divisor (>= 3) of p = " +
                           std::to_string(p));
    return it->second;
}

void print_trace(std::ostream& out, const MuTraceNode& node, int depth) {
    out << std::string(static_cast<size_t>(2 * depth), ' ') << node.label << " "
        << node.fraction;
    if (!node.nu.empty()) out << "  nu = " << node.nu;
    out << "  mu = " << node.value << "\n";
    for (const auto& ch : node.children) print_trace(out, ch, depth + 1);
}

json json_trace(const MuTraceNode& node) {
    json ch = json::array();
    for (const auto& c : node.children) ch.push_back(json_trace(c));
    return json{{"label", node.label},
                {"fraction", node.fraction},
                {"nu", node.nu},
                {"value", node.value},
                {"children", ch}};
}

struct VerifyRow {
    TheoremAReport report;
    LaurentPoly lam;
    TwistedResult tw;
    SWVerdict sw;
    bool theorem_a;
};

VerifyRow verify_knot(const Rational& r, long p, long q) {
    VerifyRow row{theorem_a_check(r, p, q),
                  lambda(r, p, q),
                  twisted_alexander(r, tower_modulus(p, q == 0 ? p : q)),
                  {},
                  false};
    row.sw = total_twisted(r, tower_modulus(p, q == 0 ? p : q)).sw_verdict;
    row.theorem_a = row.report.mu_squared_match &&
                    row.report.lambda_at_1 == re_one(row.report.ring) && row.sw.pow2_ok &&
                    row.sw.N.has_value();
    return row;
}

int cmd_expand(std::ostream& out, bool as_json, const std::string& rstr, long p) {
    Rational r = parse_rational(rstr);
    ContinuedFraction even = even_cf(r);
    std::optional<ContinuedFraction> exp;
    if (p > 0) exp = to_p_expansion(r, p);
    if (as_json) {
        json j{{"r", r.str()}, {"even", json_coeffs(even.entries)}};
        if (p > 0) {
            j["p"] = p;
            j["expansion"] = exp ? json_coeffs(exp->entries) : json(nullptr);
        }
        emit(out, j);
    } else {
        out << "even: " << even.str() << "\n";
        if (p > 0) {
            if (exp)
                out << p << "-expansion: " << exp->str() << "\n";
            else
                out << "not " << p << "-admissible\n";
        }
    }
    return 0;
}

int cmd_admissible(std::ostream& out, bool as_json, const std::string& rstr, long p) {
    Rational r = parse_rational(rstr);
    bool adm = is_p_admissible(r, p);
    if (as_json)
        emit(out, json{{"r", r.str()}, {"p", p}, {"admissible", adm}});
    else
        out << (adm ? "yes" : "no") << "\n";
    return 0;
}

int cmd_reppoly(std::ostream& out, bool as_json, const std::string& rstr) {
    Rational r = parse_rational(rstr);
    IntPoly a = rep_polynomial(r);
    if (as_json)
        emit(out, json{{"r", r.str()}, {"coeffs", json_intpoly(a)}});
    else
        out << a.str("z") << "\n";
    return 0;
}

int cmd_chi(std::ostream& out, bool as_json, long p) {
    auto tower = chi_tower(p);
    if (as_json) {
        json factors = json::array();
        for (const auto& [q, chi] : tower)
            factors.push_back(json{{"q", q}, {"coeffs", json_intpoly(chi)}});
        emit(out, json{{"p", p}, {"factors", factors}});
    } else {
        for (const auto& [q, chi] : tower)
            out << "chi_" << q << ": " << chi.str("z") << "\n";
    }
    return 0;
}

int cmd_twisted(std::ostream& out, bool as_json, const std::string& rstr,
                const std::string& theta_str, long p, long q) {
    Rational r = parse_rational(rstr);
    IntPoly theta;
    if (!theta_str.empty())
        theta = parse_theta(theta_str);
    else if (p > 0)
        theta = tower_modulus(p, q == 0 ? p : q);
    else
        theta = rep_polynomial(r);
    TwistedResult tw = twisted_alexander(r, theta);
    json eps = nullptr;
    if (tw.sign_epsilon == SignEpsilon::Plus) eps = 1;
    if (tw.sign_epsilon == SignEpsilon::Minus) eps = -1;
    if (as_json) {
        emit(out, json{{"r", r.str()},
                       {"modulus", json_intpoly(theta)},
                       {"delta", json_laurent(tw.delta)},
                       {"epsilon", eps}});
    } else {
        out << "modulus: " << theta.str("s0") << "\n";
        out << "delta: " << tw.delta.str() << "\n";
    }
    return 0;
}

int cmd_lambda(std::ostream& out, bool as_json, const std::string& rstr, long p, long q) {
    Rational r = parse_rational(rstr);
    LaurentPoly lam = lambda(r, p, q);
    RingElement at1 = laurent_eval(lam, 1), atm1 = laurent_eval(lam, -1);
    if (as_json) {
        emit(out, json{{"r", r.str()},
                       {"p", p},
                       {"q", q == 0 ? p : q},
                       {"modulus", json_intpoly(lam.ring->modulus)},
                       {"lambda", json_laurent(lam)},
                       {"at_1", json_re(at1)},
                       {"at_neg1", json_re(atm1)}});
    } else {
        out << "lambda: " << lam.str() << "\n";
        out << "lambda(1) = " << at1.str() << "\n";
        out << "lambda(-1) = " << atm1.str() << "\n";
    }
    return 0;
}

int cmd_mu(std::ostream& out, bool as_json, const std::string& arg, long p, bool trace) {
    ContinuedFraction cf = parse_mu_fraction(arg, p);
    auto ring = QuotientRing::make(tower_modulus(p, p));
    MuTraceNode root;
    RingElement value = mu(cf, p, ring, trace ? &root : nullptr);
    if (as_json) {
        json j{{"p", p}, {"expansion", json_coeffs(cf.entries)}, {"mu", json_re(value)}};
        if (trace) j["trace"] = json_trace(root);
        emit(out, j);
    } else {
        out << "mu = " << value.str() << "\n";
        if (trace) print_trace(out, root, 0);
    }
    return 0;
}

int cmd_total(std::ostream& out, bool as_json, const std::string& rstr,
              const std::string& theta_str, bool cross_check) {
    Rational r = parse_rational(rstr);
    TotalResult res = theta_str.empty()
                          ? total_twisted(r, rep_polynomial(r), cross_check)
                          : total_twisted(r, parse_theta(theta_str), cross_check);
    if (as_json) {
        emit(out, json{{"r", r.str()},
                       {"D", json_intpoly(res.D)},
                       {"d", res.d},
                       {"at_1", json_mpz(res.at_1)},
                       {"at_neg1", json_mpz(res.at_neg1)},
                       {"sw", json_sw(res.sw_verdict)}});
    } else {
        out << "D = " << res.D.str() << "\n";
        out << "d = " << res.d << "\n";
        out << "D(1) = " << res.at_1.get_str() << ", D(-1) = " << res.at_neg1.get_str() << "\n";
        out << "sw: pow2_ok = " << (res.sw_verdict.pow2_ok ? "yes" : "no");
        if (res.sw_verdict.N)
            out << ", N = " << res.sw_verdict.N->get_str();
        out << "\n";
    }
    return 0;
}

int cmd_verify(std::ostream& out, bool as_json, const std::string& rstr, long p, long q) {
    Rational r = parse_rational(rstr);
    VerifyRow row = verify_knot(r, p, q);
    if (as_json) {
        emit(out, json{{"r", r.str()},
                       {"p", p},
                       {"q", q == 0 ? p : q},
                       {"modulus", json_intpoly(row.report.ring->modulus)},
                       {"delta", json_laurent(row.tw.delta)},
                       {"lambda", json_laurent(row.lam)},
                       {"at_1", json_re(row.report.lambda_at_1)},
                       {"at_neg1", json_re(row.report.lambda_at_neg1)},
                       {"mu", json_re(row.report.mu_value)},
                       {"theorem_a", row.theorem_a},
                       {"sw", json_sw(row.sw)}});
    } else {
        out << "r = " << r.str() << ", p = " << p << ", q = " << (q == 0 ? p : q) << "\n";
        out << "modulus: " << row.report.ring->modulus.str("s0") << "\n";
        out << "delta: " << row.tw.delta.str() << "\n";
        out << "lambda: " << row.lam.str() << "\n";
        out << "lambda(1) = " << row.report.lambda_at_1.str() << "\n";
        out << "lambda(-1) = " << row.report.lambda_at_neg1.str() << "\n";
        out << "mu = " << row.report.mu_value.str() << "\n";
        out << "theorem_a: " << (row.theorem_a ? "pass" : "fail") << "\n";
        out << "sw: pow2_ok = " << (row.sw.pow2_ok ? "yes" : "no");
        if (row.sw.N) out << ", N = " << row.sw.N->get_str();
        out << "\n";
    }
    if (!row.theorem_a)
        throw InternalVerificationFailure("verification failed for " + r.str());
    return 0;
}

int cmd_scan(std::ostream& out, bool as_json, long p, long max_alpha) {
    if (max_alpha < 3) throw InvalidInput("max-alpha must be at least 3");
    json rows = json::array();
    if (!as_json) out << "r\tmu\tlambda(-1)\tN\n";
    for (long alpha = 3; alpha <= max_alpha; alpha += 2) {
        for (long beta = 1; beta < alpha; beta += 2) {
            if (std::gcd(alpha, beta) != 1) continue;
            Rational r(beta, alpha);
            if (!is_p_admissible(r, p)) continue;
            VerifyRow row = verify_knot(r, p, 0);
            if (!row.theorem_a)
                throw InternalVerificationFailure("scan row failed verification: " + r.str());
            if (as_json) {
                rows.push_back(json{{"r", r.str()},
                                    {"mu", json_re(row.report.mu_value)},
                                    {"lambda_at_neg1", json_re(row.report.lambda_at_neg1)},
                                    {"N", row.sw.N ? json_mpz(*row.sw.N) : json(nullptr)}});
            } else {
                out << r.str() << "\t" << row.report.mu_value.str() << "\t"
                    << row.report.lambda_at_neg1.str() << "\t"
                    << (row.sw.N ? row.sw.N->get_str() : "-") << "\n";
            }
        }
    }
    if (as_json) emit(out, json{{"p", p}, {"max_alpha", max_alpha}, {"rows", rows}});
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact invariants of 2-bridge knots at parabolic SL(2) representations"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    std::string rstr, theta_str, mu_arg;
    long p = 0, q = 0, max_alpha = 250;
    bool trace = false, cross_check = false;

    auto add_sub = [&](const char* name, const char* desc) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->fallthrough();
        return sub;
    };

    CLI::App* expand = add_sub("expand", "even-type continued fraction and p-expansion");
    expand->add_option("r", rstr, "knot fraction beta/alpha")->required();
    expand->add_option("--p", p, "odd torus parameter >= 3");

    CLI::App* admissible = add_sub("admissible", "test whether the knot fraction lies in H(p)");
    admissible->add_option("r", rstr, "knot fraction beta/alpha")->required();
    admissible->add_option("--p", p, "odd torus parameter >= 3")->required();

    CLI::App* reppoly = add_sub("reppoly", "representation polynomial of the knot");
    reppoly->add_option("r", rstr, "knot fraction beta/alpha")->required();

    CLI::App* chi = add_sub("chi", "integer factor tower of the torus representation polynomial");
    chi->add_option("--p", p, "odd torus parameter >= 3")->required();

    CLI::App* twisted = add_sub("twisted", "twisted polynomial over a chosen modulus");
    twisted->add_option("r", rstr, "knot fraction beta/alpha")->required();
    twisted->add_option("--theta", theta_str, "modulus coefficients c0,c1,...");
    twisted->add_option("--p", p, "use the factor tower of this p");
    twisted->add_option("--q", q, "tower divisor (defaults to p)");

    CLI::App* lam = add_sub("lambda", "quotient invariant of a knot in H(p)");
    lam->add_option("r", rstr, "knot fraction beta/alpha")->required();
    lam->add_option("--p", p, "odd torus parameter >= 3")->required();
    lam->add_option("--q", q, "tower divisor (defaults to p)");

    CLI::App* mu_cmd = add_sub("mu", "recursive invariant of a p-expansion");
    mu_cmd->add_option("fraction", mu_arg, "knot fraction or bracketed p-expansion")->required();
    mu_cmd->add_option("--p", p, "odd torus parameter >= 3")->required();
    mu_cmd->add_flag("--trace", trace, "print the recursion tree");

    CLI::App* total = add_sub("total", "total twisted polynomial over all conjugates");
    total->add_option("r", rstr, "knot fraction beta/alpha")->required();
    total->add_option("--theta", theta_str, "modulus coefficients c0,c1,...");
    total->add_flag("--cross-check", cross_check, "also run the substituted route and compare");

    CLI::App* verify = add_sub("verify", "full evaluation report for one knot");
    verify->add_option("r", rstr, "knot fraction beta/alpha")->required();
    verify->add_option("--p", p, "odd torus parameter >= 3")->required();
    verify->add_option("--q", q, "tower divisor (defaults to p)");

    CLI::App* scan = add_sub("scan", "enumerate knots in H(p) and verify every row");
    scan->add_option("--p", p, "odd torus parameter >= 3")->required();
    scan->add_option("--max-alpha", max_alpha, "largest denominator to enumerate");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (expand->parsed()) return cmd_expand(out, as_json, rstr, p);
        if (admissible->parsed()) return cmd_admissible(out, as_json, rstr, p);
        if (reppoly->parsed()) return cmd_reppoly(out, as_json, rstr);
        if (chi->parsed()) return cmd_chi(out, as_json, p);
        if (twisted->parsed()) return cmd_twisted(out, as_json, rstr, theta_str, p, q);
        if (lam->parsed()) return cmd_lambda(out, as_json, rstr, p, q);
        if (mu_cmd->parsed()) return cmd_mu(out, as_json, mu_arg, p, trace);
        if (total->parsed()) return cmd_total(out, as_json, rstr, theta_str, cross_check);
        if (verify->parsed()) return cmd_verify(out, as_json, rstr, p, q);
        if (scan->parsed()) return cmd_scan(out, as_json, p, max_alpha);
    } catch (const InternalVerificationFailure& e) {
        err << "verification failure: " << e.what() << "\n";
        return 2;
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << "\n";
        return 1;
    }
    err << "no subcommand selected\n";
    return 1;
}

} // namespace twobridge::cli

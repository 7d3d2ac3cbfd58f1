#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

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

#include <sstream>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace twobridge;

namespace {

// Coefficients go through decimal strings so values beyond 64 bits stay exact.
py::object py_mpz(const mpz_class& v) {
    return py::reinterpret_steal<py::object>(
        PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::list py_coeffs(const std::vector<mpz_class>& v) {
    py::list out;
    for (const auto& x : v) out.append(py_mpz(x));
    return out;
}

py::list py_re(const RingElement& e) {
    std::vector<mpz_class> c = e.c;
    while (!c.empty() && c.back() == 0) c.pop_back();
    return py_coeffs(c);
}

mpz_class mpz_from(py::handle h) {
    return mpz_class(py::str(h).cast<std::string>());
}

IntPoly poly_from(py::handle seq) {
    std::vector<mpz_class> c;
    for (py::handle h : py::iter(seq)) c.push_back(mpz_from(h));
    return IntPoly(std::move(c));
}

py::dict laurent_dict(const LaurentPoly& p) {
    py::list coeffs;
    for (const auto& e : p.c) coeffs.append(py_re(e));
    py::dict d;
    d["low"] = p.lowest_exponent;
    d["coeffs"] = coeffs;
    d["text"] = p.str();
    return d;
}

py::dict sw_dict(const SWVerdict& v) {
    py::dict d;
    d["pow2_ok"] = v.pow2_ok;
    d["N"] = v.N ? py_mpz(*v.N) : py::object(py::none());
    return d;
}

py::dict total_dict(const TotalResult& res) {
    py::dict d;
    d["D"] = py_coeffs(res.D.c);
    d["d"] = res.d;
    d["at_1"] = py_mpz(res.at_1);
    d["at_neg1"] = py_mpz(res.at_neg1);
    d["sw"] = sw_dict(res.sw_verdict);
    d["text"] = res.D.str();
    return d;
}

ContinuedFraction expansion_from(py::handle arg, long p) {
    if (py::isinstance<py::str>(arg)) {
        Rational r = parse_rational(arg.cast<std::string>());
        auto exp = to_p_expansion(r, p);
        if (!exp) throw NotInHp(r.str() + " is not " + std::to_string(p) + "-admissible");
        return *exp;
    }
    std::vector<mpz_class> entries;
    for (py::handle h : py::iter(arg)) entries.push_back(mpz_from(h));
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

RingPtr ring_for(long p, long q) {
    auto tower = chi_tower(p);
    auto it = tower.find(q == 0 ? p : q);
    if (it == tower.end())
        throw InvalidInput("q must be an odd divisor of p, at least 3");
    return QuotientRing::make(it->second);
}

} // namespace

PYBIND11_MODULE(_twobridge, m) {
    m.doc() = "Exact invariants of 2-bridge knots at parabolic SL(2) representations";

    py::register_exception<InternalVerificationFailure>(m, "InternalVerificationFailure",
                                                        PyExc_RuntimeError);
    py::register_exception<InvalidInput>(m, "InvalidInputError", PyExc_ValueError);

    m.def(
        "even_cf",
        [](const std::string& r) { return py_coeffs(even_cf(parse_rational(r)).entries); },
        py::arg("r"), "Even-type continued fraction entries of a knot fraction.");

    m.def(
        "p_expansion",
        [](const std::string& r, long p) -> py::object {
            auto e = to_p_expansion(parse_rational(r), p);
            if (!e) return py::none();
            return py_coeffs(e->entries);
        },
        py::arg("r"), py::arg("p"),
        "Expansion with odd slots multiples of p, or None when the knot is not in H(p).");

    m.def(
        "admissible",
        [](const std::string& r, long p) { return is_p_admissible(parse_rational(r), p); },
        py::arg("r"), py::arg("p"), "Whether the knot fraction lies in H(p).");

    m.def(
        "reppoly",
        [](const std::string& r) { return py_coeffs(rep_polynomial(parse_rational(r)).c); },
        py::arg("r"), "Coefficients of the representation polynomial, ascending.");

    m.def(
        "chi",
        [](long p) {
            py::dict d;
            for (const auto& [q, chi] : chi_tower(p)) d[py::int_(q)] = py_coeffs(chi.c);
            return d;
        },
        py::arg("p"), "Integer factor tower of the torus representation polynomial.");

    m.def(
        "twisted",
        [](const std::string& r, py::object theta) {
            Rational rat = parse_rational(r);
            IntPoly th = theta.is_none() ? rep_polynomial(rat) : poly_from(theta);
            TwistedResult tw = twisted_alexander(rat, th);
            py::dict d;
            d["modulus"] = py_coeffs(th.c);
            d["delta"] = laurent_dict(tw.delta);
            d["epsilon"] = tw.sign_epsilon == SignEpsilon::Plus    ? py::object(py::int_(1))
                           : tw.sign_epsilon == SignEpsilon::Minus ? py::object(py::int_(-1))
                                                                   : py::object(py::none());
            return d;
        },
        py::arg("r"), py::arg("theta") = py::none(),
        "Twisted polynomial over Z[z]/(theta); theta defaults to the representation polynomial.");

    m.def(
        "lambda_",
        [](const std::string& r, long p, long q) {
            LaurentPoly lam = lambda(parse_rational(r), p, q);
            py::dict d;
            d["modulus"] = py_coeffs(lam.ring->modulus.c);
            d["lambda"] = laurent_dict(lam);
            d["at_1"] = py_re(laurent_eval(lam, 1));
            d["at_neg1"] = py_re(laurent_eval(lam, -1));
            return d;
        },
        py::arg("r"), py::arg("p"), py::arg("q") = 0,
        "Quotient invariant of a knot in H(p) over the tower factor for q (default q = p).");
    m.attr("lambda") = m.attr("lambda_");

    m.def(
        "mu",
        [](py::handle fraction, long p) {
            ContinuedFraction cf = expansion_from(fraction, p);
            return py_re(mu(cf, p, ring_for(p, 0)));
        },
        py::arg("fraction"), py::arg("p"),
        "Recursive invariant of a knot fraction string or explicit expansion entries.");

    m.def("sigma", &sigma, py::arg("k"), py::arg("m"),
          "Weight table entry used by the recursive invariant.");

    m.def(
        "classical_torus",
        [](long q) { return py_coeffs(classical_alexander_torus(q).c); },
        py::arg("q"), "Classical Alexander polynomial of the (2, q) torus knot.");

    m.def(
        "total",
        [](const std::string& r, py::object theta, bool cross_check) {
            Rational rat = parse_rational(r);
            IntPoly th = theta.is_none() ? rep_polynomial(rat) : poly_from(theta);
            return total_dict(total_twisted(rat, th, cross_check));
        },
        py::arg("r"), py::arg("theta") = py::none(), py::arg("cross_check") = false,
        "Total twisted polynomial over all conjugate parameters with square verdict.");

    m.def(
        "total_torus",
        [](long p, long q) { return py_coeffs(total_torus(p, q).c); },
        py::arg("p"), py::arg("q"), "Closed-form total polynomial factor of a torus knot.");

    m.def(
        "theorem_a",
        [](const std::string& r, long p, long q) {
            TheoremAReport rep = theorem_a_check(parse_rational(r), p, q);
            py::dict d;
            d["modulus"] = py_coeffs(rep.ring->modulus.c);
            d["delta_at_1"] = py_re(rep.delta_at_1);
            d["delta_at_neg1"] = py_re(rep.delta_at_neg1);
            d["lambda_at_1"] = py_re(rep.lambda_at_1);
            d["lambda_at_neg1"] = py_re(rep.lambda_at_neg1);
            d["mu"] = py_re(rep.mu_value);
            d["ok"] = rep.mu_squared_match;
            return d;
        },
        py::arg("r"), py::arg("p"), py::arg("q") = 0,
        "Evaluations at t = 1 and t = -1 together with the recursive invariant.");

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run a CLI command in-process; returns (exit_code, stdout, stderr).");

    m.attr("__all__") = py::make_tuple(
        "even_cf", "p_expansion", "admissible", "reppoly", "chi", "twisted", "lambda_", "mu",
        "sigma", "classical_torus", "total", "total_torus", "theorem_a", "run_cli",
        "InternalVerificationFailure", "InvalidInputError");
}

#include "qlfun/padic_context.hpp"
#include "qlfun/qeuler.hpp"
#include "qlfun/verify.hpp"
#include "qlfun/zeta_arch.hpp"
#include "qlfun/zeta_padic.hpp"

#include <CLI11.hpp>

#include <complex>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace qlfun;

Complex parse_complex(const std::string& text) {
    auto comma = text.find(',');
    try {
        if (comma == std::string::npos) return Complex(std::stod(text), 0.0);
        return Complex(std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1)));
    } catch (const std::exception&) {
        throw DomainError("malformed complex number '" + text + "' (expected RE or RE,IM)");
    }
}

Fraction parse_fraction(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Fraction{std::stol(text), 1};
        return Fraction{std::stol(text.substr(0, slash)), std::stol(text.substr(slash + 1))};
    } catch (const std::exception&) {
        throw DomainError("malformed fraction '" + text + "' (expected A or A/F)");
    }
}

struct EulerOptions {
    std::string q;
    std::string complex_q;
    long p = 0;
    long prec = 8;
    long max_m = 0;
    std::string chi;
    std::string format = "csv";
};

DirichletCharacter<Rational> rational_character(const CharacterSpec& spec) {
    switch (spec.kind) {
        case CharacterSpec::Kind::Trivial:
            return trivial_character(spec.f);
        case CharacterSpec::Kind::Quadratic:
            return quadratic_character(spec.f);
        case CharacterSpec::Kind::Teichmuller:
            throw DomainError("Teichmuller characters live in the p-adic domain");
    }
    throw DomainError("unreachable");
}

int run_euler(const EulerOptions& opt) {
    if (opt.max_m < 0) throw DomainError("euler: --max-m must be nonnegative");
    bool json = opt.format == "json";
    Json rows = Json::array();

    if (opt.p != 0) {  // p-adic domain
        if (opt.q.empty()) throw DomainError("euler: --q is required with --p");
        Rational q = Rational::parse(opt.q);
        PadicQContext ctx = (q == Rational(1)) ? PadicQContext::classical_limit(opt.p, opt.prec)
                                               : PadicQContext(opt.p, opt.prec, q);
        std::optional<DirichletCharacter<PadicNumber>> chi;
        if (!opt.chi.empty()) {
            CharacterSpec spec = CharacterSpec::parse(opt.chi);
            if (spec.kind == CharacterSpec::Kind::Teichmuller) {
                if (spec.f != opt.p) throw DomainError("euler: teich character prime must equal --p");
                chi = teichmuller_power(spec.t, opt.p, ctx.work_precision());
            } else {
                chi = to_padic(rational_character(spec), opt.p, ctx.work_precision());
            }
        }
        for (long m = 0; m <= opt.max_m; ++m) {
            PadicNumber value = chi ? generalized_q_euler(m, *chi, ctx) : q_euler_number(m, ctx);
            if (json) {
                rows.push_back(Json{{"m", m}, {"value", to_json(value)}});
            } else {
                Json v = to_json(value);
                std::cout << m << "," << v["p"] << ","
                          << (v["valuation"].is_null() ? std::string("inf")
                                                       : std::to_string(v["valuation"].get<long>()))
                          << "," << v["unit"].get<std::string>() << "," << v["precision"] << "\n";
            }
        }
    } else if (!opt.complex_q.empty()) {  // complex domain
        ComplexContext ctx(parse_complex(opt.complex_q));
        std::optional<DirichletCharacter<Complex>> chi;
        if (!opt.chi.empty()) chi = to_complex(rational_character(CharacterSpec::parse(opt.chi)));
        for (long m = 0; m <= opt.max_m; ++m) {
            Complex value = chi ? generalized_q_euler(m, *chi, ctx) : q_euler_number(m, ctx);
            if (json) {
                rows.push_back(Json{{"m", m}, {"value", to_json(value)}});
            } else {
                std::cout << m << "," << value.real() << "," << value.imag() << "\n";
            }
        }
    } else {  // exact rational domain
        if (opt.q.empty()) throw DomainError("euler: one of --q, --p, --complex is required");
        Rational q = Rational::parse(opt.q);
        RationalContext ctx =
            (q == Rational(1)) ? RationalContext::classical_limit() : RationalContext(q);
        std::optional<DirichletCharacter<Rational>> chi;
        if (!opt.chi.empty()) chi = rational_character(CharacterSpec::parse(opt.chi));
        for (long m = 0; m <= opt.max_m; ++m) {
            Rational value = chi ? generalized_q_euler(m, *chi, ctx) : q_euler_number(m, ctx);
            if (json) {
                rows.push_back(Json{{"m", m}, {"value", to_json(value)}});
            } else {
                std::cout << m << "," << value.to_string() << "\n";
            }
        }
    }
    if (json) std::cout << rows.dump(2) << "\n";
    return 0;
}

struct SeriesOptions {
    std::string q;
    std::string s;
    std::string x = "0/1";
    std::string chi;
    double eps = 1e-10;
    long max_terms = 2'000'000;
};

int run_zeta(const SeriesOptions& opt, bool lfun) {
    ComplexContext ctx(parse_complex(opt.q));
    Complex s = parse_complex(opt.s);
    Truncation tr{opt.eps, opt.max_terms};
    SeriesResult res = lfun ? dirichlet_l(s, to_complex(rational_character(CharacterSpec::parse(
                                                 opt.chi.empty() ? "trivial:1" : opt.chi))),
                                             ctx, tr)
                            : zeta_E(s, parse_fraction(opt.x), ctx, tr);
    Json out{{"value", to_json(res.value)}, {"certified_error", res.tail_bound}, {"terms", res.terms}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

struct PadicLOptions {
    long p = 0;
    long prec = 8;
    std::string q;
    std::string chi;
    std::string s;
};

int run_padic_l(const PadicLOptions& opt) {
    Rational q = Rational::parse(opt.q);
    PadicQContext base = (q == Rational(1)) ? PadicQContext::classical_limit(opt.p, opt.prec)
                                            : PadicQContext(opt.p, opt.prec, q);
    CharacterSpec spec = CharacterSpec::parse(opt.chi);
    DirichletCharacter<PadicNumber> chi = [&] {
        if (spec.kind == CharacterSpec::Kind::Teichmuller) {
            if (spec.f != opt.p) throw DomainError("padic-l: teich character prime must equal --p");
            return teichmuller_power(spec.t, opt.p, base.work_precision());
        }
        return to_padic(rational_character(spec), opt.p, base.work_precision());
    }();
    PadicLContext ctx(base, chi);

    Rational s = Rational::parse(opt.s);
    PadicNumber value = [&] {
        if (s.is_integer()) return padic_l(s.numerator().convert_to<long>(), ctx);
        if (s.valuation(opt.p) < 0) throw DomainError("padic-l: s must lie in Z_p");
        return padic_l(base.embed(s), ctx);
    }();
    std::cout << to_json(value).dump(2) << "\n";
    return 0;
}

struct VerifyOptions {
    std::string suite;
    SuiteParams params;
    // raw flag storage (CLI11 binds these; optionals filled afterwards)
    long p = -1, prec = -1, trials = -1, nmax = -1, mmax = -1, kmax = -1, rmax = -1;
    long r = -1, k = -1, j = -1;
    double eps = -1.0;
    std::string q;
};

int run_verify(VerifyOptions& opt) {
    SuiteParams& sp = opt.params;
    if (opt.p >= 0) sp.p = opt.p;
    if (opt.prec >= 0) sp.prec = opt.prec;
    if (opt.trials >= 0) sp.trials = opt.trials;
    if (opt.nmax >= 0) sp.nmax = opt.nmax;
    if (opt.mmax >= 0) sp.mmax = opt.mmax;
    if (opt.kmax >= 0) sp.kmax = opt.kmax;
    if (opt.rmax >= 0) sp.rmax = opt.rmax;
    if (opt.r >= 0) sp.r = opt.r;
    if (opt.k >= 0) sp.k = opt.k;
    if (opt.j >= 0) sp.j = opt.j;
    if (opt.eps >= 0) sp.eps = opt.eps;
    if (!opt.q.empty()) sp.q = Rational::parse(opt.q);

    if (!is_suite_name(opt.suite)) {
        std::cerr << "unknown suite '" << opt.suite << "'; available:";
        for (const auto& name : suite_names()) std::cerr << " " << name;
        std::cerr << "\n";
        return 2;
    }
    VerificationReport rep = run_suite(opt.suite, sp);
    std::cout << rep.to_json().dump(2) << "\n";
    return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-Euler numbers, q-zeta/l-functions and p-adic q-l-functions "
                 "with exact verification suites"};
    app.require_subcommand(1);

    EulerOptions eopt;
    CLI::App* euler = app.add_subcommand("euler", "tabulate q-Euler numbers E_{m,q} or E_{m,chi,q}");
    euler->add_option("--q", eopt.q, "rational q as NUM/DEN (1 selects the classical limit)");
    euler->add_option("--complex", eopt.complex_q, "complex q as RE,IM with 0 < |q| < 1");
    euler->add_option("--p", eopt.p, "odd prime for the p-adic domain");
    euler->add_option("--prec", eopt.prec, "p-adic precision (significant digits)");
    euler->add_option("--max-m", eopt.max_m, "largest index m")->required();
    euler->add_option("--chi", eopt.chi, "character spec: trivial:f, quadratic:p, teich:p:t");
    euler->add_option("--format", eopt.format, "output format: csv (default) or json")
        ->check(CLI::IsMember({"csv", "json"}));

    SeriesOptions zopt;
    CLI::App* zeta = app.add_subcommand("zeta", "evaluate zeta_{E,q}(s, x) with certified tail");
    zeta->add_option("--q", zopt.q, "complex q as RE[,IM], 0 < |q| < 1")->required();
    zeta->add_option("--s", zopt.s, "complex s as RE[,IM]")->required();
    zeta->add_option("--x", zopt.x, "evaluation point as A/F (default 0)");
    zeta->add_option("--eps", zopt.eps, "target absolute error");
    zeta->add_option("--max-terms", zopt.max_terms, "series term budget");

    SeriesOptions lopt;
    CLI::App* lfun = app.add_subcommand("lfun", "evaluate l_q(s, chi) with certified tail");
    lfun->add_option("--q", lopt.q, "complex q as RE[,IM], 0 < |q| < 1")->required();
    lfun->add_option("--s", lopt.s, "complex s as RE[,IM]")->required();
    lfun->add_option("--chi", lopt.chi, "character spec: trivial:f or quadratic:p")->required();
    lfun->add_option("--eps", lopt.eps, "target absolute error");
    lfun->add_option("--max-terms", lopt.max_terms, "series term budget");

    PadicLOptions plopt;
    CLI::App* padicl = app.add_subcommand("padic-l", "evaluate l_{p,q}(s, chi)");
    padicl->add_option("--p", plopt.p, "odd prime")->required();
    padicl->add_option("--prec", plopt.prec, "p-adic precision");
    padicl->add_option("--q", plopt.q, "rational q with v_p(q-1) >= 1 (1 = classical limit)")->required();
    padicl->add_option("--chi", plopt.chi, "character spec")->required();
    padicl->add_option("--s", plopt.s, "s in Z_p (integer or rational)")->required();

    VerifyOptions vopt;
    CLI::App* verify = app.add_subcommand("verify", "run a named identity suite, report JSON");
    verify->add_option("suite", vopt.suite, "suite name")->required();
    verify->add_option("--p", vopt.p, "prime");
    verify->add_option("--q", vopt.q, "rational q");
    verify->add_option("--prec", vopt.prec, "p-adic precision");
    verify->add_option("--trials", vopt.trials, "number of random draws");
    verify->add_option("--seed", vopt.params.seed, "random seed");
    verify->add_option("--nmax", vopt.nmax, "n grid bound");
    verify->add_option("--mmax", vopt.mmax, "m grid bound");
    verify->add_option("--kmax", vopt.kmax, "k grid bound");
    verify->add_option("--rmax", vopt.rmax, "r grid bound");
    verify->add_option("--r", vopt.r, "single-case r (eq22-23)");
    verify->add_option("--k", vopt.k, "single-case k (eq22-23)");
    verify->add_option("--j", vopt.j, "single-case j (eq22-23)");
    verify->add_option("--eps", vopt.eps, "tolerance for archimedean suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (euler->parsed()) return run_euler(eopt);
        if (zeta->parsed()) return run_zeta(zopt, false);
        if (lfun->parsed()) return run_zeta(lopt, true);
        if (padicl->parsed()) return run_padic_l(plopt);
        if (verify->parsed()) return run_verify(vopt);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PrecisionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

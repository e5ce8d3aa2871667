// Command-line interface for the exact quantization engine.
//
// Verbs:
//   normalize EXPR            parse and normal-order an expression
//   bracket EXPR EXPR         commutator [x, y] = xy - yx
//   coproduct EXPR            quantized coproduct (twist-conjugated or closed)
//   antipode EXPR             quantized antipode  (twist-conjugated or closed)
//   verify --suite NAME       run a named verification suite
//
// Exit codes: 0 success, 1 verification mismatch, 2 parse error,
// 3 configuration error.  All arithmetic is exact; all output is
// deterministic (fixed term orders, no concurrency on the output path).

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "esvq/esvq.hpp"

namespace {

using namespace esvq;

// --- option plumbing ---------------------------------------------------------

struct Options {
    std::string p = "1/2";
    int order = 3;
    std::int64_t index_range = 4;
    std::uint64_t seed = 2026;
    std::string format = "text";
    std::string method = "twist";
    std::string suite;
    std::string expr;
    std::string expr2;
};

std::int64_t parse_p2(const std::string& p) {
    const std::size_t slash = p.find('/');
    if (slash == std::string::npos || p.substr(slash + 1) != "2")
        throw ConfigError("p must be a half-odd integer written as k/2, got '" +
                          p + "'");
    try {
        std::size_t used = 0;
        const std::int64_t num = std::stoll(p.substr(0, slash), &used);
        if (used != slash) throw std::invalid_argument(p);
        return num;  // TwistContext validates oddness
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError("cannot parse p value '" + p + "'");
    }
}

int default_order_from_env() {
    const char* env = std::getenv("ESVQ_ORDER");
    if (env == nullptr || *env == '\0') return 3;
    try {
        std::size_t used = 0;
        const std::string s(env);
        const int n = std::stoi(s, &used);
        if (used != s.size() || n < 0) throw std::invalid_argument(s);
        return n;
    } catch (const std::exception&) {
        throw ConfigError(std::string("invalid ESVQ_ORDER value '") + env +
                          "' (expected a nonnegative integer)");
    }
}

RenderFormat parse_format(const std::string& f) {
    if (f == "text") return RenderFormat::Text;
    if (f == "json") return RenderFormat::Json;
    if (f == "latex") return RenderFormat::Latex;
    throw ConfigError("unknown format '" + f + "'");
}

// --- closed-form application -------------------------------------------------

// The closed forms are per-generator; both structure maps extend linearly, so
// the closed route accepts exactly the t-scaled linear combinations of single
// generators (plus scalar terms, which the maps fix).
template <typename GenFn, typename UnitFn>
auto apply_closed(const Poly& x, GenFn&& on_gen, UnitFn&& on_unit)
    -> decltype(on_unit(Rational(), 0)) {
    auto out = on_unit(Rational(0), 0);
    for (const auto& [key, c] : x.terms()) {
        if (key.mono.empty()) {
            out += on_unit(c, key.tdeg);
        } else if (key.mono.num_factors() == 1 &&
                   key.mono.factors()[0].exp == 1) {
            out += c * on_gen(key.mono.factors()[0].g).shifted_t(key.tdeg);
        } else {
            throw ConfigError(
                "--method closed applies to linear combinations of single "
                "generators (term '" + mono_string(key.mono) +
                "' has degree > 1); use --method twist");
        }
    }
    return out;
}

Tensor coproduct_closed(const Poly& x, const TwistContext& ctx) {
    return apply_closed(
        x, [&](const Gen& g) { return closed_form_coproduct(g, ctx); },
        [&](const Rational& c, int tdeg) {
            Tensor u(2, ctx.order);
            u.add_term(tdeg, {Monomial::unit(), Monomial::unit()}, c);
            return u;
        });
}

Poly antipode_closed(const Poly& x, const TwistContext& ctx) {
    return apply_closed(
        x, [&](const Gen& g) { return closed_form_antipode(g, ctx); },
        [&](const Rational& c, int tdeg) {
            return Poly::scalar(c, ctx.order, tdeg);
        });
}

// --- verb runners ------------------------------------------------------------

int run_verify(const Options& opt) {
    bool known = false;
    for (const std::string& n : suite_names()) known = known || (n == opt.suite);
    if (!known) throw ConfigError("unknown suite '" + opt.suite + "'");

    SuiteConfig cfg;
    cfg.p2 = parse_p2(opt.p);
    cfg.order = opt.order;
    cfg.index_range2 = opt.index_range;
    cfg.seed = opt.seed;

    std::cout << "suite=" << opt.suite << " p=" << opt.p
              << " order=" << cfg.order << " index-range=" << cfg.index_range2
              << " seed=" << cfg.seed << "\n";

    const CheckSink sink = [](const Check& c) {
        std::cout << (c.pass ? "[ok] " : "[FAIL] ") << c.name;
        if (!c.detail.empty()) std::cout << " | " << c.detail;
        std::cout << "\n";
    };
    const Report report = run_suite(opt.suite, cfg, sink);
    std::cout << report.summary() << "\n";
    return report.all_pass() ? 0 : 1;
}

int run_expression_verb(const std::string& verb, const Options& opt) {
    const RenderFormat fmt = parse_format(opt.format);
    if (opt.method != "twist" && opt.method != "closed")
        throw ConfigError("unknown method '" + opt.method + "'");

    const Poly x = parse_expression(opt.expr, opt.order);

    if (verb == "normalize") {
        std::cout << render(x, fmt) << "\n";
        return 0;
    }
    if (verb == "bracket") {
        const Poly y = parse_expression(opt.expr2, opt.order);
        const Poly comm = x * y - y * x;
        std::cout << render(comm, fmt) << "\n";
        return 0;
    }

    const TwistContext ctx(parse_p2(opt.p), opt.order);
    if (verb == "coproduct") {
        const Tensor d = (opt.method == "twist") ? twisted_coproduct(x, ctx)
                                                 : coproduct_closed(x, ctx);
        std::cout << render(d, fmt) << "\n";
        return 0;
    }
    // antipode
    const Poly s = (opt.method == "twist") ? twisted_antipode(x, ctx)
                                           : antipode_closed(x, ctx);
    std::cout << render(s, fmt) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    Options opt;

    CLI::App app{
        "Exact symbolic engine for the twist quantization of the extended "
        "Schrodinger-Virasoro algebra: normal ordering, quantized "
        "coproduct/antipode, and exhaustive exact verification suites."};
    app.set_version_flag("--version", esvq::kVersion);
    app.require_subcommand(1);

    try {
        opt.order = default_order_from_env();
    } catch (const esvq::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 3;
    }

    const auto add_common = [&](CLI::App* sub, bool with_method) {
        sub->add_option("--p", opt.p,
                        "deformation parameter p (half-odd, written k/2)")
            ->capture_default_str();
        sub->add_option("--order", opt.order,
                        "series truncation order N (ESVQ_ORDER overrides the "
                        "built-in default)")
            ->capture_default_str();
        sub->add_option("--format", opt.format, "output format: text|json|latex")
            ->capture_default_str();
        if (with_method)
            sub->add_option("--method", opt.method,
                            "computation route: twist|closed")
                ->capture_default_str();
    };

    CLI::App* normalize =
        app.add_subcommand("normalize", "parse and normal-order an expression");
    normalize->add_option("expr", opt.expr, "expression")->required();
    add_common(normalize, false);

    CLI::App* bracket =
        app.add_subcommand("bracket", "commutator [x, y] of two expressions");
    bracket->add_option("x", opt.expr, "left expression")->required();
    bracket->add_option("y", opt.expr2, "right expression")->required();
    add_common(bracket, false);

    CLI::App* coproduct =
        app.add_subcommand("coproduct", "quantized coproduct of an expression");
    coproduct->add_option("expr", opt.expr, "expression")->required();
    add_common(coproduct, true);

    CLI::App* antipode =
        app.add_subcommand("antipode", "quantized antipode of an expression");
    antipode->add_option("expr", opt.expr, "expression")->required();
    add_common(antipode, true);

    CLI::App* verify =
        app.add_subcommand("verify", "run a named exact verification suite");
    verify
        ->add_option("--suite", opt.suite,
                     "jacobi|pbw|identities|twist|inverses|theorem|axioms|"
                     "cybe|all")
        ->required();
    verify->add_option("--p", opt.p, "deformation parameter p (half-odd, k/2)")
        ->capture_default_str();
    verify
        ->add_option("--order", opt.order,
                     "series truncation order N (ESVQ_ORDER overrides the "
                     "built-in default)")
        ->capture_default_str();
    verify
        ->add_option("--index-range", opt.index_range,
                     "doubled-index grid bound K (generators with |2*index| "
                     "<= K)")
        ->capture_default_str();
    verify->add_option("--seed", opt.seed, "seed for the sampled checks")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 3;  // bad usage is a configuration error
    }

    try {
        if (verify->parsed()) return run_verify(opt);
        if (normalize->parsed()) return run_expression_verb("normalize", opt);
        if (bracket->parsed()) return run_expression_verb("bracket", opt);
        if (coproduct->parsed()) return run_expression_verb("coproduct", opt);
        return run_expression_verb("antipode", opt);
    } catch (const esvq::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const esvq::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 3;
    } catch (const esvq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

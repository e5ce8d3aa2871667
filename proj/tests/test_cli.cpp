// Parser, renderers, and the command-line binary (driven as a subprocess
// through the path in ESVQ_CLI_PATH).

#include <catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "esvq/esvq.hpp"

using namespace esvq;

namespace {
constexpr int kOrd = 3;

Poly one() { return Poly::one(kOrd); }
Poly gp(const Gen& g) { return Poly::of_gen(g, kOrd); }
Poly parse3(std::string_view s) { return parse_expression(s, kOrd); }

std::size_t parse_fail_offset(std::string_view s, int order = kOrd) {
    try {
        parse_expression(s, order);
    } catch (const ParseError& e) {
        return e.offset;
    }
    FAIL("expected ParseError for: " << std::string(s));
    return static_cast<std::size_t>(-1);
}

struct RunResult {
    std::string out;
    int code = -1;
};

// Build-time path to the binary; the environment may override it.
std::string cli_path() {
    if (const char* env = std::getenv("ESVQ_CLI_PATH")) return env;
#ifdef ESVQ_CLI_PATH
    return ESVQ_CLI_PATH;
#else
    FAIL("ESVQ_CLI_PATH is not set");
    return "";
#endif
}

// Runs the CLI binary through /bin/sh with an optional environment prefix;
// stderr is discarded.
RunResult run_cli_env(const std::string& env, const std::string& args) {
    std::string cmd = "\"" + cli_path() + "\" " + args + " 2>/dev/null";
    if (!env.empty()) cmd = env + " " + cmd;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
    return r;
}

RunResult run_cli(const std::string& args) { return run_cli_env("", args); }
} // namespace

TEST_CASE("parser accepts bracket-style expressions") {
    CHECK(parse3("L[1]*M[2]") == normal_order({L(1), M(2)}, kOrd));
    CHECK(parse3("Y[1/2]") == gp(Y2(1)));
    CHECK(parse3("Y[-3/2]") == gp(Y2(-3)));
    CHECK(parse3("L[-4]") == gp(L(-4)));
    CHECK(parse3("Y[1/2]^2") == parse3("Y[1/2]*Y[1/2]"));
    CHECK(parse3("N[0]^2 - 1") ==
          Poly::of_mono(Monomial(N(0), 2), kOrd) - one());
}

TEST_CASE("parser accepts the rendered style as a superset") {
    CHECK(parse3("L_3") == parse3("L[3]"));
    CHECK(parse3("L_{-2}") == parse3("L[-2]"));
    CHECK(parse3("Y_{1/2}") == parse3("Y[1/2]"));
    CHECK(parse3("-N_0 + Y_{1/2}*N_0*t + Y_{1/2}*t") ==
          twisted_antipode(gp(N(0)), TwistContext{1, kOrd}));
    CHECK(parse3(" L [ 1 ] * M [ 2 ] ") == parse3("L[1]*M[2]"));
}

TEST_CASE("parser handles scalars, t-powers, and parentheses") {
    CHECK(parse3("3/4") == Poly::scalar(rat(3, 4), kOrd));
    CHECK(parse3("2^3") == Poly::scalar(Rational(8), kOrd));
    CHECK(parse3("(1/2)^2") == Poly::scalar(rat(1, 4), kOrd));
    CHECK(parse3("2*t") == Poly::scalar(Rational(2), kOrd, 1));
    CHECK(parse3("t^3") == Poly::scalar(Rational(1), kOrd, 3));
    CHECK(parse3("t^4") == Poly::zero(kOrd));  // beyond the truncation order
    CHECK(parse3("t^9999") == Poly::zero(kOrd));  // large but within the cap
    CHECK(parse3("(L[1]+L[2])*M[0]") ==
          parse3("L[1]*M[0]") + parse3("L[2]*M[0]"));
    CHECK(parse3("(1 - Y[1/2]*t)^2") ==
          one() - Rational(2) * gp(Y2(1)).shifted_t(1) +
              Poly::of_mono(Monomial(Y2(1), 2), kOrd).shifted_t(2));
}

TEST_CASE("parser reports byte offsets on malformed input") {
    CHECK(parse_fail_offset("") == 0);
    CHECK(parse_fail_offset("L[1") == 3);       // missing ']'
    CHECK(parse_fail_offset("L[1] + ") == 7);   // dangling '+'
    CHECK(parse_fail_offset("L[1] L[2]") == 5); // trailing input
    CHECK(parse_fail_offset("2*x") == 2);       // unknown atom
    CHECK(parse_fail_offset("1/0") == 2);       // zero denominator
    CHECK(parse_fail_offset("L[1/3]") == 4);    // bad index denominator
    CHECK(parse_fail_offset("t^100000") == 2);  // exponent above the cap
    CHECK(parse_fail_offset("L[99999999999999999999]") == 0);  // index overflow

    // parity violations point at the generator letter
    CHECK(parse_fail_offset("Y[1]") == 0);
    CHECK(parse_fail_offset("L[1/2]") == 0);
    CHECK(parse_fail_offset("M[2] + N[1/2]") == 7);
}

TEST_CASE("text rendering uses display order with folded signs") {
    CHECK(render_text(Poly::zero(kOrd)) == "0");
    CHECK(render_text(one()) == "1");
    CHECK(render_text(Rational(-1) * gp(L(1))) == "-L_1");
    CHECK(render_text(rat(3, 4) * gp(M(2)) + one()) == "3/4*M_2 + 1");
    CHECK(render_text(delta0(gp(L(1)))) == "L_1 (x) 1 + 1 (x) L_1");
    CHECK(render_text(delta0(Poly::of_mono(Monomial(N(0), 2), kOrd))) ==
          "N_0^2 (x) 1 + 2*N_0 (x) N_0 + 1 (x) N_0^2");
    CHECK(render_text(twisted_antipode(gp(N(0)), TwistContext{1, kOrd})) ==
          "-N_0 + Y_{1/2}*N_0*t + Y_{1/2}*t");
    CHECK(render_text(normal_order({L(1), M(2)}, kOrd)) == "M_2*L_1 + 2*M_3");
}

TEST_CASE("json rendering is schema-exact and storage-ordered") {
    CHECK(render_json(Poly::zero(kOrd)).dump() == R"({"order":3,"terms":[]})");
    CHECK(render_json(Poly::of_gen(L(1), 2)).dump() ==
          R"({"order":2,"terms":[{"t":0,"monos":[[[{"fam":"L","num":1,"den":1},1]]],"coeff":"1/1"}]})");
    CHECK(render_json(Poly::of_gen(Y2(1), 2).shifted_t(1)).dump() ==
          R"({"order":2,"terms":[{"t":1,"monos":[[[{"fam":"Y","num":1,"den":2},1]]],"coeff":"1/1"}]})");
    CHECK(render_json(delta0(Poly::of_gen(L(1), 1))).dump() ==
          R"({"order":1,"terms":[{"t":0,"monos":[[],[[{"fam":"L","num":1,"den":1},1]]],"coeff":"1/1"},{"t":0,"monos":[[[{"fam":"L","num":1,"den":1},1]],[]],"coeff":"1/1"}]})");
}

TEST_CASE("latex rendering") {
    CHECK(render_latex(Poly::zero(kOrd)) == "0");
    CHECK(render_latex(gp(Y2(1))) == "Y_{1/2}");
    CHECK(render_latex(rat(-1, 2) * gp(L(-3)).shifted_t(2)) ==
          "-\\frac{1}{2} L_{-3} t^{2}");
    CHECK(render_latex(Poly::of_mono(Monomial(N(0), 2), kOrd)) == "N_{0}^{2}");
    // storage order: the empty first slot sorts low
    CHECK(render_latex(delta0(gp(Y2(1)))) ==
          "1 \\otimes Y_{1/2} + Y_{1/2} \\otimes 1");
    CHECK(render(gp(M(2)), RenderFormat::Latex) == "M_{2}");
}

TEST_CASE("construction order never leaks into rendered output") {
    const Poly a = gp(L(1)) + gp(M(2)).shifted_t(1) + rat(1, 2) * gp(Y2(3));
    const Poly b = rat(1, 2) * gp(Y2(3)) + gp(M(2)).shifted_t(1) + gp(L(1));
    CHECK(render_text(a) == render_text(b));
    CHECK(render_json(a).dump() == render_json(b).dump());
    CHECK(render_latex(a) == render_latex(b));
}

TEST_CASE("parse inverts text rendering on random elements") {
    Sampler s(2026);
    for (int i = 0; i < 200; ++i) {
        const Poly x = s.poly(6, 3, 4, kOrd);
        const std::string text = render_text(x);
        INFO("round-trip " << i << ": " << text);
        REQUIRE(parse_expression(text, kOrd) == x);
    }
}

TEST_CASE("cli: expression verbs") {
    const RunResult bracket = run_cli("bracket 'L[1]' 'L[2]'");
    CHECK(bracket.code == 0);
    CHECK(bracket.out == "L_3\n");

    const RunResult norm = run_cli("normalize 'L[1]*M[2]'");
    CHECK(norm.code == 0);
    CHECK(norm.out == "M_2*L_1 + 2*M_3\n");

    const RunResult anti = run_cli("antipode 'N[0]'");
    CHECK(anti.code == 0);
    CHECK(anti.out == "-N_0 + Y_{1/2}*N_0*t + Y_{1/2}*t\n");

    const RunResult latex = run_cli("normalize 'Y[1/2]' --format latex");
    CHECK(latex.code == 0);
    CHECK(latex.out == "Y_{1/2}\n");
}

TEST_CASE("cli: closed-form method agrees with twist conjugation") {
    const RunResult tw = run_cli("coproduct 'M[2]' --format json --method twist");
    const RunResult cf = run_cli("coproduct 'M[2]' --format json --method closed");
    CHECK(tw.code == 0);
    CHECK(cf.code == 0);
    CHECK(tw.out == cf.out);

    const RunResult stw = run_cli("antipode 'L[2]' --method twist");
    const RunResult scf = run_cli("antipode 'L[2]' --method closed");
    CHECK(stw.code == 0);
    CHECK(scf.code == 0);
    CHECK(stw.out == scf.out);
}

TEST_CASE("cli: truncation order from flag and environment") {
    CHECK(run_cli("normalize 't^4'").out == "0\n");
    CHECK(run_cli("normalize 't^4' --order 4").out == "t^4\n");
    CHECK(run_cli_env("ESVQ_ORDER=5", "normalize 't^4'").out == "t^4\n");
    // the flag wins over the environment
    CHECK(run_cli_env("ESVQ_ORDER=5", "normalize 't^4' --order 3").out == "0\n");
}

TEST_CASE("cli: verify suite runs and reports") {
    const RunResult r = run_cli("verify --suite cybe");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("suite=cybe p=1/2 order=3 index-range=4 seed=2026\n", 0) == 0);
    CHECK(r.out.find("\nPASS n=") != std::string::npos);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
}

TEST_CASE("cli: exit codes distinguish parse and config errors") {
    CHECK(run_cli("normalize 'L[1'").code == 2);
    CHECK(run_cli("normalize 'Y[1]'").code == 2);
    CHECK(run_cli("antipode 'L[1]' --p 1/3").code == 3);
    CHECK(run_cli("antipode 'L[1]' --p 2/2").code == 3);  // p must be half-odd
    CHECK(run_cli("verify --suite bogus").code == 3);
    CHECK(run_cli("normalize 'L[1]' --format yaml").code == 3);
    CHECK(run_cli("normalize 'L[1]' --order=-1").code == 3);
    // a product of generators has no per-generator closed form
    CHECK(run_cli("antipode 'N[0]*Y[1/2]' --method closed").code == 3);
    CHECK(run_cli("antipode 'L[1]' --method magic").code == 3);
}

TEST_CASE("cli: repeated runs are byte-identical") {
    const std::string args =
        "coproduct 'L[2]*M[-1]' --format json --order 3 --p 3/2";
    const RunResult a = run_cli(args);
    const RunResult b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
}

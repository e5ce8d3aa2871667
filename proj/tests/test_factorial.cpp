// Shifted-factorial calculus: rising/falling factorials in h, generalized
// binomials, the splice and convolution identities, and the closed
// commutation forms.

#include <catch_amalgamated.hpp>

#include "esvq/esvq.hpp"

using namespace esvq;

namespace {
constexpr int kOrd = 3;
const TwistContext kCtx{1, kOrd};  // p = 1/2

Poly h_poly() { return Poly::of_gen(N(0), kOrd); }
Poly h_pow(int k) { return Poly::of_mono(Monomial(N(0), k), kOrd); }
} // namespace

TEST_CASE("rising and falling factorials expand correctly") {
    CHECK(rising(Rational(0), 0, kOrd) == Poly::one(kOrd));
    CHECK(rising(Rational(0), 1, kOrd) == h_poly());
    CHECK(rising(Rational(0), 2, kOrd) == h_pow(2) + h_poly());
    CHECK(falling(Rational(0), 2, kOrd) == h_pow(2) - h_poly());
    // (h+1)(h+2) = h^2 + 3h + 2
    CHECK(rising(Rational(1), 2, kOrd) ==
          h_pow(2) + Rational(3) * h_poly() + Poly::scalar(Rational(2), kOrd));
    // (h-1/2)(h-3/2) = h^2 - 2h + 3/4
    CHECK(falling(rat(-1, 2), 2, kOrd) ==
          h_pow(2) - Rational(2) * h_poly() + Poly::scalar(rat(3, 4), kOrd));

    CHECK(shifted_factorial(FactKind::Rising, Rational(1), 2, kOrd) ==
          rising(Rational(1), 2, kOrd));
    CHECK(shifted_factorial(FactKind::Falling, Rational(1), 2, kOrd) ==
          falling(Rational(1), 2, kOrd));
}

TEST_CASE("generalized binomial coefficients") {
    CHECK(gen_binomial(rat(1, 2), 2) == rat(-1, 8));
    CHECK(gen_binomial(rat(1, 2), 3) == rat(1, 16));
    for (int m = 0; m <= 5; ++m)
        CHECK(gen_binomial(Rational(-1), m) == Rational((m % 2 == 0) ? 1 : -1));
    CHECK(gen_binomial(rat(7, 3), 0) == 1);
    CHECK(gen_binomial(Rational(2), 3) == 0);  // terminates above the top
    CHECK(gen_binomial(rat(5, 2), 3) == rat(5, 16));
    CHECK_THROWS_AS(gen_binomial(Rational(1), -1), Error);
}

TEST_CASE("binomial convolution identities on fixed instances") {
    // a=2, b=1, r=2: mixed convolution sums to C(1,2) = 0
    const Report r1 = check_binomial_identities(Rational(2), Rational(1), 2);
    CHECK(r1.all_pass());
    // a=1/2, b=0, r=3: mixed sums to C(1/2,3) = 1/16
    const Report r2 = check_binomial_identities(rat(1, 2), Rational(0), 3);
    CHECK(r2.all_pass());
}

TEST_CASE("factorial splice identities across a shift grid") {
    for (const Rational& a : {Rational(0), Rational(2), rat(-3, 2)})
        for (int s = 0; s <= 3; ++s)
            for (int t = 0; t <= 3; ++t) {
                const Report r = check_factorial_splices(a, s, t);
                INFO("a=" << to_string(a) << " s=" << s << " t=" << t << ": "
                          << r.summary());
                CHECK(r.all_pass());
            }
    // falling = rising read from the top, spot instance:
    // h^[3]_1 = (h+1) h (h-1) = h^(3)_{-1}
    CHECK(falling(Rational(1), 3, kOrd) == rising(Rational(-1), 3, kOrd));
}

TEST_CASE("reordering expansion matches the engine and hand instances") {
    // m = 0 leaves the generator alone
    CHECK(ad_power_expand(L(2), Y2(1), 0, kOrd) == Poly::of_gen(L(2), kOrd));

    // N_0 Y_p = Y_p N_0 + Y_p
    Poly want = Poly::of_mono(
        Monomial(std::vector<Monomial::Factor>{{Y2(1), 1}, {N(0), 1}}), kOrd);
    want += Poly::of_gen(Y2(1), kOrd);
    CHECK(ad_power_expand(N(0), Y2(1), 1, kOrd) == want);

    for (const Gen& x : generator_grid(3))
        for (const Gen& y : generator_grid(3))
            for (int m = 0; m <= 3; ++m) {
                std::vector<Gen> w{x};
                w.insert(w.end(), static_cast<std::size_t>(m), y);
                INFO(gen_string(x) << " * " << gen_string(y) << "^" << m);
                CHECK(ad_power_expand(x, y, m, kOrd) == normal_order(w, kOrd));
            }
}

TEST_CASE("closed e-power commutation: hand-expanded L_2 instance") {
    // L_2 e^2 = e^2 L_2 + (p - 1)(2 e Y_{5/2} - 2 M_3) at p = 1/2
    const Poly got = commute_past_e_power(L(2), 2, kCtx);
    Poly want = Poly::of_mono(
        Monomial(std::vector<Monomial::Factor>{{Y2(1), 2}, {L(2), 1}}), kOrd);
    want -= Poly::of_mono(
        Monomial(std::vector<Monomial::Factor>{{Y2(1), 1}, {Y2(5), 1}}), kOrd);
    want += Poly::of_gen(M(3), kOrd);
    CHECK(got == want);
    CHECK(got == normal_order({L(2), Y2(1), Y2(1)}, kOrd));
}

TEST_CASE("closed e-power commutation across families vs the engine") {
    // central M: M_3 e^4 = e^4 M_3
    CHECK(commute_past_e_power(M(3), 4, kCtx) ==
          normal_order({M(3), Y2(1), Y2(1), Y2(1), Y2(1)}, kOrd));
    // Y: Y_{3/2} e = e Y_{3/2} - M_2
    CHECK(commute_past_e_power(Y2(3), 1, kCtx) ==
          normal_order({Y2(3), Y2(1)}, kOrd));

    for (const Gen& g : generator_grid(4))
        for (int r = 0; r <= 4; ++r) {
            std::vector<Gen> w{g};
            w.insert(w.end(), static_cast<std::size_t>(r), kCtx.e());
            INFO(gen_string(g) << " e^" << r);
            CHECK(commute_past_e_power(g, r, kCtx) == normal_order(w, kOrd));
        }
}

TEST_CASE("weight shift: generators move past shifted factorials") {
    // M has weight 2: M_1 h^(2)_0 = (h-2)(h-1) M_1
    CHECK(commute_h_shift(M(1), FactKind::Rising, Rational(0), 2, kOrd) ==
          Poly::of_gen(M(1), kOrd) * rising(Rational(0), 2, kOrd));
    CHECK(commute_h_shift(M(1), FactKind::Rising, Rational(0), 2, kOrd) ==
          rising(Rational(-2), 2, kOrd) * Poly::of_gen(M(1), kOrd));

    // L has weight 0: factors commute
    CHECK(commute_h_shift(L(3), FactKind::Falling, Rational(0), 2, kOrd) ==
          falling(Rational(0), 2, kOrd) * Poly::of_gen(L(3), kOrd));

    for (const FactKind kind : {FactKind::Rising, FactKind::Falling})
        for (const Rational& a : {Rational(0), Rational(-1), rat(1, 2)})
            for (int i = 0; i <= 3; ++i)
                for (const Gen& g : generator_grid(4)) {
                    INFO(gen_string(g) << " i=" << i << " a=" << to_string(a));
                    CHECK(commute_h_shift(g, kind, a, i, kOrd) ==
                          Poly::of_gen(g, kOrd) *
                              shifted_factorial(kind, a, i, kOrd));
                }
}

TEST_CASE("weight shift for e-powers") {
    // e^2 h = (h - 2) e^2
    const Poly e2 = Poly::of_mono(Monomial(Y2(1), 2), kOrd);
    CHECK(commute_h_shift_epow(2, FactKind::Rising, Rational(0), 1, kCtx) ==
          e2 * rising(Rational(0), 1, kOrd));
    CHECK(commute_h_shift_epow(2, FactKind::Rising, Rational(0), 1, kCtx) ==
          rising(Rational(-2), 1, kOrd) * e2);

    for (const FactKind kind : {FactKind::Rising, FactKind::Falling})
        for (int n = 0; n <= 3; ++n)
            for (int i = 0; i <= 3; ++i) {
                const Poly en = Poly::of_mono(Monomial(kCtx.e(), n), kOrd);
                INFO("n=" << n << " i=" << i);
                CHECK(commute_h_shift_epow(n, kind, rat(1, 2), i, kCtx) ==
                      en * shifted_factorial(kind, rat(1, 2), i, kOrd));
            }
}

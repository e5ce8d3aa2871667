// Quantized Hopf structure: twist-conjugated coproduct/antipode, the closed
// per-generator forms, the deterministic coefficient findings, the Hopf
// axioms, the classical limit, and the classical Yang-Baxter equation.

#include <catch_amalgamated.hpp>

#include "esvq/esvq.hpp"

using namespace esvq;

namespace {
constexpr int kOrd = 3;
const TwistContext kCtx{1, kOrd};  // p = 1/2

Poly one() { return Poly::one(kOrd); }
Poly gp(const Gen& g) { return Poly::of_gen(g, kOrd); }

Poly antipode_of(const Poly& x) { return twisted_antipode(x, kCtx); }
Tensor coproduct_of(const Poly& x) { return twisted_coproduct(x, kCtx); }
} // namespace

TEST_CASE("coproduct of central generators: both routes, literal form") {
    // Delta(M_2) = M_2 (x) (1-et)^2 + 1 (x) M_2
    const Tensor want = Tensor::of(gp(M(2)), series_power(Rational(2), kCtx)) +
                        Tensor::of(one(), gp(M(2)));
    CHECK(closed_form_coproduct(M(2), kCtx) == want);
    CHECK(coproduct_of(gp(M(2))) == want);
}

TEST_CASE("coproduct of Y at the twist parameter loses its third term") {
    // q = p: coefficient (p - q) vanishes
    const Tensor want = Tensor::of(gp(Y2(1)), series_power(Rational(1), kCtx)) +
                        Tensor::of(one(), gp(Y2(1)));
    CHECK(closed_form_coproduct(Y2(1), kCtx) == want);
    CHECK(coproduct_of(gp(Y2(1))) == want);
}

TEST_CASE("coproduct and antipode fix the unit") {
    CHECK(coproduct_of(one()) == Tensor::unit(2, kOrd));
    CHECK(antipode_of(one()) == one());
}

TEST_CASE("antipode closed instances") {
    // S(M_4) = -(1-et)^{-2} M_4
    const Poly wantM =
        Rational(-1) * (series_power(Rational(-2), kCtx) * gp(M(4)));
    CHECK(antipode_of(gp(M(4))) == wantM);
    CHECK(closed_form_antipode(M(4), kCtx) == wantM);

    // S(N_0) = -N_0 + t N_0 Y_p
    Poly wantN = Rational(-1) * gp(N(0));
    wantN += normal_order({N(0), Y2(1)}, kOrd).shifted_t(1);
    CHECK(antipode_of(gp(N(0))) == wantN);
    CHECK(closed_form_antipode(N(0), kCtx) == wantN);
}

TEST_CASE("antipode of Y: printed form vs twist-conjugated form") {
    // Instantiating the printed closed form at q = p - 1 (coefficient +1):
    // -(1-et)^{-1} (Y_{p-1} + (N_0 - 1) M_{2p-1} t)
    Poly inner_plus = gp(Y2(-1));
    inner_plus += ((gp(N(0)) - one()) * gp(M(0))).shifted_t(1);
    const Poly printed =
        Rational(-1) * (series_power(Rational(-1), kCtx) * inner_plus);
    CHECK(closed_form_antipode(Y2(-1), kCtx, AntipodeCoeffSign::Plus) == printed);

    // The twist-conjugated antipode instead carries coefficient (q - p) = -1.
    Poly inner_minus = gp(Y2(-1));
    inner_minus -= ((gp(N(0)) - one()) * gp(M(0))).shifted_t(1);
    const Poly derived =
        Rational(-1) * (series_power(Rational(-1), kCtx) * inner_minus);
    const Poly s = antipode_of(gp(Y2(-1)));
    CHECK(s == derived);
    CHECK(s == closed_form_antipode(Y2(-1), kCtx, AntipodeCoeffSign::Minus));
    CHECK_FALSE(s == printed);
}

TEST_CASE("antipode of L: first-order slice carries coefficient p - n/2") {
    // S(L_2) = -L_2 + (p - n/2) t N_0 Y_{p+n} + O(t^2) with (p - n/2) = -1/2
    const Poly s = antipode_of(gp(L(2)));
    CHECK(s.t_slice(0) == Rational(-1) * gp(L(2)));
    const Poly slice1 =
        rat(-1, 2) * normal_order({N(0), Y2(5)}, kOrd).shifted_t(1);
    CHECK(s.t_slice(1) == slice1);

    CHECK(s == closed_form_antipode(L(2), kCtx, AntipodeCoeffSign::Minus));
    CHECK_FALSE(s == closed_form_antipode(L(2), kCtx, AntipodeCoeffSign::Plus));
}

TEST_CASE("closed-vs-twisted comparison report with coefficient findings") {
    const Report cmp = compare_closed_vs_twisted(4, kCtx);
    INFO(cmp.summary());
    CHECK(cmp.all_pass());

    bool found_l = false, found_y = false;
    for (const Check& c : cmp.checks()) {
        if (c.name == "antipode-coefficient finding L-family") {
            found_l = true;
            CHECK(c.pass);
            CHECK(c.detail.find("yields coefficient p - n/2") != std::string::npos);
        }
        if (c.name == "antipode-coefficient finding Y-family") {
            found_y = true;
            CHECK(c.pass);
            CHECK(c.detail.find("yields coefficient q - p") != std::string::npos);
        }
    }
    CHECK(found_l);
    CHECK(found_y);
}

TEST_CASE("antipode axiom on a central generator") {
    // m (S (x) Id) Delta(M_1) = eps(M_1) = 0
    const Tensor d = coproduct_of(gp(M(1)));
    const auto s_mono = [](const Monomial& m) {
        return twisted_antipode(Poly::of_mono(m, kOrd), kCtx);
    };
    CHECK(mul_slots(map_slot(d, 0, s_mono)) == Poly::zero(kOrd));
    CHECK(mul_slots(map_slot(d, 1, s_mono)) == Poly::zero(kOrd));
}

TEST_CASE("coassociativity of the quantized coproduct on e itself") {
    const Tensor d = coproduct_of(gp(Y2(1)));
    const auto dm = [](const Monomial& m) {
        return twisted_coproduct(Poly::of_mono(m, kOrd), kCtx);
    };
    CHECK(coexpand_slot(d, 0, dm) == coexpand_slot(d, 1, dm));
}

TEST_CASE("full axiom report for unit and generators") {
    const Report r1 = check_hopf_axioms_for(one(), "unit", kCtx);
    INFO(r1.summary());
    CHECK(r1.all_pass());

    for (const Gen& g : {L(1), N(-2), M(3), Y2(-3)}) {
        const Report r = check_hopf_axioms_for(gp(g), gen_string(g), kCtx);
        INFO(gen_string(g) << ": " << r.summary());
        CHECK(r.all_pass());
    }
}

TEST_CASE("quantized maps are morphisms on a fixed pair") {
    const Poly x = gp(N(0));
    const Poly y = gp(Y2(1));
    CHECK(coproduct_of(x * y) == coproduct_of(x) * coproduct_of(y));
    CHECK(antipode_of(x * y) == antipode_of(y) * antipode_of(x));
    CHECK(eps(x * y) == eps(x) * eps(y));

    const Report r = check_hopf_morphism_for(x, y, "N_0,Y", kCtx);
    INFO(r.summary());
    CHECK(r.all_pass());
}

TEST_CASE("hopf axiom suite on a small grid") {
    const Report r = verify_hopf_axioms(2, kCtx);
    INFO(r.summary());
    CHECK(r.all_pass());
}

TEST_CASE("classical limit recovers the undeformed structure maps") {
    const Report r = verify_classical_limit(4, kCtx);
    INFO(r.summary());
    CHECK(r.all_pass());

    // explicit slice: the t^0 part of Delta(L_1) is primitive
    const Tensor d0 = coproduct_of(gp(L(1))).t_slice(0);
    CHECK(d0 == delta0(gp(L(1))));
}

TEST_CASE("classical Yang-Baxter equation holds exactly") {
    const Report r = verify_cybe(kCtx);
    INFO(r.summary());
    CHECK(r.all_pass());

    const Poly h = gp(N(0));
    const Poly e = gp(Y2(1));
    const Tensor rm = classical_r(kCtx);
    CHECK(cybe_sum(rm).is_zero());

    // cross term [r12, r23] = -h (x) e (x) e + e (x) e (x) h
    const Tensor cross = embed(rm, 0, 1) * embed(rm, 1, 2) -
                         embed(rm, 1, 2) * embed(rm, 0, 1);
    CHECK(cross == Rational(-1) * Tensor::of(h, e, e) + Tensor::of(e, e, h));

    CHECK(cybe_sum(Tensor(2, kOrd)).is_zero());      // degenerate r = 0
    CHECK_FALSE(cybe_sum(Tensor::of(h, e)).is_zero());  // non-solution
    CHECK_THROWS_AS(cybe_sum(Tensor::unit(3, kOrd)), ArityMismatch);
}

TEST_CASE("quantized maps reject mismatched truncation orders") {
    CHECK_THROWS_AS(twisted_coproduct(Poly::one(2), kCtx), OrderMismatch);
    CHECK_THROWS_AS(twisted_antipode(Poly::one(5), kCtx), OrderMismatch);
}

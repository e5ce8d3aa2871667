// The twist element, its inverse, the u/v elements, the inverse laws, the
// falling-coproduct split, the twist (cocycle + counit) equation, and the
// slot commutation identities.

#include <catch_amalgamated.hpp>

#include "esvq/esvq.hpp"

using namespace esvq;

namespace {
constexpr int kOrd = 3;
const TwistContext kCtx{1, kOrd};  // p = 1/2

Poly one(int order = kOrd) { return Poly::one(order); }
} // namespace

TEST_CASE("twist element at first order") {
    const TwistContext c11{1, 1};
    // curlyF_0 = 1 (x) 1 - N_0 (x) Y_p t
    Tensor want = Tensor::unit(2, 1);
    want.add_term(1, {Monomial(N(0)), Monomial(Y2(1))}, Rational(-1));
    CHECK(build_curlyF(Rational(0), c11) == want);

    // F_0 = 1 (x) 1 + N_0 (x) Y_p t
    Tensor wantF = Tensor::unit(2, 1);
    wantF.add_term(1, {Monomial(N(0)), Monomial(Y2(1))}, Rational(1));
    CHECK(build_F(Rational(0), c11) == wantF);

    // order 0 truncation collapses both to the unit
    const TwistContext c10{1, 0};
    CHECK(build_curlyF(Rational(2), c10) == Tensor::unit(2, 0));
    CHECK(build_F(rat(1, 2), c10) == Tensor::unit(2, 0));
}

TEST_CASE("twist element second-order slice carries the rising factorial") {
    const TwistContext c12{1, 2};
    // r=2 term of F_0: (1/2) h^(2)_0 (x) e^2 t^2 = (1/2)(h^2 + h) (x) e^2 t^2
    Tensor want(2, 2);
    want.add_term(2, {Monomial(N(0), 2), Monomial(Y2(1), 2)}, rat(1, 2));
    want.add_term(2, {Monomial(N(0), 1), Monomial(Y2(1), 2)}, rat(1, 2));
    CHECK(build_F(Rational(0), c12).t_slice(2) == want);

    // r=2 term of curlyF_0: (1/2) h^[2]_0 (x) e^2 t^2 = (1/2)(h^2 - h) (x) e^2
    Tensor wantc(2, 2);
    wantc.add_term(2, {Monomial(N(0), 2), Monomial(Y2(1), 2)}, rat(1, 2));
    wantc.add_term(2, {Monomial(N(0), 1), Monomial(Y2(1), 2)}, rat(-1, 2));
    CHECK(build_curlyF(Rational(0), c12).t_slice(2) == wantc);
}

TEST_CASE("u and v at first order") {
    const TwistContext c11{1, 1};
    const Poly ne = normal_order({N(0), Y2(1)}, 1);  // N_0 Y_p normal-ordered

    Poly want_u = one(1);
    want_u -= ne.shifted_t(1);
    CHECK(build_u(Rational(0), c11) == want_u);

    Poly want_v = one(1);
    want_v += ne.shifted_t(1);
    CHECK(build_v(Rational(0), c11) == want_v);

    const TwistContext c10{1, 0};
    CHECK(build_u(Rational(5), c10) == one(0));
}

TEST_CASE("u and v equal their antipode-route definitions") {
    for (const Rational& a : {Rational(0), Rational(1), Rational(-1)}) {
        INFO("a=" << to_string(a));
        CHECK(build_u(a, kCtx) == u_from_F(a, kCtx));
        CHECK(build_v(a, kCtx) == v_from_curlyF(a, kCtx));
    }
}

TEST_CASE("generalized binomial series") {
    const TwistContext c12{1, 2};
    const Poly e = Poly::of_gen(Y2(1), 2);
    const Poly e2 = Poly::of_mono(Monomial(Y2(1), 2), 2);

    // geometric series (1-et)^{-1} = 1 + et + e^2 t^2 + ...
    CHECK(series_power(Rational(-1), c12) ==
          one(2) + e.shifted_t(1) + e2.shifted_t(2));

    // finite binomial (1-et)^2 = 1 - 2et + e^2 t^2, exactly
    const TwistContext c13{1, 3};
    const Poly e_3 = Poly::of_gen(Y2(1), 3);
    const Poly e2_3 = Poly::of_mono(Monomial(Y2(1), 2), 3);
    CHECK(series_power(Rational(2), c13) ==
          one(3) - Rational(2) * e_3.shifted_t(1) + e2_3.shifted_t(2));

    // fractional exponent (1-et)^{1/2} = 1 - (1/2)et - (1/8)e^2 t^2
    CHECK(series_power(rat(1, 2), c12) ==
          one(2) - rat(1, 2) * e.shifted_t(1) - rat(1, 8) * e2.shifted_t(2));
}

TEST_CASE("inverse laws for the twist pair and u/v") {
    // a = b = 0: the two twists are mutually inverse
    const Report r0 = verify_inverses(Rational(0), Rational(0), kCtx);
    CHECK(r0.all_pass());

    // a=1, b=0: curlyF_1 F_0 = 1 (x) (1 - et)
    const Tensor prod = build_curlyF(Rational(1), kCtx) * build_F(Rational(0), kCtx);
    CHECK(prod == Tensor::of(one(), series_power(Rational(1), kCtx)));

    // v_1 u_1 = (1 - et)^{-2}
    CHECK(build_v(Rational(1), kCtx) * build_u(Rational(1), kCtx) ==
          series_power(Rational(-2), kCtx));

    // u_a v_{-a} = 1
    for (const Rational& a : {Rational(1), Rational(-2), rat(1, 2)}) {
        INFO("a=" << to_string(a));
        CHECK(build_u(a, kCtx) * build_v(-a, kCtx) == one());
    }

    // full report over a small grid
    for (const Rational& a : {Rational(0), Rational(1), rat(1, 2)})
        for (const Rational& b : {Rational(0), Rational(-1)}) {
            const Report r = verify_inverses(a, b, kCtx);
            INFO("a=" << to_string(a) << " b=" << to_string(b) << ": "
                      << r.summary());
            CHECK(r.all_pass());
        }
}

TEST_CASE("classical coproduct splits falling factorials binomially") {
    const Poly h = Poly::of_gen(N(0), kOrd);

    // r=1, a=0: primitive
    CHECK(delta0(falling(Rational(0), 1, kOrd)) ==
          Tensor::of(h, one()) + Tensor::of(one(), h));

    // r=1, a=3: shifted split (h-3) (x) 1 + 1 (x) (h+3) collapses to delta0(h)
    const Poly hm3 = h - Poly::scalar(Rational(3), kOrd);
    const Poly hp3 = h + Poly::scalar(Rational(3), kOrd);
    CHECK(Tensor::of(hm3, one()) + Tensor::of(one(), hp3) == delta0(h));

    // r=2, a=0: h^[2] (x) 1 + 2 h (x) h + 1 (x) h^[2]
    const Poly h2 = falling(Rational(0), 2, kOrd);
    CHECK(delta0(h2) == Tensor::of(h2, one()) + Rational(2) * Tensor::of(h, h) +
                            Tensor::of(one(), h2));

    for (const Rational& a : {Rational(0), Rational(3), rat(1, 2)}) {
        const Report r = verify_falling_coproduct(4, a);
        INFO("a=" << to_string(a) << ": " << r.summary());
        CHECK(r.all_pass());
    }
}

TEST_CASE("twist equation: cocycle and counit laws") {
    const Report r1 = verify_twist_equation(kCtx);
    INFO(r1.summary());
    CHECK(r1.all_pass());

    const TwistContext c32{3, 2};  // p = 3/2
    const Report r2 = verify_twist_equation(c32);
    INFO(r2.summary());
    CHECK(r2.all_pass());

    // counit slices directly: applying eps to either slot of the twist gives 1
    const Tensor F = build_curlyF(Rational(0), kCtx);
    CHECK(eps_slot(F, 0) == one());
    CHECK(eps_slot(F, 1) == one());

    // order-0 slice of both cocycle sides is the 3-fold unit
    const Tensor lhs = embed(F, 0, 1) * coexpand_slot(F, 0, [](const Monomial& m) {
        return delta0(Poly::of_mono(m, kOrd));
    });
    CHECK(lhs.t_slice(0) == Tensor::unit(3, kOrd));
}

TEST_CASE("slot commutation identity instances") {
    for (const Gen& g : {L(2), N(-1), M(1), Y2(3)}) {
        for (const Rational& a : {Rational(0), Rational(1), rat(1, 2)}) {
            const Check c1 = check_slot1_commutation(g, a, kCtx);
            INFO(c1.name << " | " << c1.detail);
            CHECK(c1.pass);
            const Check c2 = check_slot2_commutation(g, a, kCtx);
            INFO(c2.name << " | " << c2.detail);
            CHECK(c2.pass);
        }
        const Check cu = check_u_commutation(g, Rational(0), kCtx);
        INFO(cu.name << " | " << cu.detail);
        CHECK(cu.pass);
    }
    for (int n = 0; n <= 3; ++n) {
        const Check c = check_slot1_commutation_epow(n, Rational(1), kCtx);
        INFO(c.name << " | " << c.detail);
        CHECK(c.pass);
    }
}

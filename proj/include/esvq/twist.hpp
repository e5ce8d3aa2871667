#pragma once

// The twist family and its inverse/commutation laws.  With h = N_0 and
// e = Y_p (p half-odd) the elements are, truncated at t^N:
//
//   curlyF_a = sum_r (-1)^r/r!  h^[r]_a (x) e^r  t^r
//   F_a      = sum_r   1/r!     h^(r)_a (x) e^r  t^r
//   u_a      = sum_r (-1)^r/r!  h^[r]_{-a} e^r   t^r   ( = m (S0 (x) Id) F_a )
//   v_a      = sum_r   1/r!     h^[r]_a    e^r   t^r   ( = m (Id (x) S0) curlyF_a )
//
// curlyF_0 is the Drinfeld twist; the a-indexed family exists because
// commuting generators through the twist shifts a.  Everything here is
// verified against the engine: each law is built as two independently
// computed canonical forms and compared exactly.

#include <string>

#include "esvq/context.hpp"
#include "esvq/factorial.hpp"
#include "esvq/poly.hpp"
#include "esvq/report.hpp"
#include "esvq/tensor.hpp"

namespace esvq {

// (1 - e t)^a = sum_m C(a,m) (-1)^m e^m t^m, a rational.
inline Poly series_power(const Rational& a, const TwistContext& ctx) {
    Poly out(ctx.order);
    for (int m = 0; m <= ctx.order; ++m) {
        const Rational sign((m % 2 == 0) ? 1 : -1);
        out.add_term(m, Monomial(ctx.e(), m), sign * gen_binomial(a, m));
    }
    return out;
}

inline Tensor build_curlyF(const Rational& a, const TwistContext& ctx) {
    Tensor out(2, ctx.order);
    for (int r = 0; r <= ctx.order; ++r) {
        const Rational c = Rational((r % 2 == 0) ? 1 : -1) / factorial(r);
        out += Tensor::of(c * falling(a, r, ctx.order),
                          Poly::of_mono(Monomial(ctx.e(), r), ctx.order))
                   .shifted_t(r);
    }
    return out;
}

inline Tensor build_F(const Rational& a, const TwistContext& ctx) {
    Tensor out(2, ctx.order);
    for (int r = 0; r <= ctx.order; ++r) {
        out += Tensor::of(rising(a, r, ctx.order) * (Rational(1) / factorial(r)),
                          Poly::of_mono(Monomial(ctx.e(), r), ctx.order))
                   .shifted_t(r);
    }
    return out;
}

inline Poly build_u(const Rational& a, const TwistContext& ctx) {
    Poly out(ctx.order);
    for (int r = 0; r <= ctx.order; ++r) {
        const Rational c = Rational((r % 2 == 0) ? 1 : -1) / factorial(r);
        out += (c * (falling(-a, r, ctx.order) *
                     Poly::of_mono(Monomial(ctx.e(), r), ctx.order)))
                   .shifted_t(r);
    }
    return out;
}

inline Poly build_v(const Rational& a, const TwistContext& ctx) {
    Poly out(ctx.order);
    for (int r = 0; r <= ctx.order; ++r) {
        out += ((Rational(1) / factorial(r)) *
                (falling(a, r, ctx.order) *
                 Poly::of_mono(Monomial(ctx.e(), r), ctx.order)))
                   .shifted_t(r);
    }
    return out;
}

namespace detail {
inline std::function<Poly(const Monomial&)> s0_on_monomials(int order) {
    return [order](const Monomial& m) { return s0(Poly::of_mono(m, order)); };
}
} // namespace detail

// Independent route to u_a = m (S0 (x) Id) F_a, evaluated literally (the
// antipode applied monomial by monomial to slot 0, then both slots multiplied).
inline Poly u_from_F(const Rational& a, const TwistContext& ctx) {
    return mul_slots(map_slot(build_F(a, ctx), 0, detail::s0_on_monomials(ctx.order)));
}

// Independent route to v_a: v_a = m (Id (x) S0) curlyF_a.
inline Poly v_from_curlyF(const Rational& a, const TwistContext& ctx) {
    return mul_slots(map_slot(build_curlyF(a, ctx), 1, detail::s0_on_monomials(ctx.order)));
}

// ------------------------------------------------------------------------
// Verified laws.

// Vandermonde split of the coproduct of plain falling factorials:
//   Delta0(h^[r]) = sum_i C(r,i) h^[i]_{-a} (x) h^[r-i]_a   for every a.
inline Report verify_falling_coproduct(int rmax, const Rational& a,
                                       const CheckSink& sink = nullptr) {
    Report report(sink);
    const int order = 0;
    for (int r = 0; r <= rmax; ++r) {
        const Tensor lhs = delta0(falling(Rational(0), r, order));
        Tensor rhs(2, order);
        for (int i = 0; i <= r; ++i)
            rhs += gen_binomial(Rational(r), i) *
                   Tensor::of(falling(-a, i, order), falling(a, r - i, order));
        report.add("falling-coproduct r=" + std::to_string(r) + " a=" + to_string(a),
                   lhs == rhs, lhs == rhs ? "" : first_diff(lhs, rhs));
    }
    return report;
}

// Inverse laws of the twist family:
//   curlyF_a F_b = 1 (x) (1-et)^{a-b}        F_a curlyF_b = 1 (x) (1-et)^{b-a}
//   v_a u_b = (1-et)^{-(a+b)}                u_a v_{-a} = 1
inline Report verify_inverses(const Rational& a, const Rational& b,
                              const TwistContext& ctx,
                              const CheckSink& sink = nullptr) {
    Report report(sink);
    const std::string ab = " a=" + to_string(a) + " b=" + to_string(b);
    const Poly one = Poly::one(ctx.order);

    {
        const Tensor lhs = build_curlyF(a, ctx) * build_F(b, ctx);
        const Tensor rhs = Tensor::of(one, series_power(a - b, ctx));
        report.add("inverse curlyF*F" + ab, lhs == rhs,
                   lhs == rhs ? "" : first_diff(lhs, rhs));
    }
    {
        const Tensor lhs = build_F(a, ctx) * build_curlyF(b, ctx);
        const Tensor rhs = Tensor::of(one, series_power(b - a, ctx));
        report.add("inverse F*curlyF" + ab, lhs == rhs,
                   lhs == rhs ? "" : first_diff(lhs, rhs));
    }
    {
        const Poly lhs = build_v(a, ctx) * build_u(b, ctx);
        const Poly rhs = series_power(-(a + b), ctx);
        report.add("inverse v*u" + ab, lhs == rhs,
                   lhs == rhs ? "" : first_diff(lhs, rhs));
    }
    {
        const Poly lhs = build_u(a, ctx) * build_v(-a, ctx);
        report.add("inverse u_a*v_{-a} a=" + to_string(a), lhs == one,
                   lhs == one ? "" : first_diff(lhs, one));
    }
    return report;
}

// The twist conditions for curlyF_0: invertibility, the cocycle equation
//   (F (x) 1) (Delta0 (x) Id)(F) = (1 (x) F) (Id (x) Delta0)(F),
// and both counit conditions (eps (x) Id)(F) = (Id (x) eps)(F) = 1.
inline Report verify_twist_equation(const TwistContext& ctx,
                                    const CheckSink& sink = nullptr) {
    Report report(sink);
    const Tensor F = build_curlyF(Rational(0), ctx);
    const int order = ctx.order;

    const auto d0 = [order](const Monomial& m) {
        return delta0(Poly::of_mono(m, order));
    };
    const Tensor lhs = embed(F, 0, 1) * coexpand_slot(F, 0, d0);
    const Tensor rhs = embed(F, 1, 2) * coexpand_slot(F, 1, d0);
    report.add("twist-cocycle", lhs == rhs, lhs == rhs ? "" : first_diff(lhs, rhs));

    const Poly one = Poly::one(order);
    const Poly c0 = eps_slot(F, 0);
    const Poly c1 = eps_slot(F, 1);
    report.add("twist-counit slot0", c0 == one, c0 == one ? "" : first_diff(c0, one));
    report.add("twist-counit slot1", c1 == one, c1 == one ? "" : first_diff(c1, one));

    const Tensor unit2 = Tensor::unit(2, order);
    const Tensor inv1 = F * build_F(Rational(0), ctx);
    const Tensor inv2 = build_F(Rational(0), ctx) * F;
    report.add("twist-invertible", inv1 == unit2 && inv2 == unit2,
               inv1 == unit2 ? first_diff(inv2, unit2) : first_diff(inv1, unit2));
    return report;
}

// First-slot commutation: generators pass through the h-side of the twist
// with a shifted index, (x (x) 1) G_a = G_{a-s(x)} (x (x) 1), G in {curlyF, F}.
inline Check check_slot1_commutation(const Gen& g, const Rational& a,
                                     const TwistContext& ctx) {
    const Rational s = h_shift_amount(g);
    const Tensor gl = Tensor::of(Poly::of_gen(g, ctx.order), Poly::one(ctx.order));
    const Tensor lhs1 = gl * build_curlyF(a, ctx);
    const Tensor rhs1 = build_curlyF(a - s, ctx) * gl;
    const Tensor lhs2 = gl * build_F(a, ctx);
    const Tensor rhs2 = build_F(a - s, ctx) * gl;
    const bool ok = (lhs1 == rhs1) && (lhs2 == rhs2);
    return Check{"slot1-commutation " + gen_string(g) + " a=" + to_string(a), ok,
                 ok ? "" : (lhs1 == rhs1 ? first_diff(lhs2, rhs2) : first_diff(lhs1, rhs1))};
}

// First-slot commutation for e-powers: (e^n (x) 1) G_a = G_{a-n} (e^n (x) 1).
inline Check check_slot1_commutation_epow(int n, const Rational& a,
                                          const TwistContext& ctx) {
    const Tensor el = Tensor::of(Poly::of_mono(Monomial(ctx.e(), n), ctx.order),
                                 Poly::one(ctx.order));
    const Tensor lhs1 = el * build_curlyF(a, ctx);
    const Tensor rhs1 = build_curlyF(a - n, ctx) * el;
    const Tensor lhs2 = el * build_F(a, ctx);
    const Tensor rhs2 = build_F(a - n, ctx) * el;
    const bool ok = (lhs1 == rhs1) && (lhs2 == rhs2);
    return Check{"slot1-commutation e^" + std::to_string(n) + " a=" + to_string(a), ok,
                 ok ? "" : (lhs1 == rhs1 ? first_diff(lhs2, rhs2) : first_diff(lhs1, rhs1))};
}

// Second-slot commutation: moving (1 (x) g) through F_a produces the shifted
// F plus lower-order corrections:
//   (1 (x) L_n) F_a = F_a (1 (x) L_n)
//       + (p-n/2) [ F_{a+1} (h^(1)_a (x) Y_{p+n}) t
//                   - n/2 F_{a+2} (h^(2)_a (x) M_{2p+n}) t^2 ]
//   (1 (x) N_n): same bracket without the (p-n/2) prefactor
//   (1 (x) Y_q) F_a = F_a (1 (x) Y_q) + (p-q) F_{a+1} (h^(1)_a (x) M_{p+q}) t
//   (1 (x) M_n) F_a = F_a (1 (x) M_n)
inline Check check_slot2_commutation(const Gen& g, const Rational& a,
                                     const TwistContext& ctx) {
    const int order = ctx.order;
    const Poly one = Poly::one(order);
    const Tensor gr = Tensor::of(one, Poly::of_gen(g, order));
    const Tensor Fa = build_F(a, ctx);

    const Tensor lhs = gr * Fa;
    Tensor rhs = Fa * gr;
    switch (g.fam) {
        case Family::M:
            break;
        case Family::Y: {
            const Rational pq = Rational(Int(ctx.p2) - Int(g.index2), Int(2));
            const Gen m{Family::M, checked_add(ctx.p2, g.index2)};
            rhs += pq * (build_F(a + 1, ctx) *
                         Tensor::of(rising(a, 1, order), Poly::of_gen(m, order)))
                            .shifted_t(1);
            break;
        }
        case Family::N:
        case Family::L: {
            const Gen y{Family::Y, checked_add(ctx.p2, g.index2)};
            const Gen m{Family::M, checked_add(checked_add(ctx.p2, ctx.p2), g.index2)};
            Tensor corr = (build_F(a + 1, ctx) *
                           Tensor::of(rising(a, 1, order), Poly::of_gen(y, order)))
                              .shifted_t(1);
            corr -= Rational(Int(g.index2), Int(4)) *
                    (build_F(a + 2, ctx) *
                     Tensor::of(rising(a, 2, order), Poly::of_gen(m, order)))
                        .shifted_t(2);
            if (g.fam == Family::L)
                corr *= Rational(Int(ctx.p2) * 2 - Int(g.index2), Int(4));
            rhs += corr;
            break;
        }
    }
    const bool ok = lhs == rhs;
    return Check{"slot2-commutation " + gen_string(g) + " a=" + to_string(a), ok,
                 ok ? "" : first_diff(lhs, rhs)};
}

// Commutation of generators through u_a:
//   L_n u_a = u_a L_n - (p-n/2) t u_a h^(1)_{-a} (Y_{p+n} + n/2 t h^(1)_{-a-1} M_{2p+n})
//   N_n u_a: same without the (p-n/2) prefactor
//   Y_q u_a = u_{a+1} Y_q + (q-p) t u_{a+1} h^(1)_{-a-1} M_{p+q}
//   M_n u_a = u_{a+2} M_n
inline Check check_u_commutation(const Gen& g, const Rational& a,
                                 const TwistContext& ctx) {
    const int order = ctx.order;
    const Poly gp = Poly::of_gen(g, order);
    const Poly lhs = gp * build_u(a, ctx);

    Poly rhs(order);
    switch (g.fam) {
        case Family::M:
            rhs = build_u(a + 2, ctx) * gp;
            break;
        case Family::Y: {
            const Rational qp = Rational(Int(g.index2) - Int(ctx.p2), Int(2));
            const Gen m{Family::M, checked_add(ctx.p2, g.index2)};
            const Poly u1 = build_u(a + 1, ctx);
            rhs = u1 * gp +
                  qp * (u1 * rising(-a - 1, 1, order) * Poly::of_gen(m, order))
                           .shifted_t(1);
            break;
        }
        case Family::N:
        case Family::L: {
            const Gen y{Family::Y, checked_add(ctx.p2, g.index2)};
            const Gen m{Family::M, checked_add(checked_add(ctx.p2, ctx.p2), g.index2)};
            const Poly ua = build_u(a, ctx);
            Poly inner = Poly::of_gen(y, order);
            inner += Rational(Int(g.index2), Int(4)) *
                     (rising(-a - 1, 1, order) * Poly::of_gen(m, order)).shifted_t(1);
            Poly corr = (ua * rising(-a, 1, order) * inner).shifted_t(1);
            if (g.fam == Family::L)
                corr *= Rational(Int(ctx.p2) * 2 - Int(g.index2), Int(4));
            rhs = ua * gp - corr;
            break;
        }
    }
    const bool ok = lhs == rhs;
    return Check{"u-commutation " + gen_string(g) + " a=" + to_string(a), ok,
                 ok ? "" : first_diff(lhs, rhs)};
}

} // namespace esvq

#pragma once

// Shifted factorial calculus in h = N_0 and its interaction with the rest of
// the algebra.  Conventions:
//
//   rising:  h^(n)_a = (h+a)(h+a+1)...(h+a+n-1)
//   falling: h^[n]_a = (h+a)(h+a-1)...(h+a-n+1)
//   gen_binomial(a, r) = a(a-1)...(a-r+1) / r!   for rational a
//
// plus the closed commutation forms used throughout the twist construction:
// moving a generator (or a power of e = Y_p) past e-powers or past shifted
// factorials of h.  Every closed form is built as a written expression and
// normal-ordered by the engine, so identity checks compare canonical forms
// computed by two genuinely different routes.

#include <vector>

#include "esvq/context.hpp"
#include "esvq/poly.hpp"
#include "esvq/report.hpp"

namespace esvq {

inline Poly rising(const Rational& a, int n, int order) {
    if (n < 0) throw Error("rising factorial length must be >= 0");
    Poly out = Poly::one(order);
    const Gen h{Family::N, 0};
    for (int i = 0; i < n; ++i) {
        Poly factor = Poly::of_gen(h, order);
        factor += Poly::scalar(a + i, order);
        out = out * factor;
    }
    return out;
}

inline Poly falling(const Rational& a, int n, int order) {
    if (n < 0) throw Error("falling factorial length must be >= 0");
    Poly out = Poly::one(order);
    const Gen h{Family::N, 0};
    for (int i = 0; i < n; ++i) {
        Poly factor = Poly::of_gen(h, order);
        factor += Poly::scalar(a - i, order);
        out = out * factor;
    }
    return out;
}

// Generalized binomial coefficient C(a, r) for rational a, integer r >= 0.
inline Rational gen_binomial(const Rational& a, int r) {
    if (r < 0) throw Error("gen_binomial: negative lower index");
    Rational num(1);
    for (int i = 0; i < r; ++i) num *= (a - i);
    return num / factorial(r);
}

// The two binomial convolution identities tying falling and rising
// factorials together, verified exactly for given shifts a, b and total r:
//
//   sum_{s+t=r} (-1)^t/(s!t!) h^[s]_a h^(t)_b     = C(a-b, r)
//   sum_{s+t=r} (-1)^t/(s!t!) h^[s]_a h^[t]_{b-s} = C(a-b+r-1, r)
inline Report check_binomial_identities(const Rational& a, const Rational& b, int r,
                                        const CheckSink& sink = nullptr) {
    Report report(sink);
    const int order = 0;
    const std::string where =
        " a=" + to_string(a) + " b=" + to_string(b) + " r=" + std::to_string(r);

    Poly lhs1 = Poly::zero(order);
    Poly lhs2 = Poly::zero(order);
    for (int s = 0; s <= r; ++s) {
        const int t = r - s;
        const Rational c = Rational((t % 2 == 0) ? 1 : -1) / (factorial(s) * factorial(t));
        lhs1 += c * (falling(a, s, order) * rising(b, t, order));
        lhs2 += c * (falling(a, s, order) * falling(b - s, t, order));
    }
    const Poly rhs1 = Poly::scalar(gen_binomial(a - b, r), order);
    const Poly rhs2 = Poly::scalar(gen_binomial(a - b + r - 1, r), order);

    report.add("binomial-convolution mixed" + where, lhs1 == rhs1,
               lhs1 == rhs1 ? "" : first_diff(lhs1, rhs1));
    report.add("binomial-convolution falling" + where, lhs2 == rhs2,
               lhs2 == rhs2 ? "" : first_diff(lhs2, rhs2));
    return report;
}

// Splice identities for shifted factorials: a product of shifted factorials
// with compatible shifts concatenates into one longer factorial, and a falling
// factorial is a rising factorial read from its top end:
//
//   h^(s+t)_a = h^(s)_a h^(t)_{a+s}
//   h^[s+t]_a = h^[s]_a h^[t]_{a-s}
//   h^[s]_a   = h^(s)_{a-s+1}
//
// Checked exactly at order 0 (both sides are t-free polynomials in h).
inline Report check_factorial_splices(const Rational& a, int s, int t,
                                      const CheckSink& sink = nullptr) {
    Report report(sink);
    const int order = 0;
    const std::string where =
        " a=" + to_string(a) + " s=" + std::to_string(s) + " t=" + std::to_string(t);

    const Poly rise_whole = rising(a, s + t, order);
    const Poly rise_split = rising(a, s, order) * rising(a + s, t, order);
    report.add("factorial-splice rising" + where, rise_whole == rise_split,
               rise_whole == rise_split ? "" : first_diff(rise_whole, rise_split));

    const Poly fall_whole = falling(a, s + t, order);
    const Poly fall_split = falling(a, s, order) * falling(a - s, t, order);
    report.add("factorial-splice falling" + where, fall_whole == fall_split,
               fall_whole == fall_split ? "" : first_diff(fall_whole, fall_split));

    const Poly fall_s = falling(a, s, order);
    const Poly rise_flip = rising(a - s + 1, s, order);
    report.add("falling-as-rising" + where, fall_s == rise_flip,
               fall_s == rise_flip ? "" : first_diff(fall_s, rise_flip));
    return report;
}

// Reordering expansion x y^m = sum_k (-1)^k C(m,k) y^{m-k} (ad y)^k(x),
// built from iterated brackets (not from the rewriting engine's recursion),
// so it serves as an independent route to the same normal form.
inline Poly ad_power_expand(const Gen& x, const Gen& y, int m, int order) {
    if (m < 0) throw Error("ad_power_expand: negative power");
    Poly out = Poly::zero(order);
    Rational ad_coeff(1);
    Gen ad_gen = x;
    for (int k = 0; k <= m; ++k) {
        if (k > 0) {
            auto br = bracket_gen(y, ad_gen);
            if (!br) break;  // (ad y)^k(x) vanished; all higher k vanish too
            ad_coeff *= br->first;
            ad_gen = br->second;
        }
        const Rational sign((k % 2 == 0) ? 1 : -1);
        std::vector<Gen> word(m - k, y);
        word.push_back(ad_gen);
        out += (sign * gen_binomial(Rational(m), k) * ad_coeff) *
               normal_order(word, order);
    }
    return out;
}

// Closed form of g * e^r (e = Y_p), from the ad-expansion specialized to the
// four families:
//   L_n e^r = e^r L_n + (p-n/2)(r e^{r-1} Y_{p+n} - n r(r-1)/2 e^{r-2} M_{2p+n})
//   N_n e^r = e^r N_n +          r e^{r-1} Y_{p+n} - n r(r-1)/2 e^{r-2} M_{2p+n}
//   Y_q e^r = e^r Y_q + r (p-q) e^{r-1} M_{p+q}
//   M_n e^r = e^r M_n
inline Poly commute_past_e_power(const Gen& g, int r, const TwistContext& ctx) {
    if (r < 0) throw Error("commute_past_e_power: negative power");
    const int order = ctx.order;
    const Gen e = ctx.e();

    auto e_pow_times = [&](int k, const Gen& tail) {
        std::vector<Gen> word(k, e);
        word.push_back(tail);
        return normal_order(word, order);
    };

    Poly out = e_pow_times(r, g);
    switch (g.fam) {
        case Family::M:
            break;
        case Family::Y: {
            if (r >= 1) {
                // r (p-q) e^{r-1} M_{p+q}
                const Rational pq = Rational(Int(ctx.p2) - Int(g.index2), Int(2));
                out += (Rational(r) * pq) *
                       e_pow_times(r - 1, Gen{Family::M, checked_add(ctx.p2, g.index2)});
            }
            break;
        }
        case Family::N:
        case Family::L: {
            Poly extra = Poly::zero(order);
            if (r >= 1)
                extra += Rational(r) *
                         e_pow_times(r - 1, Gen{Family::Y, checked_add(ctx.p2, g.index2)});
            if (r >= 2) {
                // - n r(r-1)/2 e^{r-2} M_{2p+n}, with n = index2/2
                extra -= (Rational(Int(g.index2), Int(2)) * Rational(r) * Rational(r - 1) /
                          2) *
                         e_pow_times(r - 2,
                                     Gen{Family::M,
                                         checked_add(checked_add(ctx.p2, ctx.p2), g.index2)});
            }
            if (g.fam == Family::L) {
                // prefactor (p - n/2) = (2 p2 - n2)/4 on doubled indices
                extra *= Rational(Int(ctx.p2) * 2 - Int(g.index2), Int(4));
            }
            out += extra;
            break;
        }
    }
    return out;
}

enum class FactKind { Rising, Falling };

inline Poly shifted_factorial(FactKind kind, const Rational& a, int i, int order) {
    return kind == FactKind::Rising ? rising(a, i, order) : falling(a, i, order);
}

// How far the h-argument shifts when a generator crosses a shifted factorial
// from left to right: g f(h) = f(h - s) g with s = [h, g]-eigenvalue.
inline Rational h_shift_amount(const Gen& g) {
    switch (g.fam) {
        case Family::L:
        case Family::N: return Rational(0);
        case Family::M: return Rational(2);
        case Family::Y: return Rational(1);
    }
    return Rational(0);
}

// Closed form of g * h^(i)_a (or falling): the factorial's shift argument
// moves by the family weight and g passes through unchanged.
inline Poly commute_h_shift(const Gen& g, FactKind kind, const Rational& a, int i,
                            int order) {
    const Rational s = h_shift_amount(g);
    return shifted_factorial(kind, a - s, i, order) * Poly::of_gen(g, order);
}

// Closed form of e^n * h^(i)_a (or falling): the shift moves by n.
inline Poly commute_h_shift_epow(int n, FactKind kind, const Rational& a, int i,
                                 const TwistContext& ctx) {
    if (n < 0) throw Error("commute_h_shift_epow: negative power");
    const Poly epow = Poly::of_mono(Monomial(ctx.e(), n), ctx.order);
    return shifted_factorial(kind, a - n, i, ctx.order) * epow;
}

} // namespace esvq

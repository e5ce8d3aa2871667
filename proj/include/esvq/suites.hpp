#pragma once

// Named verification suites aggregating the library's exact checks into the
// groups exposed by the CLI:
//
//   jacobi     bracket antisymmetry consistency via the Jacobi identity on a
//              doubled-index grid of width 2K
//   pbw        rewriting confluence (two strategies), associativity, and the
//              classical structure maps on seeded random samples
//   identities factorial calculus and every commutation identity used by the
//              twist construction, on fixed shift/index grids
//   twist      the cocycle and counit laws for the twist element
//   inverses   product laws for the twist pair and for u/v
//   theorem    closed-form coproduct/antipode vs the twist-conjugated route,
//              including the deterministic coefficient findings and the
//              antipode-axiom gate
//   axioms     full Hopf-algebra axioms on grid generators and seeded random
//              products, plus the classical t^0 limit
//   cybe       the classical Yang-Baxter equation for the first-order term
//   all        everything above, in this order
//
// Every check is an exact rational identity; there are no tolerances.

#include <string>
#include <vector>

#include "esvq/factorial.hpp"
#include "esvq/hopf.hpp"
#include "esvq/parse.hpp"
#include "esvq/render.hpp"
#include "esvq/sampler.hpp"
#include "esvq/twist.hpp"

namespace esvq {

struct SuiteConfig {
    std::int64_t  p2 = 1;            // doubled index of the twist parameter p
    int           order = 3;         // truncation order N
    std::int64_t  index_range2 = 4;  // doubled-index grid bound K
    std::uint64_t seed = 2026;
};

inline TwistContext make_context(const SuiteConfig& cfg) {
    return TwistContext(cfg.p2, cfg.order);
}

namespace detail {

// Shift grids used by the identity suites.
inline const std::vector<Rational>& wide_shifts() {
    static const std::vector<Rational> v = {Rational(0),  Rational(1),
                                            Rational(-1), Rational(2),
                                            Rational(-2), rat(1, 2)};
    return v;
}

inline const std::vector<Rational>& small_shifts() {
    static const std::vector<Rational> v = {Rational(0), Rational(1),
                                            Rational(-1), rat(1, 2)};
    return v;
}

} // namespace detail

// --- jacobi ------------------------------------------------------------------

// Jacobi identity over all generator triples with |index2| <= 2K.
inline Report run_jacobi_suite(const SuiteConfig& cfg,
                               const CheckSink& sink = nullptr) {
    return jacobi_check(2 * cfg.index_range2, sink);
}

// --- pbw ---------------------------------------------------------------------

inline Report run_pbw_suite(const SuiteConfig& cfg,
                            const CheckSink& sink = nullptr) {
    Report report(sink);
    Sampler smp(cfg.seed);

    // Rewriting confluence: both reduction strategies must produce the same
    // normal form on arbitrary-order words.
    for (int i = 0; i < 200; ++i) {
        const std::vector<Gen> w = smp.word(cfg.index_range2, 0, 5);
        std::string wtext;
        for (const Gen& g : w) wtext += (wtext.empty() ? "" : "*") + gen_string(g);
        if (wtext.empty()) wtext = "1";
        const Poly a = normal_order(w, cfg.order, RewriteStrategy::LeftToRight);
        const Poly b = normal_order(w, cfg.order, RewriteStrategy::RightToLeft);
        report.add("confluence word#" + std::to_string(i) + " " + wtext, a == b,
                   a == b ? "" : first_diff(a, b));
    }

    // Associativity of the normal-ordered product on random polynomials.
    for (int i = 0; i < 100; ++i) {
        const Poly x = smp.poly(cfg.index_range2, 2, 3, cfg.order);
        const Poly y = smp.poly(cfg.index_range2, 2, 3, cfg.order);
        const Poly z = smp.poly(cfg.index_range2, 2, 3, cfg.order);
        const Poly lhs = (x * y) * z;
        const Poly rhs = x * (y * z);
        report.add("associativity triple#" + std::to_string(i), lhs == rhs,
                   lhs == rhs ? "" : first_diff(lhs, rhs));
    }

    // Classical structure maps: coproduct/counit/antipode of the undeformed
    // algebra act as (anti)homomorphisms and satisfy the counit/antipode laws.
    for (int i = 0; i < 25; ++i) {
        const std::string tag = "#" + std::to_string(i);
        const Poly x = smp.poly(cfg.index_range2, 2, 3, cfg.order);
        const Poly y = smp.poly(cfg.index_range2, 2, 3, cfg.order);

        const Tensor dxy = delta0(x * y);
        const Tensor dxdy = delta0(x) * delta0(y);
        report.add("classical coproduct-homomorphism" + tag, dxy == dxdy,
                   dxy == dxdy ? "" : first_diff(dxy, dxdy));

        const Poly exy = eps(x * y);
        const Poly exey = eps(x) * eps(y);
        report.add("classical counit-homomorphism" + tag, exy == exey,
                   exy == exey ? "" : first_diff(exy, exey));

        const Poly sxy = s0(x * y);
        const Poly sysx = s0(y) * s0(x);
        report.add("classical antipode-antihomomorphism" + tag, sxy == sysx,
                   sxy == sysx ? "" : first_diff(sxy, sysx));

        const Tensor dx = delta0(x);
        const Poly cl = eps_slot(dx, 0);
        const Poly cr = eps_slot(dx, 1);
        report.add("classical counit-law" + tag, cl == x && cr == x,
                   (cl == x && cr == x) ? "" : first_diff(cl, x));

        const auto s0_mono = [&](const Monomial& m) {
            return s0(Poly::of_mono(m, cfg.order));
        };
        const Poly al = mul_slots(map_slot(dx, 0, s0_mono));
        const Poly ar = mul_slots(map_slot(dx, 1, s0_mono));
        const Poly ex = eps(x);
        report.add("classical antipode-law" + tag, al == ex && ar == ex,
                   (al == ex && ar == ex) ? "" : first_diff(al, ex));
    }
    return report;
}

// --- identities ---------------------------------------------------------------

inline Report run_identities_suite(const SuiteConfig& cfg,
                                   const CheckSink& sink = nullptr) {
    Report report(sink);
    const TwistContext ctx = make_context(cfg);
    const int order = cfg.order;
    const auto& wide = detail::wide_shifts();
    const auto& small = detail::small_shifts();

    // Shifted-factorial splice laws.
    for (const Rational& a : small)
        for (int s = 0; s <= 4; ++s)
            for (int t = 0; t <= 4; ++t)
                report.merge(check_factorial_splices(a, s, t, report.sink()));

    // Binomial convolution identities.
    for (const Rational& a : wide)
        for (const Rational& b : wide)
            for (int r = 0; r <= 5; ++r)
                report.merge(check_binomial_identities(a, b, r, report.sink()));

    // Reordering expansion x y^m via iterated brackets vs the engine.
    for (const Gen& x : generator_grid(3)) {
        for (const Gen& y : generator_grid(3)) {
            for (int m = 0; m <= 4; ++m) {
                const Poly lhs = ad_power_expand(x, y, m, order);
                std::vector<Gen> w{x};
                w.insert(w.end(), static_cast<std::size_t>(m), y);
                const Poly rhs = normal_order(w, order);
                report.add("reorder-expansion x=" + gen_string(x) +
                               " y=" + gen_string(y) + " m=" + std::to_string(m),
                           lhs == rhs, lhs == rhs ? "" : first_diff(lhs, rhs));
            }
        }
    }

    // Closed commutation of a generator past e-powers vs the engine.
    for (const Gen& g : generator_grid(cfg.index_range2)) {
        for (int r = 0; r <= 5; ++r) {
            const Poly lhs = commute_past_e_power(g, r, ctx);
            std::vector<Gen> w{g};
            w.insert(w.end(), static_cast<std::size_t>(r), ctx.e());
            const Poly rhs = normal_order(w, order);
            report.add("e-power commutation g=" + gen_string(g) +
                           " r=" + std::to_string(r),
                       lhs == rhs, lhs == rhs ? "" : first_diff(lhs, rhs));
        }
    }

    // Weight-shift law g f(h) = f(h - s) g for shifted factorials, and its
    // e-power form.
    for (const FactKind kind : {FactKind::Rising, FactKind::Falling}) {
        const char* kname = (kind == FactKind::Rising) ? "rising" : "falling";
        for (const Rational& a : wide) {
            for (int i = 0; i <= 4; ++i) {
                for (const Gen& g : generator_grid(cfg.index_range2)) {
                    const Poly lhs =
                        Poly::of_gen(g, order) * shifted_factorial(kind, a, i, order);
                    const Poly rhs = commute_h_shift(g, kind, a, i, order);
                    report.add("h-shift " + std::string(kname) + " g=" +
                                   gen_string(g) + " a=" + to_string(a) +
                                   " i=" + std::to_string(i),
                               lhs == rhs, lhs == rhs ? "" : first_diff(lhs, rhs));
                }
                for (int n = 0; n <= 3; ++n) {
                    const Poly lhs = Poly::of_mono(Monomial(ctx.e(), n), order) *
                                     shifted_factorial(kind, a, i, order);
                    const Poly rhs = commute_h_shift_epow(n, kind, a, i, ctx);
                    report.add("h-shift " + std::string(kname) + " e^" +
                                   std::to_string(n) + " a=" + to_string(a) +
                                   " i=" + std::to_string(i),
                               lhs == rhs, lhs == rhs ? "" : first_diff(lhs, rhs));
                }
            }
        }
    }

    // Classical coproduct of a falling factorial splits binomially.
    for (const Rational& a : small)
        report.merge(verify_falling_coproduct(5, a, report.sink()));

    // Generalized binomial series inverses (1-et)^a (1-et)^{-a} = 1.
    for (const Rational& a :
         {Rational(1), Rational(-1), Rational(2), Rational(-2), rat(1, 2)}) {
        const Poly prod = series_power(a, ctx) * series_power(-a, ctx);
        const Poly one = Poly::one(order);
        report.add("series-inverse a=" + to_string(a), prod == one,
                   prod == one ? "" : first_diff(prod, one));
    }

    // u and v agree with their tensor-route definitions.
    for (const Rational& a : {Rational(0), Rational(1), Rational(-1)}) {
        const Poly u1 = build_u(a, ctx);
        const Poly u2 = u_from_F(a, ctx);
        report.add("u-route a=" + to_string(a), u1 == u2,
                   u1 == u2 ? "" : first_diff(u1, u2));
        const Poly v1 = build_v(a, ctx);
        const Poly v2 = v_from_curlyF(a, ctx);
        report.add("v-route a=" + to_string(a), v1 == v2,
                   v1 == v2 ? "" : first_diff(v1, v2));
    }

    // First-slot, second-slot and u-conjugation commutation laws.
    for (const Rational& a : wide) {
        for (const Gen& g : generator_grid(cfg.index_range2)) {
            const Check c = check_slot1_commutation(g, a, ctx);
            report.add(c.name, c.pass, c.detail);
        }
    }
    for (const Rational& a : wide)
        for (int n = 0; n <= 3; ++n) {
            const Check c = check_slot1_commutation_epow(n, a, ctx);
            report.add(c.name, c.pass, c.detail);
        }
    for (const Rational& a : wide)
        for (const Gen& g : generator_grid(cfg.index_range2)) {
            const Check c = check_slot2_commutation(g, a, ctx);
            report.add(c.name, c.pass, c.detail);
        }
    for (const Rational& a : {Rational(0), Rational(1), Rational(-1)})
        for (const Gen& g : generator_grid(cfg.index_range2)) {
            const Check c = check_u_commutation(g, a, ctx);
            report.add(c.name, c.pass, c.detail);
        }
    return report;
}

// --- twist / inverses ----------------------------------------------------------

inline Report run_twist_suite(const SuiteConfig& cfg,
                              const CheckSink& sink = nullptr) {
    return verify_twist_equation(make_context(cfg), sink);
}

inline Report run_inverses_suite(const SuiteConfig& cfg,
                                 const CheckSink& sink = nullptr) {
    Report report(sink);
    const TwistContext ctx = make_context(cfg);
    for (const Rational& a : detail::wide_shifts())
        for (const Rational& b : detail::wide_shifts())
            report.merge(verify_inverses(a, b, ctx, report.sink()));
    return report;
}

// --- theorem ---------------------------------------------------------------

inline Report run_theorem_suite(const SuiteConfig& cfg,
                                const CheckSink& sink = nullptr) {
    Report report(sink);
    const TwistContext ctx = make_context(cfg);
    report.merge(compare_closed_vs_twisted(cfg.index_range2, ctx, report.sink()));

    // Gate: whatever the closed forms print, the twist-conjugated antipode
    // must satisfy the antipode axiom on the whole grid.
    for (const Gen& g : generator_grid(cfg.index_range2)) {
        const Poly x = Poly::of_gen(g, cfg.order);
        const Tensor d = twisted_coproduct(x, ctx);
        const auto s_mono = [&](const Monomial& m) {
            return twisted_antipode(Poly::of_mono(m, cfg.order), ctx);
        };
        const Poly left = mul_slots(map_slot(d, 0, s_mono));
        const Poly right = mul_slots(map_slot(d, 1, s_mono));
        const Poly expected = eps(x);
        const bool ok = (left == expected) && (right == expected);
        report.add("antipode-axiom gate " + gen_string(g), ok,
                   ok ? "" : first_diff(left, expected));
    }
    return report;
}

// --- axioms -------------------------------------------------------------------

inline Report run_axioms_suite(const SuiteConfig& cfg,
                               const CheckSink& sink = nullptr) {
    Report report(sink);
    const TwistContext ctx = make_context(cfg);

    report.merge(verify_hopf_axioms(cfg.index_range2, ctx, report.sink()));

    // Seeded random degree-<=2 products: axioms, homomorphism laws, and the
    // classical t^0 limit on every sample.
    Sampler smp(cfg.seed);
    for (int i = 0; i < 50; ++i) {
        const std::string label = "sample#" + std::to_string(i);
        const Poly x = smp.poly(cfg.index_range2, 2, 2, cfg.order);
        const Poly y = smp.poly(cfg.index_range2, 2, 2, cfg.order);
        report.merge(check_hopf_axioms_for(x, label, ctx, report.sink()));
        report.merge(
            check_hopf_morphism_for(x, y, label, ctx, report.sink()));

        const Tensor d = twisted_coproduct(x, ctx);
        const Poly x0 = x.t_slice(0);
        const bool dlim = d.t_slice(0) == delta0(x0).t_slice(0);
        const bool slim = twisted_antipode(x, ctx).t_slice(0) == s0(x0).t_slice(0);
        report.add("classical-limit " + label, dlim && slim,
                   (dlim && slim) ? "" : "t^0 slice differs from the classical map");
    }

    report.merge(verify_classical_limit(cfg.index_range2, ctx, report.sink()));
    return report;
}

// --- cybe -----------------------------------------------------------------------

inline Report run_cybe_suite(const SuiteConfig& cfg,
                             const CheckSink& sink = nullptr) {
    return verify_cybe(make_context(cfg), sink);
}

// --- dispatch --------------------------------------------------------------------

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "jacobi", "pbw",     "identities", "twist", "inverses",
        "theorem", "axioms", "cybe",       "all"};
    return names;
}

inline Report run_suite(const std::string& name, const SuiteConfig& cfg,
                        const CheckSink& sink = nullptr) {
    if (name == "jacobi") return run_jacobi_suite(cfg, sink);
    if (name == "pbw") return run_pbw_suite(cfg, sink);
    if (name == "identities") return run_identities_suite(cfg, sink);
    if (name == "twist") return run_twist_suite(cfg, sink);
    if (name == "inverses") return run_inverses_suite(cfg, sink);
    if (name == "theorem") return run_theorem_suite(cfg, sink);
    if (name == "axioms") return run_axioms_suite(cfg, sink);
    if (name == "cybe") return run_cybe_suite(cfg, sink);
    if (name == "all") {
        Report report(sink);
        report.merge(run_jacobi_suite(cfg, report.sink()));
        report.merge(run_pbw_suite(cfg, report.sink()));
        report.merge(run_identities_suite(cfg, report.sink()));
        report.merge(run_twist_suite(cfg, report.sink()));
        report.merge(run_inverses_suite(cfg, report.sink()));
        report.merge(run_theorem_suite(cfg, report.sink()));
        report.merge(run_axioms_suite(cfg, report.sink()));
        report.merge(run_cybe_suite(cfg, report.sink()));
        return report;
    }
    throw ConfigError("unknown suite '" + name + "'");
}

} // namespace esvq

#pragma once

// Elements of U(L)[[t]]/(t^{N+1}): finite rational linear combinations of
// t^d * (PBW monomial) with d <= N.  Multiplication rewrites every
// out-of-order adjacent generator pair x y -> y x + [x,y] until the word is
// sorted; the rewriting is implemented as recursive single-generator
// insertion, memoized globally, and is available in two symmetric strategies
// (insert from the left word end or from the right) whose agreement is a
// confluence check.
//
// Canonical-form invariants maintained by every operation:
//   * no stored coefficient is zero,
//   * every monomial is strictly sorted,
//   * no t-degree exceeds the truncation order (higher terms are dropped).
//
// The memoization caches are shared across threads behind a mutex and are
// insert-only, so concurrent use is safe and observationally transparent.

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "esvq/errors.hpp"
#include "esvq/generators.hpp"
#include "esvq/monomial.hpp"
#include "esvq/rational.hpp"
#include "esvq/report.hpp"

namespace esvq {

// t-degree-free linear combination of PBW monomials.
using Terms0 = std::map<Monomial, Rational>;

namespace detail {

inline void add_to(Terms0& acc, const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = acc.find(m);
    if (it == acc.end()) {
        acc.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) acc.erase(it);
    }
}

struct MonoGenKey {
    Monomial m;
    Gen      g;
    bool operator==(const MonoGenKey& o) const { return g == o.g && m == o.m; }
};
struct MonoGenHash {
    std::size_t operator()(const MonoGenKey& k) const {
        std::size_t h = hash_value(k.m);
        h ^= (static_cast<std::size_t>(k.g.fam) + 0x9e3779b97f4a7c15ull) + (h << 6) + (h >> 2);
        h ^= (static_cast<std::size_t>(k.g.index2) + 0x9e3779b97f4a7c15ull) + (h << 6) + (h >> 2);
        return h;
    }
};

// Right-insertion: normal form of m * g.  The recursion follows the single
// rewrite x g -> g x + [x,g] applied at the word tail; every branch strictly
// decreases (word length, inversion count) lexicographically, so it
// terminates.  Returns a reference into the cache (entries are never erased,
// and unordered_map never invalidates references on insert).
inline const Terms0& mul_mono_gen(const Monomial& m, const Gen& g) {
    static std::unordered_map<MonoGenKey, Terms0, MonoGenHash> cache;
    static std::mutex mtx;

    MonoGenKey key{m, g};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    Terms0 result;
    if (m.empty()) {
        result.emplace(Monomial(g), Rational(1));
    } else {
        const Gen x = m.factors().back().g;
        if (!(g < x)) {
            result.emplace(m.appended(g), Rational(1));
        } else {
            const Monomial m1 = m.drop_last();
            // m*g = (m1*g)*x + m1*[x,g]
            const Terms0& a = mul_mono_gen(m1, g);
            for (const auto& [ma, ca] : a) {
                const Terms0& b = mul_mono_gen(ma, x);
                for (const auto& [mb, cb] : b) add_to(result, mb, ca * cb);
            }
            if (auto br = bracket_gen(x, g)) {
                const Terms0& b = mul_mono_gen(m1, br->second);
                for (const auto& [mb, cb] : b) add_to(result, mb, br->first * cb);
            }
        }
    }

    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(std::move(key), std::move(result)).first->second;
}

// Left-insertion mirror: normal form of g * m.
inline const Terms0& mul_gen_mono(const Gen& g, const Monomial& m) {
    static std::unordered_map<MonoGenKey, Terms0, MonoGenHash> cache;
    static std::mutex mtx;

    MonoGenKey key{m, g};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    Terms0 result;
    if (m.empty()) {
        result.emplace(Monomial(g), Rational(1));
    } else {
        const Gen x = m.factors().front().g;
        if (!(x < g)) {
            result.emplace(m.prepended(g), Rational(1));
        } else {
            const Monomial m1 = m.drop_first();
            // g*m = x*(g*m1) + [g,x]*m1
            const Terms0& a = mul_gen_mono(g, m1);
            for (const auto& [ma, ca] : a) {
                const Terms0& b = mul_gen_mono(x, ma);
                for (const auto& [mb, cb] : b) add_to(result, mb, ca * cb);
            }
            if (auto br = bracket_gen(g, x)) {
                const Terms0& b = mul_gen_mono(br->second, m1);
                for (const auto& [mb, cb] : b) add_to(result, mb, br->first * cb);
            }
        }
    }

    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(std::move(key), std::move(result)).first->second;
}

struct MonoPairKey {
    Monomial a, b;
    bool operator==(const MonoPairKey& o) const { return a == o.a && b == o.b; }
};
struct MonoPairHash {
    std::size_t operator()(const MonoPairKey& k) const {
        std::size_t h = hash_value(k.a);
        h ^= hash_value(k.b) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
};

// Normal form of the concatenation a * b.
inline const Terms0& mono_mul(const Monomial& a, const Monomial& b) {
    static std::unordered_map<MonoPairKey, Terms0, MonoPairHash> cache;
    static std::mutex mtx;

    MonoPairKey key{a, b};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    Terms0 result;
    result.emplace(a, Rational(1));
    for (const Gen& g : b.letters()) {
        Terms0 next;
        for (const auto& [m, c] : result) {
            const Terms0& prod = mul_mono_gen(m, g);
            for (const auto& [mp, cp] : prod) add_to(next, mp, c * cp);
        }
        result = std::move(next);
    }

    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(std::move(key), std::move(result)).first->second;
}

} // namespace detail

// ------------------------------------------------------------------------

class Poly {
public:
    struct Key {
        int      tdeg;
        Monomial mono;
        friend bool operator<(const Key& a, const Key& b) {
            if (a.tdeg != b.tdeg) return a.tdeg < b.tdeg;
            return a.mono < b.mono;
        }
        friend bool operator==(const Key& a, const Key& b) {
            return a.tdeg == b.tdeg && a.mono == b.mono;
        }
    };
    using TermMap = std::map<Key, Rational>;

    explicit Poly(int order) : order_(order) {
        if (order < 0) throw ConfigError("truncation order must be >= 0");
    }

    static Poly zero(int order) { return Poly(order); }
    static Poly one(int order) {
        Poly p(order);
        p.add_term(0, Monomial::unit(), Rational(1));
        return p;
    }
    static Poly of_gen(const Gen& g, int order) {
        Poly p(order);
        p.add_term(0, Monomial(g), Rational(1));
        return p;
    }
    static Poly of_mono(const Monomial& m, int order, int tdeg = 0,
                        const Rational& c = Rational(1)) {
        Poly p(order);
        p.add_term(tdeg, m, c);
        return p;
    }
    // Embeds a scalar as a multiple of the unit monomial.
    static Poly scalar(const Rational& c, int order, int tdeg = 0) {
        Poly p(order);
        p.add_term(tdeg, Monomial::unit(), c);
        return p;
    }

    int order() const { return order_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(int tdeg, const Monomial& m, const Rational& c) {
        if (c == 0) return;
        if (tdeg < 0) throw Error("negative t-degree");
        if (tdeg > order_) return;  // hard truncation
        auto it = terms_.find(Key{tdeg, m});
        if (it == terms_.end()) {
            terms_.emplace(Key{tdeg, m}, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coeff(int tdeg, const Monomial& m) const {
        auto it = terms_.find(Key{tdeg, m});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Terms of exact t-degree d, returned at the same truncation order.
    Poly t_slice(int d) const {
        Poly out(order_);
        for (const auto& [k, c] : terms_)
            if (k.tdeg == d) out.add_term(d, k.mono, c);
        return out;
    }

    // Multiplication by t^k (shifts degrees, truncates).
    Poly shifted_t(int k) const {
        if (k < 0) throw Error("negative t-shift");
        Poly out(order_);
        for (const auto& [key, c] : terms_) out.add_term(key.tdeg + k, key.mono, c);
        return out;
    }

    Poly& operator+=(const Poly& o) {
        require_same_order(o);
        for (const auto& [k, c] : o.terms_) add_term(k.tdeg, k.mono, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        require_same_order(o);
        for (const auto& [k, c] : o.terms_) add_term(k.tdeg, k.mono, -c);
        return *this;
    }
    Poly& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, v] : terms_) v *= c;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator-(const Poly& a) {
        Poly out(a.order_);
        for (const auto& [k, c] : a.terms_) out.terms_.emplace(k, -c);
        return out;
    }

    // Product in U(L)[[t]]: pairwise monomial products are normal-ordered,
    // t-degrees add, and terms beyond the truncation order are dropped.
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.require_same_order(b);
        Poly out(a.order_);
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                const int d = ka.tdeg + kb.tdeg;
                if (d > a.order_) continue;
                const Rational c = ca * cb;
                for (const auto& [m, cm] : detail::mono_mul(ka.mono, kb.mono))
                    out.add_term(d, m, c * cm);
            }
        }
        return out;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.order_ == b.order_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void require_same_order(const Poly& o) const {
        if (order_ != o.order_)
            throw OrderMismatch("series orders differ: " + std::to_string(order_) +
                                " vs " + std::to_string(o.order_));
    }

    int     order_;
    TermMap terms_;
};

// ------------------------------------------------------------------------

enum class RewriteStrategy { LeftToRight, RightToLeft };

// Normal form of an arbitrary written word of generators.
inline Poly normal_order(const std::vector<Gen>& word, int order,
                         RewriteStrategy strategy = RewriteStrategy::LeftToRight) {
    Terms0 acc;
    acc.emplace(Monomial::unit(), Rational(1));
    if (strategy == RewriteStrategy::LeftToRight) {
        for (const Gen& g : word) {
            Terms0 next;
            for (const auto& [m, c] : acc)
                for (const auto& [mp, cp] : detail::mul_mono_gen(m, g))
                    detail::add_to(next, mp, c * cp);
            acc = std::move(next);
        }
    } else {
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            Terms0 next;
            for (const auto& [m, c] : acc)
                for (const auto& [mp, cp] : detail::mul_gen_mono(*it, m))
                    detail::add_to(next, mp, c * cp);
            acc = std::move(next);
        }
    }
    Poly out(order);
    for (auto& [m, c] : acc) out.add_term(0, m, c);
    return out;
}

// Lie bracket of basis generators as a series element.
inline Poly bracket(const Gen& a, const Gen& b, int order) {
    Poly out(order);
    if (auto r = bracket_gen(a, b)) out.add_term(0, Monomial(r->second), r->first);
    return out;
}

// Counit on U(L)[[t]]: kills every generator, so only the coefficients of
// the unit monomial survive (a scalar series in t).
inline Poly eps(const Poly& x) {
    Poly out(x.order());
    for (const auto& [k, c] : x.terms())
        if (k.mono.empty()) out.add_term(k.tdeg, k.mono, c);
    return out;
}

// Standard antipode: anti-automorphism with S0(X) = -X on generators, i.e.
// reverse the word, normal-order, and apply the sign (-1)^length.
inline Poly s0(const Poly& x) {
    Poly out(x.order());
    for (const auto& [k, c] : x.terms()) {
        std::vector<Gen> letters = k.mono.letters();
        std::vector<Gen> rev(letters.rbegin(), letters.rend());
        Poly nf = normal_order(rev, x.order());
        const Rational sign = (letters.size() % 2 == 0) ? Rational(1) : Rational(-1);
        for (const auto& [nk, nc] : nf.terms()) out.add_term(k.tdeg, nk.mono, c * sign * nc);
    }
    return out;
}

// Human-readable description of the first term where two series differ.
inline std::string first_diff(const Poly& a, const Poly& b) {
    if (a.order() != b.order())
        return "orders differ: " + std::to_string(a.order()) + " vs " +
               std::to_string(b.order());
    auto ia = a.terms().begin(), ib = b.terms().begin();
    while (ia != a.terms().end() || ib != b.terms().end()) {
        if (ib == b.terms().end() ||
            (ia != a.terms().end() && ia->first < ib->first)) {
            return "t^" + std::to_string(ia->first.tdeg) + " " +
                   mono_string(ia->first.mono) + ": lhs=" + to_string(ia->second) +
                   ", rhs=0";
        }
        if (ia == a.terms().end() || ib->first < ia->first) {
            return "t^" + std::to_string(ib->first.tdeg) + " " +
                   mono_string(ib->first.mono) + ": lhs=0, rhs=" +
                   to_string(ib->second);
        }
        if (ia->second != ib->second) {
            return "t^" + std::to_string(ia->first.tdeg) + " " +
                   mono_string(ia->first.mono) + ": lhs=" + to_string(ia->second) +
                   ", rhs=" + to_string(ib->second);
        }
        ++ia;
        ++ib;
    }
    return "equal";
}

// ------------------------------------------------------------------------

// All generators with |index2| <= range2, in PBW order.
inline std::vector<Gen> generator_grid(std::int64_t range2) {
    std::vector<Gen> out;
    for (Family f : {Family::M, Family::Y, Family::N, Family::L}) {
        const std::int64_t start = (f == Family::Y) ? -(range2 | 1) : -(range2 & ~1ll);
        for (std::int64_t i = start; i <= range2; i += 2)
            if (i >= -range2) out.push_back(Gen{f, i});
    }
    return out;
}

// Exhaustive Jacobi-identity verification over all unordered basis triples
// with |index2| <= range2.  Exact: the cyclic sum must vanish identically.
inline Report jacobi_check(std::int64_t range2, const CheckSink& sink = nullptr) {
    Report report(sink);
    const std::vector<Gen> gens = generator_grid(range2);
    long triples = 0;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i; j < gens.size(); ++j)
            for (std::size_t k = j; k < gens.size(); ++k) {
                ++triples;
                // [x,[y,z]] + [y,[z,x]] + [z,[x,y]]
                Terms0 sum;
                auto cyc = [&sum](const Gen& x, const Gen& y, const Gen& z) {
                    if (auto inner = bracket_gen(y, z))
                        if (auto outer = bracket_gen(x, inner->second))
                            detail::add_to(sum, Monomial(outer->second),
                                           inner->first * outer->first);
                };
                cyc(gens[i], gens[j], gens[k]);
                cyc(gens[j], gens[k], gens[i]);
                cyc(gens[k], gens[i], gens[j]);
                if (!sum.empty()) {
                    report.add("jacobi " + gen_string(gens[i]) + "," +
                                   gen_string(gens[j]) + "," + gen_string(gens[k]),
                               false, "cyclic sum nonzero");
                    return report;
                }
            }
    report.add("jacobi |index2|<=" + std::to_string(range2), true,
               std::to_string(triples) + " triples, cyclic sum identically 0");
    return report;
}

} // namespace esvq

#pragma once

// Tensor powers U^{(x)2}[[t]] and U^{(x)3}[[t]] truncated at t^N, with
// componentwise (slot-by-slot) multiplication, slot embeddings 2->3, the
// standard coproduct, and the slot maps needed for coassociativity/antipode
// checks.  Terms are t^d * (m_1 (x) ... (x) m_k) with rational coefficients
// and the same canonical-form invariants as Poly.

#include <array>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "esvq/errors.hpp"
#include "esvq/poly.hpp"

namespace esvq {

class Tensor {
public:
    struct Key {
        int                   tdeg;
        std::vector<Monomial> slots;
        friend bool operator<(const Key& a, const Key& b) {
            if (a.tdeg != b.tdeg) return a.tdeg < b.tdeg;
            return a.slots < b.slots;
        }
        friend bool operator==(const Key& a, const Key& b) {
            return a.tdeg == b.tdeg && a.slots == b.slots;
        }
    };
    using TermMap = std::map<Key, Rational>;

    Tensor(int arity, int order) : arity_(arity), order_(order) {
        if (arity != 2 && arity != 3)
            throw ArityMismatch("tensor arity must be 2 or 3, got " +
                                std::to_string(arity));
        if (order < 0) throw ConfigError("truncation order must be >= 0");
    }

    static Tensor unit(int arity, int order) {
        Tensor t(arity, order);
        t.add_term(0, std::vector<Monomial>(arity), Rational(1));
        return t;
    }

    // a (x) b — all cross terms; t-degrees add and truncate.
    static Tensor of(const Poly& a, const Poly& b) {
        if (a.order() != b.order()) throw OrderMismatch("tensor factor orders differ");
        Tensor t(2, a.order());
        for (const auto& [ka, ca] : a.terms())
            for (const auto& [kb, cb] : b.terms())
                t.add_term(ka.tdeg + kb.tdeg, {ka.mono, kb.mono}, ca * cb);
        return t;
    }

    static Tensor of(const Poly& a, const Poly& b, const Poly& c) {
        if (a.order() != b.order() || b.order() != c.order())
            throw OrderMismatch("tensor factor orders differ");
        Tensor t(3, a.order());
        for (const auto& [ka, ca] : a.terms())
            for (const auto& [kb, cb] : b.terms())
                for (const auto& [kc, cc] : c.terms())
                    t.add_term(ka.tdeg + kb.tdeg + kc.tdeg,
                               {ka.mono, kb.mono, kc.mono}, ca * cb * cc);
        return t;
    }

    int arity() const { return arity_; }
    int order() const { return order_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(int tdeg, std::vector<Monomial> slots, const Rational& c) {
        if (static_cast<int>(slots.size()) != arity_)
            throw ArityMismatch("term slot count does not match tensor arity");
        if (c == 0) return;
        if (tdeg < 0) throw Error("negative t-degree");
        if (tdeg > order_) return;
        Key key{tdeg, std::move(slots)};
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coeff(int tdeg, const std::vector<Monomial>& slots) const {
        auto it = terms_.find(Key{tdeg, slots});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Tensor t_slice(int d) const {
        Tensor out(arity_, order_);
        for (const auto& [k, c] : terms_)
            if (k.tdeg == d) out.add_term(d, k.slots, c);
        return out;
    }

    Tensor shifted_t(int k) const {
        if (k < 0) throw Error("negative t-shift");
        Tensor out(arity_, order_);
        for (const auto& [key, c] : terms_) out.add_term(key.tdeg + k, key.slots, c);
        return out;
    }

    Tensor& operator+=(const Tensor& o) {
        require_compatible(o);
        for (const auto& [k, c] : o.terms_) add_term(k.tdeg, k.slots, c);
        return *this;
    }
    Tensor& operator-=(const Tensor& o) {
        require_compatible(o);
        for (const auto& [k, c] : o.terms_) add_term(k.tdeg, k.slots, -c);
        return *this;
    }
    Tensor& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, v] : terms_) v *= c;
        return *this;
    }

    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend Tensor operator*(Tensor a, const Rational& c) { return a *= c; }
    friend Tensor operator*(const Rational& c, Tensor a) { return a *= c; }
    friend Tensor operator-(const Tensor& a) {
        Tensor out(a.arity_, a.order_);
        for (const auto& [k, c] : a.terms_) out.terms_.emplace(k, -c);
        return out;
    }

    // Componentwise product: slot i of the result collects the normal-ordered
    // product of the slot-i monomials; cross terms over every slot expansion.
    friend Tensor operator*(const Tensor& a, const Tensor& b) {
        a.require_compatible(b);
        Tensor out(a.arity_, a.order_);
        std::vector<const Terms0*> slot_products(a.arity_);
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                const int d = ka.tdeg + kb.tdeg;
                if (d > a.order_) continue;
                for (int i = 0; i < a.arity_; ++i)
                    slot_products[i] = &detail::mono_mul(ka.slots[i], kb.slots[i]);
                const Rational c0 = ca * cb;
                // expand the cross product of the per-slot normal forms
                std::vector<Monomial> slots(a.arity_);
                if (a.arity_ == 2) {
                    for (const auto& [m0, c1] : *slot_products[0])
                        for (const auto& [m1, c2] : *slot_products[1]) {
                            slots[0] = m0;
                            slots[1] = m1;
                            out.add_term(d, slots, c0 * c1 * c2);
                        }
                } else {
                    for (const auto& [m0, c1] : *slot_products[0])
                        for (const auto& [m1, c2] : *slot_products[1])
                            for (const auto& [m2, c3] : *slot_products[2]) {
                                slots[0] = m0;
                                slots[1] = m1;
                                slots[2] = m2;
                                out.add_term(d, slots, c0 * c1 * c2 * c3);
                            }
                }
            }
        }
        return out;
    }

    friend bool operator==(const Tensor& a, const Tensor& b) {
        return a.arity_ == b.arity_ && a.order_ == b.order_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

private:
    void require_compatible(const Tensor& o) const {
        if (arity_ != o.arity_)
            throw ArityMismatch("tensor arities differ: " + std::to_string(arity_) +
                                " vs " + std::to_string(o.arity_));
        if (order_ != o.order_)
            throw OrderMismatch("tensor orders differ: " + std::to_string(order_) +
                                " vs " + std::to_string(o.order_));
    }

    int     arity_;
    int     order_;
    TermMap terms_;
};

// ------------------------------------------------------------------------
// Slot plumbing.

// Embeds an arity-2 tensor into arity 3, sending slot 0 -> slot_a and
// slot 1 -> slot_b (slot_a < slot_b), unit in the remaining slot.
inline Tensor embed(const Tensor& t, int slot_a, int slot_b) {
    if (t.arity() != 2) throw ArityMismatch("embed() expects an arity-2 tensor");
    if (!(0 <= slot_a && slot_a < slot_b && slot_b <= 2))
        throw ArityMismatch("embed(): invalid slot pair");
    Tensor out(3, t.order());
    for (const auto& [k, c] : t.terms()) {
        std::vector<Monomial> slots(3);
        slots[slot_a] = k.slots[0];
        slots[slot_b] = k.slots[1];
        out.add_term(k.tdeg, std::move(slots), c);
    }
    return out;
}

// Applies a linear map (given on monomials, Poly-valued, possibly carrying
// t-degrees) to one slot.
inline Tensor map_slot(const Tensor& t, int slot,
                       const std::function<Poly(const Monomial&)>& f) {
    if (slot < 0 || slot >= t.arity()) throw ArityMismatch("map_slot(): bad slot");
    Tensor out(t.arity(), t.order());
    for (const auto& [k, c] : t.terms()) {
        const Poly img = f(k.slots[slot]);
        if (img.order() != t.order()) throw OrderMismatch("map_slot(): image order differs");
        for (const auto& [ik, ic] : img.terms()) {
            const int d = k.tdeg + ik.tdeg;
            if (d > t.order()) continue;
            std::vector<Monomial> slots = k.slots;
            slots[slot] = ik.mono;
            out.add_term(d, std::move(slots), c * ic);
        }
    }
    return out;
}

// Replaces one slot of an arity-2 tensor by an arity-2 tensor-valued map of
// its monomial ((Delta (x) Id) and (Id (x) Delta) plumbing).
inline Tensor coexpand_slot(const Tensor& t, int slot,
                            const std::function<Tensor(const Monomial&)>& f) {
    if (t.arity() != 2) throw ArityMismatch("coexpand_slot() expects arity 2");
    if (slot != 0 && slot != 1) throw ArityMismatch("coexpand_slot(): bad slot");
    Tensor out(3, t.order());
    for (const auto& [k, c] : t.terms()) {
        const Tensor img = f(k.slots[slot]);
        if (img.arity() != 2) throw ArityMismatch("coexpand_slot(): image arity != 2");
        if (img.order() != t.order())
            throw OrderMismatch("coexpand_slot(): image order differs");
        for (const auto& [ik, ic] : img.terms()) {
            const int d = k.tdeg + ik.tdeg;
            if (d > t.order()) continue;
            std::vector<Monomial> slots(3);
            if (slot == 0) {
                slots[0] = ik.slots[0];
                slots[1] = ik.slots[1];
                slots[2] = k.slots[1];
            } else {
                slots[0] = k.slots[0];
                slots[1] = ik.slots[0];
                slots[2] = ik.slots[1];
            }
            out.add_term(d, std::move(slots), c * ic);
        }
    }
    return out;
}

// Counit applied to one slot of an arity-2 tensor (result lives in U[[t]]).
inline Poly eps_slot(const Tensor& t, int slot) {
    if (t.arity() != 2) throw ArityMismatch("eps_slot() expects arity 2");
    if (slot != 0 && slot != 1) throw ArityMismatch("eps_slot(): bad slot");
    Poly out(t.order());
    for (const auto& [k, c] : t.terms())
        if (k.slots[slot].empty()) out.add_term(k.tdeg, k.slots[1 - slot], c);
    return out;
}

// Counit applied to one slot of an arity-3 tensor.
inline Tensor eps_slot3(const Tensor& t, int slot) {
    if (t.arity() != 3) throw ArityMismatch("eps_slot3() expects arity 3");
    if (slot < 0 || slot > 2) throw ArityMismatch("eps_slot3(): bad slot");
    Tensor out(2, t.order());
    for (const auto& [k, c] : t.terms()) {
        if (!k.slots[slot].empty()) continue;
        std::vector<Monomial> slots;
        for (int i = 0; i < 3; ++i)
            if (i != slot) slots.push_back(k.slots[i]);
        out.add_term(k.tdeg, std::move(slots), c);
    }
    return out;
}

// Multiplication map m: a (x) b -> a*b on an arity-2 tensor.
inline Poly mul_slots(const Tensor& t) {
    if (t.arity() != 2) throw ArityMismatch("mul_slots() expects arity 2");
    Poly out(t.order());
    for (const auto& [k, c] : t.terms())
        for (const auto& [m, cm] : detail::mono_mul(k.slots[0], k.slots[1]))
            out.add_term(k.tdeg, m, c * cm);
    return out;
}

inline std::string slots_string(const std::vector<Monomial>& slots) {
    std::string s;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (i) s += " (x) ";
        s += mono_string(slots[i]);
    }
    return s;
}

inline std::string first_diff(const Tensor& a, const Tensor& b) {
    if (a.arity() != b.arity()) return "arities differ";
    if (a.order() != b.order()) return "orders differ";
    auto ia = a.terms().begin(), ib = b.terms().begin();
    while (ia != a.terms().end() || ib != b.terms().end()) {
        if (ib == b.terms().end() ||
            (ia != a.terms().end() && ia->first < ib->first)) {
            return "t^" + std::to_string(ia->first.tdeg) + " " +
                   slots_string(ia->first.slots) + ": lhs=" + to_string(ia->second) +
                   ", rhs=0";
        }
        if (ia == a.terms().end() || ib->first < ia->first) {
            return "t^" + std::to_string(ib->first.tdeg) + " " +
                   slots_string(ib->first.slots) + ": lhs=0, rhs=" +
                   to_string(ib->second);
        }
        if (ia->second != ib->second) {
            return "t^" + std::to_string(ia->first.tdeg) + " " +
                   slots_string(ia->first.slots) + ": lhs=" + to_string(ia->second) +
                   ", rhs=" + to_string(ib->second);
        }
        ++ia;
        ++ib;
    }
    return "equal";
}

// ------------------------------------------------------------------------
// Standard (undeformed) coproduct: Delta0(X) = X (x) 1 + 1 (x) X on
// generators, extended as an algebra morphism.  On a PBW monomial the slot
// factors stay in PBW order, so the expansion is purely binomial:
//   Delta0(g1^{k1}...gr^{kr}) = prod_i sum_j C(ki,j) g_i^j (x) g_i^{ki-j}.

namespace detail {

using Terms2 = std::map<std::pair<Monomial, Monomial>, Rational>;

struct MonoHash {
    std::size_t operator()(const Monomial& m) const { return hash_value(m); }
};

inline const Terms2& delta0_mono(const Monomial& m) {
    static std::unordered_map<Monomial, Terms2, MonoHash> cache;
    static std::mutex mtx;

    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
    }

    Terms2 acc;
    acc.emplace(std::make_pair(Monomial::unit(), Monomial::unit()), Rational(1));
    for (const auto& f : m.factors()) {
        // Pascal row C(k, j)
        std::vector<Rational> binom(f.exp + 1);
        binom[0] = 1;
        for (int j = 1; j <= f.exp; ++j)
            binom[j] = binom[j - 1] * (f.exp - j + 1) / j;
        Terms2 next;
        for (const auto& [slots, c] : acc) {
            for (int j = 0; j <= f.exp; ++j) {
                Monomial a = slots.first;
                Monomial b = slots.second;
                // appending in increasing PBW order: no reordering needed
                if (j > 0) {
                    auto fa = a.factors();
                    fa.push_back({f.g, j});
                    a = Monomial(std::move(fa));
                }
                if (f.exp - j > 0) {
                    auto fb = b.factors();
                    fb.push_back({f.g, f.exp - j});
                    b = Monomial(std::move(fb));
                }
                auto key = std::make_pair(std::move(a), std::move(b));
                auto it = next.find(key);
                if (it == next.end())
                    next.emplace(std::move(key), c * binom[j]);
                else
                    it->second += c * binom[j];
            }
        }
        acc = std::move(next);
    }

    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(m, std::move(acc)).first->second;
}

} // namespace detail

// Delta0 extended linearly over terms (t is grouplike-central: degrees pass
// through unchanged).
inline Tensor delta0(const Poly& x) {
    Tensor out(2, x.order());
    for (const auto& [k, c] : x.terms())
        for (const auto& [slots, c2] : detail::delta0_mono(k.mono))
            out.add_term(k.tdeg, {slots.first, slots.second}, c * c2);
    return out;
}

} // namespace esvq

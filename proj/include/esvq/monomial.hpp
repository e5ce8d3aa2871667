#pragma once

// PBW monomials: words g1^{k1} g2^{k2} ... gr^{kr} with g1 < g2 < ... < gr in
// the fixed generator order (M < Y < N < L, index2 ascending) and all
// exponents >= 1.  The empty word is the algebra unit.  Monomials are
// immutable value types; all mutation happens through constructors.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <tuple>
#include <vector>

#include "esvq/errors.hpp"
#include "esvq/generators.hpp"

namespace esvq {

class Monomial {
public:
    struct Factor {
        Gen g;
        int exp;
        friend bool operator==(const Factor& a, const Factor& b) {
            return a.g == b.g && a.exp == b.exp;
        }
        friend bool operator<(const Factor& a, const Factor& b) {
            if (a.g < b.g) return true;
            if (b.g < a.g) return false;
            return a.exp < b.exp;
        }
    };

    Monomial() = default;  // the unit

    explicit Monomial(Gen g, int exp = 1) {
        if (exp < 0) throw Error("negative exponent in monomial");
        if (exp > 0) factors_.push_back({g, exp});
    }

    // Builds from an already sorted factor list (validated).
    explicit Monomial(std::vector<Factor> fs) : factors_(std::move(fs)) {
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (factors_[i].exp < 1) throw Error("monomial exponent must be >= 1");
            if (i > 0 && !(factors_[i - 1].g < factors_[i].g))
                throw Error("monomial factors must be strictly increasing");
        }
    }

    static Monomial unit() { return Monomial(); }

    bool empty() const { return factors_.empty(); }
    std::size_t num_factors() const { return factors_.size(); }
    const std::vector<Factor>& factors() const { return factors_; }

    // Total degree: sum of exponents.
    long degree() const {
        long d = 0;
        for (const auto& f : factors_) d += f.exp;
        return d;
    }

    // The word expanded letter by letter, in PBW order.
    std::vector<Gen> letters() const {
        std::vector<Gen> out;
        out.reserve(static_cast<std::size_t>(degree()));
        for (const auto& f : factors_)
            for (int i = 0; i < f.exp; ++i) out.push_back(f.g);
        return out;
    }

    // Right-multiplication by a generator that is >= the last factor
    // (pure append/merge; precondition checked).
    Monomial appended(Gen g) const {
        Monomial out = *this;
        if (!out.factors_.empty() && g < out.factors_.back().g)
            throw Error("appended(): generator below monomial tail");
        if (!out.factors_.empty() && out.factors_.back().g == g)
            out.factors_.back().exp += 1;
        else
            out.factors_.push_back({g, 1});
        return out;
    }

    // Monomial with one power of the last factor removed.
    Monomial drop_last() const {
        if (factors_.empty()) throw Error("drop_last() on unit monomial");
        Monomial out = *this;
        if (out.factors_.back().exp > 1)
            out.factors_.back().exp -= 1;
        else
            out.factors_.pop_back();
        return out;
    }

    // Left-multiplication by a generator that is <= the first factor.
    Monomial prepended(Gen g) const {
        Monomial out;
        out.factors_.reserve(factors_.size() + 1);
        if (!factors_.empty() && factors_.front().g < g)
            throw Error("prepended(): generator above monomial head");
        if (!factors_.empty() && factors_.front().g == g) {
            out.factors_ = factors_;
            out.factors_.front().exp += 1;
        } else {
            out.factors_.push_back({g, 1});
            out.factors_.insert(out.factors_.end(), factors_.begin(), factors_.end());
        }
        return out;
    }

    // Monomial with one power of the first factor removed.
    Monomial drop_first() const {
        if (factors_.empty()) throw Error("drop_first() on unit monomial");
        Monomial out = *this;
        if (out.factors_.front().exp > 1)
            out.factors_.front().exp -= 1;
        else
            out.factors_.erase(out.factors_.begin());
        return out;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.factors_ == b.factors_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    // Plain lexicographic order on the factor sequence (storage order).
    friend bool operator<(const Monomial& a, const Monomial& b) {
        return a.factors_ < b.factors_;
    }

private:
    std::vector<Factor> factors_;
};

// Convenience: x^k * y^j * ... from an unsorted generator list is NOT built
// here; unsorted words are normal-ordered by the engine (poly.hpp).  This
// helper only packages a sorted run of distinct generators.
inline Monomial monomial_of(std::initializer_list<Monomial::Factor> fs) {
    return Monomial(std::vector<Monomial::Factor>(fs));
}

// Text form "Y_{1/2}*N_0^2"; the unit renders as "1".
inline std::string mono_string(const Monomial& m) {
    if (m.empty()) return "1";
    std::string out;
    for (const auto& f : m.factors()) {
        if (!out.empty()) out += "*";
        out += gen_string(f.g);
        if (f.exp != 1) out += "^" + std::to_string(f.exp);
    }
    return out;
}

// FNV-1a style hash used by the memoization caches.
inline std::size_t hash_value(const Monomial& m) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    for (const auto& f : m.factors()) {
        mix(static_cast<std::uint64_t>(f.g.fam));
        mix(static_cast<std::uint64_t>(f.g.index2));
        mix(static_cast<std::uint64_t>(f.exp));
    }
    return static_cast<std::size_t>(h);
}

} // namespace esvq

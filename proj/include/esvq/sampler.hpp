#pragma once

// Deterministic random sampling of generators, words, monomials and
// polynomials for property-based verification.  Determinism contract: given
// the same seed, the sample stream is identical on every platform and every
// standard library.  std::mt19937_64 has a portable, fully specified output
// sequence; std::uniform_int_distribution does not, so reduction is done here
// with explicit arithmetic instead.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "esvq/monomial.hpp"
#include "esvq/poly.hpp"

namespace esvq {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    // Uniform-ish value in [0, n).  Plain modulo reduction: the bias for the
    // tiny ranges used here (n << 2^64) is immaterial for test sampling and
    // keeps the stream reproducible everywhere.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw Error("Sampler::below(0)");
        return rng_() % n;
    }

    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) throw Error("Sampler::int_in: empty range");
        return lo + static_cast<std::int64_t>(
                        below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool coin() { return below(2) == 1; }

    // Small nonzero rational coefficient: numerator in ±[1, 9], denominator
    // in [1, 4].
    Rational coefficient() {
        const std::int64_t num = int_in(1, 9) * (coin() ? 1 : -1);
        const std::int64_t den = int_in(1, 4);
        return rat(num, den);
    }

    // A generator with |index2| <= range2.  Y indices are forced odd, the
    // other families even (integral), per the parity contract.
    Gen gen(std::int64_t range2) {
        if (range2 < 1) throw Error("Sampler::gen: range2 must be >= 1");
        const int fam = static_cast<int>(below(4));
        if (fam == static_cast<int>(Family::Y)) {
            const std::int64_t top = (range2 % 2 == 0) ? range2 - 1 : range2;
            const std::int64_t count = top + 1;  // odds in [-top, top]
            const std::int64_t k = static_cast<std::int64_t>(below(
                static_cast<std::uint64_t>(count)));
            return Gen{Family::Y, -top + 2 * k};
        }
        const std::int64_t top = range2 - (range2 % 2);
        const std::int64_t count = top + 1;  // evens in [-top, top]
        const std::int64_t k = static_cast<std::int64_t>(below(
            static_cast<std::uint64_t>(count)));
        return Gen{static_cast<Family>(fam), -top + 2 * k};
    }

    // An arbitrary-order word of generators (not PBW-sorted), length in
    // [min_len, max_len].
    std::vector<Gen> word(std::int64_t range2, int min_len, int max_len) {
        const int len = static_cast<int>(int_in(min_len, max_len));
        std::vector<Gen> out;
        out.reserve(static_cast<std::size_t>(len));
        for (int i = 0; i < len; ++i) out.push_back(gen(range2));
        return out;
    }

    // A PBW-sorted monomial of total degree in [0, max_degree].
    Monomial monomial(std::int64_t range2, int max_degree) {
        const int degree = static_cast<int>(below(
            static_cast<std::uint64_t>(max_degree) + 1));
        std::vector<Gen> letters;
        letters.reserve(static_cast<std::size_t>(degree));
        for (int i = 0; i < degree; ++i) letters.push_back(gen(range2));
        std::sort(letters.begin(), letters.end());
        std::vector<Monomial::Factor> factors;
        for (const Gen& g : letters) {
            if (!factors.empty() && factors.back().g == g) {
                ++factors.back().exp;
            } else {
                factors.push_back({g, 1});
            }
        }
        return Monomial(std::move(factors));
    }

    // A polynomial with up to max_terms terms, each a random monomial times a
    // random t-power in [0, order] and a small rational coefficient.  Terms
    // may collide or cancel; the result is canonical like any Poly.
    Poly poly(std::int64_t range2, int max_degree, int max_terms, int order) {
        Poly out = Poly::zero(order);
        const int terms = static_cast<int>(int_in(1, max_terms));
        for (int i = 0; i < terms; ++i) {
            const int tdeg = static_cast<int>(below(
                static_cast<std::uint64_t>(order) + 1));
            out += Poly::of_mono(monomial(range2, max_degree), order, tdeg,
                                 coefficient());
        }
        return out;
    }

private:
    std::mt19937_64 rng_;
};

} // namespace esvq

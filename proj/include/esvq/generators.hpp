#pragma once

// Generators of the extended Schrodinger-Virasoro Lie algebra and their
// structure constants.  The algebra is spanned by L_n, M_n, N_n (n integer)
// and Y_p (p half-odd-integer) with brackets
//
//   [L_m, L_n] = (n-m) L_{m+n}        [L_m, N_n] = n N_{m+n}
//   [L_m, M_n] = n M_{m+n}            [L_n, Y_p] = (p - n/2) Y_{p+n}
//   [N_m, Y_p] = Y_{m+p}              [N_m, M_n] = 2 M_{m+n}
//   [Y_p, Y_q] = (q-p) M_{p+q}        [M,Y] = [N,N] = [M,M] = 0
//
// Indices are stored doubled (index2 = 2*index) so that every index is an
// int64_t: L/M/N carry even index2, Y carries odd index2.  Index sums are
// overflow-checked.

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>

#include "esvq/errors.hpp"
#include "esvq/rational.hpp"

namespace esvq {

// Enum values double as the PBW family rank: M < Y < N < L.
enum class Family : std::uint8_t { M = 0, Y = 1, N = 2, L = 3 };

inline char family_letter(Family f) {
    switch (f) {
        case Family::M: return 'M';
        case Family::Y: return 'Y';
        case Family::N: return 'N';
        case Family::L: return 'L';
    }
    return '?';
}

inline bool index2_parity_ok(Family f, std::int64_t index2) {
    const bool odd = (index2 % 2) != 0;
    return (f == Family::Y) ? odd : !odd;
}

// A basis generator; `index2` is twice the algebra index.
struct Gen {
    Family       fam;
    std::int64_t index2;

    friend bool operator==(const Gen& a, const Gen& b) {
        return a.fam == b.fam && a.index2 == b.index2;
    }
    friend bool operator!=(const Gen& a, const Gen& b) { return !(a == b); }
    // PBW total order: family rank first, then index2 ascending.
    friend bool operator<(const Gen& a, const Gen& b) {
        return std::tie(a.fam, a.index2) < std::tie(b.fam, b.index2);
    }
};

// Checked constructor: rejects wrong index parity.
inline Gen generator(Family f, std::int64_t index2) {
    if (!index2_parity_ok(f, index2))
        throw ParityError(std::string("generator ") + family_letter(f) +
                          " requires index2 of " +
                          (f == Family::Y ? "odd" : "even") + " parity, got " +
                          std::to_string(index2));
    return Gen{f, index2};
}

inline Gen L(std::int64_t n) { return generator(Family::L, 2 * n); }
inline Gen M(std::int64_t n) { return generator(Family::M, 2 * n); }
inline Gen N(std::int64_t n) { return generator(Family::N, 2 * n); }
// Y_(num2/2): argument is the doubled (odd) index.
inline Gen Y2(std::int64_t num2) { return generator(Family::Y, num2); }

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw OverflowError("generator index sum overflows int64 (" +
                            std::to_string(a) + " + " + std::to_string(b) + ")");
    return out;
}

// Human-readable subscript: integers for L/M/N, halves like "3/2" for Y.
inline std::string index_string(const Gen& g) {
    if (g.fam == Family::Y) return std::to_string(g.index2) + "/2";
    return std::to_string(g.index2 / 2);
}

inline std::string gen_string(const Gen& g) {
    std::string idx = index_string(g);
    if (idx.size() == 1) return std::string(1, family_letter(g.fam)) + "_" + idx;
    return std::string(1, family_letter(g.fam)) + "_{" + idx + "}";
}

// Lie bracket of two basis generators.  The result is always a rational
// multiple of a single generator; nullopt encodes zero (also returned when
// the coefficient happens to vanish, so callers never see explicit zeros).
inline std::optional<std::pair<Rational, Gen>> bracket_gen(const Gen& a, const Gen& b) {
    using F = Family;
    const auto nonzero = [](Rational c, Gen g) -> std::optional<std::pair<Rational, Gen>> {
        if (c == 0) return std::nullopt;
        return std::make_pair(std::move(c), g);
    };

    // Same-family cases have antisymmetric coefficient formulas.
    if (a.fam == F::L && b.fam == F::L)  // (n-m) L_{m+n}
        return nonzero(Rational(Int(b.index2) - Int(a.index2), Int(2)),
                       Gen{F::L, checked_add(a.index2, b.index2)});
    if (a.fam == F::Y && b.fam == F::Y)  // (q-p) M_{p+q}
        return nonzero(Rational(Int(b.index2) - Int(a.index2), Int(2)),
                       Gen{F::M, checked_add(a.index2, b.index2)});
    if (a.fam == b.fam) return std::nullopt;  // [M,M] = [N,N] = 0

    // Cross-family: table below covers fam(a) > fam(b) in PBW rank
    // (L·*, N·M, N·Y); the opposite orientation flips the sign.
    if (a.fam < b.fam) {
        auto r = bracket_gen(b, a);
        if (!r) return std::nullopt;
        return std::make_pair(-r->first, r->second);
    }
    switch (a.fam) {
        case F::L:
            if (b.fam == F::N || b.fam == F::M)  // n N_{m+n} / n M_{m+n}
                return nonzero(Rational(Int(b.index2), Int(2)),
                               Gen{b.fam, checked_add(a.index2, b.index2)});
            // [L_n, Y_p] = (p - n/2) Y_{p+n}
            return nonzero(Rational(Int(b.index2) * 2 - Int(a.index2), Int(4)),
                           Gen{F::Y, checked_add(a.index2, b.index2)});
        case F::N:
            if (b.fam == F::M)  // 2 M_{m+n}
                return nonzero(Rational(2),
                               Gen{F::M, checked_add(a.index2, b.index2)});
            // [N_m, Y_p] = Y_{m+p}
            return nonzero(Rational(1), Gen{F::Y, checked_add(a.index2, b.index2)});
        case F::Y:  // [Y, M] = 0
        case F::M:
            return std::nullopt;
    }
    return std::nullopt;
}

} // namespace esvq

#pragma once

// Recursive-descent parser for algebra expressions.
//
//   expr      := ['-'] term (('+'|'-') term)*
//   term      := factor ('*' factor)*
//   factor    := atom ('^' uint)?
//   atom      := generator | rational | 't' | '(' expr ')'
//   generator := ('L'|'M'|'N'|'Y') index
//   index     := '[' int ('/' uint)? ']'            bracket style, e.g. L[1], Y[1/2]
//              | '_' '{' int ('/' uint)? '}'        rendered style, e.g. L_{-1}, Y_{1/2}
//              | '_' int                            rendered style, e.g. L_3
//   rational  := uint ('/' uint)?
//
// Whitespace is insignificant everywhere outside tokens.  Products are built
// in written order and normal-ordered by the engine.  The rendered style and
// the optional leading minus form a strict superset of the bracket grammar so
// that parse(render_text(x)) == x for every canonical x.
//
// Error contract: malformed input throws ParseError carrying the byte offset;
// parity violations inside generator indices (e.g. L[1/2], Y[1]) are reported
// the same way.  An exponent on 't' beyond the truncation order is legal and
// yields zero.

#include <cctype>
#include <limits>
#include <string>
#include <string_view>
#include <utility>

#include "esvq/poly.hpp"

namespace esvq {
namespace detail {

class Parser {
public:
    Parser(std::string_view src, int order) : s_(src), order_(order) {
        if (order < 0) throw ConfigError("truncation order must be >= 0");
    }

    Poly parse() {
        Poly out = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) fail(pos_, "unexpected trailing input");
        return out;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
    int order_;

    static constexpr int kMaxExponent = 10000;

    [[noreturn]] void fail(std::size_t where, const std::string& msg) const {
        throw ParseError(where, msg);
    }

    void skip_ws() {
        while (pos_ < s_.size() &&
               std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool try_consume(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != c)
            fail(pos_, std::string("expected '") + c + "'");
        ++pos_;
    }

    Poly parse_expr() {
        skip_ws();
        Poly out = try_consume('-') ? Rational(-1) * parse_term() : parse_term();
        for (;;) {
            skip_ws();
            if (try_consume('+')) {
                out += parse_term();
            } else if (try_consume('-')) {
                out -= parse_term();
            } else {
                break;
            }
        }
        return out;
    }

    Poly parse_term() {
        Poly out = parse_factor();
        while (try_consume('*')) out = out * parse_factor();
        return out;
    }

    Poly parse_factor() {
        skip_ws();
        if (pos_ >= s_.size()) fail(pos_, "expected expression");
        const char c = s_[pos_];

        if (c == 'L' || c == 'M' || c == 'N' || c == 'Y') {
            const Gen g = parse_generator();
            const int k = parse_optional_exponent();
            return Poly::of_mono(Monomial(g, k), order_);
        }
        if (c == 't') {
            ++pos_;
            const int k = parse_optional_exponent();
            if (k > order_) return Poly::zero(order_);  // truncates away
            return Poly::scalar(Rational(1), order_, k);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const Rational r = parse_rational();
            const int k = parse_optional_exponent();
            Rational v(1);
            for (int i = 0; i < k; ++i) v *= r;
            return Poly::scalar(v, order_);
        }
        if (c == '(') {
            ++pos_;
            Poly inner = parse_expr();
            expect(')');
            const int k = parse_optional_exponent();
            return pow_poly(std::move(inner), k);
        }
        fail(pos_, "expected generator, rational, 't' or '('");
    }

    Poly pow_poly(Poly base, int k) const {
        Poly acc = Poly::one(order_);
        while (k > 0) {
            if (k & 1) acc = acc * base;
            k >>= 1;
            if (k > 0) base = base * base;
        }
        return acc;
    }

    // Digits -> arbitrary-precision integer.
    Int parse_digits() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() &&
               std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (pos_ == start) fail(start, "expected digits");
        return Int(std::string(s_.substr(start, pos_ - start)));
    }

    Int parse_signed_digits() {
        skip_ws();
        const bool neg = try_consume('-');
        Int v = parse_digits();
        return neg ? Int(-v) : v;
    }

    int parse_optional_exponent() {
        if (!try_consume('^')) return 1;
        skip_ws();
        const std::size_t where = pos_;
        const Int k = parse_digits();
        if (k > kMaxExponent) fail(where, "exponent too large");
        return k.convert_to<int>();
    }

    Rational parse_rational() {
        const Int num = parse_digits();
        if (try_consume('/')) {
            const std::size_t where = pos_;
            const Int den = parse_digits();
            if (den == 0) fail(where, "zero denominator");
            return Rational(num) / Rational(den);
        }
        return Rational(num);
    }

    // num/den with den 1 or 2, as it appears inside a generator index.
    std::pair<Int, Int> parse_index_fraction() {
        const Int num = parse_signed_digits();
        if (try_consume('/')) {
            const std::size_t where = pos_;
            const Int den = parse_digits();
            if (den != 1 && den != 2) fail(where, "index denominator must be 1 or 2");
            return {num, den};
        }
        return {num, Int(1)};
    }

    Gen parse_generator() {
        const std::size_t where = pos_;
        const char fam_c = s_[pos_++];
        Family fam = Family::L;
        switch (fam_c) {
            case 'L': fam = Family::L; break;
            case 'M': fam = Family::M; break;
            case 'N': fam = Family::N; break;
            case 'Y': fam = Family::Y; break;
            default: fail(where, "expected generator letter");
        }
        skip_ws();
        Int num(0), den(1);
        if (try_consume('[')) {
            std::tie(num, den) = parse_index_fraction();
            expect(']');
        } else if (try_consume('_')) {
            if (try_consume('{')) {
                std::tie(num, den) = parse_index_fraction();
                expect('}');
            } else {
                num = parse_signed_digits();
            }
        } else {
            fail(pos_, "expected '[' or '_' after generator letter");
        }

        const Int index2 = (den == 1) ? Int(num * 2) : num;
        static const Int kMax(std::numeric_limits<std::int64_t>::max());
        static const Int kMin(std::numeric_limits<std::int64_t>::min());
        if (index2 > kMax || index2 < kMin)
            fail(where, "generator index out of range");
        try {
            return generator(fam, index2.convert_to<std::int64_t>());
        } catch (const ParityError& e) {
            fail(where, e.what());
        }
    }
};

} // namespace detail

// Parses `src` into a normal-ordered polynomial truncated at `order`.
inline Poly parse_expression(std::string_view src, int order) {
    return detail::Parser(src, order).parse();
}

} // namespace esvq

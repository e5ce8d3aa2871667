#pragma once

// Rendering of polynomials and tensors to text, JSON and LaTeX.
//
// Term ordering is deterministic per format:
//   - text: ascending t-degree, then descending total monomial degree, then
//     descending per-slot degree vector, then ascending lexicographic
//     comparison of the monomial tuple (the conventional reading order,
//     e.g. "L_1 (x) 1 + 1 (x) L_1").
//   - JSON and LaTeX: ascending (t-degree, lexicographic monomial), i.e. the
//     internal storage order, for bit-exact reproducibility.
//
// JSON schema: {"order": N, "terms": [{"t": k, "monos": [slot...],
// "coeff": "num/den"}]} where each slot is an array of
// [{"fam": "L", "num": 3, "den": 1}, exponent] pairs and a plain polynomial
// renders with exactly one slot.  Coefficients and generator indices are
// reduced fractions rendered with explicit denominators.

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

#include "esvq/poly.hpp"
#include "esvq/tensor.hpp"

namespace esvq {

enum class RenderFormat { Text, Json, Latex };

namespace detail {

// --- shared term view -------------------------------------------------------

struct TermView {
    int tdeg = 0;
    std::vector<Monomial> slots;  // one entry for Poly, arity entries for Tensor
    Rational coeff;
};

inline std::vector<TermView> term_views(const Poly& x) {
    std::vector<TermView> out;
    out.reserve(x.terms().size());
    for (const auto& [key, c] : x.terms())
        out.push_back({key.tdeg, {key.mono}, c});
    return out;
}

inline std::vector<TermView> term_views(const Tensor& x) {
    std::vector<TermView> out;
    out.reserve(x.terms().size());
    for (const auto& [key, c] : x.terms())
        out.push_back({key.tdeg, key.slots, c});
    return out;
}

// Display order: t ascending, total degree descending, per-slot degree vector
// descending (lexicographically), monomial tuple ascending.
inline void sort_for_display(std::vector<TermView>& views) {
    std::sort(views.begin(), views.end(),
              [](const TermView& a, const TermView& b) {
                  if (a.tdeg != b.tdeg) return a.tdeg < b.tdeg;
                  long da = 0, db = 0;
                  for (const auto& m : a.slots) da += m.degree();
                  for (const auto& m : b.slots) db += m.degree();
                  if (da != db) return da > db;
                  for (std::size_t i = 0; i < a.slots.size(); ++i) {
                      const long sa = a.slots[i].degree();
                      const long sb = b.slots[i].degree();
                      if (sa != sb) return sa > sb;
                  }
                  for (std::size_t i = 0; i < a.slots.size(); ++i) {
                      if (a.slots[i] < b.slots[i]) return true;
                      if (b.slots[i] < a.slots[i]) return false;
                  }
                  return false;
              });
}

// --- text -------------------------------------------------------------------

inline std::string term_body_text(const TermView& v) {
    std::string body;
    if (v.slots.size() == 1) {
        if (!v.slots[0].empty()) body = mono_string(v.slots[0]);
    } else {
        for (const auto& m : v.slots) {
            if (!body.empty()) body += " (x) ";
            body += mono_string(m);
        }
    }
    if (v.tdeg > 0) {
        if (!body.empty()) body += "*";
        body += (v.tdeg == 1) ? "t" : "t^" + std::to_string(v.tdeg);
    }
    return body;
}

inline std::string render_terms_text(std::vector<TermView> views) {
    if (views.empty()) return "0";
    sort_for_display(views);
    std::string out;
    for (const TermView& v : views) {
        const bool neg = v.coeff < 0;
        const Rational mag = neg ? Rational(-v.coeff) : v.coeff;
        std::string body = term_body_text(v);
        std::string piece;
        if (body.empty()) {
            piece = to_string(mag);
        } else if (mag == 1) {
            piece = body;
        } else {
            piece = to_string(mag) + "*" + body;
        }
        if (out.empty()) {
            out = (neg ? "-" : "") + piece;
        } else {
            out += (neg ? " - " : " + ") + piece;
        }
    }
    return out;
}

// --- JSON -------------------------------------------------------------------

inline nlohmann::ordered_json gen_json(const Gen& g) {
    nlohmann::ordered_json j;
    j["fam"] = std::string(1, family_letter(g.fam));
    if (g.fam == Family::Y) {
        j["num"] = g.index2;
        j["den"] = 2;
    } else {
        j["num"] = g.index2 / 2;
        j["den"] = 1;
    }
    return j;
}

inline nlohmann::ordered_json slot_json(const Monomial& m) {
    auto slot = nlohmann::ordered_json::array();
    for (const auto& f : m.factors()) {
        auto pair = nlohmann::ordered_json::array();
        pair.push_back(gen_json(f.g));
        pair.push_back(f.exp);
        slot.push_back(std::move(pair));
    }
    return slot;
}

inline nlohmann::ordered_json render_terms_json(
    int order, const std::vector<TermView>& views) {
    nlohmann::ordered_json out;
    out["order"] = order;
    auto terms = nlohmann::ordered_json::array();
    for (const TermView& v : views) {  // storage order: (t, lex) ascending
        nlohmann::ordered_json term;
        term["t"] = v.tdeg;
        auto monos = nlohmann::ordered_json::array();
        for (const auto& m : v.slots) monos.push_back(slot_json(m));
        term["monos"] = std::move(monos);
        term["coeff"] = to_fraction_string(v.coeff);
        terms.push_back(std::move(term));
    }
    out["terms"] = std::move(terms);
    return out;
}

// --- LaTeX ------------------------------------------------------------------

inline std::string latex_gen(const Gen& g) {
    return std::string(1, family_letter(g.fam)) + "_{" + index_string(g) + "}";
}

inline std::string latex_mono(const Monomial& m) {
    if (m.empty()) return "1";
    std::string out;
    for (const auto& f : m.factors()) {
        if (!out.empty()) out += " ";
        out += latex_gen(f.g);
        if (f.exp != 1) out += "^{" + std::to_string(f.exp) + "}";
    }
    return out;
}

inline std::string latex_rational(const Rational& c) {
    const Int num = boost::multiprecision::numerator(c);
    const Int den = boost::multiprecision::denominator(c);
    if (den == 1) return num.str();
    return "\\frac{" + num.str() + "}{" + den.str() + "}";
}

inline std::string render_terms_latex(const std::vector<TermView>& views) {
    if (views.empty()) return "0";
    std::string out;
    for (const TermView& v : views) {  // storage order: (t, lex) ascending
        const bool neg = v.coeff < 0;
        const Rational mag = neg ? Rational(-v.coeff) : v.coeff;

        std::string body;
        if (v.slots.size() == 1) {
            if (!v.slots[0].empty()) body = latex_mono(v.slots[0]);
        } else {
            for (const auto& m : v.slots) {
                if (!body.empty()) body += " \\otimes ";
                body += latex_mono(m);
            }
        }
        if (v.tdeg > 0) {
            if (!body.empty()) body += " ";
            body += (v.tdeg == 1) ? "t" : "t^{" + std::to_string(v.tdeg) + "}";
        }

        std::string piece;
        if (body.empty()) {
            piece = latex_rational(mag);
        } else if (mag == 1) {
            piece = body;
        } else {
            piece = latex_rational(mag) + " " + body;
        }
        if (out.empty()) {
            out = (neg ? "-" : "") + piece;
        } else {
            out += (neg ? " - " : " + ") + piece;
        }
    }
    return out;
}

} // namespace detail

inline std::string render_text(const Poly& x) {
    return detail::render_terms_text(detail::term_views(x));
}
inline std::string render_text(const Tensor& x) {
    return detail::render_terms_text(detail::term_views(x));
}

inline nlohmann::ordered_json render_json(const Poly& x) {
    return detail::render_terms_json(x.order(), detail::term_views(x));
}
inline nlohmann::ordered_json render_json(const Tensor& x) {
    return detail::render_terms_json(x.order(), detail::term_views(x));
}

inline std::string render_latex(const Poly& x) {
    return detail::render_terms_latex(detail::term_views(x));
}
inline std::string render_latex(const Tensor& x) {
    return detail::render_terms_latex(detail::term_views(x));
}

template <typename T>
std::string render(const T& x, RenderFormat f) {
    switch (f) {
        case RenderFormat::Text: return render_text(x);
        case RenderFormat::Json: return render_json(x).dump();
        case RenderFormat::Latex: return render_latex(x);
    }
    throw ConfigError("unknown render format");
}

} // namespace esvq

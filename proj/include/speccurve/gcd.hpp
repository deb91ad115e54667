#pragma once

#include <map>

#include "speccurve/bipoly.hpp"
#include "speccurve/unipoly.hpp"

namespace speccurve {

// Monic gcd in Q[var] by the Euclidean algorithm; gcd(0, 0) = 0.
inline UniPoly uni_gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly f = a, g = b;
    while (!g.is_zero()) {
        auto [q, r] = divmod(f, g);
        f = g;
        g = r;
    }
    return f.monic();
}

namespace detail {

// Q[x][y] view: y-exponent -> coefficient in Q[x].
using YView = std::map<int, UniPoly>;

inline YView to_y_view(const BiPoly& p) {
    YView m;
    for (const auto& [e, c] : p.terms())
        m.try_emplace(e.second, UniPoly(Var::x)).first->second.add_term(e.first, c);
    return m;
}

inline BiPoly from_y_view(const YView& m) {
    BiPoly out;
    for (const auto& [ey, cx] : m)
        for (const auto& [ex, c] : cx.terms()) out.add_term(ex, ey, c);
    return out;
}

inline int y_deg(const YView& m) { return m.empty() ? kNegInfDegree : m.rbegin()->first; }

inline UniPoly content_x(const YView& m) {
    UniPoly g(Var::x);
    for (const auto& [ey, cx] : m) g = uni_gcd(g, cx);
    return g;
}

inline YView divide_coeffs(const YView& m, const UniPoly& d) {
    YView out;
    for (const auto& [ey, cx] : m) out.emplace(ey, exact_div(cx, d));
    return out;
}

inline YView primitive_part(const YView& m) {
    if (m.empty()) return m;
    return divide_coeffs(m, content_x(m));
}

inline YView scale(const YView& m, const UniPoly& f) {
    YView out;
    for (const auto& [ey, cx] : m) {
        UniPoly p = cx * f;
        if (!p.is_zero()) out.emplace(ey, p);
    }
    return out;
}

// Pseudo-remainder of f by g in y: lc_y(g)^(deg f - deg g + 1) * f mod g.
inline YView prem_y(YView f, const YView& g) {
    const int dg = y_deg(g);
    const UniPoly& lcg = g.rbegin()->second;
    int e = y_deg(f) - dg + 1;
    while (!f.empty() && y_deg(f) >= dg) {
        const int df = y_deg(f);
        UniPoly s = f.rbegin()->second;
        f = scale(f, lcg);
        for (const auto& [ey, cx] : g) {
            UniPoly prod = cx * s;
            auto it = f.try_emplace(ey + df - dg, UniPoly(Var::x)).first;
            it->second = it->second - prod;
            if (it->second.is_zero()) f.erase(it);
        }
        --e;
    }
    for (; e > 0; --e) f = scale(f, lcg);
    return f;
}

} // namespace detail

// Gcd in Q[x, y] via a primitive polynomial remainder sequence in
// Q[x][y], with univariate content gcds. The result is squarefree-free of
// normalization ambiguity: integer content 1, positive graded-lex leading
// coefficient. gcd(f, 0) = normalized f; gcd(0, 0) = 0.
inline BiPoly bi_gcd(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero()) return normalize_primitive(b);
    if (b.is_zero()) return normalize_primitive(a);

    detail::YView f = detail::to_y_view(a);
    detail::YView g = detail::to_y_view(b);

    const UniPoly cf = detail::content_x(f);
    const UniPoly cg = detail::content_x(g);
    f = detail::divide_coeffs(f, cf);
    g = detail::divide_coeffs(g, cg);
    const UniPoly c = uni_gcd(cf, cg);

    if (detail::y_deg(f) < detail::y_deg(g)) std::swap(f, g);

    detail::YView result;
    while (true) {
        if (detail::y_deg(g) == 0) {
            // Nonzero primitive divisor free of y: the primitive parts
            // are coprime.
            result.emplace(0, UniPoly(Var::x, 1));
            break;
        }
        detail::YView r = detail::prem_y(f, g);
        if (r.empty()) {
            result = detail::primitive_part(g);
            break;
        }
        f = std::move(g);
        g = detail::primitive_part(r);
    }

    BiPoly out = BiPoly::from_unipoly_x(c) * detail::from_y_view(result);
    return normalize_primitive(out);
}

// Product of the distinct irreducible factors of f, normalized to integer
// content 1 and positive graded-lex leading coefficient. Computed as
// f / gcd(f, df/dx, df/dy); the x- and y-derivative passes together catch
// repeated factors that depend on only one of the variables.
inline BiPoly squarefree_primitive(const BiPoly& f) {
    if (f.is_zero()) throw ValidationError("squarefree part of the zero polynomial");
    BiPoly d = bi_gcd(f, f.derivative_x());
    d = bi_gcd(d, f.derivative_y());
    return normalize_primitive(exact_div(f, d));
}

} // namespace speccurve

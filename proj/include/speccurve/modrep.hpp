#pragma once

#include <map>
#include <vector>

#include "speccurve/errors.hpp"
#include "speccurve/laurent.hpp"
#include "speccurve/matrix.hpp"
#include "speccurve/unipoly.hpp"
#include "speccurve/weyl.hpp"

namespace speccurve {

// Coordinates of a carrier element with respect to a structure's basis
// window: entry i is a polynomial in u, where u acts through the
// structure's action operator.
using CoeffVector = std::vector<UniPoly>;

// C[u]-module structure on C[z]: u acts through a Weyl operator of
// positive order with constant leading coefficient. The module is free of
// rank = order with basis {1, z, ..., z^(rank-1)}.
struct WeylStructure {
    WeylOp action;
    int rank;
};

// C[u]-module structure on C[lambda, lambda^-1]: u acts by multiplication
// with a Laurent polynomial having bot < 0 < top. The module is free of
// rank = top - bot; any window of rank consecutive powers of lambda is a
// basis, {lambda^window_start, ...}.
struct LaurentStructure {
    LaurentPoly action;
    int rank;
    int window_start;
};

inline WeylStructure make_structure(const WeylOp& action) {
    if (action.is_zero()) throw ValidationError("module action must be a nonzero operator");
    if (action.order() < 1)
        throw ValidationError("standing assumption violated: the action must have positive D-order");
    if (!action.constant_leading_coeff())
        throw ValidationError(
            "standing assumption violated: the action's leading D-coefficient must be constant");
    return {action, action.order()};
}

inline LaurentStructure make_structure(const LaurentPoly& action, int window_start = 0) {
    if (action.is_zero()) throw ValidationError("module action must be a nonzero operator");
    if (action.bot() >= 0)
        throw ValidationError("standing assumption violated: Laurent action needs bot < 0");
    if (action.top() <= 0)
        throw ValidationError("standing assumption violated: Laurent action needs top > 0");
    return {action, action.top() - action.bot(), window_start};
}

// Writes w in the basis {1, ..., z^(rank-1)}: repeatedly peels the top
// degree n = m*rank + r by subtracting (lead/c^m) * action^m(z^r), which
// contributes (lead/c^m) * u^m to entry r.
inline CoeffVector reduce(const WeylStructure& st, const UniPoly& w_in) {
    if (!w_in.is_constant() && w_in.var() != Var::z)
        throw ValidationError("carrier elements for this structure are polynomials in z");
    const int p = st.rank;
    const Rational c = st.action.coeff(p).coeff(0);
    CoeffVector entries(p, UniPoly(Var::u));
    UniPoly w = w_in.with_var(Var::z);
    while (!w.is_zero() && w.degree() >= p) {
        const int n = w.degree();
        const int m = n / p, r = n % p;
        Rational cm(1);
        for (int j = 0; j < m; ++j) cm *= c;
        const Rational q = w.leading_coeff() / cm;
        UniPoly t = UniPoly::monomial(Var::z, 1, r);
        for (int j = 0; j < m; ++j) t = z_action(st.action, t);
        w = w - t * q;
        entries[r].add_term(m, q);
    }
    for (const auto& [e, coeff] : w.terms()) entries[e].add_term(0, coeff);
    return entries;
}

// Writes w in the window basis {lambda^w0, ..., lambda^(w0+rank-1)}.
// Exponents above the window are rewritten downward through the top
// action coefficient, then exponents below are rewritten upward through
// the bottom one; u-coefficients accumulate multiplicatively. The first
// phase never dips below the window and the second never climbs above it.
inline CoeffVector reduce(const LaurentStructure& st, const LaurentPoly& w_in) {
    const LaurentPoly& act = st.action;
    const int e = act.bot(), f = act.top();
    const int w0 = st.window_start, w1 = st.window_start + st.rank - 1;
    const Rational cf = act.coeff(f), ce = act.coeff(e);

    std::map<int, UniPoly> state;
    for (const auto& [k, c] : w_in.terms()) state.emplace(k, UniPoly(Var::u, c));

    auto add = [&state](int k, const UniPoly& g) {
        if (g.is_zero()) return;
        auto it = state.try_emplace(k, UniPoly(Var::u)).first;
        it->second = it->second + g;
        if (it->second.is_zero()) state.erase(it);
    };

    const UniPoly u = UniPoly::variable(Var::u);
    while (!state.empty() && state.rbegin()->first > w1) {
        const int k = state.rbegin()->first;
        const UniPoly h = state.rbegin()->second;
        state.erase(k);
        add(k - f, h * u * (Rational(1) / cf));
        for (const auto& [i, ci] : act.terms())
            if (i != f) add(k - f + i, h * Rational(-ci / cf));
    }
    while (!state.empty() && state.begin()->first < w0) {
        const int k = state.begin()->first;
        const UniPoly h = state.begin()->second;
        state.erase(k);
        add(k - e, h * u * (Rational(1) / ce));
        for (const auto& [i, ci] : act.terms())
            if (i != e) add(k - e + i, h * Rational(-ci / ce));
    }

    CoeffVector entries(st.rank, UniPoly(Var::u));
    for (const auto& [k, g] : state) entries[k - w0] = g;
    return entries;
}

// Inverse of reduce: sum_i entries[i](action) applied to the i-th basis
// vector, evaluated in the carrier.
inline UniPoly reconstruct(const WeylStructure& st, const CoeffVector& entries) {
    if (int(entries.size()) != st.rank) throw ValidationError("coefficient vector has wrong rank");
    UniPoly out(Var::z);
    for (int i = 0; i < st.rank; ++i) {
        UniPoly t = UniPoly::monomial(Var::z, 1, i);
        int cur = 0;
        for (const auto& [k, c] : entries[i].terms()) {
            while (cur < k) {
                t = z_action(st.action, t);
                ++cur;
            }
            out = out + t * c;
        }
    }
    return out;
}

inline LaurentPoly reconstruct(const LaurentStructure& st, const CoeffVector& entries) {
    if (int(entries.size()) != st.rank) throw ValidationError("coefficient vector has wrong rank");
    LaurentPoly out;
    for (int i = 0; i < st.rank; ++i) {
        LaurentPoly t = LaurentPoly::monomial(1, st.window_start + i);
        int cur = 0;
        for (const auto& [k, c] : entries[i].terms()) {
            while (cur < k) {
                t = st.action * t;
                ++cur;
            }
            out = out + t * c;
        }
    }
    return out;
}

// Matrix of the operator b with respect to the structure's basis window,
// column convention: b . v_i = sum_j M[j][i](action) . v_j.
inline PolyMatrix matrix_rep(const WeylStructure& st, const WeylOp& b) {
    PolyMatrix m(st.rank, st.rank, UniPoly(Var::u));
    for (int i = 0; i < st.rank; ++i) {
        CoeffVector col = reduce(st, z_action(b, UniPoly::monomial(Var::z, 1, i)));
        for (int j = 0; j < st.rank; ++j) m.at(j, i) = col[j];
    }
    return m;
}

inline PolyMatrix matrix_rep(const LaurentStructure& st, const LaurentPoly& b) {
    PolyMatrix m(st.rank, st.rank, UniPoly(Var::u));
    for (int i = 0; i < st.rank; ++i) {
        CoeffVector col = reduce(st, b * LaurentPoly::monomial(1, st.window_start + i));
        for (int j = 0; j < st.rank; ++j) m.at(j, i) = col[j];
    }
    return m;
}

} // namespace speccurve

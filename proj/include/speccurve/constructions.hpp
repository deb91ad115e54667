#pragma once

#include <optional>
#include <vector>

#include "speccurve/errors.hpp"
#include "speccurve/laurent.hpp"
#include "speccurve/matrix.hpp"
#include "speccurve/modrep.hpp"
#include "speccurve/resultant.hpp"
#include "speccurve/spectral.hpp"
#include "speccurve/weyl.hpp"

namespace speccurve {

// The p x p matrix of the D^q action with respect to the D^p module
// structure on C[z].
inline PolyMatrix build_mqp(int p, int q) {
    if (p < 1 || q < 1) throw ValidationError("build_mqp needs positive exponents");
    return matrix_rep(make_structure(WeylOp::d(p)), WeylOp::d(q));
}

// Large-N pair on C[lambda, lambda^-1]:
//   P = gamma*lambda^-1 + sum_{i=0..d1} b[i]*lambda^i
//   Q = gamma*lambda    + sum_{i=0..d2} a[i]*lambda^-i
// with the companion-shaped matrices A (in x, order d2+1) and B (in y,
// order d1+1) whose last rows carry the coefficients. A is multiplication
// by lambda on the Q-module window; B is the mirror under lambda ->
// lambda^-1, i.e. multiplication by lambda^-1 on the P-module window read
// in decreasing powers. Substituting lambda -> A and lambda^-1 -> B gives
//   D1(x) = gamma*A^-1 + sum b[i]*A^i,  D2(y) = gamma*B^-1 + sum a[i]*B^i.
struct BehInstance {
    Rational gamma;
    std::vector<Rational> a, b;
    int d1, d2, n_window;
    LaurentPoly p, q;
    PolyMatrix a_companion, b_companion, d1_mat, d2_mat;
};

inline LaurentPoly beh_p_poly(const Rational& gamma, const std::vector<Rational>& b) {
    LaurentPoly p = LaurentPoly::monomial(gamma, -1);
    for (std::size_t i = 0; i < b.size(); ++i) p.add_term(int(i), b[i]);
    return p;
}

inline LaurentPoly beh_q_poly(const Rational& gamma, const std::vector<Rational>& a) {
    LaurentPoly q = LaurentPoly::monomial(gamma, 1);
    for (std::size_t i = 0; i < a.size(); ++i) q.add_term(-int(i), a[i]);
    return q;
}

namespace detail {

// Companion-shaped matrix in `var` of size d+1: ones on the
// superdiagonal, last row (-c[d]/gamma, ..., -c[1]/gamma, (var-c[0])/gamma).
inline PolyMatrix beh_companion(const Rational& gamma, const std::vector<Rational>& c, Var var) {
    const int d = int(c.size()) - 1;
    PolyMatrix m(d + 1, d + 1, UniPoly(var));
    for (int i = 0; i < d; ++i) m.at(i, i + 1) = UniPoly(var, 1);
    for (int j = 0; j < d; ++j) m.at(d, j) = UniPoly(var, -c[d - j] / gamma);
    UniPoly corner = UniPoly::variable(var) * (Rational(1) / gamma);
    corner.add_term(0, -c[0] / gamma);
    m.at(d, d) = corner;
    return m;
}

} // namespace detail

inline BehInstance build_beh(const Rational& gamma, const std::vector<Rational>& a,
                             const std::vector<Rational>& b,
                             std::optional<int> n_window = std::nullopt) {
    if (gamma == 0) throw ValidationError("gamma must be nonzero");
    if (a.size() < 2 || b.size() < 2)
        throw ValidationError("coefficient lists need degree >= 1 (d1, d2 > 0)");
    const int d2 = int(a.size()) - 1;
    const int d1 = int(b.size()) - 1;
    if (a.back() == 0 || b.back() == 0)
        throw ValidationError("top coefficients a[d2], b[d1] must be nonzero");
    const int n = n_window.value_or(d2 + 1);
    if (n < d2) throw ValidationError("window parameter N must be at least d2");

    BehInstance inst{gamma,
                     a,
                     b,
                     d1,
                     d2,
                     n,
                     beh_p_poly(gamma, b),
                     beh_q_poly(gamma, a),
                     detail::beh_companion(gamma, a, Var::x),
                     detail::beh_companion(gamma, b, Var::y),
                     PolyMatrix(1, 1, UniPoly(Var::x)),
                     PolyMatrix(1, 1, UniPoly(Var::y))};

    PolyMatrix d1m = inverse_constant_det(inst.a_companion).scaled(UniPoly(Var::x, gamma));
    PolyMatrix apow = PolyMatrix::identity(d2 + 1, UniPoly(Var::x, 1));
    for (int i = 0; i <= d1; ++i) {
        if (i > 0) apow = apow * inst.a_companion;
        if (b[i] != 0) d1m = d1m + apow.scaled(UniPoly(Var::x, b[i]));
    }
    inst.d1_mat = d1m;

    PolyMatrix d2m = inverse_constant_det(inst.b_companion).scaled(UniPoly(Var::y, gamma));
    PolyMatrix bpow = PolyMatrix::identity(d1 + 1, UniPoly(Var::y, 1));
    for (int i = 0; i <= d2; ++i) {
        if (i > 0) bpow = bpow * inst.b_companion;
        if (a[i] != 0) d2m = d2m + bpow.scaled(UniPoly(Var::y, a[i]));
    }
    inst.d2_mat = d2m;
    return inst;
}

// Checks det(y*1 - D1(x)) and det(x*1 - D2(y)) cut out the same locus,
// reports the exact scalar between the raw determinants when one exists,
// and cross-checks the power formulas against the module-representation
// matrices on the canonical windows (V1 starting at lambda^(N-1) for the
// P-module, V2 at lambda^(N-d2) for the Q-module). The companion display
// is row-convention, so the entrywise identity carries a transpose; on
// the D2 side the window basis is additionally read in decreasing powers
// of lambda, which conjugates by the index reversal.
struct BehReport {
    bool holds = false;
    BiPoly lhs_raw, rhs_raw;
    BiPoly lhs_normal, rhs_normal;
    std::optional<Rational> scalar;
    bool d1_matches_modrep = false;
    bool d2_matches_modrep = false;
};

namespace detail {

inline PolyMatrix retag(const PolyMatrix& m, Var v) {
    PolyMatrix out(m.rows(), m.cols(), UniPoly(v));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j).with_var(v);
    return out;
}

// Conjugation by the basis-order reversal permutation.
inline PolyMatrix reverse_basis(const PolyMatrix& m) {
    PolyMatrix out(m.rows(), m.cols(), UniPoly(m.at(0, 0).var()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(m.rows() - 1 - i, m.cols() - 1 - j);
    return out;
}

} // namespace detail

inline BehReport beh_duality_check(const BehInstance& inst) {
    BehReport r;
    r.lhs_raw = char_poly(inst.d1_mat, true);
    r.rhs_raw = char_poly(inst.d2_mat, false);
    r.lhs_normal = squarefree_primitive(r.lhs_raw);
    r.rhs_normal = squarefree_primitive(r.rhs_raw);
    r.holds = r.lhs_normal == r.rhs_normal;

    if (!r.rhs_raw.is_zero()) {
        const auto& [e0, c0] = *r.rhs_raw.terms().begin();
        const Rational ratio = r.lhs_raw.coeff(e0.first, e0.second) / c0;
        if (r.lhs_raw == r.rhs_raw * ratio) r.scalar = ratio;
    }

    const LaurentStructure q_mod = make_structure(inst.q, inst.n_window - inst.d2);
    const LaurentStructure p_mod = make_structure(inst.p, inst.n_window - 1);
    r.d1_matches_modrep =
        detail::retag(matrix_rep(q_mod, inst.p), Var::x).transpose() == inst.d1_mat;
    r.d2_matches_modrep =
        detail::reverse_basis(detail::retag(matrix_rep(p_mod, inst.q), Var::y).transpose()) ==
        inst.d2_mat;
    return r;
}

// Module-side description of a polynomial multiplication operator: p
// acting on C[z] as multiplication by p(z) is the constant-coefficient
// operator p(D), since z_action sends D^k to multiplication by z^k. Use
// this to compare eliminant curves of polynomial pairs against their
// characteristic polynomials; two-sided Laurent supports stay on the
// C[lambda, lambda^-1] carrier instead.
inline WeylOp multiplication_operator(const UniPoly& p) {
    WeylOp out;
    for (const auto& [k, c] : p.terms()) out = out + WeylOp::monomial(UniPoly(Var::s, c), k);
    return out;
}

// Curve cut out by Res_lambda(P(lambda) - x, Q(lambda) - y) for two
// multiplication operators. Laurent inputs are cleared by lambda^|bot|
// first; spurious monomial factors x^j y^k that clearing introduces are
// divided out.
inline BiPoly resultant_curve(const LaurentPoly& p_mult, const LaurentPoly& q_mult) {
    if (p_mult.is_zero() || q_mult.is_zero())
        throw ValidationError("multiplication operators must be nonzero");
    if (p_mult.top() < 1 || q_mult.top() < 1)
        throw ValidationError("multiplication operators need positive top degree");

    auto cleared = [](const LaurentPoly& op, const BiPoly& variable) {
        const int shift = std::max(0, -op.bot());
        std::vector<BiPoly> coeffs(std::size_t(shift + op.top()) + 1, BiPoly());
        for (const auto& [e, c] : op.terms()) coeffs[e + shift] = BiPoly(c);
        coeffs[shift] = coeffs[shift] - variable;
        return coeffs;
    };

    BiPoly res = sylvester_resultant(cleared(p_mult, BiPoly::var_x()),
                                     cleared(q_mult, BiPoly::var_y()));

    auto strip = [](BiPoly& f, bool axis_x) {
        while (!f.is_zero()) {
            int min_e = INT_MAX;
            for (const auto& [e, c] : f.terms()) min_e = std::min(min_e, axis_x ? e.first : e.second);
            if (min_e < 1) break;
            BiPoly g;
            for (const auto& [e, c] : f.terms())
                g.add_term(axis_x ? e.first - 1 : e.first, axis_x ? e.second : e.second - 1, c);
            f = g;
        }
    };
    strip(res, true);
    strip(res, false);
    return res;
}

inline BiPoly resultant_curve(const UniPoly& p_mult, const UniPoly& q_mult) {
    if (p_mult.degree() < 1 || q_mult.degree() < 1)
        throw ValidationError("multiplication operators need degree >= 1");
    return resultant_curve(LaurentPoly::from_unipoly(p_mult), LaurentPoly::from_unipoly(q_mult));
}

} // namespace speccurve

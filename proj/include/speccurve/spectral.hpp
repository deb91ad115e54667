#pragma once

#include <optional>
#include <utility>

#include "speccurve/bipoly.hpp"
#include "speccurve/gcd.hpp"
#include "speccurve/matrix.hpp"
#include "speccurve/modrep.hpp"
#include "speccurve/weyl.hpp"

namespace speccurve {

// Plane curve det(y*1 - M(x)) = 0 attached to a matrix representation:
// raw determinant plus its squarefree primitive normal form. Two curves
// describe the same locus exactly when their normal forms coincide.
struct SpectralCurve {
    BiPoly raw;
    BiPoly normal;
    int rank = 0;
};

inline SpectralCurve curve_of_matrix(const PolyMatrix& m) {
    BiPoly raw = char_poly(m, true);
    return {raw, squarefree_primitive(raw), m.rows()};
}

// Curve of the operator b acting on the module defined by a (the u-side).
inline SpectralCurve spectral_curve(const WeylOp& a, const WeylOp& b) {
    return curve_of_matrix(matrix_rep(make_structure(a), b));
}

inline SpectralCurve spectral_curve(const LaurentPoly& a, const LaurentPoly& b,
                                    std::optional<int> window_start = std::nullopt) {
    return curve_of_matrix(matrix_rep(make_structure(a, window_start.value_or(0)), b));
}

inline bool curves_equal_as_loci(const BiPoly& c1, const BiPoly& c2) {
    if (c1.is_zero() || c2.is_zero())
        throw ValidationError("locus comparison requires nonzero curves");
    return squarefree_primitive(c1) == squarefree_primitive(c2);
}

inline bool curves_equal_as_loci(const SpectralCurve& c1, const SpectralCurve& c2) {
    return c1.normal == c2.normal;
}

// Checks the duality X_{Q,P} = X_{P,Q} with x and y exchanged.
struct DualityReport {
    bool holds;
    SpectralCurve x_qp; // Q acting on the P-module
    SpectralCurve x_pq; // P acting on the Q-module
};

namespace detail {

template <class Curve>
DualityReport duality_from_curves(Curve&& x_qp, Curve&& x_pq) {
    const bool holds = x_qp.normal == squarefree_primitive(swap_xy(x_pq.raw));
    return {holds, std::forward<Curve>(x_qp), std::forward<Curve>(x_pq)};
}

} // namespace detail

inline DualityReport duality_check(const WeylOp& p, const WeylOp& q) {
    return detail::duality_from_curves(spectral_curve(p, q), spectral_curve(q, p));
}

inline DualityReport duality_check(const LaurentPoly& p, const LaurentPoly& q,
                                   std::optional<int> p_window = std::nullopt,
                                   std::optional<int> q_window = std::nullopt) {
    return detail::duality_from_curves(spectral_curve(p, q, p_window),
                                       spectral_curve(q, p, q_window));
}

struct WeylPair {
    WeylOp p, q;
};

// (P, Q) -> (-Q, P); four applications give the identity.
inline WeylPair fourier_pair(const WeylPair& pair) { return {-pair.q, pair.p}; }

// Definition-level quantization check of pair1 against classical data
// pair0: matching orders, [P1, Q1] = 1, and equality of the matrices of
// P over the respective Q-modules on the canonical windows.
// classical_commutes only warns; it is not required for the verdict.
struct QuantizationReport {
    bool degrees_ok = false;
    bool string_eq_ok = false;
    bool matrix_eq_ok = false;
    bool classical_commutes = false;
    bool verdict = false;
    PolyMatrix m0{1, 1, UniPoly(Var::u)}, m1{1, 1, UniPoly(Var::u)};
};

inline QuantizationReport is_quantization(const WeylPair& pair0, const WeylPair& pair1) {
    QuantizationReport r;
    r.degrees_ok = pair1.p.order() == pair0.p.order() && pair1.q.order() == pair0.q.order();
    r.string_eq_ok = commutator(pair1.p, pair1.q) == WeylOp::constant(1);
    r.classical_commutes = commutator(pair0.p, pair0.q).is_zero();
    r.m0 = matrix_rep(make_structure(pair0.q), pair0.p);
    r.m1 = matrix_rep(make_structure(pair1.q), pair1.p);
    r.matrix_eq_ok = r.m1 == r.m0;
    r.verdict = r.degrees_ok && r.string_eq_ok && r.matrix_eq_ok;
    return r;
}

// Same as is_quantization but with the matrix condition relaxed to
// equality of spectral curves as loci.
struct SpectralQuantizationReport {
    bool degrees_ok = false;
    bool string_eq_ok = false;
    bool curve_eq_ok = false;
    bool classical_commutes = false;
    bool verdict = false;
    SpectralCurve curve0, curve1;
};

inline SpectralQuantizationReport is_spectral_quantization(const WeylPair& pair0,
                                                           const WeylPair& pair1) {
    SpectralQuantizationReport r;
    r.degrees_ok = pair1.p.order() == pair0.p.order() && pair1.q.order() == pair0.q.order();
    r.string_eq_ok = commutator(pair1.p, pair1.q) == WeylOp::constant(1);
    r.classical_commutes = commutator(pair0.p, pair0.q).is_zero();
    r.curve0 = spectral_curve(pair0.q, pair0.p);
    r.curve1 = spectral_curve(pair1.q, pair1.p);
    r.curve_eq_ok = r.curve1.normal == r.curve0.normal;
    r.verdict = r.degrees_ok && r.string_eq_ok && r.curve_eq_ok;
    return r;
}

// The curve of the transformed pair (-Q, P) coincides, as a locus, with
// the transform f(x, y) -> f(-y, x) of the pair's own curve.
struct FourierCurveReport {
    bool holds = false;
    SpectralCurve lhs;        // curve of (-Q, P)
    SpectralCurve base;       // curve of (P, Q)
    BiPoly rhs_raw;           // fourier_xy(base.raw)
    BiPoly rhs_normal;
};

inline FourierCurveReport fourier_curve_theorem_check(const WeylPair& pair) {
    FourierCurveReport r;
    const WeylPair fp = fourier_pair(pair);
    r.lhs = spectral_curve(fp.q, fp.p);
    r.base = spectral_curve(pair.q, pair.p);
    r.rhs_raw = fourier_xy(r.base.raw);
    r.rhs_normal = squarefree_primitive(r.rhs_raw);
    r.holds = r.lhs.normal == r.rhs_normal;
    return r;
}

} // namespace speccurve

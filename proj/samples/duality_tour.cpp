// A short tour of the library: build an operator pair, look at its
// matrix representations and spectral curves, verify the x/y-swap
// duality, apply the Fourier transform, and finish with a finite-rank
// two-matrix-model instance on the Laurent carrier.

#include <iostream>

#include "speccurve/constructions.hpp"
#include "speccurve/parser.hpp"
#include "speccurve/spectral.hpp"

using namespace speccurve;

int main() {
    // Operators can be built from expressions or assembled directly.
    const WeylOp p = elaborate_weyl(parse_operator("D^2 + s + 1"));
    const WeylOp q = elaborate_weyl(parse_operator("D^3 - 2"));
    std::cout << "P = " << p.str() << "\nQ = " << q.str() << "\n\n";

    // P induces a rank-2 module structure on C[z]; Q acts on it by a
    // 2x2 matrix over C[u].
    const PolyMatrix m_qp = matrix_rep(make_structure(p), q);
    std::cout << "matrix of Q over the P-module:\n" << matrix_str(m_qp) << "\n\n";

    // det(y*1 - M(x)) cuts out the spectral curve.
    const DualityReport duality = duality_check(p, q);
    std::cout << "X_QP: " << duality.x_qp.raw.str() << "\n"
              << "X_PQ: " << duality.x_pq.raw.str() << "\n"
              << "swap duality holds: " << (duality.holds ? "yes" : "no") << "\n\n";

    // The Fourier transform (P, Q) -> (-Q, P) moves the curve by
    // f(x, y) -> f(-y, x).
    const FourierCurveReport fourier = fourier_curve_theorem_check({p, q});
    std::cout << "fourier-transformed curve: " << fourier.lhs.normal.str() << "\n"
              << "transform of the base curve: " << fourier.rhs_normal.str() << "\n\n";

    // Finite-rank pair on C[L, 1/L] with gamma = 1, a = b = (1, 1):
    // both characteristic polynomials cut out the same locus.
    const BehInstance inst = build_beh(rat(1), {rat(1), rat(1)}, {rat(1), rat(1)});
    const BehReport rep = beh_duality_check(inst);
    std::cout << "P = " << inst.p.str() << ", Q = " << inst.q.str() << "\n"
              << "det(y - D1(x)) normal: " << rep.lhs_normal.str() << "\n"
              << "det(x - D2(y)) normal: " << rep.rhs_normal.str() << "\n"
              << "finite-rank duality holds: " << (rep.holds ? "yes" : "no") << "\n";
    return 0;
}

#pragma once

#include <vector>

#include "speccurve/bipoly.hpp"
#include "speccurve/errors.hpp"
#include "speccurve/matrix.hpp"

namespace speccurve {

// Resultant in lambda of two polynomials whose coefficients live in
// Q[x, y]; f[k] is the coefficient of lambda^k. Computed as the
// determinant of the Sylvester matrix (deg g rows of f, deg f rows of g).
inline BiPoly sylvester_resultant(std::vector<BiPoly> f, std::vector<BiPoly> g) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
    while (!g.empty() && g.back().is_zero()) g.pop_back();
    const int m = int(f.size()) - 1;
    const int n = int(g.size()) - 1;
    if (m < 1 || n < 1)
        throw ValidationError("resultant operands must be nonzero with positive lambda-degree");

    BiPolyMatrix syl(m + n, m + n, BiPoly());
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) syl.at(i, i + k) = f[m - k];
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) syl.at(n + i, i + k) = g[n - k];
    return det_poly(syl);
}

} // namespace speccurve

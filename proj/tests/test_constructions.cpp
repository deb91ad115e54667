#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "speccurve/constructions.hpp"
#include "speccurve/random_instances.hpp"
#include "speccurve/spectral.hpp"

using namespace speccurve;

namespace {

UniPoly upoly(std::initializer_list<std::pair<int, Rational>> terms, Var v = Var::u) {
    UniPoly p(v);
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

} // namespace

TEST_CASE("power-action matrices") {
    const PolyMatrix m32 = build_mqp(3, 2);
    REQUIRE(m32.rows() == 3);
    CHECK(m32.at(0, 0).is_zero());
    CHECK(m32.at(0, 1) == upoly({{1, 1}}));
    CHECK(m32.at(0, 2).is_zero());
    CHECK(m32.at(1, 2) == upoly({{1, 1}}));
    CHECK(m32.at(2, 0) == upoly({{0, 1}}));
    CHECK(m32.at(1, 0).is_zero());
    CHECK(m32.at(2, 2).is_zero());

    const PolyMatrix m23 = build_mqp(2, 3);
    REQUIRE(m23.rows() == 2);
    CHECK(m23.at(0, 0).is_zero());
    CHECK(m23.at(0, 1) == upoly({{2, 1}}));
    CHECK(m23.at(1, 0) == upoly({{1, 1}}));
    CHECK(m23.at(1, 1).is_zero());

    const PolyMatrix m1k = build_mqp(1, 4);
    REQUIRE(m1k.rows() == 1);
    CHECK(m1k.at(0, 0) == upoly({{4, 1}}));

    CHECK_THROWS_AS(build_mqp(0, 2), ValidationError);
    CHECK_THROWS_AS(build_mqp(2, 0), ValidationError);
}

TEST_CASE("power-action curve law") {
    for (int p = 1; p <= 5; ++p) {
        for (int q = 1; q <= 5; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const SpectralCurve c = curve_of_matrix(build_mqp(p, q));
            BiPoly expect; // y^p - x^q, the char variety of the q-power action
            expect.add_term(0, p, rat(1));
            expect.add_term(q, 0, rat(-1));
            CHECK(c.normal == squarefree_primitive(expect));
        }
    }
}

TEST_CASE("finite-rank instance construction") {
    const BehInstance inst = build_beh(rat(1), {rat(1), rat(1)}, {rat(1), rat(1)});
    CHECK(inst.d1 == 1);
    CHECK(inst.d2 == 1);
    CHECK(inst.n_window == 2); // defaults to d2 + 1

    // P = L^-1 + 1 + L, Q = L + 1 + L^-1 for this data.
    CHECK(inst.p == LaurentPoly::monomial(1, -1) + LaurentPoly(1) + LaurentPoly::monomial(1, 1));
    CHECK(inst.q == inst.p);

    // Companion shape in x.
    REQUIRE(inst.a_companion.rows() == 2);
    CHECK(inst.a_companion.at(0, 0).is_zero());
    CHECK(inst.a_companion.at(0, 1) == upoly({{0, 1}}, Var::x));
    CHECK(inst.a_companion.at(1, 0) == upoly({{0, -1}}, Var::x));
    CHECK(inst.a_companion.at(1, 1) == upoly({{1, 1}, {0, -1}}, Var::x));

    // D1 = A^{-1} + 1 + A, built from the exact inverse.
    const PolyMatrix inv = inverse_constant_det(inst.a_companion);
    const PolyMatrix expect_d1 =
        inv + PolyMatrix::identity(2, UniPoly(Var::x, 1)) + inst.a_companion;
    CHECK(inst.d1_mat == expect_d1);
}

TEST_CASE("companion determinant is constant") {
    for (int i = 0; i < 20; ++i) {
        Rng rng(derive_seed(42, 1, std::uint64_t(i)));
        const BehParams bp = random_beh_params(rng);
        const BehInstance inst = build_beh(bp.gamma, bp.a, bp.b);
        const UniPoly det_a = det_poly(inst.a_companion);
        CHECK(det_a.is_constant());
        const Rational expect = bp.a.back() / bp.gamma;
        CHECK((det_a.coeff(0) == expect || det_a.coeff(0) == -expect));
    }
}

TEST_CASE("companion characteristic polynomial recovers the operator") {
    for (int i = 0; i < 20; ++i) {
        Rng rng(derive_seed(42, 2, std::uint64_t(i)));
        const BehParams bp = random_beh_params(rng);
        const BehInstance inst = build_beh(bp.gamma, bp.a, bp.b);
        const int d2 = inst.d2;

        // det(t*1 - A(x)) = (1/gamma) * t^d2 * (Q(t) - x), t on the y-axis.
        const BiPoly lhs = char_poly(inst.a_companion, true);
        BiPoly rhs;
        rhs.add_term(0, d2 + 1, bp.gamma);           // gamma * t^(d2+1)
        for (int j = 0; j <= d2; ++j)
            rhs.add_term(0, d2 - j, bp.a[std::size_t(j)]); // a_j * t^(d2-j)
        rhs.add_term(1, d2, rat(-1));                // -x * t^d2
        rhs = rhs * (rat(1) / bp.gamma);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("instance validation names the violated assumption") {
    CHECK_THROWS_AS(build_beh(rat(0), {rat(1), rat(1)}, {rat(1), rat(1)}), ValidationError);
    CHECK_THROWS_AS(build_beh(rat(1), {rat(1), rat(0)}, {rat(1), rat(1)}), ValidationError);
    CHECK_THROWS_AS(build_beh(rat(1), {rat(1), rat(1)}, {rat(1), rat(0)}), ValidationError);
    CHECK_THROWS_AS(build_beh(rat(1), {rat(1)}, {rat(1), rat(1)}), ValidationError);
    CHECK_THROWS_AS(build_beh(rat(1), {rat(1), rat(1)}, {rat(1), rat(1)}, 0), ValidationError);
    CHECK_NOTHROW(build_beh(rat(1), {rat(1), rat(1)}, {rat(1), rat(1)}, 1));
}

TEST_CASE("two-matrix-model duality on the smallest instance") {
    const BehInstance inst = build_beh(rat(1), {rat(1), rat(1)}, {rat(1), rat(1)});
    const BehReport rep = beh_duality_check(inst);
    CHECK(rep.holds);
    CHECK(rep.d1_matches_modrep);
    CHECK(rep.d2_matches_modrep);
    REQUIRE(rep.scalar.has_value());
    CHECK(*rep.scalar == rat(1));
    CHECK(rep.lhs_raw == rep.rhs_raw * *rep.scalar);
}

TEST_CASE("two-matrix-model duality on random instances") {
    for (int i = 0; i < 15; ++i) {
        Rng rng(derive_seed(42, 3, std::uint64_t(i)));
        const BehParams bp = random_beh_params(rng);
        const BehInstance inst = build_beh(bp.gamma, bp.a, bp.b);
        const BehReport rep = beh_duality_check(inst);
        CHECK(rep.holds);
        CHECK(rep.d1_matches_modrep);
        CHECK(rep.d2_matches_modrep);
    }
    // A larger window shifts the basis but keeps every verdict.
    Rng rng(derive_seed(42, 4, 0));
    const BehParams bp = random_beh_params(rng);
    const BehInstance inst = build_beh(bp.gamma, bp.a, bp.b, int(bp.a.size()) + 3);
    const BehReport rep = beh_duality_check(inst);
    CHECK(rep.holds);
    CHECK(rep.d1_matches_modrep);
    CHECK(rep.d2_matches_modrep);
}

TEST_CASE("eliminant curves") {
    const BiPoly x = BiPoly::var_x();
    const BiPoly y = BiPoly::var_y();

    CHECK(resultant_curve(LaurentPoly::monomial(1, 2), LaurentPoly::monomial(1, 3)) ==
          y * y - x * x * x);
    const BiPoly lin = resultant_curve(LaurentPoly::monomial(1, 1), LaurentPoly::monomial(1, 1));
    CHECK(squarefree_primitive(lin) == y - x);

    CHECK_THROWS_AS(resultant_curve(LaurentPoly(rat(3)), LaurentPoly::monomial(1, 2)),
                    ValidationError);
    CHECK_THROWS_AS(resultant_curve(LaurentPoly::monomial(1, -2), LaurentPoly::monomial(1, 2)),
                    ValidationError);

    // Univariate front end.
    UniPoly p(Var::lambda);
    p.add_term(2, rat(1));
    UniPoly q(Var::lambda);
    q.add_term(3, rat(1));
    CHECK(resultant_curve(p, q) == y * y - x * x * x);
    CHECK_THROWS_AS(resultant_curve(UniPoly(Var::lambda, 1), q), ValidationError);
}

TEST_CASE("eliminant equals both characteristic descriptions") {
    for (int i = 0; i < 15; ++i) {
        Rng rng(derive_seed(42, 5, std::uint64_t(i)));
        const UniPoly p = random_lambda_poly(rng);
        const UniPoly q = random_lambda_poly(rng);
        const BiPoly res = squarefree_primitive(resultant_curve(p, q));
        // Polynomial multiplication pairs live on C[z].
        const SpectralCurve x_qp =
            spectral_curve(multiplication_operator(p), multiplication_operator(q));
        const SpectralCurve x_pq =
            spectral_curve(multiplication_operator(q), multiplication_operator(p));
        CHECK(res == x_qp.normal);
        CHECK(res == squarefree_primitive(swap_xy(x_pq.raw)));
    }
    // Laurent operators with genuine negative support.
    for (int i = 0; i < 8; ++i) {
        Rng rng(derive_seed(42, 6, std::uint64_t(i)));
        const LaurentPoly p = random_laurent_action(rng);
        const LaurentPoly q = random_laurent_action(rng);
        const BiPoly res = squarefree_primitive(resultant_curve(p, q));
        const SpectralCurve x_qp = spectral_curve(p, q);
        const SpectralCurve x_pq = spectral_curve(q, p);
        CHECK(res == x_qp.normal);
        CHECK(res == squarefree_primitive(swap_xy(x_pq.raw)));
    }
    // The smallest finite-rank instance agrees with its eliminant.
    const BehInstance inst = build_beh(rat(1), {rat(1), rat(1)}, {rat(1), rat(1)});
    const BehReport rep = beh_duality_check(inst);
    const BiPoly res = resultant_curve(inst.p, inst.q);
    CHECK(squarefree_primitive(res) == rep.lhs_normal);
}

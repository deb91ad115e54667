#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "speccurve/random_instances.hpp"
#include "speccurve/resultant.hpp"

using namespace speccurve;

namespace {

// Ascending coefficient vector of p(L) - v for a univariate p in lambda.
std::vector<BiPoly> shifted_coeffs(const UniPoly& p, const BiPoly& v) {
    std::vector<BiPoly> out(std::size_t(p.degree()) + 1, BiPoly());
    for (const auto& [e, c] : p.terms()) out[std::size_t(e)] = BiPoly(c);
    out[0] = out[0] - v;
    return out;
}

} // namespace

TEST_CASE("golden resultants") {
    const BiPoly x = BiPoly::var_x();
    const BiPoly y = BiPoly::var_y();

    // Res_L(L^2 - x, L^3 - y) = y^2 - x^3.
    const std::vector<BiPoly> f = {-x, BiPoly(), BiPoly(rat(1))};
    const std::vector<BiPoly> g = {-y, BiPoly(), BiPoly(), BiPoly(rat(1))};
    CHECK(sylvester_resultant(f, g) == y * y - x * x * x);

    // Linear case: Res_L(L - x, L - y) = +/-(y - x).
    const std::vector<BiPoly> lx = {-x, BiPoly(rat(1))};
    const std::vector<BiPoly> ly = {-y, BiPoly(rat(1))};
    const BiPoly lin = sylvester_resultant(lx, ly);
    CHECK((lin == y - x || lin == x - y));

    // Shared double root pairing: Res_L(L^2 - x, L^2 - y) = (y - x)^2.
    const std::vector<BiPoly> fx = {-x, BiPoly(), BiPoly(rat(1))};
    const std::vector<BiPoly> fy = {-y, BiPoly(), BiPoly(rat(1))};
    CHECK(sylvester_resultant(fx, fy) == (y - x) * (y - x));
}

TEST_CASE("resultant vanishes iff the inputs share a root") {
    const BiPoly x = BiPoly::var_x();
    // (L - 1)(L - 2) and (L - 2)(L - 3) share L = 2.
    const std::vector<BiPoly> f = {BiPoly(rat(2)), BiPoly(rat(-3)), BiPoly(rat(1))};
    const std::vector<BiPoly> g = {BiPoly(rat(6)), BiPoly(rat(-5)), BiPoly(rat(1))};
    CHECK(sylvester_resultant(f, g).is_zero());

    // Replace one factor; now coprime, resultant a nonzero constant.
    const std::vector<BiPoly> h = {BiPoly(rat(12)), BiPoly(rat(-7)), BiPoly(rat(1))};
    const BiPoly r = sylvester_resultant(f, h);
    CHECK_FALSE(r.is_zero());
    CHECK(r.total_degree() == 0);
    (void)x;
}

TEST_CASE("swap antisymmetry sign") {
    for (int i = 0; i < 20; ++i) {
        Rng rng(derive_seed(31, 4, std::uint64_t(i)));
        const UniPoly p = random_lambda_poly(rng, 1, 3);
        const UniPoly q = random_lambda_poly(rng, 1, 3);
        const std::vector<BiPoly> f = shifted_coeffs(p, BiPoly::var_x());
        const std::vector<BiPoly> g = shifted_coeffs(q, BiPoly::var_y());
        const BiPoly ab = sylvester_resultant(f, g);
        const BiPoly ba = sylvester_resultant(g, f);
        const int mn = p.degree() * q.degree();
        CHECK(ab == (mn % 2 ? -ba : ba));
    }
}

TEST_CASE("resultant input validation") {
    const std::vector<BiPoly> constant = {BiPoly(rat(3))};
    const std::vector<BiPoly> linear = {BiPoly(rat(1)), BiPoly(rat(1))};
    CHECK_THROWS_AS(sylvester_resultant(constant, linear), ValidationError);
    CHECK_THROWS_AS(sylvester_resultant(linear, {}), ValidationError);
    // Trailing zero coefficients are trimmed before the degree check.
    const std::vector<BiPoly> padded = {BiPoly(rat(1)), BiPoly(rat(1)), BiPoly()};
    CHECK_NOTHROW(sylvester_resultant(padded, linear));
}

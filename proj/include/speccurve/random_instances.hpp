#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "speccurve/laurent.hpp"
#include "speccurve/rational.hpp"
#include "speccurve/unipoly.hpp"
#include "speccurve/weyl.hpp"

namespace speccurve {

// splitmix64; used to derive independent stream seeds from one master
// seed so adding a draw to one stream never perturbs another.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                 std::uint64_t index) {
    return splitmix64(splitmix64(splitmix64(master) ^ stream) ^ index);
}

// Thin generator facade. Ranges are drawn by modulo rather than
// std::uniform_int_distribution so streams are identical across
// standard-library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t bits() { return eng_(); }

    // Uniform-ish integer in [lo, hi]; the modulo bias is irrelevant at
    // these range sizes and keeps the stream portable.
    int range(int lo, int hi) {
        return lo + int(bits() % std::uint64_t(hi - lo + 1));
    }

    int nonzero(int lo, int hi) {
        while (true) {
            const int v = range(lo, hi);
            if (v != 0) return v;
        }
    }

    bool chance(int num, int den) { return range(1, den) <= num; }

    Rational rational(int lo, int hi) {
        return rat(nonzero(lo, hi), nonzero(1, hi)); // canonicalized
    }

private:
    std::mt19937_64 eng_;
};

// Weyl operator usable as a module action: positive D-order with a
// constant nonzero leading D-coefficient. Lower coefficients are small
// polynomials in s.
inline WeylOp random_weyl_action(Rng& rng, int max_order = 4, int max_s_deg = 2) {
    const int order = rng.range(1, max_order);
    WeylOp op = WeylOp::monomial(UniPoly(Var::s, rng.rational(-5, 5)), order);
    for (int i = 0; i < order; ++i) {
        UniPoly c(Var::s);
        const int sdeg = rng.range(-1, max_s_deg);
        for (int k = 0; k <= sdeg; ++k)
            if (rng.chance(2, 3)) c.add_term(k, rng.rational(-5, 5));
        op = op + WeylOp::monomial(c, i);
    }
    return op;
}

// Unrestricted Weyl operator (possibly order 0, non-constant lead).
inline WeylOp random_weyl_op(Rng& rng, int max_order = 3, int max_s_deg = 2) {
    WeylOp op;
    const int order = rng.range(0, max_order);
    for (int i = 0; i <= order; ++i) {
        UniPoly c(Var::s);
        const int sdeg = rng.range(0, max_s_deg);
        for (int k = 0; k <= sdeg; ++k)
            if (rng.chance(1, 2)) c.add_term(k, rng.rational(-5, 5));
        op = op + WeylOp::monomial(c, i);
    }
    if (op.is_zero()) op = WeylOp::d();
    return op;
}

inline UniPoly random_z_poly(Rng& rng, int max_deg = 12) {
    UniPoly v(Var::z);
    const int deg = rng.range(0, max_deg);
    v.add_term(deg, rng.rational(-5, 5));
    for (int k = 0; k < deg; ++k)
        if (rng.chance(1, 2)) v.add_term(k, rng.rational(-5, 5));
    return v;
}

// Laurent operator usable as a module action: bot < 0 < top.
inline LaurentPoly random_laurent_action(Rng& rng, int max_top = 3, int max_bot = 3) {
    const int top = rng.range(1, max_top);
    const int bot = -rng.range(1, max_bot);
    LaurentPoly op = LaurentPoly::monomial(rng.rational(-5, 5), top);
    op.add_term(bot, rng.rational(-5, 5));
    for (int e = bot + 1; e < top; ++e)
        if (rng.chance(1, 3)) op.add_term(e, rng.rational(-5, 5));
    return op;
}

// Laurent polynomial supported in a band around the window, for reduce
// round-trip exercises.
inline LaurentPoly random_laurent_element(Rng& rng, int lo = -6, int hi = 6) {
    LaurentPoly v;
    for (int e = lo; e <= hi; ++e)
        if (rng.chance(1, 3)) v.add_term(e, rng.rational(-5, 5));
    if (v.is_zero()) v.add_term(rng.range(lo, hi), rng.rational(-5, 5));
    return v;
}

// Polynomial multiplication operator in lambda, degree in [min_deg, max_deg].
inline UniPoly random_lambda_poly(Rng& rng, int min_deg = 2, int max_deg = 4) {
    UniPoly p(Var::lambda);
    const int deg = rng.range(min_deg, max_deg);
    p.add_term(deg, rng.rational(-5, 5));
    for (int k = 0; k < deg; ++k)
        if (rng.chance(1, 2)) p.add_term(k, rng.rational(-5, 5));
    return p;
}

struct BehParams {
    Rational gamma;
    std::vector<Rational> a;
    std::vector<Rational> b;
};

// Small integer coefficient data with the nonzero constraints the
// finite-rank construction requires.
inline BehParams random_beh_params(Rng& rng, int max_d = 3) {
    BehParams p;
    p.gamma = Rational(rng.nonzero(-3, 3));
    const int d2 = rng.range(1, max_d);
    const int d1 = rng.range(1, max_d);
    p.a.resize(std::size_t(d2) + 1);
    p.b.resize(std::size_t(d1) + 1);
    for (auto& c : p.a) c = Rational(rng.range(-3, 3));
    for (auto& c : p.b) c = Rational(rng.range(-3, 3));
    p.a.back() = Rational(rng.nonzero(-3, 3));
    p.b.back() = Rational(rng.nonzero(-3, 3));
    return p;
}

} // namespace speccurve

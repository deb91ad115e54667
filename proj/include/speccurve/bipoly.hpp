#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "speccurve/errors.hpp"
#include "speccurve/rational.hpp"
#include "speccurve/unipoly.hpp"

namespace speccurve {

// Sparse bivariate polynomial over Q in a fixed pair of axes. The first
// axis is printed as "x" and the second as "y"; the spectral layer uses
// x for the module variable and y for the eigenvalue. Exponents >= 0.
class BiPoly {
public:
    using Exp = std::pair<int, int>; // (e_x, e_y)

    BiPoly() = default;
    explicit BiPoly(const Rational& c) {
        if (c != 0) coeffs_[{0, 0}] = c;
    }

    static BiPoly monomial(const Rational& c, int ex, int ey) {
        if (ex < 0 || ey < 0) throw ValidationError("negative exponent in BiPoly");
        BiPoly p;
        if (c != 0) p.coeffs_[{ex, ey}] = c;
        return p;
    }

    static BiPoly var_x() { return monomial(1, 1, 0); }
    static BiPoly var_y() { return monomial(1, 0, 1); }

    // Embeds a univariate polynomial along one axis.
    static BiPoly from_unipoly_x(const UniPoly& p) {
        BiPoly out;
        for (const auto& [e, c] : p.terms()) out.coeffs_[{e, 0}] = c;
        return out;
    }
    static BiPoly from_unipoly_y(const UniPoly& p) {
        BiPoly out;
        for (const auto& [e, c] : p.terms()) out.coeffs_[{0, e}] = c;
        return out;
    }

    bool is_zero() const { return coeffs_.empty(); }

    const std::map<Exp, Rational>& terms() const { return coeffs_; }

    Rational coeff(int ex, int ey) const {
        auto it = coeffs_.find({ex, ey});
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    int degree_x() const {
        if (coeffs_.empty()) return kNegInfDegree;
        int d = 0;
        for (const auto& [e, c] : coeffs_) d = std::max(d, e.first);
        return d;
    }
    int degree_y() const {
        if (coeffs_.empty()) return kNegInfDegree;
        int d = 0;
        for (const auto& [e, c] : coeffs_) d = std::max(d, e.second);
        return d;
    }
    int total_degree() const {
        if (coeffs_.empty()) return kNegInfDegree;
        int d = 0;
        for (const auto& [e, c] : coeffs_) d = std::max(d, e.first + e.second);
        return d;
    }

    void add_term(int ex, int ey, const Rational& c) {
        if (ex < 0 || ey < 0) throw ValidationError("negative exponent in BiPoly");
        if (c == 0) return;
        auto [it, inserted] = coeffs_.emplace(Exp{ex, ey}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    BiPoly operator-() const {
        BiPoly p;
        for (const auto& [e, c] : coeffs_) p.coeffs_[e] = -c;
        return p;
    }

    BiPoly operator+(const BiPoly& rhs) const {
        BiPoly out = *this;
        for (const auto& [e, c] : rhs.coeffs_) out.add_term(e.first, e.second, c);
        return out;
    }

    BiPoly operator-(const BiPoly& rhs) const {
        BiPoly out = *this;
        for (const auto& [e, c] : rhs.coeffs_) out.add_term(e.first, e.second, -c);
        return out;
    }

    BiPoly operator*(const BiPoly& rhs) const {
        BiPoly out;
        for (const auto& [e1, c1] : coeffs_)
            for (const auto& [e2, c2] : rhs.coeffs_)
                out.add_term(e1.first + e2.first, e1.second + e2.second, c1 * c2);
        return out;
    }

    BiPoly operator*(const Rational& c) const {
        BiPoly out;
        if (c == 0) return out;
        for (const auto& [e, k] : coeffs_) out.coeffs_[e] = k * c;
        return out;
    }

    bool operator==(const BiPoly& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const BiPoly& rhs) const { return !(*this == rhs); }

    BiPoly derivative_x() const {
        BiPoly out;
        for (const auto& [e, c] : coeffs_)
            if (e.first > 0) out.coeffs_[{e.first - 1, e.second}] = c * e.first;
        return out;
    }
    BiPoly derivative_y() const {
        BiPoly out;
        for (const auto& [e, c] : coeffs_)
            if (e.second > 0) out.coeffs_[{e.first, e.second - 1}] = c * e.second;
        return out;
    }

    // Leading coefficient under graded-lex with x < y (total degree first,
    // then y-exponent). This is the order the sign normalization uses.
    Rational grlex_leading_coeff() const {
        Rational lc(0);
        Exp best{-1, -1};
        bool have = false;
        for (const auto& [e, c] : coeffs_) {
            if (!have || grlex_less(best, e)) {
                best = e;
                lc = c;
                have = true;
            }
        }
        return lc;
    }

    // Terms in canonical print order: lexicographic with y major, descending.
    std::vector<std::pair<Exp, Rational>> sorted_terms() const {
        std::vector<std::pair<Exp, Rational>> v(coeffs_.begin(), coeffs_.end());
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
            if (a.first.second != b.first.second) return a.first.second > b.first.second;
            return a.first.first > b.first.first;
        });
        return v;
    }

    std::string str(std::string_view xname = "x", std::string_view yname = "y") const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : sorted_terms()) {
            std::string varpart;
            if (e.first != 0) varpart = detail::power_str(xname, e.first);
            if (e.second != 0) {
                if (!varpart.empty()) varpart += "*";
                varpart += detail::power_str(yname, e.second);
            }
            detail::append_term(out, c, varpart);
        }
        return out;
    }

private:
    static bool grlex_less(const Exp& a, const Exp& b) {
        const int da = a.first + a.second, db = b.first + b.second;
        if (da != db) return da < db;
        return a.second < b.second;
    }

    std::map<Exp, Rational> coeffs_;
};

inline BiPoly operator*(const Rational& c, const BiPoly& p) { return p * c; }

// f(x, y) -> f(y, x).
inline BiPoly swap_xy(const BiPoly& f) {
    BiPoly out;
    for (const auto& [e, c] : f.terms()) out.add_term(e.second, e.first, c);
    return out;
}

// f(x, y) -> f(-y, x): the order-four curve transform matching
// (P, Q) -> (-Q, P) on operator pairs.
inline BiPoly fourier_xy(const BiPoly& f) {
    BiPoly out;
    for (const auto& [e, c] : f.terms()) {
        Rational k = (e.first % 2 == 0) ? c : Rational(-c);
        out.add_term(e.second, e.first, k);
    }
    return out;
}

inline BiPoly pow(const BiPoly& base, int k) {
    if (k < 0) throw ValidationError("negative power of a polynomial");
    BiPoly acc{Rational(1)};
    for (int i = 0; i < k; ++i) acc = acc * base;
    return acc;
}

// Exact division in Q[x][y]; throws logic_error if the division is not
// exact (callers only use it where exactness is guaranteed).
inline BiPoly exact_div(const BiPoly& num, const BiPoly& den) {
    if (den.is_zero()) throw std::logic_error("bivariate division by zero");

    // View both as polynomials in y with coefficients in Q[x].
    auto y_coeffs = [](const BiPoly& p) {
        std::map<int, UniPoly> m;
        for (const auto& [e, c] : p.terms())
            m.try_emplace(e.second, UniPoly(Var::x)).first->second.add_term(e.first, c);
        return m;
    };

    std::map<int, UniPoly> r = y_coeffs(num);
    const std::map<int, UniPoly> d = y_coeffs(den);
    const int dy = d.rbegin()->first;
    const UniPoly& dlead = d.rbegin()->second;

    BiPoly q;
    while (!r.empty()) {
        const int ry = r.rbegin()->first;
        if (ry < dy) throw std::logic_error("inexact bivariate division");
        UniPoly qc = exact_div(r.rbegin()->second, dlead);
        for (const auto& [e, c] : qc.terms()) q.add_term(e, ry - dy, c);
        for (const auto& [ey, cx] : d) {
            UniPoly prod = cx * qc;
            auto it = r.try_emplace(ey + ry - dy, UniPoly(Var::x)).first;
            it->second = it->second - prod;
            if (it->second.is_zero()) r.erase(it);
        }
    }
    return q;
}

// Scales f so its coefficients are integers with gcd 1 and the leading
// coefficient under graded-lex (x < y) is positive. Zero maps to zero.
inline BiPoly normalize_primitive(const BiPoly& f) {
    if (f.is_zero()) return f;
    mpz_class den_lcm(1);
    for (const auto& [e, c] : f.terms()) den_lcm = lcm(den_lcm, c.get_den());
    mpz_class num_gcd(0);
    for (const auto& [e, c] : f.terms()) num_gcd = gcd(num_gcd, mpz_class(c.get_num() * (den_lcm / c.get_den())));
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    BiPoly out = f * scale;
    if (out.grlex_leading_coeff() < 0) out = -out;
    return out;
}

} // namespace speccurve

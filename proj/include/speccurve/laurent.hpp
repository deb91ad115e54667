#pragma once

#include <map>
#include <string>

#include "speccurve/errors.hpp"
#include "speccurve/rational.hpp"
#include "speccurve/unipoly.hpp"

namespace speccurve {

// Sparse Laurent polynomial in lambda over Q: finitely many terms with
// integer (possibly negative) exponents. Zero coefficients never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& c) {
        if (c != 0) coeffs_[0] = c;
    }

    static LaurentPoly monomial(const Rational& c, int exp) {
        LaurentPoly p;
        if (c != 0) p.coeffs_[exp] = c;
        return p;
    }

    static LaurentPoly from_unipoly(const UniPoly& p) {
        LaurentPoly out;
        for (const auto& [e, c] : p.terms()) out.coeffs_[e] = c;
        return out;
    }

    bool is_zero() const { return coeffs_.empty(); }

    // Largest / smallest exponent with nonzero coefficient ("top" and
    // "bot" in the module contracts). Only defined for nonzero input.
    int top() const {
        require_nonzero();
        return coeffs_.rbegin()->first;
    }
    int bot() const {
        require_nonzero();
        return coeffs_.begin()->first;
    }

    const std::map<int, Rational>& terms() const { return coeffs_; }

    Rational coeff(int exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    void add_term(int exp, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = coeffs_.emplace(exp, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    LaurentPoly operator-() const {
        LaurentPoly p;
        for (const auto& [e, c] : coeffs_) p.coeffs_[e] = -c;
        return p;
    }

    LaurentPoly operator+(const LaurentPoly& rhs) const {
        LaurentPoly out = *this;
        for (const auto& [e, c] : rhs.coeffs_) out.add_term(e, c);
        return out;
    }

    LaurentPoly operator-(const LaurentPoly& rhs) const {
        LaurentPoly out = *this;
        for (const auto& [e, c] : rhs.coeffs_) out.add_term(e, -c);
        return out;
    }

    LaurentPoly operator*(const LaurentPoly& rhs) const {
        LaurentPoly out;
        for (const auto& [e1, c1] : coeffs_)
            for (const auto& [e2, c2] : rhs.coeffs_) out.add_term(e1 + e2, c1 * c2);
        return out;
    }

    LaurentPoly operator*(const Rational& c) const {
        LaurentPoly out;
        if (c == 0) return out;
        for (const auto& [e, k] : coeffs_) out.coeffs_[e] = k * c;
        return out;
    }

    bool operator==(const LaurentPoly& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            std::string varpart =
                it->first == 0 ? std::string() : detail::power_str(var_name(Var::lambda), it->first);
            detail::append_term(out, it->second, varpart);
        }
        return out;
    }

private:
    void require_nonzero() const {
        if (coeffs_.empty()) throw ValidationError("top/bot undefined for the zero Laurent polynomial");
    }

    std::map<int, Rational> coeffs_;
};

inline LaurentPoly operator*(const Rational& c, const LaurentPoly& p) { return p * c; }

inline LaurentPoly pow(const LaurentPoly& base, int k) {
    if (k < 0) {
        // Only monomials are invertible in Q[lambda, lambda^-1].
        if (base.terms().size() != 1)
            throw ValidationError("negative power of a non-monomial Laurent polynomial");
        const auto& [e, c] = *base.terms().begin();
        LaurentPoly inv = LaurentPoly::monomial(Rational(1) / c, -e);
        return pow(inv, -k);
    }
    LaurentPoly acc(Rational(1));
    for (int i = 0; i < k; ++i) acc = acc * base;
    return acc;
}

} // namespace speccurve

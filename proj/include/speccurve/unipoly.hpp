#pragma once

#include <climits>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "speccurve/errors.hpp"
#include "speccurve/rational.hpp"

namespace speccurve {

enum class Var { u, s, x, y, z, t, lambda };

inline std::string_view var_name(Var v) {
    switch (v) {
        case Var::u: return "u";
        case Var::s: return "s";
        case Var::x: return "x";
        case Var::y: return "y";
        case Var::z: return "z";
        case Var::t: return "t";
        case Var::lambda: return "L";
    }
    return "?";
}

// Degree of the zero polynomial; a distinguished "minus infinity" that
// compares below every attainable degree.
inline constexpr int kNegInfDegree = INT_MIN;

namespace detail {

// Appends one canonical term to a polynomial rendering. varpart is the
// already-formatted monomial ("u^2", "x*y^3", "" for the constant term).
inline void append_term(std::string& out, const Rational& c, const std::string& varpart) {
    const bool negative = c < 0;
    if (out.empty()) {
        if (negative) out += "-";
    } else {
        out += negative ? " - " : " + ";
    }
    Rational mag = negative ? Rational(-c) : c;
    if (varpart.empty()) {
        out += rat_str(mag);
    } else {
        if (mag != 1) {
            out += rat_str(mag);
            out += "*";
        }
        out += varpart;
    }
}

inline std::string power_str(std::string_view name, int exp) {
    std::string s(name);
    if (exp != 1) {
        s += "^";
        s += std::to_string(exp);
    }
    return s;
}

} // namespace detail

// Sparse univariate polynomial over Q with an explicit variable tag.
// Exponents are >= 0 and zero coefficients are never stored. Binary
// operations require matching tags, except that a constant (degree <= 0)
// operand adopts the other side's tag.
class UniPoly {
public:
    explicit UniPoly(Var v) : var_(v) {}
    UniPoly(Var v, const Rational& c) : var_(v) {
        if (c != 0) coeffs_[0] = c;
    }

    static UniPoly monomial(Var v, const Rational& c, int exp) {
        if (exp < 0) throw ValidationError("negative exponent in UniPoly");
        UniPoly p(v);
        if (c != 0) p.coeffs_[exp] = c;
        return p;
    }

    static UniPoly variable(Var v) { return monomial(v, 1, 1); }

    Var var() const { return var_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return degree() <= 0; }

    int degree() const { return coeffs_.empty() ? kNegInfDegree : coeffs_.rbegin()->first; }

    const std::map<int, Rational>& terms() const { return coeffs_; }

    Rational coeff(int exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    Rational leading_coeff() const {
        return coeffs_.empty() ? Rational(0) : coeffs_.rbegin()->second;
    }

    void add_term(int exp, const Rational& c) {
        if (exp < 0) throw ValidationError("negative exponent in UniPoly");
        if (c == 0) return;
        auto [it, inserted] = coeffs_.emplace(exp, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    UniPoly with_var(Var v) const {
        UniPoly p(v);
        p.coeffs_ = coeffs_;
        return p;
    }

    UniPoly operator-() const {
        UniPoly p(var_);
        for (const auto& [e, c] : coeffs_) p.coeffs_[e] = -c;
        return p;
    }

    UniPoly operator+(const UniPoly& rhs) const {
        UniPoly out(result_var(rhs, "+"));
        out.coeffs_ = coeffs_;
        for (const auto& [e, c] : rhs.coeffs_) out.add_term(e, c);
        return out;
    }

    UniPoly operator-(const UniPoly& rhs) const {
        UniPoly out(result_var(rhs, "-"));
        out.coeffs_ = coeffs_;
        for (const auto& [e, c] : rhs.coeffs_) out.add_term(e, -c);
        return out;
    }

    UniPoly operator*(const UniPoly& rhs) const {
        UniPoly out(result_var(rhs, "*"));
        for (const auto& [e1, c1] : coeffs_)
            for (const auto& [e2, c2] : rhs.coeffs_) out.add_term(e1 + e2, c1 * c2);
        return out;
    }

    UniPoly operator*(const Rational& c) const {
        UniPoly out(var_);
        if (c == 0) return out;
        for (const auto& [e, k] : coeffs_) out.coeffs_[e] = k * c;
        return out;
    }

    bool operator==(const UniPoly& rhs) const {
        if (coeffs_ != rhs.coeffs_) return false;
        // Tags must agree unless both sides are constants.
        return var_ == rhs.var_ || (is_constant() && rhs.is_constant());
    }
    bool operator!=(const UniPoly& rhs) const { return !(*this == rhs); }

    Rational evaluate(const Rational& v) const {
        Rational acc(0);
        int last = -1;
        // Horner over the sparse support, descending.
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            if (last < 0) {
                acc = it->second;
            } else {
                for (int k = it->first; k < last; ++k) acc *= v;
                acc += it->second;
            }
            last = it->first;
        }
        if (last > 0)
            for (int k = 0; k < last; ++k) acc *= v;
        return acc;
    }

    UniPoly derivative() const {
        UniPoly out(var_);
        for (const auto& [e, c] : coeffs_)
            if (e > 0) out.coeffs_[e - 1] = c * e;
        return out;
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return *this * (Rational(1) / leading_coeff());
    }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            std::string varpart =
                it->first == 0 ? std::string() : detail::power_str(var_name(var_), it->first);
            detail::append_term(out, it->second, varpart);
        }
        return out;
    }

private:
    Var result_var(const UniPoly& rhs, const char* op) const {
        if (var_ == rhs.var_) return var_;
        if (rhs.is_constant()) return var_;
        if (is_constant()) return rhs.var_;
        throw ValidationError(std::string("variable-tag mismatch in '") + op + "': " +
                              std::string(var_name(var_)) + " vs " +
                              std::string(var_name(rhs.var_)));
    }

    Var var_;
    std::map<int, Rational> coeffs_;
};

inline UniPoly operator*(const Rational& c, const UniPoly& p) { return p * c; }

// Quotient and remainder in Q[var]; the divisor must be nonzero.
inline std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den) {
    if (den.is_zero()) throw ValidationError("polynomial division by zero");
    UniPoly q(num.var());
    UniPoly r = num;
    const int dd = den.degree();
    const Rational lc = den.leading_coeff();
    while (!r.is_zero() && r.degree() >= dd) {
        const int shift = r.degree() - dd;
        const Rational f = r.leading_coeff() / lc;
        q.add_term(shift, f);
        for (const auto& [e, c] : den.terms()) r.add_term(e + shift, -(c * f));
    }
    return {q, r};
}

// Division that is known to be exact; a nonzero remainder indicates an
// internal invariant violation, not bad user input.
inline UniPoly exact_div(const UniPoly& num, const UniPoly& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) throw std::logic_error("inexact univariate division");
    return q;
}

inline UniPoly pow(const UniPoly& base, int k) {
    if (k < 0) throw ValidationError("negative power of a polynomial");
    UniPoly acc(base.var(), 1);
    for (int i = 0; i < k; ++i) acc = acc * base;
    return acc;
}

} // namespace speccurve

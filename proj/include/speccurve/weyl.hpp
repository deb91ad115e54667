#pragma once

#include <string>
#include <vector>

#include "speccurve/errors.hpp"
#include "speccurve/rational.hpp"
#include "speccurve/unipoly.hpp"

namespace speccurve {

// Element of the rational Weyl algebra in normal form: sum_i p_i(s) D^i
// with D = d/ds and the relation D s = s D + 1. coeffs_[i] holds p_i; the
// top entry is nonzero unless the operator is zero.
class WeylOp {
public:
    WeylOp() = default;

    static WeylOp constant(const Rational& c) {
        WeylOp w;
        if (c != 0) w.coeffs_.push_back(UniPoly(Var::s, c));
        return w;
    }

    // p(s) * D^dpow; accepts an s-tagged (or constant) coefficient.
    static WeylOp monomial(const UniPoly& coeff, int dpow) {
        if (dpow < 0) throw ValidationError("negative D-power in Weyl operator");
        if (!coeff.is_constant() && coeff.var() != Var::s)
            throw ValidationError("Weyl coefficients must be polynomials in s");
        WeylOp w;
        if (!coeff.is_zero()) {
            w.coeffs_.assign(dpow + 1, UniPoly(Var::s));
            w.coeffs_[dpow] = coeff.with_var(Var::s);
        }
        return w;
    }

    static WeylOp d(int k = 1) { return monomial(UniPoly(Var::s, 1), k); }
    static WeylOp s() { return monomial(UniPoly::variable(Var::s), 0); }

    bool is_zero() const { return coeffs_.empty(); }
    int order() const { return coeffs_.empty() ? kNegInfDegree : int(coeffs_.size()) - 1; }

    UniPoly coeff(int i) const {
        if (i < 0 || i >= int(coeffs_.size())) return UniPoly(Var::s);
        return coeffs_[i];
    }

    bool constant_leading_coeff() const {
        return !coeffs_.empty() && coeffs_.back().is_constant();
    }

    WeylOp operator-() const {
        WeylOp w = *this;
        for (auto& c : w.coeffs_) c = -c;
        return w;
    }

    WeylOp operator+(const WeylOp& rhs) const {
        WeylOp w;
        const std::size_t n = std::max(coeffs_.size(), rhs.coeffs_.size());
        w.coeffs_.assign(n, UniPoly(Var::s));
        for (std::size_t i = 0; i < n; ++i) w.coeffs_[i] = coeff(int(i)) + rhs.coeff(int(i));
        w.trim();
        return w;
    }

    WeylOp operator-(const WeylOp& rhs) const { return *this + (-rhs); }

    // Noncommutative product, normal-ordered via the Leibniz rule:
    // D^i q(s) = sum_k C(i,k) q^(k)(s) D^(i-k).
    WeylOp operator*(const WeylOp& rhs) const {
        WeylOp w;
        if (is_zero() || rhs.is_zero()) return w;
        w.coeffs_.assign(coeffs_.size() + rhs.coeffs_.size() - 1, UniPoly(Var::s));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
                if (rhs.coeffs_[j].is_zero()) continue;
                UniPoly der = rhs.coeffs_[j];
                Rational binom(1);
                for (std::size_t k = 0; k <= i; ++k) {
                    if (!der.is_zero())
                        w.coeffs_[i - k + j] = w.coeffs_[i - k + j] + coeffs_[i] * der * binom;
                    if (k == i || der.is_zero()) break;
                    binom = binom * Rational(long(i - k)) / Rational(long(k + 1));
                    der = der.derivative();
                }
            }
        }
        w.trim();
        return w;
    }

    WeylOp operator*(const Rational& c) const {
        if (c == 0) return WeylOp();
        WeylOp w = *this;
        for (auto& p : w.coeffs_) p = p * c;
        return w;
    }

    bool operator==(const WeylOp& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const WeylOp& rhs) const { return !(*this == rhs); }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (int i = int(coeffs_.size()) - 1; i >= 0; --i) {
            const auto& terms = coeffs_[i].terms();
            for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
                std::string varpart;
                if (it->first != 0) varpart = detail::power_str("s", it->first);
                if (i != 0) {
                    if (!varpart.empty()) varpart += "*";
                    varpart += detail::power_str("D", i);
                }
                detail::append_term(out, it->second, varpart);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<UniPoly> coeffs_;
};

inline WeylOp operator*(const Rational& c, const WeylOp& w) { return w * c; }

inline WeylOp commutator(const WeylOp& a, const WeylOp& b) { return a * b - b * a; }

inline WeylOp pow(const WeylOp& base, int k) {
    if (k < 0) throw ValidationError("negative power of a Weyl operator");
    WeylOp acc = WeylOp::constant(1);
    for (int i = 0; i < k; ++i) acc = acc * base;
    return acc;
}

// Action of a Weyl operator on C[z] through D -> (multiplication by z),
// s -> -d/dz. For a term p_i(s) D^i the operand is first multiplied by
// z^i, then p_i(-d/dz) is applied.
inline UniPoly z_action(const WeylOp& a, const UniPoly& v) {
    if (!v.is_constant() && v.var() != Var::z)
        throw ValidationError("z_action operates on polynomials in z");
    const UniPoly vz = v.with_var(Var::z);
    UniPoly out(Var::z);
    for (int i = 0; i <= a.order(); ++i) {
        const UniPoly p = a.coeff(i);
        if (p.is_zero()) continue;
        UniPoly der = UniPoly::monomial(Var::z, 1, i) * vz;
        int cur = 0;
        for (const auto& [k, c] : p.terms()) {
            while (cur < k && !der.is_zero()) {
                der = der.derivative();
                ++cur;
            }
            if (cur < k) break; // derivative vanished; higher terms contribute nothing
            out = out + der * (k % 2 == 0 ? c : Rational(-c));
        }
    }
    return out;
}

} // namespace speccurve

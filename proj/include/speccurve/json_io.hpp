#pragma once

#include "json.hpp"

#include "speccurve/bipoly.hpp"
#include "speccurve/constructions.hpp"
#include "speccurve/laurent.hpp"
#include "speccurve/matrix.hpp"
#include "speccurve/spectral.hpp"
#include "speccurve/unipoly.hpp"

namespace speccurve {

using nlohmann::json;

// Polynomials serialize as arrays of term objects
//   { "exps": [...], "num": "...", "den": "..." }
// with string-encoded integers, in the same order the pretty printer
// uses. Univariate and Laurent terms carry one exponent, bivariate two.

namespace json_detail {

inline json term(std::initializer_list<int> exps, const Rational& c) {
    json e = json::array();
    for (int v : exps) e.push_back(v);
    json t;
    t["exps"] = std::move(e);
    t["num"] = c.get_num().get_str();
    t["den"] = c.get_den().get_str();
    return t;
}

} // namespace json_detail

inline json to_json(const UniPoly& p) {
    json arr = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        arr.push_back(json_detail::term({it->first}, it->second));
    return arr;
}

inline json to_json(const LaurentPoly& p) {
    json arr = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        arr.push_back(json_detail::term({it->first}, it->second));
    return arr;
}

inline json to_json(const BiPoly& p) {
    json arr = json::array();
    for (const auto& [e, c] : p.sorted_terms())
        arr.push_back(json_detail::term({e.first, e.second}, c));
    return arr;
}

inline json to_json(const Matrix<UniPoly>& m) {
    json entries = json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) entries.push_back(to_json(m.at(i, j)));
    json out;
    out["rank"] = m.rows();
    out["variable"] = std::string(var_name(m.at(0, 0).var()));
    out["entries"] = std::move(entries);
    return out;
}

inline json to_json(const SpectralCurve& c) {
    json out;
    out["raw"] = to_json(c.raw);
    out["normal"] = to_json(c.normal);
    out["rank"] = c.rank;
    return out;
}

inline json to_json(const DualityReport& r) {
    json out;
    out["holds"] = r.holds;
    out["x_qp"] = to_json(r.x_qp);
    out["x_pq"] = to_json(r.x_pq);
    return out;
}

inline json to_json(const QuantizationReport& r) {
    json out;
    out["degrees_ok"] = r.degrees_ok;
    out["string_eq_ok"] = r.string_eq_ok;
    out["matrix_eq_ok"] = r.matrix_eq_ok;
    out["classical_commutes"] = r.classical_commutes;
    out["verdict"] = r.verdict;
    out["m0"] = to_json(r.m0);
    out["m1"] = to_json(r.m1);
    return out;
}

inline json to_json(const SpectralQuantizationReport& r) {
    json out;
    out["degrees_ok"] = r.degrees_ok;
    out["string_eq_ok"] = r.string_eq_ok;
    out["curve_eq_ok"] = r.curve_eq_ok;
    out["classical_commutes"] = r.classical_commutes;
    out["verdict"] = r.verdict;
    out["curve0"] = to_json(r.curve0);
    out["curve1"] = to_json(r.curve1);
    return out;
}

inline json to_json(const FourierCurveReport& r) {
    json out;
    out["holds"] = r.holds;
    out["lhs"] = to_json(r.lhs);
    out["base"] = to_json(r.base);
    out["rhs_raw"] = to_json(r.rhs_raw);
    out["rhs_normal"] = to_json(r.rhs_normal);
    return out;
}

inline json to_json(const BehInstance& inst) {
    json out;
    out["gamma"] = rat_str(inst.gamma);
    json a = json::array(), b = json::array();
    for (const auto& c : inst.a) a.push_back(rat_str(c));
    for (const auto& c : inst.b) b.push_back(rat_str(c));
    out["a"] = std::move(a);
    out["b"] = std::move(b);
    out["d1"] = inst.d1;
    out["d2"] = inst.d2;
    out["N"] = inst.n_window;
    out["P"] = to_json(inst.p);
    out["Q"] = to_json(inst.q);
    out["A"] = to_json(inst.a_companion);
    out["B"] = to_json(inst.b_companion);
    out["D1"] = to_json(inst.d1_mat);
    out["D2"] = to_json(inst.d2_mat);
    return out;
}

inline json to_json(const BehReport& r) {
    json out;
    out["holds"] = r.holds;
    out["lhs_raw"] = to_json(r.lhs_raw);
    out["rhs_raw"] = to_json(r.rhs_raw);
    out["lhs_normal"] = to_json(r.lhs_normal);
    out["rhs_normal"] = to_json(r.rhs_normal);
    out["scalar"] = r.scalar ? json(rat_str(*r.scalar)) : json(nullptr);
    out["d1_matches_modrep"] = r.d1_matches_modrep;
    out["d2_matches_modrep"] = r.d2_matches_modrep;
    return out;
}

} // namespace speccurve

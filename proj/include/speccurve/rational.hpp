#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "speccurve/errors.hpp"

namespace speccurve {

// Exact rational scalar. mpq_class canonical form is the invariant we need:
// lowest terms, positive denominator, zero stored as 0/1. All arithmetic
// preserves it; only raw construction needs an explicit canonicalize().
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat_from_string(std::string_view text) {
    Rational r;
    if (text.empty() || r.set_str(std::string(text), 10) != 0)
        throw ValidationError("malformed rational literal '" + std::string(text) + "'");
    if (r.get_den() == 0) throw ValidationError("rational with zero denominator");
    r.canonicalize();
    return r;
}

// "p/q" with "/1" omitted, e.g. "-3/4", "5".
inline std::string rat_str(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

} // namespace speccurve

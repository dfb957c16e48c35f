#pragma once

#include <gmpxx.h>

#include <string>

#include "genchar/errors.hpp"

namespace genchar {

// Exact arbitrary-precision rational. mpq_class keeps values canonical
// (lowest terms, positive denominator), which is exactly the invariant we
// need, so we use it directly rather than wrapping it.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p" or "p/q" with arbitrary-precision digits.
inline Rational rational_from_string(const std::string& s) {
    try {
        Rational r(s);
        if (r.get_den() == 0) fail(Errc::BadInput, "zero denominator in '" + s + "'");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        fail(Errc::BadInput, "malformed rational '" + s + "'");
    }
}

inline std::string rational_to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

} // namespace genchar

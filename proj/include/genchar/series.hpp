#pragma once

#include <climits>

#include "genchar/poly.hpp"

namespace genchar {

// Truncation rule for a Series: monomials are kept when their total degree
// over `vars` is <= cap, and (when x_floor is set) their total X-degree is
// >= x_floor. The floor realises series in x^{-1}: order-O truncation keeps
// X-degrees down to -O.
struct SeriesSpec {
    FamilyMask vars = 0;
    int cap = 0;
    long x_floor = LONG_MIN;

    bool has_x_floor() const { return x_floor != LONG_MIN; }

    bool operator==(const SeriesSpec& o) const {
        return vars == o.vars && cap == o.cap && x_floor == o.x_floor;
    }
    bool operator!=(const SeriesSpec& o) const { return !(*this == o); }
};

Poly truncate_poly(const Poly& p, const SeriesSpec& spec);

// A polynomial together with its truncation rule; arithmetic re-truncates,
// so values stay inside the quotient ring. Operands must share the spec.
class Series {
  public:
    Series() = default;
    Series(Poly body, SeriesSpec spec) : body_(truncate_poly(body, spec)), spec_(spec) {}

    const Poly& body() const { return body_; }
    const SeriesSpec& spec() const { return spec_; }

    Series operator-() const { return Series(-body_, spec_); }
    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;
    Series operator*(const Poly& p) const { return Series(body_ * p, spec_); }
    Series operator*(const Rational& r) const { return Series(body_ * r, spec_); }

    bool operator==(const Series& o) const { return spec_ == o.spec_ && body_ == o.body_; }
    bool operator!=(const Series& o) const { return !(*this == o); }

    bool is_zero() const { return body_.is_zero(); }

  private:
    Poly body_;
    SeriesSpec spec_;
};

// Checked entry point: rejects negative exponents in the series variables.
Series series_truncate(const Poly& p, FamilyMask vars, int cap,
                       long x_floor = LONG_MIN);

// Multiplicative inverse of a series whose degree-0 slice (in the series
// variables) is a nonzero rational.
Series geometric_inverse(const Series& s);

// Exact division by a polynomial that is homogeneous in the series
// variables (eg. a Vandermonde in the u's); every degree slice must divide
// exactly. The result's cap drops by the divisor degree.
Series series_divide_homogeneous(const Series& s, const Poly& divisor);

} // namespace genchar

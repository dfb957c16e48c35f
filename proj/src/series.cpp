#include "genchar/series.hpp"

#include <vector>

#include "genchar/errors.hpp"

namespace genchar {

Poly truncate_poly(const Poly& p, const SeriesSpec& spec) {
    Poly out;
    for (const auto& [m, c] : p.terms()) {
        if (m.degree(spec.vars) > spec.cap) continue;
        if (spec.has_x_floor() && m.degree(fam_mask(Family::X)) < spec.x_floor) continue;
        out.add_term(m, c);
    }
    return out;
}

Series Series::operator+(const Series& o) const {
    if (spec_ != o.spec_) fail(Errc::BadInput, "series spec mismatch in +");
    return Series(body_ + o.body_, spec_);
}

Series Series::operator-(const Series& o) const {
    if (spec_ != o.spec_) fail(Errc::BadInput, "series spec mismatch in -");
    return Series(body_ - o.body_, spec_);
}

Series Series::operator*(const Series& o) const {
    if (spec_ != o.spec_) fail(Errc::BadInput, "series spec mismatch in *");
    return Series(body_ * o.body_, spec_);
}

Series series_truncate(const Poly& p, FamilyMask vars, int cap, long x_floor) {
    if (cap < 0) fail(Errc::BadInput, "series cap must be >= 0");
    if (p.has_negative_exponent(vars))
        fail(Errc::NegativeSeriesExponent, "negative exponent in a series variable");
    SeriesSpec spec{vars, cap, x_floor};
    return Series(p, spec);
}

Series geometric_inverse(const Series& s) {
    const SeriesSpec& spec = s.spec();
    std::vector<Poly> slices(spec.cap + 1);
    for (const auto& [m, c] : s.body().terms()) {
        long d = m.degree(spec.vars);
        if (d >= 0 && d <= spec.cap) slices[d].add_term(m, c);
    }
    if (!slices[0].is_rational() || slices[0].is_zero())
        fail(Errc::NonUnitConstantTerm,
             "series constant term is not a nonzero rational");
    Rational inv0 = 1 / slices[0].rational_value();

    std::vector<Poly> out(spec.cap + 1);
    out[0] = Poly::constant(inv0);
    for (int d = 1; d <= spec.cap; ++d) {
        Poly acc;
        for (int e = 1; e <= d; ++e) {
            if (slices[e].is_zero() || out[d - e].is_zero()) continue;
            acc += slices[e] * out[d - e];
        }
        if (!acc.is_zero()) out[d] = truncate_poly(acc * (-inv0), spec);
    }
    Poly body;
    for (const auto& sl : out) body += sl;
    return Series(body, spec);
}

Series series_divide_homogeneous(const Series& s, const Poly& divisor) {
    const SeriesSpec& spec = s.spec();
    if (divisor.is_zero()) fail(Errc::BadInput, "division by zero");
    long g = divisor.max_degree(spec.vars);
    if (g != divisor.min_degree(spec.vars))
        fail(Errc::BadInput, "divisor is not homogeneous in the series variables");
    if (g > spec.cap) fail(Errc::CapTooSmall, "series cap below divisor degree");

    std::vector<Poly> slices(spec.cap + 1);
    for (const auto& [m, c] : s.body().terms()) {
        long d = m.degree(spec.vars);
        if (d < 0) fail(Errc::NegativeSeriesExponent, "negative series degree");
        if (d <= spec.cap) slices[d].add_term(m, c);
    }
    // Slices below the divisor degree must vanish for the quotient to exist.
    for (long d = 0; d < g; ++d)
        if (!slices[d].is_zero()) fail(Errc::NotDivisible, "series not divisible");

    SeriesSpec out_spec = spec;
    out_spec.cap = int(spec.cap - g);
    Poly body;
    for (long d = g; d <= spec.cap; ++d) {
        if (slices[d].is_zero()) continue;
        body += exact_divide(slices[d], divisor);
    }
    return Series(body, out_spec);
}

} // namespace genchar

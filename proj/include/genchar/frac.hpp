#pragma once

#include <utility>
#include <vector>

#include "genchar/poly.hpp"

namespace genchar {

// Ratio of a polynomial by a product of tracked factors. Signature
// characters and the g one-rows are ratios whose denominators are products
// of linear factors (x_i - c_m); keeping the denominator factored makes
// sums cheap and lets cancellation run factor by factor.
class Frac {
  public:
    using Factors = std::vector<std::pair<Poly, int>>; // factor -> multiplicity >= 1

    Frac() = default;
    explicit Frac(Poly p) : num_(std::move(p)) {}
    Frac(Poly num, Factors den);

    static Frac zero() { return Frac(); }
    static Frac one() { return Frac(Poly::one()); }

    const Poly& num() const { return num_; }
    const Factors& den() const { return den_; }
    Poly den_expanded() const;

    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.empty(); }
    // Requires is_poly(); signature characters of partitions land here.
    const Poly& as_poly() const;

    Frac operator-() const;
    Frac operator+(const Frac& o) const;
    Frac operator-(const Frac& o) const;
    Frac operator*(const Frac& o) const;
    Frac operator*(const Poly& p) const { return *this * Frac(p); }
    Frac operator*(const Rational& r) const;

    // Divide by a single factor (multiplicity e).
    Frac divided_by(const Poly& factor, int e = 1) const;

    bool operator==(const Frac& o) const; // cross-multiplication, exact
    bool operator!=(const Frac& o) const { return !(*this == o); }

    // Expand into a series in x^{-1}: every denominator factor must be of
    // the form x_i - (poly without that x_i); the result keeps X-degrees
    // >= -order plus the numerator contribution.
    Poly expand_inverse_x(long order) const;

  private:
    void reduce();

    Poly num_;
    Factors den_;
};

} // namespace genchar

#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "genchar/monomial.hpp"
#include "genchar/rational.hpp"

namespace genchar {

// Exact sparse multivariate Laurent polynomial over Q. Terms are stored in a
// hash map keyed by monomial; no zero coefficients are ever kept, so equality
// of term maps is equality of values (canonical form).
class Poly {
  public:
    using TermMap = std::unordered_map<Monomial, Rational, MonomialHash>;

    Poly() = default;

    static Poly zero() { return Poly(); }
    static Poly constant(const Rational& r);
    static Poly constant(long n) { return constant(rat(n)); }
    static Poly one() { return constant(1); }
    static Poly var(VarId v, int exp = 1);
    static Poly term(const Monomial& m, const Rational& coeff);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_rational() const; // zero or a single constant term
    Rational rational_value() const;

    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Rational coeff(const Monomial& m) const;

    void add_term(const Monomial& m, const Rational& coeff);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator*=(const Poly& o);
    Poly operator*(const Rational& r) const;
    Poly& operator*=(const Rational& r);

    // Nonnegative e always works; negative e requires a single invertible
    // (X/Y-monomial) term.
    Poly pow(int e) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    bool has_family(FamilyMask families) const;
    bool has_negative_exponent(FamilyMask families = FAM_ALL) const;
    // Degree extremes over nonzero terms; zero polynomial yields 0.
    long max_degree(FamilyMask families) const;
    long min_degree(FamilyMask families) const;

    // Terms with degree exactly d in the selected families.
    Poly slice(FamilyMask families, long d) const;
    // Coefficient of v^k, as a polynomial in the remaining variables.
    Poly coeff_of(VarId v, int k) const;
    // Largest k with coeff_of(v, k) nonzero (0 for the zero polynomial).
    int degree_in(VarId v) const;

    // Terms in canonical order (leading first). Pointers valid while *this lives.
    std::vector<const std::pair<const Monomial, Rational>*> sorted_terms() const;

    std::string to_string() const;

    // Serial reference and OpenMP kernels; operator* dispatches on size.
    static Poly mul_serial(const Poly& a, const Poly& b);
    static Poly mul_parallel(const Poly& a, const Poly& b);

  private:
    TermMap terms_;
};

inline Poly operator*(const Rational& r, const Poly& p) { return p * r; }

// Exact division; throws Errc::NotDivisible when a nonzero remainder shows up
// and Errc::BadInput on zero divisor.
Poly exact_divide(const Poly& num, const Poly& den);
std::optional<Poly> try_exact_divide(const Poly& num, const Poly& den);

// Simultaneous substitution. A variable occurring with a negative exponent
// must map to a single invertible term (Errc::NonInvertibleImage otherwise).
Poly substitute(const Poly& p, const std::map<VarId, Poly>& bindings);

// Sum of many polynomials, parallel when profitable (serial reference kept
// for tests and benchmarks).
Poly poly_sum(const std::vector<Poly>& parts);
Poly poly_sum_serial(const std::vector<Poly>& parts);

// Total order on canonical forms (term lists compared leading-first);
// returns <0, 0, >0. Used to keep factor lists and witnesses deterministic.
int poly_cmp(const Poly& a, const Poly& b);

} // namespace genchar

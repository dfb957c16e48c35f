#pragma once

#include <map>
#include <vector>

#include "genchar/cspec.hpp"
#include "genchar/poly.hpp"

namespace genchar {

enum class SeqKind { Monomial, Factorial, Custom };

// An admissible polynomial sequence F = (f_n): deg f_n = n, monic, f_0 = 1.
// The factorial realisation f_k(x) = (x - c_0)...(x - c_{k-1}) extends to
// negative indices as series in x^{-1}; custom sequences may supply their
// own negative-part coefficient tables.
class AdmissibleSequence {
  public:
    static AdmissibleSequence monomial();
    static AdmissibleSequence factorial(CSpec c);
    // coeffs[n] lists f_n's coefficients from degree 0 up (size n+1);
    // neg_coeffs[n] (n >= 1) lists the series coefficients a_{n,k} of
    // f_{-n} = sum_{k>=n} a_{n,k} x^{-k}, starting at k = n.
    static AdmissibleSequence custom(std::map<int, std::vector<Rational>> coeffs,
                                     std::map<int, std::vector<Rational>> neg_coeffs = {});

    SeqKind kind() const { return kind_; }
    const CSpec& c() const;
    bool has_negative_part() const;

    // f_k evaluated at an arbitrary polynomial argument; k >= 0.
    Poly f_at(int k, const Poly& value) const;
    // f_k as a univariate polynomial in z.
    Poly f_poly(int k, VarId z) const;

    // Series of f_{-k} (k > 0) in powers of x^{-1}, truncated at order
    // `order` (terms x^{-k} .. x^{-order}).
    Poly f_negative_series(int k, VarId x, long order) const;
    // Coefficient a_{k,j} of x^{-j} in f_{-k}; polynomial in the c's for the
    // factorial case, rational for custom tables.
    Poly negative_coefficient(int k, int j) const;

    // True when f_n(0) = 0 for 0 < n <= upto.
    bool constant_term_free(int upto) const;

    Json to_json() const;
    static AdmissibleSequence from_json(const Json& j);

  private:
    AdmissibleSequence(SeqKind k) : kind_(k), c_(CSpec::zeros()) {}

    SeqKind kind_;
    CSpec c_;
    std::map<int, std::vector<Rational>> coeffs_;
    std::map<int, std::vector<Rational>> neg_coeffs_;
};

// Truncated dual sequence: coeff[n][k] is the u^k-coefficient of fhat_n,
// for 0 <= n, k <= cap. Obtained by inverting the unitriangular coefficient
// matrix of F; fhat_n has order n.
struct DualSequence {
    int cap = 0;
    std::vector<std::vector<Poly>> coeff;

    Poly entry_poly(int n, VarId u) const;
    // fhat_n evaluated at precomputed powers value^0..value^cap.
    Poly entry_at(int n, const std::vector<Poly>& value_powers) const;
};

DualSequence dual_sequence(const AdmissibleSequence& F, int cap);
// Closed form for the factorial sequence: fhat_k = u^k / prod_{l<=k}(1-u c_l).
DualSequence dual_sequence_factorial_closed_form(const CSpec& c, int cap);

// Truncated double dual: polynomials fcheck_n of degree n with
// sum_n f_{-n}(x) fcheck_n(v) = 1/(1 - x^{-1} v); fcheck_0 = 1 and the
// sequence is constant-term free.
struct DoubleDualSequence {
    int cap = 0;
    std::vector<std::vector<Poly>> coeff; // coeff[n][k]: v^k-coefficient of fcheck_n

    Poly entry_poly(int n, VarId v) const;
    Poly entry_at(int n, const std::vector<Poly>& value_powers) const;
};

DoubleDualSequence double_dual_sequence(const AdmissibleSequence& F, int cap);

} // namespace genchar

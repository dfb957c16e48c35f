#pragma once

#include "genchar/frac.hpp"
#include "genchar/matrix.hpp"
#include "genchar/partitions.hpp"
#include "genchar/sequences.hpp"
#include "genchar/series.hpp"

namespace genchar {

enum class CharFamily { A, C, B, D };

CharFamily family_from_string(const std::string& s);
std::string family_to_string(CharFamily f);

// The alternant of every family collapses to a type-A bialternant after
// pulling out the row factors of the Weyl denominator: the entry functions
// become monic polynomials psi_l in the node y = x + 1/x (type A: y = x).
//   A: psi_l(y) = f_l(y)
//   C: psi_l(y) = (x f_l(x) - xbar f_l(xbar)) / (x - xbar)
//   B: psi_l(y) = (x^{1/2} f_l(x) - xbar^{1/2} f_l(xbar)) / (x^{1/2} - xbar^{1/2})
//   D: psi_l(y) = f_l(x) + f_l(xbar)   (psi_0 = 2)
// Coefficients are cached per instance; instances are cheap and not shared
// across threads.
class PsiBasis {
  public:
    PsiBasis(CharFamily family, AdmissibleSequence seq);

    CharFamily family() const { return family_; }
    const AdmissibleSequence& sequence() const { return seq_; }

    // Coefficient vector of psi_l (degree-0 coefficient first, size l+1).
    const std::vector<Poly>& coeffs(int l) const;
    // psi_l evaluated against precomputed node powers (powers[d] = node^d).
    Poly eval(int l, const std::vector<Poly>& node_powers) const;

  private:
    CharFamily family_;
    AdmissibleSequence seq_;
    mutable std::vector<std::vector<Poly>> cache_;
};

// det[psi_{lambda_j + m - j}(node_i)] / V(nodes) for a partition lambda with
// l(lambda) <= m = nodes.size(), computed by Laplace expansion along the
// first column with node-subset memoisation; Vandermonde factors are
// divided out one at a time.
Poly bialternant(const PsiBasis& psi, const Partition& lambda, const std::vector<Poly>& nodes);

// Direct reference route: assemble the full alternant matrix, take the
// determinant, and divide by the Vandermonde factors. Serves as an oracle
// for the Laplace-recursion route in tests.
Poly bialternant_direct(const PsiBasis& psi, const Partition& lambda,
                        const std::vector<Poly>& nodes);

std::vector<Poly> x_nodes(int n);          // x_1..x_n
std::vector<Poly> y_nodes(int n);          // x_i + xbar_i
std::vector<Poly> xxbar_nodes(int n);      // x_1..x_n, xbar_1..xbar_n
std::vector<Poly> xxbar1_nodes(int n);     // ... plus the constant 1

// Straight characters of partitions (exact Laurent polynomials).
Poly schur(const AdmissibleSequence& F, const Partition& lambda, int n);
Poly symplectic(const AdmissibleSequence& F, const Partition& lambda, int n);
Poly odd_orthogonal(const AdmissibleSequence& F, const Partition& lambda, int n);
Poly even_orthogonal(const AdmissibleSequence& F, const Partition& lambda, int n);
// Even orthogonal alternant ratio without the eta prefactor.
Poly even_orthogonal_raw(const AdmissibleSequence& F, const Partition& lambda, int n);
Poly character(CharFamily fam, const AdmissibleSequence& F, const Partition& lambda, int n);

// Exact signature Schur function; factorial sequences reduce to a partition
// through the shift identity and return a fraction with denominator
// prod_i (x_i - c_{-1}) ... (x_i - c_{-k}); monomial sequences collapse to
// Laurent polynomials. General custom sequences are rejected in exact mode.
Frac schur_signature(const AdmissibleSequence& F, const Signature& lambda);

// Truncated-series signature Schur for sequences with a negative part:
// Laurent series keeping X-degrees >= -order.
Poly schur_signature_series(const AdmissibleSequence& F, const Signature& lambda, long order);

// One-row characters. h: row (k); e: column (1^k); g: the rational one-row
// s_{(k,0,...,0)^* - (1^n)} of the factorial sequence.
Poly one_row_h(CharFamily fam, const AdmissibleSequence& F, int k, int n);
Poly one_row_e(CharFamily fam, const AdmissibleSequence& F, int k, int n);
Frac one_row_g(const CSpec& c, int k, int n);
// h over an explicit node list (doubled alphabets for the h-determinants).
Poly h_in_nodes(const AdmissibleSequence& F, int k, const std::vector<Poly>& nodes);

// Type-A one-row for arbitrary integer k on m variables, with the
// straightening convention: k in (-m, 0) gives 0 (repeated alternant
// column); k <= -m picks up the sign of sorting the column index back in.
Frac one_row_signature_a(const AdmissibleSequence& F, int k, int m);

// Dual and double dual Schur functions.
Series dual_schur(const DualSequence& fhat, const Partition& lambda, int n, int cap);
Poly double_dual_schur(const DoubleDualSequence& fcheck, const Partition& nu, int q);

// Gelfand-Tsetlin evaluation of the factorial signature character. The
// shift convention is locked empirically against the bialternant (see
// gt_convention notes in the implementation); PaperPlusOne is kept for the
// convention-lock test only.
enum class GtConvention { Locked, PlusOne };
Frac gt_character(const Signature& lambda, const CSpec& c,
                  GtConvention conv = GtConvention::Locked);
Frac gt_character_serial(const Signature& lambda, const CSpec& c,
                         GtConvention conv = GtConvention::Locked);

} // namespace genchar

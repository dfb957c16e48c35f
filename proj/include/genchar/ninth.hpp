#pragma once

#include "genchar/characters.hpp"
#include "genchar/matrix.hpp"
#include "genchar/partitions.hpp"

namespace genchar {

struct CheckReport; // identities.hpp

// Ring of the abstract one-row indeterminates h_{r,s} (r >= 1, s in Z) with
// the shift automorphism phi: h_{r,s} -> h_{r,s+1}. The conventions
// h_{0,s} = 1 and h_{r,s} = 0 for r < 0 live in hring_h, never in storage.
namespace hring {

Poly h(int r, int s);
// Apply phi^k (shift every H-variable's s-index by k).
Poly phi(const Poly& p, int k = 1);

// e_r = s_{(1^r)} = det[phi^{1-j} h_{1-i+j}]; 0 for r < 0, 1 for r = 0.
Poly e(int r);

// Skew Schur s_{lambda/mu} = det[phi^{mu_j + 1 - j} h_{lambda_i - mu_j - i + j}].
Poly skew_schur(const Partition& lambda, const Partition& mu, int n);
inline Poly schur(const Partition& lambda, int n) { return skew_schur(lambda, Partition(), n); }

// Symplectic / orthogonal one-parameter-family characters:
//   sp_lambda = 1/2 det[phi^{1-j} h_{l_i-i+j} + phi^{j-1} h_{l_i-i-j+2}]
//   o_lambda  =     det[phi^{1-j} h_{l_i-i+j} - phi^{1+j} h_{l_i-i-j}]
// Straight sp is asserted h-integral (the half cancels).
Poly sp(const Partition& lambda, int n);
Poly o(const Partition& lambda, int n);

// Skew variants, defined as minors of the folded matrices below.
Poly sp_skew(const Partition& lambda, const Partition& mu, int n, int m);
Poly o_skew(const Partition& lambda, const Partition& mu, int n, int m);

} // namespace hring

// The six lower-unitriangular matrices over the h-ring, size (N+1)x(N+1)
// with N + 1 = n + m:
//   A      = [phi^{1-n+j} h_{i-j}]
//   B      = [(-1)^{i-j} phi^{i-n} e_{i-j}]
//   Aplus  : columns j < n-1 folded by A[i][2(n-1)-j]
//   Bminus : rows i > n-1 folded by -B[2(n-1)-i][j]
//   Acirc  : columns j < n folded by -A[i][2n-j]
//   Bcross : rows i > n folded by +B[2n-i][j]
struct NkMatrices {
    int n = 0, m = 0;
    PolyMatrix a, b, a_plus, b_minus, a_circ, b_cross;
};

NkMatrices build_nk_matrices(int n, int m);

// Minor of `mat` with rows lambda_i + n - i and columns mu_j + n - j.
Poly character_minor(const PolyMatrix& mat, const Partition& lambda, const Partition& mu, int n);

// A.B = Aplus.Bminus = Acirc.Bcross = I, exactly.
CheckReport check_inverse_pairs(int n, int m);

enum class NinthNkFamily { A, C, O };
// Naegelsbach-Kostka: the h-determinant equals the e-determinant.
// Family A admits a skew shape mu.
CheckReport check_ninth_nk(NinthNkFamily family, const Partition& lambda, const Partition& mu,
                           int n, int m);

// Specialising h_{r,s} -> h_r[x,xbar | tau^{s-n} c] (type C) or the two
// orthogonal specialisations reproduces the factorial characters.
CheckReport check_ninth_specialisation_sp(const Partition& lambda, int n, const CSpec& c);
CheckReport check_ninth_specialisation_o(const Partition& lambda, int n, const CSpec& c);
CheckReport check_ninth_specialisation_so(const Partition& lambda, int n, const CSpec& c);

} // namespace genchar

#pragma once

#include <string>
#include <vector>

#include "genchar/characters.hpp"
#include "genchar/json_io.hpp"

namespace genchar {

// Outcome of one identity check. `difference` is identically zero exactly
// when the identity holds at the stated truncation; when the difference is
// large only its lowest-degree term is kept as the witness.
struct CheckReport {
    std::string identity;
    Json parameters = Json::object();
    bool holds = false;
    Poly difference;
    size_t difference_terms = 0;
    bool difference_truncated = false;
    std::string note;
    double elapsed_ms = 0.0;

    Json to_json() const;
};

// Cauchy: sum_l s_l(x) shat_l(u) = 1/prod(1 - x_i u_j), mod u-degree > cap.
CheckReport check_cauchy(const AdmissibleSequence& F, int n, int cap);

// Littlewood C/B/D: sum_l g_l(x) shat_l(u) against the closed product;
// family D requires a constant-term-free sequence.
CheckReport check_littlewood(CharFamily family, const AdmissibleSequence& F, int n, int cap);

// Littlewood A: sum over lambda = (mu, nu) of s_{lambda-(q^n)}(x)
// shat_mu(u) scheck_nu(v) against the closed product, truncated jointly at
// (u,v)-degree cap and at x^{-1}-order cap (the order bound keeps the
// enumeration finite and the comparison exact).
CheckReport check_littlewood_a(const AdmissibleSequence& F, int n, int p, int q, int cap);

// Dual Cauchy: finite sum over lambda inside the n x m box, exact equality.
CheckReport check_dual_cauchy(CharFamily family, const AdmissibleSequence& F, int n, int m);

// Unflagged Jacobi-Trudi in types C/B/D for the factorial sequence; needs
// the negative cut (and c_0 = 0 in type D).
CheckReport check_jt(CharFamily family, const CSpec& c, const Partition& lambda, int n);

// Block Jacobi-Trudi for factorial signature Schur functions.
CheckReport check_jt_a(const CSpec& c, const Signature& lambda);

enum class FlaggedKind { JT, NK, Giambelli };
std::string flagged_kind_name(FlaggedKind k);

// Flagged Jacobi-Trudi / Naegelsbach-Kostka / Giambelli, all four families.
// Signatures are accepted for type A JT only.
CheckReport check_flagged(FlaggedKind kind, CharFamily family, const AdmissibleSequence& F,
                          const Signature& lambda, int n);

enum class GenfunFamily { A, C, B, D, AConvenient, G };
std::string genfun_family_name(GenfunFamily f);

// One-row generating functions in t to degree cap (family G additionally
// works to x^{-1}-order cap + n).
CheckReport check_genfun(GenfunFamily family, const CSpec& c, int n, int cap);

// Cross-oracle: the Gelfand-Tsetlin sum equals the signature bialternant.
CheckReport check_gt_vs_bialternant(const Signature& lambda, const CSpec& c);

// Negative control: type C Jacobi-Trudi with the 1/2 prefactor dropped;
// expected to fail with a nonzero witness.
CheckReport check_jt_c_no_half(const CSpec& c, const Partition& lambda, int n);

// Stable identity ids for the CLI.
std::vector<std::string> identity_catalogue();

// Run one identity from a JSON invocation ({"identity": ..., "family": ...,
// "lambda": [...], "n": ..., ...}); shared by `check` and `batch`.
CheckReport run_identity(const Json& invocation);

} // namespace genchar

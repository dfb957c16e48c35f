#include "genchar/characters.hpp"

#include <algorithm>

#include "genchar/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace genchar {

namespace {

// Scratch variable for univariate work; it never leaks into results because
// only its coefficients are kept.
const VarId kScratch = VarId::x(1);

// Rewrite a symmetric Laurent polynomial in z (invariant under z <-> 1/z)
// as a polynomial in y = z + 1/z, returning the coefficient vector.
std::vector<Poly> symmetric_to_y_coeffs(Poly p, VarId z) {
    int deg = 0;
    for (const auto& [m, c] : p.terms()) deg = std::max(deg, m.exponent(z));
    std::vector<Poly> coeffs(deg + 1);
    Poly y = Poly::var(z) + Poly::var(z, -1);
    for (int d = deg; d >= 1; --d) {
        Poly cd = p.coeff_of(z, d);
        if (cd.is_zero()) continue;
        coeffs[d] = cd;
        p -= cd * y.pow(d);
    }
    // What is left must be z-free.
    if (p.degree_in(z) != 0 || p.has_negative_exponent(fam_mask(Family::X) | fam_mask(Family::Y)))
        fail(Errc::BadInput, "polynomial is not symmetric under z <-> 1/z");
    coeffs[0] = p;
    return coeffs;
}

Poly substitute_square(const Poly& p, VarId z, VarId x) {
    // z^{2k} -> x^k; odd exponents are a half-integer residue.
    Poly out;
    for (const auto& [m, c] : p.terms()) {
        std::vector<Monomial::Entry> es;
        for (const auto& [v, e] : m.entries()) {
            if (v == z) {
                if (e % 2 != 0)
                    fail(Errc::OddHalfExponentResidue, "odd half-power exponent survived");
                if (e != 0) es.push_back({x, e / 2});
            } else {
                es.push_back({v, e});
            }
        }
        out.add_term(Monomial(std::move(es)), c);
    }
    return out;
}

} // namespace

CharFamily family_from_string(const std::string& s) {
    if (s == "a" || s == "A") return CharFamily::A;
    if (s == "c" || s == "C") return CharFamily::C;
    if (s == "b" || s == "B") return CharFamily::B;
    if (s == "d" || s == "D") return CharFamily::D;
    fail(Errc::BadInput, "unknown family '" + s + "' (expected a|c|b|d)");
}

std::string family_to_string(CharFamily f) {
    switch (f) {
        case CharFamily::A: return "a";
        case CharFamily::C: return "c";
        case CharFamily::B: return "b";
        case CharFamily::D: return "d";
    }
    return "?";
}

PsiBasis::PsiBasis(CharFamily family, AdmissibleSequence seq)
    : family_(family), seq_(std::move(seq)) {}

const std::vector<Poly>& PsiBasis::coeffs(int l) const {
    if (l < 0) fail(Errc::BadInput, "psi index must be >= 0");
    if (int(cache_.size()) > l && !cache_[l].empty()) return cache_[l];
    if (int(cache_.size()) <= l) cache_.resize(l + 1);

    const VarId z = kScratch;
    std::vector<Poly> coeffs;
    switch (family_) {
        case CharFamily::A: {
            Poly f = seq_.f_poly(l, z);
            coeffs.resize(l + 1);
            for (int d = 0; d <= l; ++d) coeffs[d] = f.coeff_of(z, d);
            break;
        }
        case CharFamily::C: {
            Poly f = seq_.f_poly(l, z);
            Poly fbar = substitute(f, {{z, Poly::var(z, -1)}});
            Poly num = Poly::var(z) * f - Poly::var(z, -1) * fbar;
            Poly q = exact_divide(num, Poly::var(z) - Poly::var(z, -1));
            coeffs = symmetric_to_y_coeffs(std::move(q), z);
            break;
        }
        case CharFamily::B: {
            // Work with z = x^{1/2}: f_l(z^2) keeps exponents integral.
            Poly f2 = seq_.f_at(l, Poly::var(z, 2));
            Poly f2bar = substitute(f2, {{z, Poly::var(z, -1)}});
            Poly num = Poly::var(z) * f2 - Poly::var(z, -1) * f2bar;
            Poly q = exact_divide(num, Poly::var(z) - Poly::var(z, -1));
            // Only even powers of the half variable may remain.
            Poly in_x = substitute_square(q, z, z);
            coeffs = symmetric_to_y_coeffs(std::move(in_x), z);
            break;
        }
        case CharFamily::D: {
            Poly f = seq_.f_poly(l, z);
            Poly fbar = substitute(f, {{z, Poly::var(z, -1)}});
            coeffs = symmetric_to_y_coeffs(f + fbar, z);
            break;
        }
    }
    if (int(coeffs.size()) != l + 1) coeffs.resize(l + 1);
    cache_[l] = std::move(coeffs);
    return cache_[l];
}

Poly PsiBasis::eval(int l, const std::vector<Poly>& node_powers) const {
    const std::vector<Poly>& cs = coeffs(l);
    Poly acc;
    for (int d = 0; d < int(cs.size()); ++d) {
        if (cs[d].is_zero()) continue;
        acc += cs[d] * node_powers[d];
    }
    return acc;
}

namespace {

struct BialternantCtx {
    const PsiBasis& psi;
    const std::vector<Poly>& nodes;
    std::vector<int> lambda; // padded to m entries
    std::vector<std::vector<Poly>> powers;
    std::vector<Poly> memo_n, memo_v;
    std::vector<char> have_n, have_v;
    Rational psi0;
};

const Poly& vandermonde_of(BialternantCtx& ctx, uint32_t mask) {
    if (ctx.have_v[mask]) return ctx.memo_v[mask];
    Poly out = Poly::one();
    int m = int(ctx.nodes.size());
    for (int a = 0; a < m; ++a) {
        if (!(mask & (1u << a))) continue;
        for (int b = a + 1; b < m; ++b)
            if (mask & (1u << b)) out *= ctx.nodes[a] - ctx.nodes[b];
    }
    ctx.memo_v[mask] = std::move(out);
    ctx.have_v[mask] = 1;
    return ctx.memo_v[mask];
}

const Poly& bialternant_rec(BialternantCtx& ctx, uint32_t mask) {
    if (ctx.have_n[mask]) return ctx.memo_n[mask];
    int m = int(ctx.nodes.size());
    int r = __builtin_popcount(mask);
    int d = m - r; // columns consumed so far
    Poly result;
    if (r == 0) {
        result = Poly::one();
    } else {
        bool tail_zero = true;
        for (int j = d; j < m; ++j)
            if (ctx.lambda[j] != 0) {
                tail_zero = false;
                break;
            }
        if (tail_zero) {
            // Remaining columns are the denominator shape; the ratio is the
            // constant psi_0 (1 for monic families, 2 in type D).
            result = Poly::constant(ctx.psi0);
        } else {
            int l = ctx.lambda[d] + r - 1;
            Poly num;
            int pos = 0;
            for (int i = 0; i < m; ++i) {
                if (!(mask & (1u << i))) continue;
                uint32_t sub = mask & ~(1u << i);
                Poly term = ctx.psi.eval(l, ctx.powers[i]) * bialternant_rec(ctx, sub);
                if (!term.is_zero()) term *= vandermonde_of(ctx, sub);
                num += (pos % 2 == 0) ? term : -term;
                ++pos;
            }
            // Divide the Vandermonde of this node subset back out, one
            // factor at a time.
            result = std::move(num);
            for (int a = 0; a < m && !result.is_zero(); ++a) {
                if (!(mask & (1u << a))) continue;
                for (int b = a + 1; b < m; ++b)
                    if (mask & (1u << b))
                        result = exact_divide(result, ctx.nodes[a] - ctx.nodes[b]);
            }
        }
    }
    ctx.memo_n[mask] = std::move(result);
    ctx.have_n[mask] = 1;
    return ctx.memo_n[mask];
}

BialternantCtx make_ctx(const PsiBasis& psi, const Partition& lambda,
                        const std::vector<Poly>& nodes) {
    int m = int(nodes.size());
    if (lambda.length() > m) fail(Errc::LengthExceedsN, "partition longer than node list");
    if (m > 20) fail(Errc::BadInput, "too many nodes");
    BialternantCtx ctx{psi, nodes, {}, {}, {}, {}, {}, {}, rat(0)};
    ctx.lambda.resize(m, 0);
    for (int i = 1; i <= lambda.length(); ++i) ctx.lambda[i - 1] = lambda.part(i);
    int maxdeg = m == 0 ? 0 : ctx.lambda.empty() ? 0 : ctx.lambda[0] + m - 1;
    ctx.powers.resize(m);
    for (int i = 0; i < m; ++i) {
        ctx.powers[i].resize(maxdeg + 1);
        ctx.powers[i][0] = Poly::one();
        for (int dd = 1; dd <= maxdeg; ++dd) ctx.powers[i][dd] = ctx.powers[i][dd - 1] * nodes[i];
    }
    ctx.memo_n.resize(size_t(1) << m);
    ctx.memo_v.resize(size_t(1) << m);
    ctx.have_n.assign(size_t(1) << m, 0);
    ctx.have_v.assign(size_t(1) << m, 0);
    const std::vector<Poly>& c0 = psi.coeffs(0);
    if (!c0[0].is_rational()) fail(Errc::BadInput, "psi_0 must be a rational constant");
    ctx.psi0 = c0[0].rational_value();
    return ctx;
}

} // namespace

Poly bialternant(const PsiBasis& psi, const Partition& lambda, const std::vector<Poly>& nodes) {
    if (nodes.empty()) return Poly::one();
    BialternantCtx ctx = make_ctx(psi, lambda, nodes);
    uint32_t full = uint32_t((size_t(1) << nodes.size()) - 1);
    return bialternant_rec(ctx, full);
}

Poly bialternant_direct(const PsiBasis& psi, const Partition& lambda,
                        const std::vector<Poly>& nodes) {
    int m = int(nodes.size());
    if (lambda.length() > m) fail(Errc::LengthExceedsN, "partition longer than node list");
    if (m == 0) return Poly::one();
    BialternantCtx ctx = make_ctx(psi, lambda, nodes);
    PolyMatrix mat(m, std::vector<Poly>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            mat[i][j] = psi.eval(ctx.lambda[j] + m - (j + 1), ctx.powers[i]);
    Poly det = determinant(mat);
    for (int a = 0; a < m && !det.is_zero(); ++a)
        for (int b = a + 1; b < m; ++b) det = exact_divide(det, nodes[a] - nodes[b]);
    return det;
}

std::vector<Poly> x_nodes(int n) {
    std::vector<Poly> out;
    for (int i = 1; i <= n; ++i) out.push_back(Poly::var(VarId::x(i)));
    return out;
}

std::vector<Poly> y_nodes(int n) {
    std::vector<Poly> out;
    for (int i = 1; i <= n; ++i)
        out.push_back(Poly::var(VarId::x(i)) + Poly::var(VarId::x(i), -1));
    return out;
}

std::vector<Poly> xxbar_nodes(int n) {
    std::vector<Poly> out;
    for (int i = 1; i <= n; ++i) out.push_back(Poly::var(VarId::x(i)));
    for (int i = 1; i <= n; ++i) out.push_back(Poly::var(VarId::x(i), -1));
    return out;
}

std::vector<Poly> xxbar1_nodes(int n) {
    std::vector<Poly> out = xxbar_nodes(n);
    out.push_back(Poly::one());
    return out;
}

namespace {

void require_length(const Partition& lambda, int n) {
    if (lambda.length() > n)
        fail(Errc::LengthExceedsN,
             "l(lambda) = " + std::to_string(lambda.length()) + " exceeds n = " + std::to_string(n));
}

} // namespace

Poly schur(const AdmissibleSequence& F, const Partition& lambda, int n) {
    require_length(lambda, n);
    PsiBasis psi(CharFamily::A, F);
    return bialternant(psi, lambda, x_nodes(n));
}

Poly symplectic(const AdmissibleSequence& F, const Partition& lambda, int n) {
    require_length(lambda, n);
    PsiBasis psi(CharFamily::C, F);
    return bialternant(psi, lambda, y_nodes(n));
}

Poly odd_orthogonal(const AdmissibleSequence& F, const Partition& lambda, int n) {
    require_length(lambda, n);
    PsiBasis psi(CharFamily::B, F);
    return bialternant(psi, lambda, y_nodes(n));
}

Poly even_orthogonal_raw(const AdmissibleSequence& F, const Partition& lambda, int n) {
    require_length(lambda, n);
    PsiBasis psi(CharFamily::D, F);
    return bialternant(psi, lambda, y_nodes(n));
}

Poly even_orthogonal(const AdmissibleSequence& F, const Partition& lambda, int n) {
    Poly raw = even_orthogonal_raw(F, lambda, n);
    bool eta_half = lambda.length() < n; // lambda_n = 0
    return eta_half ? raw * rat(1, 2) : raw;
}

Poly character(CharFamily fam, const AdmissibleSequence& F, const Partition& lambda, int n) {
    switch (fam) {
        case CharFamily::A: return schur(F, lambda, n);
        case CharFamily::C: return symplectic(F, lambda, n);
        case CharFamily::B: return odd_orthogonal(F, lambda, n);
        case CharFamily::D: return even_orthogonal(F, lambda, n);
    }
    fail(Errc::BadInput, "corrupt family");
}

Frac schur_signature(const AdmissibleSequence& F, const Signature& lambda) {
    int n = lambda.n();
    if (lambda.is_partition()) return Frac(schur(F, lambda.to_partition(), n));
    int k = -lambda.parts().back();
    switch (F.kind()) {
        case SeqKind::Monomial: {
            Poly num = schur(F, lambda.shifted(k).to_partition(), n);
            Frac out(num);
            for (int i = 1; i <= n; ++i)
                out = out.divided_by(Poly::var(VarId::x(i)), k);
            return out;
        }
        case SeqKind::Factorial: {
            // s_lambda[x|c] = s_{lambda + (k^n)}[x|tau^{-k} c] / prod_i [x_i|tau^{-k} c]^k.
            CSpec shifted = F.c().tau(-k);
            Poly num = schur(AdmissibleSequence::factorial(shifted), lambda.shifted(k).to_partition(), n);
            Frac::Factors den;
            for (int i = 1; i <= n; ++i)
                for (int l = 0; l < k; ++l)
                    den.push_back({Poly::var(VarId::x(i)) - shifted.lookup(l), 1});
            return Frac(std::move(num), std::move(den));
        }
        case SeqKind::Custom:
            fail(Errc::NegativePartsUnsupported,
                 "exact signature characters need a factorial or monomial sequence");
    }
    fail(Errc::BadInput, "corrupt sequence");
}

Poly schur_signature_series(const AdmissibleSequence& F, const Signature& lambda, long order) {
    int n = lambda.n();
    if (n == 0) return Poly::one();
    if (!F.has_negative_part() && !lambda.is_partition())
        fail(Errc::NegativePartsUnsupported, "sequence has no negative part");
    long pos = std::max(0, lambda.part(1) + n - 1);
    long work = order + pos * std::max(0, n - 1) + (long(n) * (n - 1)) / 2 + 1;
    const FamilyMask xmask = fam_mask(Family::X);

    // Alternant entries, series-expanded where the index is negative.
    std::vector<std::vector<Poly>> mat(n, std::vector<Poly>(n));
    for (int j = 1; j <= n; ++j) {
        int idx = lambda.part(j) + n - j;
        for (int i = 1; i <= n; ++i) {
            Poly xi = Poly::var(VarId::x(i));
            mat[i - 1][j - 1] =
                idx >= 0 ? F.f_at(idx, xi) : F.f_negative_series(-idx, VarId::x(i), work);
        }
    }
    Poly det = det_subset_dp(mat, Poly::one());
    // Divide by V(x) slice by slice; both sides are graded by total X-degree.
    Poly vd = vandermonde(x_nodes(n));
    long vdeg = (long(n) * (n - 1)) / 2;
    Poly out;
    long lo = det.min_degree(xmask), hi = det.max_degree(xmask);
    for (long e = lo; e <= hi; ++e) {
        Poly sl = det.slice(xmask, e);
        if (sl.is_zero()) continue;
        if (e - vdeg < -order) continue; // below the requested window
        out += exact_divide(sl, vd);
    }
    Poly clipped;
    for (const auto& [m, c] : out.terms())
        if (m.degree(xmask) >= -order) clipped.add_term(m, c);
    return clipped;
}

Poly h_in_nodes(const AdmissibleSequence& F, int k, const std::vector<Poly>& nodes) {
    if (k < 0) return Poly::zero();
    if (k == 0) return Poly::one();
    PsiBasis psi(CharFamily::A, F);
    return bialternant(psi, Partition({k}), nodes);
}

Poly one_row_h(CharFamily fam, const AdmissibleSequence& F, int k, int n) {
    if (k < 0) return Poly::zero();
    if (k == 0) return Poly::one();
    if (n == 0) return Poly::zero();
    Partition row({k});
    return character(fam, F, row, n);
}

Poly one_row_e(CharFamily fam, const AdmissibleSequence& F, int k, int n) {
    if (k < 0 || k > n) return Poly::zero();
    PsiBasis psi(fam == CharFamily::A ? CharFamily::A : fam, F);
    std::vector<Poly> nodes = (fam == CharFamily::A) ? x_nodes(n) : y_nodes(n);

    // Expand Q(t) = prod_i (node_i - t) (doubled in type D) in the psi
    // basis; the column character sits at basis index n - k.
    std::vector<Poly> q(n + 1);
    q[0] = Poly::one();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j >= 1; --j) q[j] = q[j] * nodes[i] - q[j - 1];
        q[0] = q[0] * nodes[i];
    }
    if (fam == CharFamily::D)
        for (auto& p : q) p *= rat(2);

    std::vector<Poly> gamma(n + 1);
    for (int r = n; r >= 0; --r) {
        const std::vector<Poly>& cs = psi.coeffs(r);
        if (!cs[r].is_rational() || cs[r].is_zero())
            fail(Errc::BadInput, "psi basis is not triangular");
        Rational lead = cs[r].rational_value();
        gamma[r] = q[r] * (1 / lead);
        for (int d = 0; d <= r; ++d)
            if (!cs[d].is_zero()) q[d] -= gamma[r] * cs[d];
    }
    Poly val = gamma[n - k];
    if ((n - k) % 2 != 0) val = -val;
    if (fam == CharFamily::D && k < n) val *= rat(1, 2);
    return val;
}

Frac one_row_g(const CSpec& c, int k, int n) {
    if (k < 0) return Frac::zero();
    std::vector<int> parts(n, -1);
    parts[n - 1] = -k - 1;
    return schur_signature(AdmissibleSequence::factorial(c), Signature(std::move(parts)));
}

Frac one_row_signature_a(const AdmissibleSequence& F, int k, int m) {
    if (m == 0) return k == 0 ? Frac::one() : Frac::zero();
    if (k >= 0) return Frac(one_row_h(CharFamily::A, F, k, m));
    if (k > -m) return Frac::zero(); // alternant column collides with a denominator column
    // Sort the column index k+m-1 < 0 past the m-1 denominator columns.
    std::vector<int> parts(m, -1);
    parts[m - 1] = k + m - 1;
    Frac val = schur_signature(F, Signature(std::move(parts)));
    if ((m - 1) % 2 != 0) val = -val;
    return val;
}

Series dual_schur(const DualSequence& fhat, const Partition& lambda, int n, int cap) {
    require_length(lambda, n);
    SeriesSpec out_spec{fam_mask(Family::U), cap, LONG_MIN};
    if (n == 0) return Series(Poly::one(), out_spec);
    int vdeg = n * (n - 1) / 2;
    int wcap = cap + vdeg;
    if (lambda.part(1) + n - 1 > fhat.cap || wcap > fhat.cap)
        fail(Errc::CapTooSmall, "dual sequence cap too small for this dual Schur function");
    SeriesSpec spec{fam_mask(Family::U), wcap, LONG_MIN};

    std::vector<std::vector<Poly>> upow(n);
    for (int i = 0; i < n; ++i) {
        upow[i].resize(wcap + 1);
        upow[i][0] = Poly::one();
        for (int d = 1; d <= wcap; ++d) upow[i][d] = upow[i][d - 1] * Poly::var(VarId::u(i + 1));
    }
    std::vector<std::vector<Series>> mat(n, std::vector<Series>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 1; j <= n; ++j)
            mat[i][j - 1] = Series(fhat.entry_at(lambda.part(j) + n - j, upow[i]), spec);
    Series det = det_subset_dp(mat, Series(Poly::one(), spec));

    std::vector<Poly> uvars;
    for (int i = 1; i <= n; ++i) uvars.push_back(Poly::var(VarId::u(i)));
    return series_divide_homogeneous(det, vandermonde(uvars));
}

Poly double_dual_schur(const DoubleDualSequence& fcheck, const Partition& nu, int q) {
    require_length(nu, q);
    if (q == 0) return Poly::one();
    if (nu.part(1) + q > fcheck.cap)
        fail(Errc::CapTooSmall, "double dual cap too small");
    std::vector<std::vector<Poly>> mat(q, std::vector<Poly>(q));
    for (int i = 1; i <= q; ++i) {
        for (int j = 1; j <= q; ++j) {
            int idx = nu.part(j) + q - j + 1; // >= 1
            // fcheck_idx is constant-term free; dividing by v shifts coefficients.
            if (!fcheck.coeff[idx][0].is_zero())
                fail(Errc::BadInput, "double dual entry has a constant term");
            Poly entry;
            for (int d = 1; d <= fcheck.cap; ++d)
                if (!fcheck.coeff[idx][d].is_zero())
                    entry += fcheck.coeff[idx][d] * Poly::var(VarId::v(i), d - 1);
            mat[i - 1][j - 1] = entry;
        }
    }
    Poly det = det_subset_dp(mat, Poly::one());
    for (int a = 1; a <= q && !det.is_zero(); ++a)
        for (int b = a + 1; b <= q; ++b)
            det = exact_divide(det, Poly::var(VarId::v(a)) - Poly::var(VarId::v(b)));
    return det;
}

namespace {

Frac factorial_power_frac(VarId x, const CSpec& c, int e) {
    if (e >= 0) {
        Poly acc = Poly::one();
        for (int l = 0; l < e; ++l) acc *= Poly::var(x) - c.lookup(l);
        return Frac(acc);
    }
    Frac::Factors den;
    for (int m = 1; m <= -e; ++m) den.push_back({Poly::var(x) - c.lookup(-m), 1});
    return Frac(Poly::one(), std::move(den));
}

Frac gt_weight(const GtPattern& g, const CSpec& c, GtConvention conv) {
    int n = int(g.size());
    Frac w = Frac::one();
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= i; ++j) {
            int gij = g[i - 1][j - 1];
            int below = (j <= i - 1) ? g[i - 2][j - 1] : 0;
            int shift = i - j + below + (conv == GtConvention::PlusOne ? 1 : 0);
            int e = gij - below;
            if (e == 0) continue;
            w = w * factorial_power_frac(VarId::x(i), c.tau(shift), e);
        }
    }
    return w;
}

} // namespace

Frac gt_character_serial(const Signature& lambda, const CSpec& c, GtConvention conv) {
    Frac acc;
    enumerate_gt_patterns(lambda.parts(),
                          [&](const GtPattern& g) { acc = acc + gt_weight(g, c, conv); });
    return acc;
}

Frac gt_character(const Signature& lambda, const CSpec& c, GtConvention conv) {
#ifdef _OPENMP
    if (parallel_enabled()) {
        std::vector<GtPattern> patterns = all_gt_patterns(lambda.parts());
        int nthreads = workers();
        std::vector<Frac> partial(nthreads);
#pragma omp parallel for schedule(dynamic, 8) num_threads(nthreads)
        for (long i = 0; i < long(patterns.size()); ++i) {
            Frac w = gt_weight(patterns[i], c, conv);
            partial[omp_get_thread_num()] = partial[omp_get_thread_num()] + w;
        }
        Frac acc;
        for (const auto& p : partial) acc = acc + p;
        return acc;
    }
#endif
    return gt_character_serial(lambda, c, conv);
}

} // namespace genchar

#include "genchar/ninth.hpp"

#include <chrono>
#include <map>

#include "genchar/identities.hpp"

namespace genchar {

namespace hring {

Poly h(int r, int s) {
    if (r < 0) return Poly::zero();
    if (r == 0) return Poly::one();
    return Poly::var(VarId::h(r, s));
}

Poly phi(const Poly& p, int k) {
    if (k == 0) return p;
    Poly out;
    for (const auto& [m, c] : p.terms()) {
        std::vector<Monomial::Entry> es;
        for (const auto& [v, e] : m.entries()) {
            if (v.family() == Family::H)
                es.push_back({VarId::h(v.h_r(), v.h_s() + k), e});
            else
                es.push_back({v, e});
        }
        out.add_term(Monomial(std::move(es)), c);
    }
    return out;
}

Poly e(int r) {
    if (r < 0) return Poly::zero();
    if (r == 0) return Poly::one();
    PolyMatrix mat(r, std::vector<Poly>(r));
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j) mat[i - 1][j - 1] = h(1 - i + j, 1 - j);
    return determinant(mat);
}

Poly skew_schur(const Partition& lambda, const Partition& mu, int n) {
    if (lambda.length() > n || mu.length() > n)
        fail(Errc::LengthExceedsN, "shape longer than n");
    PolyMatrix mat(n, std::vector<Poly>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            mat[i - 1][j - 1] = h(lambda.part(i) - mu.part(j) - i + j, mu.part(j) + 1 - j);
    return determinant(mat);
}

Poly sp(const Partition& lambda, int n) {
    if (lambda.length() > n) fail(Errc::LengthExceedsN, "l(lambda) > n");
    PolyMatrix mat(n, std::vector<Poly>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            mat[i - 1][j - 1] =
                h(lambda.part(i) - i + j, 1 - j) + h(lambda.part(i) - i - j + 2, j - 1);
    Poly det = determinant(mat) * rat(1, 2);
    // The first column doubles up, so the half must cancel.
    for (const auto& [m, c] : det.terms())
        if (!is_integer(c))
            fail(Errc::BadInput, "ninth sp determinant is not h-integral");
    return det;
}

Poly o(const Partition& lambda, int n) {
    if (lambda.length() > n) fail(Errc::LengthExceedsN, "l(lambda) > n");
    PolyMatrix mat(n, std::vector<Poly>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            mat[i - 1][j - 1] =
                h(lambda.part(i) - i + j, 1 - j) - h(lambda.part(i) - i - j, 1 + j);
    return determinant(mat);
}

Poly sp_skew(const Partition& lambda, const Partition& mu, int n, int m) {
    NkMatrices nk = build_nk_matrices(n, m);
    return character_minor(nk.a_plus, lambda, mu, n);
}

Poly o_skew(const Partition& lambda, const Partition& mu, int n, int m) {
    NkMatrices nk = build_nk_matrices(n, m);
    return character_minor(nk.a_circ, lambda, mu, n);
}

} // namespace hring

NkMatrices build_nk_matrices(int n, int m) {
    if (n < 1 || m < 1) fail(Errc::BadInput, "need n, m >= 1");
    int N = n + m - 1;
    NkMatrices out;
    out.n = n;
    out.m = m;
    auto zero_mat = [&] { return PolyMatrix(N + 1, std::vector<Poly>(N + 1)); };
    out.a = zero_mat();
    out.b = zero_mat();

    std::map<int, Poly> e_cache;
    auto e_of = [&](int r) {
        auto it = e_cache.find(r);
        if (it == e_cache.end()) it = e_cache.emplace(r, hring::e(r)).first;
        return it->second;
    };

    for (int i = 0; i <= N; ++i)
        for (int j = 0; j <= N; ++j) {
            out.a[i][j] = hring::h(i - j, 1 - n + j);
            Poly be = hring::phi(e_of(i - j), i - n);
            out.b[i][j] = ((i - j) % 2 != 0) ? -be : be;
        }

    auto at = [&](const PolyMatrix& mat, int i, int j) {
        if (i < 0 || j < 0 || i > N || j > N) return Poly::zero();
        return mat[i][j];
    };

    out.a_plus = out.a;
    out.b_minus = out.b;
    out.a_circ = out.a;
    out.b_cross = out.b;
    for (int i = 0; i <= N; ++i)
        for (int j = 0; j <= N; ++j) {
            if (j < n - 1) out.a_plus[i][j] = out.a[i][j] + at(out.a, i, 2 * (n - 1) - j);
            if (i > n - 1) out.b_minus[i][j] = out.b[i][j] - at(out.b, 2 * (n - 1) - i, j);
            if (j < n) out.a_circ[i][j] = out.a[i][j] - at(out.a, i, 2 * n - j);
            if (i > n) out.b_cross[i][j] = out.b[i][j] + at(out.b, 2 * n - i, j);
        }
    return out;
}

Poly character_minor(const PolyMatrix& mat, const Partition& lambda, const Partition& mu, int n) {
    int N = int(mat.size()) - 1;
    PolyMatrix sub(n, std::vector<Poly>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int row = lambda.part(i) + n - i;
            int col = mu.part(j) + n - j;
            if (row < 0 || col < 0 || row > N || col > N)
                fail(Errc::BadInput, "minor index out of range");
            sub[i - 1][j - 1] = mat[row][col];
        }
    return determinant(sub);
}

namespace {

using Clock = std::chrono::steady_clock;

CheckReport make_report(std::string id, Json params, Poly difference, Clock::time_point t0,
                        std::string note = "") {
    CheckReport r;
    r.identity = std::move(id);
    r.parameters = std::move(params);
    r.holds = difference.is_zero();
    r.difference_terms = difference.term_count();
    r.difference = std::move(difference);
    r.note = std::move(note);
    r.elapsed_ms =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(Clock::now() - t0)
            .count();
    return r;
}

Poly product_minus_identity(const PolyMatrix& a, const PolyMatrix& b) {
    size_t n = a.size();
    Poly diff;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Poly entry;
            for (size_t k = 0; k < n; ++k) {
                if (a[i][k].is_zero() || b[k][j].is_zero()) continue;
                entry += a[i][k] * b[k][j];
            }
            if (i == j) entry -= Poly::one();
            if (!entry.is_zero() && diff.is_zero()) diff = entry;
        }
    return diff;
}

std::map<VarId, Poly> h_specialisation(const Poly& p, int shift_base, const CSpec& c,
                                       const std::vector<Poly>& nodes) {
    std::map<VarId, Poly> bind;
    for (const auto& [m, coeff] : p.terms())
        for (const auto& [v, e] : m.entries()) {
            if (v.family() != Family::H || bind.count(v)) continue;
            bind[v] = h_in_nodes(AdmissibleSequence::factorial(c.tau(v.h_s() + shift_base)),
                                 v.h_r(), nodes);
        }
    return bind;
}

} // namespace

CheckReport check_inverse_pairs(int n, int m) {
    auto t0 = Clock::now();
    NkMatrices nk = build_nk_matrices(n, m);
    Poly diff = product_minus_identity(nk.a, nk.b);
    if (diff.is_zero()) diff = product_minus_identity(nk.a_plus, nk.b_minus);
    if (diff.is_zero()) diff = product_minus_identity(nk.a_circ, nk.b_cross);
    Json params{{"n", n}, {"m", m}};
    return make_report("ninth-inverse-pairs", params, diff, t0);
}

CheckReport check_ninth_nk(NinthNkFamily family, const Partition& lambda, const Partition& mu,
                           int n, int m) {
    auto t0 = Clock::now();
    if (lambda.length() > n) fail(Errc::LengthExceedsN, "l(lambda) > n");
    if (lambda.part(1) > m) fail(Errc::LengthExceedsN, "l(lambda') > m");
    Partition lc = lambda.conjugate();
    Partition mc = mu.conjugate();

    Poly lhs, rhs;
    std::string id;
    switch (family) {
        case NinthNkFamily::A: {
            id = "ninth-nk-a";
            lhs = hring::skew_schur(lambda, mu, n);
            PolyMatrix mat(m, std::vector<Poly>(m));
            for (int i = 1; i <= m; ++i)
                for (int j = 1; j <= m; ++j)
                    mat[i - 1][j - 1] =
                        hring::phi(hring::e(lc.part(i) - mc.part(j) - i + j), -mc.part(j) - 1 + j);
            rhs = determinant(mat);
            break;
        }
        case NinthNkFamily::C: {
            id = "ninth-nk-c";
            if (mu.length() > 0) fail(Errc::BadInput, "symplectic NK has no skew form");
            lhs = hring::sp(lambda, n);
            PolyMatrix mat(m, std::vector<Poly>(m));
            for (int i = 1; i <= m; ++i)
                for (int j = 1; j <= m; ++j)
                    mat[i - 1][j - 1] = hring::phi(
                        hring::e(lc.part(i) - i + j) - hring::e(lc.part(i) - i - j), j - 1);
            rhs = determinant(mat);
            break;
        }
        case NinthNkFamily::O: {
            id = "ninth-nk-o";
            if (mu.length() > 0) fail(Errc::BadInput, "orthogonal NK has no skew form");
            lhs = hring::o(lambda, n);
            PolyMatrix mat(m, std::vector<Poly>(m));
            for (int i = 1; i <= m; ++i)
                for (int j = 1; j <= m; ++j)
                    mat[i - 1][j - 1] =
                        hring::phi(hring::e(lc.part(i) - i + j), i - 1) +
                        hring::phi(hring::e(lc.part(i) - i - j + 2), 1 - i);
            rhs = determinant(mat) * rat(1, 2);
            break;
        }
    }
    Json params{{"lambda", lambda.parts()}, {"mu", mu.parts()}, {"n", n}, {"m", m}};
    return make_report(id, params, lhs - rhs, t0);
}

CheckReport check_ninth_specialisation_sp(const Partition& lambda, int n, const CSpec& c) {
    auto t0 = Clock::now();
    Poly abstract = hring::sp(lambda, n);
    Poly specialised = substitute(abstract, h_specialisation(abstract, -n, c, xxbar_nodes(n)));
    Poly expected = symplectic(AdmissibleSequence::factorial(c), lambda, n);
    Json params{{"lambda", lambda.parts()}, {"n", n}, {"c", c.to_json()}};
    return make_report("ninth-spec-sp", params, specialised - expected, t0,
                       "h_{r,s} -> h_r[x,xbar | tau^{s-n} c]");
}

CheckReport check_ninth_specialisation_so(const Partition& lambda, int n, const CSpec& c) {
    auto t0 = Clock::now();
    Poly abstract = hring::o(lambda, n);
    Poly specialised =
        substitute(abstract, h_specialisation(abstract, -n - 1, c, xxbar1_nodes(n)));
    Poly expected = odd_orthogonal(AdmissibleSequence::factorial(c), lambda, n);
    Json params{{"lambda", lambda.parts()}, {"n", n}, {"c", c.to_json()}};
    return make_report("ninth-spec-so", params, specialised - expected, t0,
                       "h_{r,s} -> h_r[x,xbar,1 | tau^{s-n-1} c]");
}

CheckReport check_ninth_specialisation_o(const Partition& lambda, int n, const CSpec& c) {
    auto t0 = Clock::now();
    Poly abstract = hring::o(lambda, n);
    Poly specialised = substitute(abstract, h_specialisation(abstract, -n, c, xxbar_nodes(n)));
    Poly expected = even_orthogonal(AdmissibleSequence::factorial(c), lambda, n);
    Json params{{"lambda", lambda.parts()}, {"n", n}, {"c", c.to_json()}};
    return make_report("ninth-spec-o", params, specialised - expected, t0,
                       "h_{r,s} -> h_r[x,xbar | tau^{s-n} c]");
}

} // namespace genchar

#include "genchar/identities.hpp"

#include <chrono>
#include <map>

#include "genchar/ninth.hpp"
#include "genchar/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace genchar {

namespace {

using Clock = std::chrono::steady_clock;

constexpr size_t kWitnessTermLimit = 200;

CheckReport finish(std::string id, Json params, Poly difference, Clock::time_point t0,
                   std::string note = "") {
    CheckReport r;
    r.identity = std::move(id);
    r.parameters = std::move(params);
    r.holds = difference.is_zero();
    r.difference_terms = difference.term_count();
    r.note = std::move(note);
    if (r.difference_terms > kWitnessTermLimit) {
        // Keep only the lowest-degree monomial as the witness.
        auto sorted = difference.sorted_terms();
        const auto* last = sorted.back();
        r.difference = Poly::term(last->first, last->second);
        r.difference_truncated = true;
    } else {
        r.difference = std::move(difference);
    }
    r.elapsed_ms =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(Clock::now() - t0)
            .count();
    return r;
}

// Parallel sum of per-lambda series bodies; results do not depend on the
// summation order (canonical form).
Poly sum_bodies(const std::vector<Partition>& lambdas,
                const std::function<Poly(const Partition&)>& term) {
#ifdef _OPENMP
    if (parallel_enabled() && lambdas.size() > 1) {
        int nthreads = workers();
        std::vector<Poly> partial(nthreads);
#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
        for (long i = 0; i < long(lambdas.size()); ++i) {
            Poly t = term(lambdas[i]);
            partial[omp_get_thread_num()] += t;
        }
        Poly acc;
        for (auto& p : partial) acc += p;
        return acc;
    }
#endif
    Poly acc;
    for (const auto& l : lambdas) acc += term(l);
    return acc;
}

Json seq_params(const AdmissibleSequence& F) { return F.to_json(); }

int dual_cap_needed(int n, int cap) {
    // dual_schur works at cap + C(n,2) and looks up indices to lambda_1+n-1.
    int vdeg = n * (n - 1) / 2;
    return cap + std::max(n >= 1 ? n - 1 : 0, vdeg);
}

} // namespace

Json CheckReport::to_json() const {
    Json j;
    j["identity"] = identity;
    j["parameters"] = parameters;
    j["verdict"] = holds ? "holds" : "fails";
    if (!holds) {
        j["difference"] = poly_to_json(difference);
        j["difference_terms"] = difference_terms;
        j["difference_truncated"] = difference_truncated;
    }
    if (!note.empty()) j["note"] = note;
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

CheckReport check_cauchy(const AdmissibleSequence& F, int n, int cap) {
    auto t0 = Clock::now();
    if (cap < 0) fail(Errc::BadInput, "cap must be >= 0");
    SeriesSpec spec{fam_mask(Family::U), cap, LONG_MIN};
    DualSequence fhat = dual_sequence(F, dual_cap_needed(n, cap));

    std::vector<Partition> lambdas = partitions_up_to(cap, n);
    Poly lhs = sum_bodies(lambdas, [&](const Partition& l) {
        return truncate_poly(schur(F, l, n) * dual_schur(fhat, l, n, cap).body(), spec);
    });

    Poly den = Poly::one();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            den *= Poly::one() - Poly::var(VarId::x(i)) * Poly::var(VarId::u(j));
    Series rhs = geometric_inverse(Series(den, spec));

    Json params{{"n", n}, {"truncate", cap}, {"sequence", seq_params(F)}};
    return finish("cauchy", params, lhs - rhs.body(), t0);
}

CheckReport check_littlewood(CharFamily family, const AdmissibleSequence& F, int n, int cap) {
    auto t0 = Clock::now();
    if (family == CharFamily::A) fail(Errc::BadInput, "use littlewood-a for the type A identity");
    if (family == CharFamily::D && !F.constant_term_free(cap + n + n * (n - 1) / 2))
        fail(Errc::NotConstantTermFree,
             "the even orthogonal Littlewood identity needs a constant-term-free sequence");
    SeriesSpec spec{fam_mask(Family::U), cap, LONG_MIN};
    DualSequence fhat = dual_sequence(F, dual_cap_needed(n, cap));

    std::vector<Partition> lambdas = partitions_up_to(cap, n);
    Poly lhs = sum_bodies(lambdas, [&](const Partition& l) {
        return truncate_poly(character(family, F, l, n) * dual_schur(fhat, l, n, cap).body(),
                             spec);
    });

    Poly den = Poly::one();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            den *= Poly::one() - Poly::var(VarId::x(i)) * Poly::var(VarId::u(j));
            den *= Poly::one() - Poly::var(VarId::x(i), -1) * Poly::var(VarId::u(j));
        }
    Series rhs = geometric_inverse(Series(den, spec));
    Poly num = Poly::one();
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            if (family == CharFamily::C && j == i) continue; // strict product in type C
            num *= Poly::one() - Poly::var(VarId::u(i)) * Poly::var(VarId::u(j));
        }
    rhs = rhs * num;
    if (family == CharFamily::B) {
        Poly b = Poly::one();
        for (int j = 1; j <= n; ++j) b *= Poly::one() - Poly::var(VarId::u(j));
        rhs = rhs * geometric_inverse(Series(b, spec));
    }

    Json params{{"family", family_to_string(family)},
                {"n", n},
                {"truncate", cap},
                {"sequence", seq_params(F)}};
    return finish("littlewood-" + family_to_string(family), params, lhs - rhs.body(), t0);
}

CheckReport check_littlewood_a(const AdmissibleSequence& F, int n, int p, int q, int cap) {
    auto t0 = Clock::now();
    if (p < 0 || q < 0 || p + q != n) fail(Errc::SplitMismatch, "need p + q = n");
    const long order = cap; // x^{-1} window; terms of deeper order cannot reach it
    SeriesSpec spec{fam_mask(Family::U) | fam_mask(Family::V), cap, -order};

    // Enumerate (mu, nu): u-order kills |mu| > cap, the x^{-1} order bound
    // n q + |nu| - |mu| > order kills deep nu.
    std::vector<std::pair<Partition, Partition>> shapes;
    int max_dd_index = 0;
    for (const Partition& mu : partitions_up_to(cap, p)) {
        long numax = order - long(n) * q + mu.weight();
        if (numax < 0) continue;
        for (const Partition& nu : partitions_up_to(int(numax), q)) {
            shapes.push_back({mu, nu});
            max_dd_index = std::max(max_dd_index, nu.part(1) + q);
        }
    }

    DualSequence fhat = dual_sequence(F, dual_cap_needed(p, cap));
    DoubleDualSequence fcheck;
    if (q > 0) fcheck = double_dual_sequence(F, max_dd_index);

    std::vector<Poly> terms(shapes.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers()) if (parallel_enabled())
#endif
    for (long i = 0; i < long(shapes.size()); ++i) {
        const auto& [mu, nu] = shapes[i];
        Signature sig = Signature::join(mu, nu, p, q).shifted(-q);
        Poly sx;
        if (F.kind() == SeqKind::Custom)
            sx = schur_signature_series(F, sig, order);
        else
            sx = schur_signature(F, sig).expand_inverse_x(order);
        Poly term = sx;
        if (p > 0) term *= dual_schur(fhat, mu, p, cap).body();
        if (q > 0) term *= double_dual_schur(fcheck, nu, q);
        terms[i] = truncate_poly(term, spec);
    }
    Poly lhs = poly_sum(terms);

    // RHS: prod (1-u_i v_j) / [prod (1-x_k u_i) prod (x_k - v_j)], the
    // second denominator block expanded through xbar_k / (1 - xbar_k v_j).
    Poly den = Poly::one();
    for (int k = 1; k <= n; ++k) {
        for (int i = 1; i <= p; ++i)
            den *= Poly::one() - Poly::var(VarId::x(k)) * Poly::var(VarId::u(i));
        for (int j = 1; j <= q; ++j)
            den *= Poly::one() - Poly::var(VarId::x(k), -1) * Poly::var(VarId::v(j));
    }
    Series rhs = geometric_inverse(Series(den, spec));
    Poly num = Poly::one();
    for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= q; ++j)
            num *= Poly::one() - Poly::var(VarId::u(i)) * Poly::var(VarId::v(j));
    for (int k = 1; k <= n; ++k) num *= Poly::var(VarId::x(k), -q);
    rhs = rhs * num;

    Json params{{"n", n}, {"p", p}, {"q", q}, {"truncate", cap}, {"sequence", seq_params(F)}};
    return finish("littlewood-a", params, lhs - rhs.body(), t0,
                  "compared on the window u,v-degree <= " + std::to_string(cap) +
                      ", x^-1-order <= " + std::to_string(order));
}

CheckReport check_dual_cauchy(CharFamily family, const AdmissibleSequence& F, int n, int m) {
    auto t0 = Clock::now();
    std::vector<Partition> lambdas = partitions_in_box(n, m);

    std::map<VarId, Poly> to_y;
    for (int i = 1; i <= m; ++i) to_y[VarId::x(i)] = Poly::var(VarId::y(i));

    Poly lhs = sum_bodies(lambdas, [&](const Partition& l) {
        Partition conj = l.conjugate();
        std::vector<int> tilde;
        for (int j = m; j >= 1; --j) tilde.push_back(n - conj.part(j));
        Partition lt(std::move(tilde));
        Poly gx = character(family, F, l, n);
        Poly gy = substitute(character(family, F, lt, m), to_y);
        Poly term = gx * gy;
        return (lt.weight() % 2 != 0) ? -term : term;
    });

    Poly rhs = Poly::one();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j) {
            if (family == CharFamily::A)
                rhs *= Poly::var(VarId::x(i)) - Poly::var(VarId::y(j));
            else
                rhs *= Poly::var(VarId::x(i)) + Poly::var(VarId::x(i), -1) -
                       Poly::var(VarId::y(j)) - Poly::var(VarId::y(j), -1);
        }

    Json params{{"family", family_to_string(family)}, {"n", n}, {"m", m},
                {"sequence", seq_params(F)}};
    return finish("dual-cauchy", params, lhs - rhs, t0);
}

namespace {

// h_k in the doubled (possibly +1) alphabet with a tau-shifted c; memoised
// per (shift, k).
struct ShiftedH {
    const CSpec& c;
    std::vector<Poly> nodes;
    std::map<std::pair<int, int>, Poly> memo;

    const Poly& operator()(int shift, int k) {
        auto key = std::make_pair(shift, k);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Poly value = h_in_nodes(AdmissibleSequence::factorial(c.tau(shift)), k, nodes);
        return memo.emplace(key, std::move(value)).first->second;
    }
};

} // namespace

CheckReport check_jt(CharFamily family, const CSpec& c, const Partition& lambda, int n) {
    auto t0 = Clock::now();
    if (family == CharFamily::A) fail(Errc::BadInput, "use jt-a for the type A identity");
    if (!c.cut())
        fail(Errc::HypothesisViolated, "Jacobi-Trudi needs c_m = 0 for m < 0 (negative cut)");
    if (family == CharFamily::D && !c.lookup(0).is_zero())
        fail(Errc::HypothesisViolated, "type D Jacobi-Trudi needs c_0 = 0");
    if (lambda.length() > n) fail(Errc::LengthExceedsN, "l(lambda) > n");

    AdmissibleSequence F = AdmissibleSequence::factorial(c);
    Poly lhs = character(family, F, lambda, n);

    ShiftedH h{c, family == CharFamily::B ? xxbar1_nodes(n) : xxbar_nodes(n), {}};
    PolyMatrix mat(n, std::vector<Poly>(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            Poly entry;
            switch (family) {
                case CharFamily::C:
                    entry = h(1 - n - j, lambda.part(i) - i + j) +
                            h(-1 - n + j, lambda.part(i) - i - j + 2);
                    break;
                case CharFamily::B:
                    entry = h(-n - j, lambda.part(i) - i + j) -
                            h(-n + j, lambda.part(i) - i - j);
                    break;
                case CharFamily::D:
                    entry = h(1 - n - j, lambda.part(i) - i + j) -
                            h(1 - n + j, lambda.part(i) - i - j);
                    break;
                default: break;
            }
            mat[i - 1][j - 1] = std::move(entry);
        }
    }
    Poly rhs = determinant(mat);
    if (family == CharFamily::C) rhs *= rat(1, 2);

    Json params{{"family", family_to_string(family)},
                {"lambda", lambda.parts()},
                {"n", n},
                {"c", c.to_json()}};
    return finish("jt-" + family_to_string(family), params, lhs - rhs, t0);
}

CheckReport check_jt_c_no_half(const CSpec& c, const Partition& lambda, int n) {
    auto t0 = Clock::now();
    if (!c.cut()) fail(Errc::HypothesisViolated, "needs the negative cut");
    AdmissibleSequence F = AdmissibleSequence::factorial(c);
    Poly lhs = symplectic(F, lambda, n);
    ShiftedH h{c, xxbar_nodes(n), {}};
    PolyMatrix mat(n, std::vector<Poly>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            mat[i - 1][j - 1] = h(1 - n - j, lambda.part(i) - i + j) +
                                h(-1 - n + j, lambda.part(i) - i - j + 2);
    Poly rhs = determinant(mat); // deliberately missing the 1/2
    Json params{{"lambda", lambda.parts()}, {"n", n}, {"c", c.to_json()}};
    return finish("jt-c-no-half", params, lhs - rhs, t0,
                  "negative control: the 1/2 prefactor is dropped on purpose");
}

CheckReport check_jt_a(const CSpec& c, const Signature& lambda) {
    auto t0 = Clock::now();
    int n = lambda.n();
    Partition mu, nu;
    int p = 0, q = 0;
    lambda.split(mu, nu, p, q);

    Frac lhs = schur_signature(AdmissibleSequence::factorial(c), lambda.shifted(-q));

    std::vector<std::vector<Frac>> mat(n, std::vector<Frac>(n));
    for (int j = 1; j <= n; ++j) {
        CSpec cj = c.tau(1 - j);
        for (int i = 1; i <= q; ++i)
            mat[i - 1][j - 1] = one_row_g(cj, nu.part(q - i + 1) + i - j, n);
        for (int i = 1; i <= p; ++i)
            mat[q + i - 1][j - 1] = Frac(
                one_row_h(CharFamily::A, AdmissibleSequence::factorial(cj), mu.part(i) - q - i + j, n));
    }
    Frac rhs = det_subset_dp(mat, Frac::one());

    Frac diff = lhs - rhs;
    Json params{{"lambda", lambda.parts()}, {"n", n}, {"c", c.to_json()}};
    return finish("jt-a", params, diff.num(), t0,
                  diff.is_poly() ? "" : "difference shown as a numerator over a factored denominator");
}

std::string flagged_kind_name(FlaggedKind k) {
    switch (k) {
        case FlaggedKind::JT: return "flagged-jt";
        case FlaggedKind::NK: return "flagged-nk";
        case FlaggedKind::Giambelli: return "giambelli";
    }
    return "?";
}

CheckReport check_flagged(FlaggedKind kind, CharFamily family, const AdmissibleSequence& F,
                          const Signature& lambda, int n) {
    auto t0 = Clock::now();
    if (lambda.n() != n) fail(Errc::BadInput, "signature length must equal n");
    bool is_partition = lambda.is_partition();
    if (!is_partition && !(kind == FlaggedKind::JT && family == CharFamily::A))
        fail(Errc::BadInput, "signatures are only supported by the type A flagged Jacobi-Trudi");

    Json params{{"kind", flagged_kind_name(kind)},
                {"family", family_to_string(family)},
                {"lambda", lambda.parts()},
                {"n", n},
                {"sequence", seq_params(F)}};

    if (!is_partition) {
        // Type A flagged JT over signature one-rows (fractions).
        Frac lhs = schur_signature(F, lambda);
        std::vector<std::vector<Frac>> mat(n, std::vector<Frac>(n));
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                mat[i - 1][j - 1] = one_row_signature_a(F, lambda.part(i) - i + j, n - j + 1);
        Frac diff = lhs - det_subset_dp(mat, Frac::one());
        return finish(flagged_kind_name(kind), params, diff.num(), t0,
                      diff.is_poly() ? "" : "difference shown as a numerator");
    }

    Partition lam = lambda.to_partition();
    Poly lhs = character(family, F, lam, n);
    Poly rhs;
    switch (kind) {
        case FlaggedKind::JT: {
            PolyMatrix mat(n, std::vector<Poly>(n));
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    mat[i - 1][j - 1] = one_row_h(family, F, lam.part(i) - i + j, n - j + 1);
            rhs = determinant(mat);
            break;
        }
        case FlaggedKind::NK: {
            int d = lam.part(1);
            Partition conj = lam.conjugate();
            PolyMatrix mat(d, std::vector<Poly>(d));
            for (int i = 1; i <= d; ++i)
                for (int j = 1; j <= d; ++j)
                    mat[i - 1][j - 1] = one_row_e(family, F, conj.part(i) - i + j, n + j - 1);
            rhs = determinant(mat);
            break;
        }
        case FlaggedKind::Giambelli: {
            auto [alpha, beta] = lam.frobenius();
            int d = int(alpha.size());
            PolyMatrix mat(d, std::vector<Poly>(d));
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    std::vector<int> hook{alpha[i] + 1};
                    hook.insert(hook.end(), beta[j], 1);
                    mat[i][j] = character(family, F, Partition(std::move(hook)), n);
                }
            rhs = determinant(mat);
            break;
        }
    }
    return finish(flagged_kind_name(kind), params, lhs - rhs, t0);
}

std::string genfun_family_name(GenfunFamily f) {
    switch (f) {
        case GenfunFamily::A: return "a";
        case GenfunFamily::C: return "c";
        case GenfunFamily::B: return "b";
        case GenfunFamily::D: return "d";
        case GenfunFamily::AConvenient: return "a-convenient";
        case GenfunFamily::G: return "g";
    }
    return "?";
}

CheckReport check_genfun(GenfunFamily gfam, const CSpec& c, int n, int cap) {
    auto t0 = Clock::now();
    AdmissibleSequence F = AdmissibleSequence::factorial(c);
    Poly t = Poly::var(VarId::t());
    Json params{{"family", genfun_family_name(gfam)}, {"n", n}, {"truncate", cap},
                {"c", c.to_json()}};
    std::string id = "genfun-" + genfun_family_name(gfam);

    if (gfam == GenfunFamily::G) {
        const long order = cap + n;
        SeriesSpec spec{fam_mask(Family::T), cap, -order};
        CSpec ctilde = c.reversed();
        Poly lhs;
        for (int k = 0; k + n <= order; ++k) {
            Poly gk = one_row_g(c, k, n).expand_inverse_x(order);
            Poly tpow = Poly::one();
            for (int l = 0; l < k; ++l) tpow *= t - ctilde.lookup(l);
            lhs += truncate_poly(gk * tpow, spec);
        }
        lhs = truncate_poly(lhs, spec);
        Poly den = Poly::one(), pref = Poly::one();
        for (int i = 1; i <= n; ++i) {
            den *= Poly::one() - Poly::var(VarId::x(i), -1) * t;
            pref *= Poly::var(VarId::x(i), -1);
        }
        Series rhs = geometric_inverse(Series(den, spec)) * pref;
        return finish(id, params, lhs - rhs.body(), t0,
                      "compared to t-degree " + std::to_string(cap) + " and x^-1-order " +
                          std::to_string(order));
    }

    SeriesSpec spec{fam_mask(Family::T), cap, LONG_MIN};
    Poly lhs;
    for (int k = 0; k <= cap; ++k) {
        Poly hk;
        switch (gfam) {
            case GenfunFamily::A:
            case GenfunFamily::AConvenient: hk = one_row_h(CharFamily::A, F, k, n); break;
            case GenfunFamily::C: hk = one_row_h(CharFamily::C, F, k, n); break;
            case GenfunFamily::B: hk = one_row_h(CharFamily::B, F, k, n); break;
            case GenfunFamily::D: hk = one_row_h(CharFamily::D, F, k, n); break;
            case GenfunFamily::G: break;
        }
        Poly den = Poly::one();
        if (gfam == GenfunFamily::AConvenient) {
            for (int l = 1; l <= k; ++l) den *= Poly::one() - t * c.lookup(n - 1 + l);
        } else {
            for (int l = 0; l <= k + n - 1; ++l) den *= Poly::one() - t * c.lookup(l);
        }
        Series term = geometric_inverse(Series(den, spec)) * (hk * t.pow(k));
        lhs += term.body();
    }
    lhs = truncate_poly(lhs, spec);

    Poly den = Poly::one();
    for (int i = 1; i <= n; ++i) {
        den *= Poly::one() - Poly::var(VarId::x(i)) * t;
        if (gfam != GenfunFamily::A && gfam != GenfunFamily::AConvenient)
            den *= Poly::one() - Poly::var(VarId::x(i), -1) * t;
    }
    Series rhs = geometric_inverse(Series(den, spec));
    switch (gfam) {
        case GenfunFamily::B: rhs = rhs * (Poly::one() + t); break;
        case GenfunFamily::D: rhs = rhs * (Poly::one() - t * t); break;
        case GenfunFamily::AConvenient: {
            Poly pref = Poly::one();
            for (int l = 0; l <= n - 1; ++l) pref *= Poly::one() - t * c.lookup(l);
            rhs = rhs * pref;
            break;
        }
        default: break;
    }
    return finish(id, params, lhs - rhs.body(), t0);
}

CheckReport check_gt_vs_bialternant(const Signature& lambda, const CSpec& c) {
    auto t0 = Clock::now();
    Frac gt = gt_character(lambda, c);
    Frac bi = schur_signature(AdmissibleSequence::factorial(c), lambda);
    Frac diff = gt - bi;
    Json params{{"lambda", lambda.parts()}, {"n", lambda.n()}, {"c", c.to_json()}};
    return finish("gt-bialternant", params, diff.num(), t0);
}

std::vector<std::string> identity_catalogue() {
    return {
        "cauchy",        "littlewood-c",  "littlewood-b",  "littlewood-d", "littlewood-a",
        "dual-cauchy",   "jt-c",          "jt-b",          "jt-d",         "jt-a",
        "flagged-jt",    "flagged-nk",    "giambelli",     "genfun-a",     "genfun-c",
        "genfun-b",      "genfun-d",      "genfun-a-convenient",           "genfun-g",
        "gt-bialternant", "ninth-inverse-pairs", "ninth-nk-a", "ninth-nk-c", "ninth-nk-o",
        "ninth-spec-sp", "ninth-spec-so", "ninth-spec-o",  "jt-c-no-half",
    };
}

CheckReport run_identity(const Json& inv) {
    if (!inv.contains("identity")) fail(Errc::BadInput, "invocation needs an 'identity' field");
    std::string id = inv["identity"].get<std::string>();

    auto lambda_vec = [&]() {
        std::vector<int> parts;
        if (inv.contains("lambda"))
            for (const auto& v : inv["lambda"]) parts.push_back(v.get<int>());
        return parts;
    };
    int cap = inv.value("truncate", 4);
    int n = inv.value("n", 1);

    CSpec c = CSpec::symbolic();
    if (inv.contains("c")) {
        if (inv["c"].is_string()) {
            std::string cs = inv["c"].get<std::string>();
            if (cs == "symbolic")
                c = CSpec::symbolic();
            else if (cs == "zeros")
                c = CSpec::zeros();
            else
                fail(Errc::BadInput, "unknown c spec '" + cs + "'");
        } else {
            c = CSpec::from_json(inv["c"]);
        }
    }
    if (inv.value("c_cut", false)) c = c.with_cut();
    if (inv.value("c0_zero", false)) c = c.with_value(0, rat(0));

    AdmissibleSequence F = AdmissibleSequence::factorial(c);
    if (inv.contains("sequence")) {
        if (inv["sequence"].is_string()) {
            std::string ss = inv["sequence"].get<std::string>();
            if (ss == "factorial")
                F = AdmissibleSequence::factorial(c);
            else if (ss == "monomial")
                F = AdmissibleSequence::monomial();
            else
                fail(Errc::BadInput, "unknown sequence '" + ss + "'");
        } else {
            F = AdmissibleSequence::from_json(inv["sequence"]);
        }
    }

    auto family = [&]() { return family_from_string(inv.value("family", "a")); };
    auto partition_arg = [&]() { return Partition(lambda_vec()); };

    std::string note;
    if (id == "cauchy") return check_cauchy(F, n, cap);
    if (id == "littlewood-c") return check_littlewood(CharFamily::C, F, n, cap);
    if (id == "littlewood-b") return check_littlewood(CharFamily::B, F, n, cap);
    if (id == "littlewood-d") return check_littlewood(CharFamily::D, F, n, cap);
    if (id == "littlewood-a") {
        int p = inv.value("p", n);
        int q = inv.value("q", 0);
        if (!inv.contains("n")) n = p + q;
        return check_littlewood_a(F, n, p, q, cap);
    }
    if (id == "dual-cauchy") return check_dual_cauchy(family(), F, n, inv.value("m", n));
    if (id == "jt-c" || id == "jt-b" || id == "jt-d") {
        CSpec cj = c;
        if (!cj.cut()) {
            cj = cj.with_cut();
            note = "negative cut enabled (Jacobi-Trudi hypothesis)";
        }
        if (id == "jt-d" && !cj.lookup(0).is_zero()) {
            cj = cj.with_value(0, rat(0));
            note += note.empty() ? "" : "; ";
            note += "c_0 = 0 enabled (type D hypothesis)";
        }
        CharFamily fam = id == "jt-c" ? CharFamily::C : id == "jt-b" ? CharFamily::B : CharFamily::D;
        CheckReport r = check_jt(fam, cj, partition_arg(), n);
        if (!note.empty()) r.note = r.note.empty() ? note : r.note + "; " + note;
        return r;
    }
    if (id == "jt-a") return check_jt_a(c, Signature(lambda_vec()));
    if (id == "flagged-jt" || id == "flagged-nk" || id == "giambelli") {
        FlaggedKind kind = id == "flagged-jt" ? FlaggedKind::JT
                          : id == "flagged-nk" ? FlaggedKind::NK
                                               : FlaggedKind::Giambelli;
        std::vector<int> parts = lambda_vec();
        while (int(parts.size()) < n) parts.push_back(0);
        return check_flagged(kind, family(), F, Signature(parts), n);
    }
    if (id.rfind("genfun-", 0) == 0) {
        std::string g = id.substr(7);
        GenfunFamily gf;
        if (g == "a") gf = GenfunFamily::A;
        else if (g == "c") gf = GenfunFamily::C;
        else if (g == "b") gf = GenfunFamily::B;
        else if (g == "d") gf = GenfunFamily::D;
        else if (g == "a-convenient") gf = GenfunFamily::AConvenient;
        else if (g == "g") gf = GenfunFamily::G;
        else fail(Errc::BadInput, "unknown identity '" + id + "'");
        return check_genfun(gf, c, n, cap);
    }
    if (id == "gt-bialternant") return check_gt_vs_bialternant(Signature(lambda_vec()), c);
    if (id == "jt-c-no-half") return check_jt_c_no_half(c.with_cut(), partition_arg(), n);
    if (id == "ninth-inverse-pairs") return check_inverse_pairs(n, inv.value("m", n));
    if (id == "ninth-nk-a" || id == "ninth-nk-c" || id == "ninth-nk-o") {
        NinthNkFamily fam = id == "ninth-nk-a" ? NinthNkFamily::A
                            : id == "ninth-nk-c" ? NinthNkFamily::C
                                                 : NinthNkFamily::O;
        Partition mu;
        if (inv.contains("mu")) {
            std::vector<int> mp;
            for (const auto& v : inv["mu"]) mp.push_back(v.get<int>());
            mu = Partition(mp);
        }
        return check_ninth_nk(fam, partition_arg(), mu, n, inv.value("m", n));
    }
    if (id == "ninth-spec-sp") return check_ninth_specialisation_sp(partition_arg(), n, c.with_cut());
    if (id == "ninth-spec-so") return check_ninth_specialisation_so(partition_arg(), n, c.with_cut());
    if (id == "ninth-spec-o")
        return check_ninth_specialisation_o(partition_arg(), n, c.with_cut().with_value(0, rat(0)));

    std::string known;
    for (const auto& k : identity_catalogue()) known += (known.empty() ? "" : ", ") + k;
    fail(Errc::BadInput, "unknown identity '" + id + "'; known identities: " + known);
}

} // namespace genchar

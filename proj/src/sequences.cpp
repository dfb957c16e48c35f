#include "genchar/sequences.hpp"

#include <algorithm>

#include "genchar/errors.hpp"
#include "genchar/series.hpp"

namespace genchar {

AdmissibleSequence AdmissibleSequence::monomial() {
    return AdmissibleSequence(SeqKind::Monomial);
}

AdmissibleSequence AdmissibleSequence::factorial(CSpec c) {
    AdmissibleSequence s(SeqKind::Factorial);
    s.c_ = std::move(c);
    return s;
}

AdmissibleSequence AdmissibleSequence::custom(std::map<int, std::vector<Rational>> coeffs,
                                              std::map<int, std::vector<Rational>> neg_coeffs) {
    AdmissibleSequence s(SeqKind::Custom);
    if (!coeffs.count(0)) fail(Errc::F0NotOne, "custom sequence must define f_0");
    int expect = 0;
    for (const auto& [n, cs] : coeffs) {
        if (n != expect++) fail(Errc::WrongDegree, "custom table must be contiguous from 0");
        if (int(cs.size()) != n + 1)
            fail(Errc::WrongDegree, "f_" + std::to_string(n) + " must have degree exactly " +
                                        std::to_string(n));
        if (cs.back() != 1) fail(Errc::NotMonic, "f_" + std::to_string(n) + " is not monic");
    }
    if (coeffs[0] != std::vector<Rational>{rat(1)})
        fail(Errc::F0NotOne, "f_0 must be the constant 1");
    for (const auto& [n, cs] : neg_coeffs) {
        if (n < 1) fail(Errc::NegativePartWrongOrder, "negative part is indexed by n >= 1");
        if (cs.empty() || cs.front() == 0)
            fail(Errc::NegativePartWrongOrder,
                 "f_{-" + std::to_string(n) + "} must have order exactly " + std::to_string(n));
    }
    s.coeffs_ = std::move(coeffs);
    s.neg_coeffs_ = std::move(neg_coeffs);
    return s;
}

const CSpec& AdmissibleSequence::c() const {
    if (kind_ != SeqKind::Factorial) fail(Errc::BadInput, "sequence has no parameter sequence c");
    return c_;
}

bool AdmissibleSequence::has_negative_part() const {
    return kind_ != SeqKind::Custom || !neg_coeffs_.empty();
}

Poly AdmissibleSequence::f_at(int k, const Poly& value) const {
    if (k < 0) fail(Errc::BadInput, "f_at needs k >= 0; use the negative series");
    switch (kind_) {
        case SeqKind::Monomial: return value.pow(k);
        case SeqKind::Factorial: {
            Poly acc = Poly::one();
            for (int l = 0; l < k; ++l) acc *= value - c_.lookup(l);
            return acc;
        }
        case SeqKind::Custom: {
            auto it = coeffs_.find(k);
            if (it == coeffs_.end())
                fail(Errc::BadInput, "custom sequence has no f_" + std::to_string(k));
            Poly acc;
            Poly p = Poly::one();
            for (int j = 0; j <= k; ++j) {
                if (it->second[j] != 0) acc += p * it->second[j];
                if (j < k) p *= value;
            }
            return acc;
        }
    }
    fail(Errc::BadInput, "corrupt sequence");
}

Poly AdmissibleSequence::f_poly(int k, VarId z) const { return f_at(k, Poly::var(z)); }

Poly AdmissibleSequence::f_negative_series(int k, VarId x, long order) const {
    if (k <= 0) fail(Errc::BadInput, "negative series needs k > 0");
    if (order < k) return Poly::zero();
    switch (kind_) {
        case SeqKind::Monomial: return Poly::var(x, -k);
        case SeqKind::Factorial: {
            // 1/((x-c_{-1})...(x-c_{-k})) = prod_m xbar * geom(c_{-m} xbar).
            Poly acc = Poly::one();
            const FamilyMask xmask = fam_mask(Family::X);
            for (int m = 1; m <= k; ++m) {
                Poly cm = c_.lookup(-m);
                Poly inv;
                Poly cpow = Poly::one();
                for (long j = 0; j + 1 <= order; ++j) {
                    inv += cpow * Poly::var(x, int(-(j + 1)));
                    if (j + 1 < order) cpow *= cm;
                }
                Poly prod = acc * inv;
                Poly next;
                for (const auto& [mon, cf] : prod.terms())
                    if (mon.degree(xmask) >= -order) next.add_term(mon, cf);
                acc = next;
            }
            return acc;
        }
        case SeqKind::Custom: {
            auto it = neg_coeffs_.find(k);
            if (it == neg_coeffs_.end())
                fail(Errc::NegativePartsUnsupported,
                     "custom sequence has no negative part at -" + std::to_string(k));
            Poly acc;
            for (size_t j = 0; j < it->second.size(); ++j) {
                long e = k + long(j);
                if (e > order) break;
                if (it->second[j] != 0) acc += Poly::var(x, int(-e)) * it->second[j];
            }
            return acc;
        }
    }
    fail(Errc::BadInput, "corrupt sequence");
}

Poly AdmissibleSequence::negative_coefficient(int k, int j) const {
    if (j < k) return Poly::zero();
    VarId x = VarId::x(1);
    Poly series = f_negative_series(k, x, j);
    return series.coeff_of(x, -j);
}

bool AdmissibleSequence::constant_term_free(int upto) const {
    for (int n = 1; n <= upto; ++n)
        if (!f_at(n, Poly::zero()).is_zero()) return false;
    return true;
}

Json AdmissibleSequence::to_json() const {
    Json j;
    switch (kind_) {
        case SeqKind::Monomial: j["kind"] = "monomial"; break;
        case SeqKind::Factorial:
            j["kind"] = "factorial";
            j["c"] = c_.to_json();
            break;
        case SeqKind::Custom: {
            j["kind"] = "custom";
            Json coeffs = Json::object();
            for (const auto& [n, cs] : coeffs_) {
                Json arr = Json::array();
                for (const auto& r : cs) arr.push_back(rational_to_string(r));
                coeffs[std::to_string(n)] = arr;
            }
            j["coeffs"] = coeffs;
            if (!neg_coeffs_.empty()) {
                Json neg = Json::object();
                for (const auto& [n, cs] : neg_coeffs_) {
                    Json arr = Json::array();
                    for (const auto& r : cs) arr.push_back(rational_to_string(r));
                    neg[std::to_string(n)] = arr;
                }
                j["negative_coeffs"] = neg;
            }
            break;
        }
    }
    return j;
}

AdmissibleSequence AdmissibleSequence::from_json(const Json& j) {
    std::string kind = j.value("kind", "factorial");
    if (kind == "monomial") return monomial();
    if (kind == "factorial")
        return factorial(j.contains("c") ? CSpec::from_json(j["c"]) : CSpec::symbolic());
    if (kind == "custom") {
        auto parse_table = [&](const char* key) {
            std::map<int, std::vector<Rational>> table;
            if (j.contains(key))
                for (const auto& [n, arr] : j[key].items()) {
                    std::vector<Rational> cs;
                    for (const auto& s : arr) cs.push_back(rational_from_string(s.get<std::string>()));
                    table[std::stoi(n)] = std::move(cs);
                }
            return table;
        };
        return custom(parse_table("coeffs"), parse_table("negative_coeffs"));
    }
    fail(Errc::BadInput, "unknown sequence kind '" + kind + "'");
}

Poly DualSequence::entry_poly(int n, VarId u) const {
    Poly acc;
    for (int k = 0; k <= cap; ++k)
        if (!coeff[n][k].is_zero()) acc += coeff[n][k] * Poly::var(u, k);
    return acc;
}

Poly DualSequence::entry_at(int n, const std::vector<Poly>& value_powers) const {
    Poly acc;
    for (int k = 0; k <= cap && k < int(value_powers.size()); ++k)
        if (!coeff[n][k].is_zero()) acc += coeff[n][k] * value_powers[k];
    return acc;
}

DualSequence dual_sequence(const AdmissibleSequence& F, int cap) {
    VarId z = VarId::x(1);
    // F_{nj}: z^j-coefficient of f_n; lower unitriangular.
    std::vector<std::vector<Poly>> fm(cap + 1, std::vector<Poly>(cap + 1));
    for (int n = 0; n <= cap; ++n) {
        Poly fn = F.f_poly(n, z);
        for (int j = 0; j <= n; ++j) fm[n][j] = fn.coeff_of(z, j);
    }
    DualSequence d;
    d.cap = cap;
    d.coeff.assign(cap + 1, std::vector<Poly>(cap + 1));
    // Column m of F^{-1} gives the u-coefficients of fhat_m.
    for (int m = 0; m <= cap; ++m) {
        for (int n = 0; n <= cap; ++n) {
            Poly rhs = (n == m) ? Poly::one() : Poly::zero();
            for (int j = 0; j < n; ++j)
                if (!fm[n][j].is_zero() && !d.coeff[m][j].is_zero())
                    rhs -= fm[n][j] * d.coeff[m][j];
            d.coeff[m][n] = rhs; // diagonal of F is 1
        }
    }
    return d;
}

DualSequence dual_sequence_factorial_closed_form(const CSpec& c, int cap) {
    VarId u = VarId::u(1);
    SeriesSpec spec{fam_mask(Family::U), cap, LONG_MIN};
    DualSequence d;
    d.cap = cap;
    d.coeff.assign(cap + 1, std::vector<Poly>(cap + 1));
    for (int k = 0; k <= cap; ++k) {
        Poly denom = Poly::one();
        for (int l = 0; l <= k; ++l) denom *= Poly::one() - Poly::var(u) * c.lookup(l);
        Series inv = geometric_inverse(Series(denom, spec));
        Poly entry = truncate_poly(inv.body() * Poly::var(u, k), spec);
        for (int j = 0; j <= cap; ++j) d.coeff[k][j] = entry.coeff_of(u, j);
    }
    return d;
}

Poly DoubleDualSequence::entry_poly(int n, VarId v) const {
    Poly acc;
    for (int k = 0; k <= cap; ++k)
        if (!coeff[n][k].is_zero()) acc += coeff[n][k] * Poly::var(v, k);
    return acc;
}

Poly DoubleDualSequence::entry_at(int n, const std::vector<Poly>& value_powers) const {
    Poly acc;
    for (int k = 0; k <= cap && k < int(value_powers.size()); ++k)
        if (!coeff[n][k].is_zero()) acc += coeff[n][k] * value_powers[k];
    return acc;
}

DoubleDualSequence double_dual_sequence(const AdmissibleSequence& F, int cap) {
    if (!F.has_negative_part())
        fail(Errc::NegativePartsUnsupported, "sequence has no negative part");
    // a[n][k]: x^{-k}-coefficient of f_{-n}; upper triangular with
    // invertible rational diagonal. a[0][0] = 1 comes from f_0 = 1.
    VarId x = VarId::x(1);
    std::vector<std::vector<Poly>> a(cap + 1, std::vector<Poly>(cap + 1));
    a[0][0] = Poly::one();
    for (int n = 1; n <= cap; ++n) {
        Poly series = F.f_negative_series(n, x, cap);
        for (int k = n; k <= cap; ++k) a[n][k] = series.coeff_of(x, -k);
    }
    std::vector<Rational> diag(cap + 1);
    for (int n = 0; n <= cap; ++n) {
        if (!a[n][n].is_rational() || a[n][n].is_zero())
            fail(Errc::NonInvertibleLeadingCoefficient,
                 "leading series coefficient of f_{-" + std::to_string(n) +
                     "} is not an invertible rational");
        diag[n] = a[n][n].rational_value();
    }
    DoubleDualSequence d;
    d.cap = cap;
    d.coeff.assign(cap + 1, std::vector<Poly>(cap + 1));
    // Solve sum_k a_{nk} (fcheck_m)_k = delta_{nm}, back-substituting from
    // n = m down; (fcheck_m)_k vanishes for k > m.
    for (int m = 0; m <= cap; ++m) {
        for (int n = m; n >= 0; --n) {
            Poly rhs = (n == m) ? Poly::one() : Poly::zero();
            for (int k = n + 1; k <= m; ++k)
                if (!a[n][k].is_zero() && !d.coeff[m][k].is_zero())
                    rhs -= a[n][k] * d.coeff[m][k];
            d.coeff[m][n] = rhs * (1 / diag[n]);
        }
    }
    return d;
}

} // namespace genchar

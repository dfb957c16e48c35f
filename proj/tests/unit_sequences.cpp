#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "genchar/sequences.hpp"
#include "genchar/series.hpp"

using namespace genchar;
using namespace genchar::test;

namespace {

const FamilyMask kX = fam_mask(Family::X);

Poly clip_order(const Poly& p, long order) {
    Poly out;
    for (const auto& [m, c] : p.terms())
        if (m.degree(kX) >= -order) out.add_term(m, c);
    return out;
}

// [x|c]^e as an exact polynomial (e >= 0) or as a series in 1/x.
Poly factorial_power(const CSpec& c, int e, long order) {
    AdmissibleSequence F = AdmissibleSequence::factorial(c);
    if (e >= 0) return F.f_at(e, X(1));
    return F.f_negative_series(-e, VarId::x(1), order);
}

} // namespace

TEST_CASE("factorial sequence positive part") {
    AdmissibleSequence F = AdmissibleSequence::factorial(CSpec::symbolic());
    CHECK(F.f_at(0, X(1)) == Poly::one());
    CHECK(F.f_at(1, X(1)) == X(1) - C(0));
    CHECK(F.f_at(2, X(1)) == (X(1) - C(0)) * (X(1) - C(1)));

    AdmissibleSequence Z = AdmissibleSequence::factorial(CSpec::zeros());
    CHECK(Z.f_at(3, X(1)) == X(1, 3));
}

TEST_CASE("factorial negative part is the geometric expansion") {
    AdmissibleSequence F = AdmissibleSequence::factorial(CSpec::symbolic());
    Poly s = F.f_negative_series(1, VarId::x(1), 3);
    CHECK(s == X(1, -1) + C(-1) * X(1, -2) + C(-1, 2) * X(1, -3));
    // multiply back: (x - c_{-1}) * series = 1 + O(x^{-3})
    Poly prod = clip_order((X(1) - C(-1)) * s, 2);
    CHECK(prod == Poly::one());
}

TEST_CASE("monomial sequence") {
    AdmissibleSequence M = AdmissibleSequence::monomial();
    CHECK(M.f_at(3, X(1)) == X(1, 3));
    CHECK(M.f_negative_series(2, VarId::x(1), 5) == X(1, -2));
}

TEST_CASE("custom sequence validation") {
    std::map<int, std::vector<Rational>> ok{{0, {rat(1)}}, {1, {rat(1), rat(1)}},
                                            {2, {rat(0), rat(1), rat(1)}}};
    AdmissibleSequence F = AdmissibleSequence::custom(ok);
    CHECK(F.f_at(1, X(1)) == X(1) + Poly::one());
    CHECK(F.f_at(2, X(1)) == X(1, 2) + X(1));

    std::map<int, std::vector<Rational>> not_monic{{0, {rat(1)}}, {1, {rat(0), rat(2)}}};
    CHECK_THROWS_WITH_AS((void)AdmissibleSequence::custom(not_monic),
                         doctest::Contains("NotMonic"), Error);

    std::map<int, std::vector<Rational>> wrong_degree{{0, {rat(1)}}, {1, {rat(1), rat(1)}},
                                                      {2, {rat(0), rat(1)}}};
    CHECK_THROWS_WITH_AS((void)AdmissibleSequence::custom(wrong_degree),
                         doctest::Contains("WrongDegree"), Error);

    std::map<int, std::vector<Rational>> f0_bad{{0, {rat(2)}}};
    CHECK_THROWS_AS((void)AdmissibleSequence::custom(f0_bad), Error);

    std::map<int, std::vector<Rational>> neg_bad{{1, {rat(0), rat(1)}}};
    CHECK_THROWS_WITH_AS((void)AdmissibleSequence::custom(ok, neg_bad),
                         doctest::Contains("NegativePartWrongOrder"), Error);
}

TEST_CASE("tau shift and cut") {
    CSpec c = CSpec::symbolic();
    CHECK(c.tau(1).lookup(0) == C(1));
    // group law over a window
    for (int m = -4; m <= 4; ++m) CHECK(c.tau(2).tau(-3).lookup(m) == c.tau(-1).lookup(m));
    CSpec cut = c.with_cut();
    CHECK(cut.tau(-3).lookup(0).is_zero());
    CHECK(cut.tau(-3).lookup(3) == C(0));
}

TEST_CASE("reversed sequence") {
    CSpec c = CSpec::symbolic();
    CSpec rev = c.reversed();
    CHECK(rev.lookup(0) == C(-1));
    for (int m = -4; m <= 4; ++m) CHECK(rev.reversed().lookup(m) == c.lookup(m));
    // tau^{n-1} c~ = reverse(tau^{-n+1} c)
    for (int n = 0; n <= 3; ++n)
        for (int m = -4; m <= 4; ++m)
            CHECK(rev.tau(n - 1).lookup(m) == c.tau(-n + 1).reversed().lookup(m));
}

TEST_CASE("dual sequence: triangular inversion") {
    // monomial sequence is self-dual
    DualSequence dm = dual_sequence(AdmissibleSequence::monomial(), 5);
    for (int n = 0; n <= 5; ++n)
        for (int k = 0; k <= 5; ++k)
            CHECK(dm.coeff[n][k] == (n == k ? Poly::one() : Poly::zero()));

    // factorial closed form, coefficientwise with symbolic c
    CSpec c = CSpec::symbolic();
    const int D = 5;
    DualSequence inv = dual_sequence(AdmissibleSequence::factorial(c), D);
    DualSequence closed = dual_sequence_factorial_closed_form(c, D);
    for (int n = 0; n <= D; ++n)
        for (int k = 0; k <= D; ++k) CHECK(inv.coeff[n][k] == closed.coeff[n][k]);

    // pairing matrix <f_n, fhat_m> is the identity
    AdmissibleSequence F = AdmissibleSequence::factorial(c);
    for (int n = 0; n <= D; ++n) {
        Poly fn = F.f_poly(n, VarId::x(1));
        for (int m = 0; m <= D; ++m) {
            Poly pair;
            for (int j = 0; j <= D; ++j) pair += fn.coeff_of(VarId::x(1), j) * inv.coeff[m][j];
            CHECK(pair == (n == m ? Poly::one() : Poly::zero()));
        }
    }

    // defining relation: sum f_n(x) fhat_n(u) = 1/(1 - x u) mod u^{D+1}
    SeriesSpec spec{fam_mask(Family::U), D, LONG_MIN};
    Poly sum;
    for (int n = 0; n <= D; ++n) sum += F.f_at(n, X(1)) * inv.entry_poly(n, VarId::u(1));
    sum = truncate_poly(sum, spec);
    Series rhs = geometric_inverse(Series(Poly::one() - X(1) * U(1), spec));
    CHECK(sum == rhs.body());
}

TEST_CASE("constant-term free iff fhat_0 = 1") {
    CSpec c0 = CSpec::symbolic().with_value(0, rat(0));
    AdmissibleSequence F = AdmissibleSequence::factorial(c0);
    CHECK(F.constant_term_free(6));
    DualSequence d = dual_sequence(F, 4);
    CHECK(d.entry_poly(0, VarId::u(1)) == Poly::one());

    AdmissibleSequence G = AdmissibleSequence::factorial(CSpec::symbolic());
    CHECK_FALSE(G.constant_term_free(6));
    DualSequence dg = dual_sequence(G, 4);
    CHECK(dg.entry_poly(0, VarId::u(1)) != Poly::one());
}

TEST_CASE("double dual sequence") {
    const int D = 5;
    CSpec c = CSpec::symbolic();
    DoubleDualSequence dd = double_dual_sequence(AdmissibleSequence::factorial(c), D);
    // factorial closed form: fcheck_n(v) = v [v|c~]^{n-1}, fcheck_0 = 1
    CSpec rev = c.reversed();
    AdmissibleSequence Frev = AdmissibleSequence::factorial(rev);
    CHECK(dd.entry_poly(0, VarId::v(1)) == Poly::one());
    for (int n = 1; n <= D; ++n)
        CHECK(dd.entry_poly(n, VarId::v(1)) == V(1) * Frev.f_at(n - 1, V(1)));

    DoubleDualSequence dm = double_dual_sequence(AdmissibleSequence::monomial(), D);
    for (int n = 0; n <= D; ++n) CHECK(dm.entry_poly(n, VarId::v(1)) == V(1, n == 0 ? 0 : n));

    // defining relation on the truncation window:
    // sum_n f_{-n}(x) fcheck_n(v) = 1/(1 - v/x) for x-order and v-degree <= D
    AdmissibleSequence F = AdmissibleSequence::factorial(c);
    Poly sum = Poly::one(); // n = 0 term
    for (int n = 1; n <= D; ++n)
        sum += F.f_negative_series(n, VarId::x(1), D) * dd.entry_poly(n, VarId::v(1));
    SeriesSpec spec{fam_mask(Family::V), D, -D};
    sum = truncate_poly(sum, spec);
    Poly geo;
    for (int k = 0; k <= D; ++k) geo += X(1, -k) * V(1, k);
    CHECK(sum == truncate_poly(geo, spec));
}

TEST_CASE("factorial shift law as series") {
    CSpec c = CSpec::symbolic();
    const long order = 8;
    for (int r = -3; r <= 3; ++r) {
        for (int s = -3; s <= 3; ++s) {
            Poly lhs = factorial_power(c, r + s, order + 8);
            Poly rhs = factorial_power(c, r, order + 8) * factorial_power(c.tau(r), s, order + 8);
            CHECK(clip_order(lhs, order) == clip_order(rhs, order));
        }
    }
}

TEST_CASE("sequence json round trip") {
    CSpec c = CSpec::explicit_values({{-1, rat(1, 2)}, {2, rat(-3)}}).with_cut();
    AdmissibleSequence F = AdmissibleSequence::factorial(c);
    AdmissibleSequence back = AdmissibleSequence::from_json(F.to_json());
    for (int k = 0; k <= 4; ++k) CHECK(back.f_at(k, X(1)) == F.f_at(k, X(1)));

    std::map<int, std::vector<Rational>> coeffs{{0, {rat(1)}}, {1, {rat(1, 3), rat(1)}}};
    AdmissibleSequence G = AdmissibleSequence::custom(coeffs);
    AdmissibleSequence gback = AdmissibleSequence::from_json(G.to_json());
    CHECK(gback.f_at(1, X(1)) == G.f_at(1, X(1)));
}

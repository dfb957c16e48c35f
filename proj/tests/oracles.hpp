#pragma once

// Independent classical oracles: Weyl bialternants assembled from explicit
// power matrices and the generic determinant, bypassing the character
// engine entirely.

#include "genchar/characters.hpp"
#include "genchar/matrix.hpp"

namespace genchar::test {

inline Poly classical_weyl_character(CharFamily fam, const Partition& lambda, int n) {
    if (n == 0) return Poly::one();
    auto xv = [](int i, int e) { return Poly::var(VarId::x(i), e); };
    PolyMatrix num(n, std::vector<Poly>(n)), den(n, std::vector<Poly>(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            int l = lambda.part(j) + n - j;
            switch (fam) {
                case CharFamily::A:
                    num[i - 1][j - 1] = xv(i, l);
                    den[i - 1][j - 1] = xv(i, n - j);
                    break;
                case CharFamily::C:
                    num[i - 1][j - 1] = xv(i, l + 1) - xv(i, -(l + 1));
                    den[i - 1][j - 1] = xv(i, n - j + 1) - xv(i, -(n - j + 1));
                    break;
                case CharFamily::B:
                    // computed in z = x^{1/2}: x^{l + 1/2} -> z^{2l + 1}
                    num[i - 1][j - 1] = xv(i, 2 * l + 1) - xv(i, -(2 * l + 1));
                    den[i - 1][j - 1] = xv(i, 2 * (n - j) + 1) - xv(i, -(2 * (n - j) + 1));
                    break;
                case CharFamily::D:
                    num[i - 1][j - 1] = xv(i, l) + xv(i, -l);
                    den[i - 1][j - 1] = xv(i, n - j) + xv(i, -(n - j));
                    break;
            }
        }
    }
    Poly ratio = exact_divide(determinant(num), determinant(den));
    if (fam == CharFamily::D) {
        // numerator prefactor eta over the 1/2 in the denominator
        ratio = ratio * (lambda.length() == n ? rat(2) : rat(1));
    }
    if (fam == CharFamily::B) {
        // back from z to x: exponents must be even
        Poly out;
        for (const auto& [m, c] : ratio.terms()) {
            std::vector<Monomial::Entry> es;
            for (const auto& [v, e] : m.entries()) {
                if (e % 2 != 0) fail(Errc::OddHalfExponentResidue, "odd power in B oracle");
                es.push_back({v, e / 2});
            }
            out.add_term(Monomial(std::move(es)), c);
        }
        ratio = out;
    }
    return ratio;
}

} // namespace genchar::test

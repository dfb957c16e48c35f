#pragma once

#include <random>

#include "genchar/poly.hpp"

namespace genchar::test {

inline Poly X(int i, int e = 1) { return Poly::var(VarId::x(i), e); }
inline Poly Y(int i, int e = 1) { return Poly::var(VarId::y(i), e); }
inline Poly U(int i, int e = 1) { return Poly::var(VarId::u(i), e); }
inline Poly V(int i, int e = 1) { return Poly::var(VarId::v(i), e); }
inline Poly T(int e = 1) { return Poly::var(VarId::t(), e); }
inline Poly C(int m, int e = 1) { return Poly::var(VarId::c(m), e); }
inline Poly K(long v) { return Poly::constant(v); }
inline Poly K(long p, long q) { return Poly::constant(rat(p, q)); }

// Deterministic random polynomials for property tests: a few variables from
// the X and C families, small exponents and coefficients.
class RandomPoly {
  public:
    explicit RandomPoly(uint64_t seed, bool laurent = false) : rng_(seed), laurent_(laurent) {}

    Poly next(int max_terms = 8) {
        std::uniform_int_distribution<int> nterms(0, max_terms);
        std::uniform_int_distribution<int> coeff(-9, 9);
        std::uniform_int_distribution<int> xexp(laurent_ ? -3 : 0, 3);
        std::uniform_int_distribution<int> cexp(0, 2);
        std::uniform_int_distribution<int> pick(0, 2);
        Poly p;
        int k = nterms(rng_);
        for (int t = 0; t < k; ++t) {
            std::vector<Monomial::Entry> es;
            for (int i = 1; i <= 3; ++i) {
                if (pick(rng_) == 0) continue;
                int e = xexp(rng_);
                if (e != 0) es.push_back({VarId::x(i), e});
            }
            if (pick(rng_) == 0) {
                int e = cexp(rng_);
                if (e != 0) es.push_back({VarId::c(0), e});
            }
            p.add_term(Monomial(std::move(es)), rat(coeff(rng_)));
        }
        return p;
    }

    Poly next_nonzero(int max_terms = 8) {
        for (;;) {
            Poly p = next(max_terms);
            if (!p.is_zero()) return p;
        }
    }

  private:
    std::mt19937_64 rng_;
    bool laurent_;
};

} // namespace genchar::test

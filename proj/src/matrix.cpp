#include "genchar/matrix.hpp"

namespace genchar {

namespace {

Poly det_bareiss(PolyMatrix m) {
    size_t n = m.size();
    Poly prev = Poly::one();
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_row = k;
            for (size_t i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row == k) return Poly::zero();
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Poly t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = exact_divide(t, prev);
            }
            m[i][k] = Poly::zero();
        }
        prev = m[k][k];
    }
    Poly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

} // namespace

Poly determinant(const PolyMatrix& m) {
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) fail(Errc::NonSquare, "matrix is not square");
    if (n == 0) return Poly::one();
    if (n <= 4) return det_subset_dp(m, Poly::one());
    return det_bareiss(m);
}

Poly vandermonde(const std::vector<Poly>& vars) {
    Poly out = Poly::one();
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j) out *= vars[i] - vars[j];
    return out;
}

} // namespace genchar

#pragma once

#include <vector>

#include "genchar/errors.hpp"
#include "genchar/poly.hpp"

namespace genchar {

using PolyMatrix = std::vector<std::vector<Poly>>;

// Exact determinant. Cofactor expansion (subset DP) up to 4x4, fraction-free
// Bareiss elimination above; the 0x0 matrix yields 1.
Poly determinant(const PolyMatrix& m);

// prod_{i<j} (v_i - v_j); empty and singleton lists give 1.
Poly vandermonde(const std::vector<Poly>& vars);

// Laplace subset-DP determinant over any commutative ring element type with
// +,-,* and a zero default constructor. Used for small matrices of series
// and fractions.
template <class T>
T det_subset_dp(const std::vector<std::vector<T>>& m, const T& one) {
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) fail(Errc::NonSquare, "matrix is not square");
    if (n == 0) return one;
    if (n > 20) fail(Errc::BadInput, "matrix too large for subset DP");
    // minors[mask] = det of rows 0..r-1 and the column set `mask`.
    std::vector<T> minors(size_t(1) << n);
    minors[0] = one;
    for (size_t r = 0; r < n; ++r) {
        std::vector<T> next(size_t(1) << n);
        // Iterate over masks with popcount r+1.
        for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
            if (size_t(__builtin_popcountll(mask)) != r + 1) continue;
            T acc{};
            bool started = false;
            // Expansion along the last row of the (r+1)x(r+1) submatrix.
            int sign = (r % 2 == 0) ? 1 : -1;
            for (size_t j = 0; j < n; ++j) {
                if (!(mask & (size_t(1) << j))) continue;
                const T& sub = minors[mask & ~(size_t(1) << j)];
                T contrib = m[r][j] * sub;
                if (!started) {
                    acc = (sign < 0) ? -contrib : contrib;
                    started = true;
                } else {
                    acc = (sign < 0) ? acc - contrib : acc + contrib;
                }
                sign = -sign;
            }
            next[mask] = std::move(acc);
        }
        minors = std::move(next);
    }
    return minors[(size_t(1) << n) - 1];
}

} // namespace genchar

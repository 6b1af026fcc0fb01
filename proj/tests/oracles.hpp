#pragma once

// Test-only oracles, independent of the library's computation paths.

#include "selberg/poly.hpp"

namespace selberg::oracle {

// Dense Sylvester-determinant resultant over F_q.  Never used outside tests.
inline Fq sylvester_resultant(const FieldParams& F, const Poly& f, const Poly& g) {
    int m = f.deg(), n = g.deg();
    if (m < 0 || n < 0) return F.zero();     // resultant with the zero polynomial
    if (m == 0 && n == 0) return F.one();
    if (m == 0) return F.pow(f.c[0], n);
    if (n == 0) return F.pow(g.c[0], m);
    int size = m + n;
    std::vector<std::vector<Fq>> M(size, std::vector<Fq>(size, F.zero()));
    // n rows of f's coefficients (high to low), then m rows of g's
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) M[r][r + j] = f.c[m - j];
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) M[n + r][r + j] = g.c[n - j];
    // Gaussian elimination determinant
    Fq det = F.one();
    for (int col = 0; col < size; ++col) {
        int piv = -1;
        for (int r = col; r < size; ++r)
            if (!F.is_zero(M[r][col])) {
                piv = r;
                break;
            }
        if (piv < 0) return F.zero();
        if (piv != col) {
            std::swap(M[piv], M[col]);
            det = F.neg(det);
        }
        det = F.mul(det, M[col][col]);
        Fq inv = F.inv(M[col][col]);
        for (int r = col + 1; r < size; ++r) {
            if (F.is_zero(M[r][col])) continue;
            Fq factor = F.mul(M[r][col], inv);
            for (int c2 = col; c2 < size; ++c2) M[r][c2] = F.sub(M[r][c2], F.mul(factor, M[col][c2]));
        }
    }
    return det;
}

} // namespace selberg::oracle

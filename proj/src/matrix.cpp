#include "twobridge/matrix.hpp"

#include "twobridge/errors.hpp"

#include <utility>

namespace twobridge {

IntPoly matd_det(MatD m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw InvalidInput("determinant of a non-square matrix");
    if (n == 0) return IntPoly{{1}};
    bool negate = false;
    IntPoly prev{{1}};
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return IntPoly{};
            std::swap(m[k], m[r]);
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = poly_exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = IntPoly{};
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

} // namespace twobridge

#pragma once

#include "twobridge/intpoly.hpp"

#include <vector>

namespace twobridge {

// Row-major 2x2 matrix [[a, b], [c, d]] over any ring type with +, -, *.
template <typename T>
struct Mat2 {
    T a, b, c, d;

    bool operator==(const Mat2& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
    bool operator!=(const Mat2& o) const { return !(*this == o); }
};

template <typename T>
Mat2<T> mat_mul(const Mat2<T>& m, const Mat2<T>& n) {
    return Mat2<T>{m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                   m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

template <typename T>
Mat2<T> mat_add(const Mat2<T>& m, const Mat2<T>& n) {
    return Mat2<T>{m.a + n.a, m.b + n.b, m.c + n.c, m.d + n.d};
}

template <typename T>
Mat2<T> mat_sub(const Mat2<T>& m, const Mat2<T>& n) {
    return Mat2<T>{m.a - n.a, m.b - n.b, m.c - n.c, m.d - n.d};
}

template <typename T>
T mat_det(const Mat2<T>& m) {
    return m.a * m.d - m.b * m.c;
}

// Square matrix of integer polynomials in t, row-major.
using MatD = std::vector<std::vector<IntPoly>>;

// Fraction-free determinant (Bareiss); every interior division is exact.
IntPoly matd_det(MatD m);

} // namespace twobridge

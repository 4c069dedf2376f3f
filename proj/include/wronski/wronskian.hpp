#pragma once

#include <vector>

#include "wronski/linalg.hpp"
#include "wronski/poly.hpp"
#include "wronski/roots.hpp"

namespace wronski {

/// Exact Wronski determinant of p polynomials (rows are successive
/// derivatives), fraction-free elimination on the polynomial matrix.
RatPoly wronskian(const std::vector<RatPoly>& fs);

/// Same determinant over any coefficient type via division-free minor
/// expansion; the double-precision path used inside Newton iteration.
template <typename T>
Poly<T> wronskian_generic(const std::vector<Poly<T>>& fs) {
    size_t p = fs.size();
    Mat<Poly<T>> m(p, std::vector<Poly<T>>(p));
    for (size_t j = 0; j < p; ++j) {
        m[0][j] = fs[j];
        for (size_t r = 1; r < p; ++r) m[r][j] = m[r - 1][j].derivative();
    }
    return det_minor_expansion(m);
}

/// Derivative of the Wronskian in the coefficient a_{i,l} of f_i: by
/// multilinearity this is the Wronskian with f_i replaced by z^l. i is
/// 1-based to match the rest of the library.
RatPoly wronskian_partial(const std::vector<RatPoly>& fs, size_t i, size_t l);

/// Real critical points of the rational function f2/f1 (roots of the pair's
/// Wronskian); requires the pair to be coprime.
RootList critical_points(const RatPoly& f1, const RatPoly& f2);

} // namespace wronski

#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "wronski/poly.hpp"
#include "wronski/rational.hpp"

namespace wronski {

template <typename T>
using Mat = std::vector<std::vector<T>>;

using RatMat = Mat<Rat>;

template <typename T>
Mat<T> make_mat(size_t rows, size_t cols, const T& fill = T()) {
    return Mat<T>(rows, std::vector<T>(cols, fill));
}

template <typename T>
Mat<T> mat_mul(const Mat<T>& a, const Mat<T>& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Mat<T> c = make_mat(n, m, T(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l] == T(0)) continue;
            for (size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

/// Fraction-free Bareiss determinant. Works over any integral domain with
/// exact division (rationals trivially; polynomials via divexact), with row
/// pivoting when a pivot vanishes.
template <typename T, typename DivExact>
T det_bareiss(Mat<T> a, DivExact dive) {
    size_t n = a.size();
    if (n == 0) return T(1);
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
    int sign = 1;
    T prev = T(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == T(0)) {
            size_t piv = k + 1;
            while (piv < n && a[piv][k] == T(0)) ++piv;
            if (piv == n) return T(0);
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = dive(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
        prev = a[k][k];
    }
    T d = a[n - 1][n - 1];
    return sign < 0 ? T(0) - d : d;
}

inline Rat det_rat(const RatMat& a) {
    return det_bareiss<Rat>(a, [](const Rat& x, const Rat& y) { return Rat(x / y); });
}

inline Poly<Rat> det_poly(const Mat<Poly<Rat>>& a) {
    return det_bareiss<Poly<Rat>>(
        a, [](const Poly<Rat>& x, const Poly<Rat>& y) { return Poly<Rat>::divexact(x, y); });
}

/// Division-free determinant by Laplace expansion over column subsets,
/// processing rows top-down. O(2^n * n) ring multiplications; fine for the
/// small matrices here and valid over any commutative ring. Kept as an
/// independent route for cross-checking det_bareiss.
template <typename T>
T det_minor_expansion(const Mat<T>& a) {
    size_t n = a.size();
    if (n == 0) return T(1);
    if (n > 20) throw std::invalid_argument("det_minor_expansion: matrix too large");
    std::vector<T> dp(size_t(1) << n, T(0));
    dp[0] = T(1);
    for (size_t mask = 1; mask < dp.size(); ++mask) {
        // dp[mask] = det of rows 0..|mask|-1 on the columns in mask,
        // expanded along the last of those rows.
        size_t r = static_cast<size_t>(__builtin_popcountll(mask)) - 1;
        T acc(0);
        int parity = (r % 2 == 0) ? 1 : -1;
        for (size_t c = 0; c < n; ++c) {
            if (!(mask >> c & 1)) continue;
            if (!(a[r][c] == T(0))) {
                T term = a[r][c] * dp[mask ^ (size_t(1) << c)];
                if (parity > 0) acc += term; else acc -= term;
            }
            parity = -parity;
        }
        dp[mask] = acc;
    }
    return dp[dp.size() - 1];
}

/// Rank by exact Gaussian elimination.
inline size_t rank_rat(RatMat a) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            Rat f = a[i][c] / a[r][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

/// Solves a*x = b exactly; throws on singular a.
inline std::vector<Rat> solve_rat(RatMat a, std::vector<Rat> b) {
    size_t n = a.size();
    if (n == 0) return {};
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) throw std::domain_error("singular rational system");
        std::swap(a[k], a[piv]);
        std::swap(b[k], b[piv]);
        for (size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rat f = a[i][k] / a[k][k];
            for (size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }
    std::vector<Rat> x(n);
    for (size_t i = n; i-- > 0;) {
        Rat s = b[i];
        for (size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return x;
}

/// Double-precision solve with partial pivoting; returns false when the
/// pivot falls below tol (treated as numerically singular).
inline bool solve_double(Mat<double> a, std::vector<double> b, std::vector<double>& x,
                         double tol = 1e-13) {
    size_t n = a.size();
    x.assign(n, 0.0);
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        double best = std::fabs(a[k][k]);
        for (size_t i = k + 1; i < n; ++i)
            if (std::fabs(a[i][k]) > best) { best = std::fabs(a[i][k]); piv = i; }
        if (best < tol) return false;
        std::swap(a[k], a[piv]);
        std::swap(b[k], b[piv]);
        for (size_t i = k + 1; i < n; ++i) {
            double f = a[i][k] / a[k][k];
            if (f == 0.0) continue;
            for (size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }
    for (size_t i = n; i-- > 0;) {
        double s = b[i];
        for (size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return true;
}

inline int det_sign_rat(const RatMat& a) { return sign_of(det_rat(a)); }

} // namespace wronski

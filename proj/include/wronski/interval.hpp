#pragma once

#include <algorithm>
#include <stdexcept>

#include "wronski/linalg.hpp"
#include "wronski/poly.hpp"
#include "wronski/rational.hpp"

namespace wronski {

/// Closed interval with exact rational endpoints. Degenerate (lo == hi)
/// intervals represent exact values, so interval computations specialize to
/// exact ones for free.
struct QInterval {
    Rat lo, hi;

    QInterval() : lo(0), hi(0) {}
    QInterval(Rat v) : lo(v), hi(v) {}
    QInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("inverted interval");
    }

    bool exact() const { return lo == hi; }
    bool contains_zero() const { return lo <= 0 && hi >= 0; }

    /// Certified sign: +1/-1 when zero is excluded, 0 when undecided.
    int sign() const {
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        return 0;
    }

    friend QInterval operator+(const QInterval& a, const QInterval& b) {
        return QInterval(a.lo + b.lo, a.hi + b.hi);
    }
    friend QInterval operator-(const QInterval& a, const QInterval& b) {
        return QInterval(a.lo - b.hi, a.hi - b.lo);
    }
    friend QInterval operator-(const QInterval& a) { return QInterval(-a.hi, -a.lo); }
    friend QInterval operator*(const QInterval& a, const QInterval& b) {
        Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
        return QInterval(std::min(std::min(p1, p2), std::min(p3, p4)),
                         std::max(std::max(p1, p2), std::max(p3, p4)));
    }
    friend QInterval operator/(const QInterval& a, const QInterval& b) {
        if (b.contains_zero()) throw std::domain_error("interval division by zero-straddling interval");
        Rat p1 = a.lo / b.lo, p2 = a.lo / b.hi, p3 = a.hi / b.lo, p4 = a.hi / b.hi;
        return QInterval(std::min(std::min(p1, p2), std::min(p3, p4)),
                         std::max(std::max(p1, p2), std::max(p3, p4)));
    }
    QInterval& operator+=(const QInterval& b) { *this = *this + b; return *this; }
    QInterval& operator-=(const QInterval& b) { *this = *this - b; return *this; }
    QInterval& operator*=(const QInterval& b) { *this = *this * b; return *this; }

    bool operator==(const QInterval& o) const { return lo == o.lo && hi == o.hi; }

    double mid_d() const { return (Rat((lo + hi) / 2)).get_d(); }
};

/// Interval Horner evaluation of an exact-coefficient polynomial.
inline QInterval eval_interval(const RatPoly& f, const QInterval& x) {
    QInterval r((Rat(0)));
    const auto& c = f.coeffs();
    for (size_t i = c.size(); i-- > 0;) r = r * x + QInterval(c[i]);
    return r;
}

/// Determinant of an interval matrix via minor expansion; returns an interval
/// guaranteed to contain the determinant of every selection.
inline QInterval det_interval(const Mat<QInterval>& a) {
    size_t n = a.size();
    if (n == 0) return QInterval(Rat(1));
    std::vector<QInterval> dp(size_t(1) << n, QInterval(Rat(0)));
    dp[0] = QInterval(Rat(1));
    for (size_t mask = 1; mask < dp.size(); ++mask) {
        size_t r = static_cast<size_t>(__builtin_popcountll(mask)) - 1;
        QInterval acc((Rat(0)));
        int parity = (r % 2 == 0) ? 1 : -1;
        for (size_t c = 0; c < n; ++c) {
            if (!(mask >> c & 1)) continue;
            QInterval term = a[r][c] * dp[mask ^ (size_t(1) << c)];
            if (parity > 0) acc += term; else acc -= term;
            parity = -parity;
        }
        dp[mask] = acc;
    }
    return dp[dp.size() - 1];
}

} // namespace wronski

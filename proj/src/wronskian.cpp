#include "wronski/wronskian.hpp"

#include <stdexcept>

namespace wronski {

RatPoly wronskian(const std::vector<RatPoly>& fs) {
    if (fs.empty()) throw std::invalid_argument("wronskian of empty list");
    size_t p = fs.size();
    Mat<RatPoly> m(p, std::vector<RatPoly>(p));
    for (size_t j = 0; j < p; ++j) {
        m[0][j] = fs[j];
        for (size_t r = 1; r < p; ++r) m[r][j] = m[r - 1][j].derivative();
    }
    return det_poly(m);
}

RatPoly wronskian_partial(const std::vector<RatPoly>& fs, size_t i, size_t l) {
    if (i < 1 || i > fs.size()) throw std::out_of_range("wronskian_partial: index out of range");
    std::vector<RatPoly> gs = fs;
    gs[i - 1] = RatPoly::monomial(Rat(1), l);
    return wronskian(gs);
}

RootList critical_points(const RatPoly& f1, const RatPoly& f2) {
    if (f1.is_zero() || f2.is_zero())
        throw std::invalid_argument("critical_points: zero polynomial");
    if (!coprime(f1, f2)) throw std::invalid_argument("critical_points: pair is not coprime");
    RatPoly w = wronskian({f1, f2});
    if (w.is_zero()) throw std::domain_error("critical_points: degenerate pair");
    if (w.degree() == 0) return {};
    return real_roots(w);
}

} // namespace wronski

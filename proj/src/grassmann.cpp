#include "wronski/grassmann.hpp"

#include <stdexcept>

namespace wronski {

std::vector<std::vector<int>> subsets_colex(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i) s[i] = i;
    while (true) {
        out.push_back(s);
        // next in colex: increment the smallest element that can move
        int i = 0;
        while (i < k) {
            int limit = (i + 1 < k) ? s[i + 1] : n;
            if (s[i] + 1 < limit) break;
            ++i;
        }
        if (i == k) break;
        ++s[i];
        for (int j = 0; j < i; ++j) s[j] = j;
    }
    return out;
}

namespace {

void check_matrix(const MatrixK& k) {
    if (k.m < 1 || k.p < 1) throw std::invalid_argument("MatrixK: m,p must be positive");
    if (k.entries.size() != static_cast<size_t>(k.m))
        throw std::invalid_argument("MatrixK: wrong row count");
    for (const auto& row : k.entries)
        if (row.size() != static_cast<size_t>(k.m + k.p))
            throw std::invalid_argument("MatrixK: wrong column count");
}

} // namespace

PluckerVector plucker(const MatrixK& k) {
    check_matrix(k);
    if (rank_rat(k.entries) != static_cast<size_t>(k.m))
        throw std::domain_error("plucker: rank-deficient matrix");
    PluckerVector v;
    v.m = k.m;
    v.p = k.p;
    v.subsets = subsets_colex(k.m + k.p, k.m);
    v.coords.reserve(v.subsets.size());
    for (const auto& s : v.subsets) {
        RatMat sub(k.m, std::vector<Rat>(k.m));
        for (int i = 0; i < k.m; ++i)
            for (int j = 0; j < k.m; ++j)
                sub[i][j] = k.entries[i][static_cast<size_t>(s[j])];
        v.coords.push_back(det_rat(sub));
    }
    return v;
}

Mat<RatPoly> osculating_matrix_symbolic(int m, int p) {
    if (m < 1 || p < 1) throw std::invalid_argument("osculating matrix: m,p must be positive");
    int n = m + p;
    Mat<RatPoly> e(p, std::vector<RatPoly>(n));
    for (int c = 0; c < n; ++c) {
        long expo = n - 1 - c;
        RatPoly cell = RatPoly::monomial(Rat(1), static_cast<size_t>(expo));
        for (int r = 0; r < p; ++r) {
            e[r][c] = cell;
            cell = cell.derivative();
        }
    }
    return e;
}

RatMat osculating_matrix(const Rat& z0, int m, int p) {
    auto sym = osculating_matrix_symbolic(m, p);
    RatMat e(p, std::vector<Rat>(m + p));
    for (int r = 0; r < p; ++r)
        for (int c = 0; c < m + p; ++c) e[r][c] = sym[r][c].eval(z0);
    return e;
}

RatPoly wronski_map_raw(const MatrixK& k) {
    check_matrix(k);
    if (rank_rat(k.entries) != static_cast<size_t>(k.m))
        throw std::domain_error("wronski_map: rank-deficient matrix");
    int n = k.m + k.p;
    Mat<RatPoly> stacked(n, std::vector<RatPoly>(n));
    auto e = osculating_matrix_symbolic(k.m, k.p);
    for (int r = 0; r < k.p; ++r) stacked[r] = e[r];
    for (int i = 0; i < k.m; ++i)
        for (int c = 0; c < n; ++c)
            stacked[k.p + i][c] = RatPoly::constant(k.entries[i][c]);
    RatPoly d = det_poly(stacked);
    if (d.is_zero()) throw std::domain_error("wronski_map: vanishing determinant");
    return d;
}

RatPoly wronski_map(const MatrixK& k) {
    RatPoly d = wronski_map_raw(k);
    if (d.leading() < 0) d = d * Rat(-1);
    return d;
}

std::vector<RatPoly> big_cell_polys(const BigCellPoint& b) {
    if (b.m < 1 || b.p < 1) throw std::invalid_argument("BigCellPoint: m,p must be positive");
    if (b.kcoef.size() != static_cast<size_t>(b.m))
        throw std::invalid_argument("BigCellPoint: wrong row count");
    std::vector<RatPoly> fs(static_cast<size_t>(b.p));
    for (int j = 1; j <= b.p; ++j) {
        RatPoly f = RatPoly::monomial(Rat(1), static_cast<size_t>(b.m + b.p - j));
        for (int i = 1; i <= b.m; ++i) {
            if (b.kcoef[i - 1].size() != static_cast<size_t>(b.p))
                throw std::invalid_argument("BigCellPoint: wrong column count");
            f -= RatPoly::monomial(b.kcoef[i - 1][j - 1], static_cast<size_t>(b.m - i));
        }
        fs[static_cast<size_t>(j - 1)] = f;
    }
    return fs;
}

MatrixK big_cell_matrix(const BigCellPoint& b) {
    MatrixK k;
    k.m = b.m;
    k.p = b.p;
    k.entries = make_mat(static_cast<size_t>(b.m), static_cast<size_t>(b.m + b.p), Rat(0));
    for (int i = 0; i < b.m; ++i) {
        for (int j = 0; j < b.p; ++j) k.entries[i][j] = b.kcoef[i][j];
        k.entries[i][static_cast<size_t>(b.p + i)] = 1;
    }
    return k;
}

bool proportional(const RatPoly& f, const RatPoly& g) {
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    if (f.degree() != g.degree()) return false;
    return f * g.leading() == g * f.leading();
}

Rat big_cell_leading_coeff(int m, int p) {
    BigCellPoint b{m, p, make_mat(static_cast<size_t>(m), static_cast<size_t>(p), Rat(0))};
    RatPoly w = wronski_map_raw(big_cell_matrix(b));
    if (w.degree() != static_cast<long>(m) * p)
        throw std::logic_error("big cell leading coefficient: unexpected degree");
    return w.leading();
}

} // namespace wronski

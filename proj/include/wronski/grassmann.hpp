#pragma once

#include <vector>

#include "wronski/linalg.hpp"
#include "wronski/poly.hpp"

namespace wronski {

/// Full-rank m x (m+p) matrix representing a point of the Grassmannian of
/// m-planes in (m+p)-space; row-equivalent matrices represent the same point.
struct MatrixK {
    int m = 0;
    int p = 0;
    RatMat entries; // m rows, m+p columns
};

/// Point of the big cell: the matrix [kcoef | I].
struct BigCellPoint {
    int m = 0;
    int p = 0;
    RatMat kcoef; // m rows, p columns
};

/// All maximal minors in colexicographic subset order.
struct PluckerVector {
    int m = 0;
    int p = 0;
    std::vector<std::vector<int>> subsets; // column index sets, colex order
    std::vector<Rat> coords;
};

/// k-subsets of {0..n-1} in colexicographic order.
std::vector<std::vector<int>> subsets_colex(int n, int k);

PluckerVector plucker(const MatrixK& k);

/// p x (m+p) matrix whose row j is the (j-1)-th derivative of
/// (z^{m+p-1}, ..., z, 1), evaluated at z0.
RatMat osculating_matrix(const Rat& z0, int m, int p);

/// Same matrix with z left symbolic.
Mat<RatPoly> osculating_matrix_symbolic(int m, int p);

/// Determinant of the osculating matrix stacked over K, expanded in z.
/// Degree <= mp, with equality exactly on the big cell. Throws on
/// rank-deficient K.
RatPoly wronski_map_raw(const MatrixK& k);

/// Raw map normalized so the leading coefficient is positive; callers compare
/// results up to scale (projective semantics).
RatPoly wronski_map(const MatrixK& k);

/// The big-cell basis polynomials: f_j = z^{m+p-j} - k_{1,j} z^{m-1} - ... - k_{m,j}.
std::vector<RatPoly> big_cell_polys(const BigCellPoint& b);

MatrixK big_cell_matrix(const BigCellPoint& b);

/// True when one polynomial is a nonzero scalar multiple of the other (both
/// zero also counts).
bool proportional(const RatPoly& f, const RatPoly& g);

/// Leading coefficient of the raw Wronski map on the big cell; constant in
/// kcoef, nonzero for every (m, p).
Rat big_cell_leading_coeff(int m, int p);

} // namespace wronski

#pragma once

#include <optional>
#include <vector>

#include "wronski/combinatorics.hpp"
#include "wronski/grassmann.hpp"
#include "wronski/poly.hpp"
#include "wronski/roots.hpp"

namespace wronski {

/// Strictly increasing multi-index 0 <= k_1 < ... < k_p < m+p recording the
/// lowest-degree pattern of a polynomial vector. The defect
/// sum(k_i - i + 1) equals the multiplicity of the Wronskian's root at 0.
struct MultiIndexK {
    int m = 0;
    int p = 0;
    std::vector<int> k;

    long defect() const {
        long d = 0;
        for (size_t i = 0; i < k.size(); ++i) d += k[i] - static_cast<long>(i);
        return d;
    }

    bool operator==(const MultiIndexK& o) const = default;
};

/// A point of the cell b(k): q_i monic of degree m+i-1 with all coefficients
/// between z^{k_i} and z^{m+i-2} strictly positive, Wronskian roots confined
/// to (-1, 0], and the roots in (-1, 0) simple.
struct BKVector {
    int m = 0;
    int p = 0;
    std::vector<RatPoly> qs;
    MultiIndexK index;

    /// a_{i,j}: coefficient of z^j in q_i (i is 1-based).
    Rat coeff(int i, long j) const { return qs[static_cast<size_t>(i - 1)][static_cast<size_t>(j)]; }
};

/// One cell of the coefficient ordering: the coefficient a_{i,j}.
struct CoeffRef {
    int i;  // polynomial index, 1-based
    long j; // power of z
    bool operator==(const CoeffRef& o) const = default;
};

/// The orientation-defining flattening a_{1,k_1},...,a_{1,m-1},a_{2,k_2},...:
/// row i of the Young diagram holds the coefficients of q_i.
std::vector<CoeffRef> coeff_order(const MultiIndexK& k);

/// Certifies membership in b(k) with exact root location counts; returns the
/// multi-index. Throws with a specific reason otherwise.
MultiIndexK validate_bk(const std::vector<RatPoly>& qs);

BKVector make_bk(std::vector<RatPoly> qs);

/// The one-coefficient cell q = (z^m + a z^{m-1}, z^{m+1}, ..., z^{m+p-1});
/// valid for 0 < a < (p-1)/p!.
BKVector base_cell(int m, int p, const Rat& a);

/// Negative roots of the Wronskian as magnitudes x_1 < x_2 < ... (x_1 closest
/// to zero), isolated to the requested interval width.
struct RootCoords {
    RatPoly w;                     // full Wronskian
    RatPoly v;                     // w with the root at 0 divided out
    std::vector<RootInterval> xs;  // magnitudes, ascending
};
RootCoords wronskian_root_coords(const BKVector& q, const Rat& width = Rat(1, 1 << 20));

/// Jacobi matrix of the coefficients-to-root-magnitudes map: row r is x_r,
/// column c the c-th entry of coeff_order. Entries are evaluated on isolating
/// intervals refined until the determinant sign is certified; when every root
/// is rational the determinant is exact.
struct JacobiDelta {
    size_t n = 0;
    Mat<double> entries;
    int det_sign = 0;
    std::optional<Rat> exact_det;
};
JacobiDelta jacobi_delta(const BKVector& q, const Rat& width = Rat(1, 1 << 20));

/// Number of coefficient-order cells in rows 1..i-1.
long chi(const MultiIndexK& k, int i);

/// Whether the operator F^i applies at this multi-index.
bool f_applicable(const MultiIndexK& k, int i);

/// F^i_a: adds a*z^{k_i - 1} to q_i, dropping the defect by one. Requires
/// f_applicable and a small enough that the result validates; throws
/// otherwise (callers shrink a and retry).
BKVector apply_F(const BKVector& q, int i, const Rat& a);

/// Walks the operator chain encoded by a ballot sequence. schedule has mp
/// strictly decreasing positive entries; the first is the base-cell
/// coefficient, entry j (1-based) feeds step j for j >= 2. Ends in
/// b(0,1,...,p-1).
BKVector seed_chain_bk(const BallotSequence& sigma, const std::vector<Rat>& schedule);
BigCellPoint seed_chain(const BallotSequence& sigma, const std::vector<Rat>& schedule);

/// Retries seed_chain_bk with geometrically shrinking schedules until the
/// whole walk validates.
BKVector seed_chain_auto(const BallotSequence& sigma, const Rat& first_ratio = Rat(1, 4),
                         int max_attempts = 16);

/// One recorded operator application along a walk.
struct WalkStep {
    int i = 0;               // which operator
    Rat a;                   // accepted parameter
    long chi_before = 0;     // chi(index before, i)
    int sign_before = 0;     // certified Jacobi determinant signs
    int sign_after = 0;
    MultiIndexK index_before;
};

/// Walks sigma from the base cell choosing each parameter by geometric
/// back-off: start at a quarter of the previous parameter and halve until the
/// result validates and the certified determinant sign is unchanged by one
/// further halving. Returns every step plus the endpoint.
struct StableWalk {
    std::vector<WalkStep> steps;
    BKVector endpoint;
};
StableWalk stable_walk(const BallotSequence& sigma, const Rat& start = Rat(1, 4),
                       int max_halvings = 40);

/// Chart change from the q-parametrization to big-cell coordinates; total.
BigCellPoint bk_to_big_cell(const BKVector& q);
BigCellPoint bk_to_big_cell(int m, int p, const std::vector<RatPoly>& qs);

/// Chart change from big-cell coordinates to the defect-zero q-shape; fails
/// off the chart (zero pivot).
std::vector<RatPoly> big_cell_to_bk(const BigCellPoint& k);

/// Decreasing-coefficient ranking of a defect-zero q-vector read back as a
/// ballot sequence; requires all mp coefficients positive and distinct.
BallotSequence ranking_sequence(int m, int p, const std::vector<RatPoly>& qs);

} // namespace wronski

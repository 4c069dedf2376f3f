#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wronski/poly.hpp"

namespace wronski {

/// One isolated real root: an interval with exact rational endpoints
/// containing exactly one distinct root of the queried polynomial, with its
/// multiplicity. lo == hi means the root itself is rational and known exactly.
struct RootInterval {
    Rat lo, hi;
    int multiplicity = 1;

    bool exact() const { return lo == hi; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
};

using RootList = std::vector<RootInterval>;

/// Sturm chain of the squarefree part caller provides; entries scaled to
/// primitive integer form (positive scaling preserves all sign data).
std::vector<RatPoly> sturm_chain(const RatPoly& f);

int sign_variations(const std::vector<RatPoly>& chain, const Rat& x);

/// Number of distinct real roots of f in the open interval (a, b).
/// Requires f(a) != 0 and f(b) != 0.
long count_distinct_roots(const RatPoly& f, const Rat& a, const Rat& b);

/// Total number of distinct real roots of f.
long count_distinct_roots(const RatPoly& f);

/// Yun squarefree decomposition: list of (monic factor, multiplicity) with
/// pairwise coprime squarefree factors whose weighted product is f up to a
/// constant.
std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& f);

RatPoly squarefree_part(const RatPoly& f);

/// 1 + max |a_i| / |a_n|; every real root lies strictly inside (-bound, bound).
Rat cauchy_root_bound(const RatPoly& f);

/// All real roots of f with multiplicity, ascending. Throws on the zero
/// polynomial. Isolating intervals are pairwise disjoint.
RootList real_roots(const RatPoly& f);

/// Real roots of f inside the closed interval [lo, hi].
RootList real_roots(const RatPoly& f, const Rat& lo, const Rat& hi);

/// Shrinks an isolating interval below the given width by bisection. The
/// polynomial must be the squarefree factor the root belongs to.
void refine_root(const RatPoly& squarefree_factor, RootInterval& root, const Rat& width);

} // namespace wronski

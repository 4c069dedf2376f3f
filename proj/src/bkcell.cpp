#include "wronski/bkcell.hpp"

#include <algorithm>
#include <stdexcept>

#include "wronski/interval.hpp"
#include "wronski/wronskian.hpp"

namespace wronski {

std::vector<CoeffRef> coeff_order(const MultiIndexK& k) {
    std::vector<CoeffRef> order;
    for (int i = 1; i <= k.p; ++i)
        for (long j = k.k[static_cast<size_t>(i - 1)]; j <= k.m + i - 2; ++j)
            order.push_back(CoeffRef{i, j});
    return order;
}

MultiIndexK validate_bk(const std::vector<RatPoly>& qs) {
    if (qs.empty()) throw std::invalid_argument("validate_bk: empty vector");
    int p = static_cast<int>(qs.size());
    if (qs[0].is_zero()) throw std::invalid_argument("validate_bk: zero polynomial");
    int m = static_cast<int>(qs[0].degree());
    if (m < 1) throw std::invalid_argument("validate_bk: q_1 must have positive degree");

    MultiIndexK idx{m, p, std::vector<int>(static_cast<size_t>(p))};
    for (int i = 1; i <= p; ++i) {
        const RatPoly& q = qs[static_cast<size_t>(i - 1)];
        if (q.is_zero() || q.degree() != m + i - 1)
            throw std::invalid_argument("validate_bk: q_" + std::to_string(i) +
                                        " must have degree m+i-1");
        if (q.leading() != 1)
            throw std::invalid_argument("validate_bk: q_" + std::to_string(i) + " must be monic");
        long ki = q.ord();
        idx.k[static_cast<size_t>(i - 1)] = static_cast<int>(ki);
        for (long j = ki; j <= m + i - 2; ++j)
            if (q[static_cast<size_t>(j)] <= 0)
                throw std::invalid_argument("validate_bk: nonpositive coefficient in q_" +
                                            std::to_string(i));
    }
    for (int i = 1; i < p; ++i)
        if (idx.k[static_cast<size_t>(i - 1)] >= idx.k[static_cast<size_t>(i)])
            throw std::invalid_argument("validate_bk: lowest degrees must strictly increase");

    RatPoly w = wronskian(qs);
    long mp = static_cast<long>(m) * p;
    if (w.degree() != mp)
        throw std::logic_error("validate_bk: unexpected Wronskian degree");
    long defect = idx.defect();
    if (w.ord() != defect)
        throw std::invalid_argument("validate_bk: Wronskian order at 0 does not match the index");

    RatPoly v = w;
    for (long t = 0; t < defect; ++t)
        v = RatPoly::divexact(v, RatPoly::monomial(Rat(1), 1));
    if (v.degree() > 0) {
        if (v.eval(Rat(-1)) == 0)
            throw std::invalid_argument("validate_bk: Wronskian root outside (-1,0]");
        RatPoly s = squarefree_part(v);
        if (count_distinct_roots(s, Rat(-1), Rat(0)) != s.degree())
            throw std::invalid_argument("validate_bk: Wronskian root outside (-1,0]");
        if (s.degree() < v.degree())
            throw std::invalid_argument("validate_bk: multiple Wronskian root in (-1,0)");
    }
    return idx;
}

BKVector make_bk(std::vector<RatPoly> qs) {
    MultiIndexK idx = validate_bk(qs);
    return BKVector{idx.m, idx.p, std::move(qs), idx};
}

BKVector base_cell(int m, int p, const Rat& a) {
    if (m < 1 || p < 1) throw std::invalid_argument("base_cell: m,p must be positive");
    std::vector<RatPoly> qs;
    RatPoly q1 = RatPoly::monomial(Rat(1), static_cast<size_t>(m)) +
                 RatPoly::monomial(a, static_cast<size_t>(m - 1));
    qs.push_back(q1);
    for (int i = 2; i <= p; ++i)
        qs.push_back(RatPoly::monomial(Rat(1), static_cast<size_t>(m + i - 1)));
    return make_bk(std::move(qs));
}

RootCoords wronskian_root_coords(const BKVector& q, const Rat& width) {
    RootCoords rc;
    rc.w = wronskian(q.qs);
    long defect = q.index.defect();
    rc.v = rc.w;
    for (long t = 0; t < defect; ++t)
        rc.v = RatPoly::divexact(rc.v, RatPoly::monomial(Rat(1), 1));
    if (rc.v.degree() == 0) return rc;
    auto roots = real_roots(rc.v, Rat(-1), Rat(0));
    if (static_cast<long>(roots.size()) != rc.v.degree())
        throw std::logic_error("wronskian_root_coords: roots escaped (-1,0)");
    RatPoly s = squarefree_part(rc.v);
    for (auto& r : roots) refine_root(s, r, width);
    // roots ascend (most negative first); magnitudes ascend the other way
    rc.xs.reserve(roots.size());
    for (size_t t = roots.size(); t-- > 0;) {
        const auto& r = roots[t];
        rc.xs.push_back(RootInterval{-r.hi, -r.lo, 1});
    }
    return rc;
}

JacobiDelta jacobi_delta(const BKVector& q, const Rat& width) {
    RootCoords rc = wronskian_root_coords(q, width);
    auto order = coeff_order(q.index);
    size_t n = order.size();
    if (rc.xs.size() != n)
        throw std::logic_error("jacobi_delta: root count does not match coefficient count");

    JacobiDelta out;
    out.n = n;
    if (n == 0) {
        out.det_sign = 1;
        out.exact_det = Rat(1);
        return out;
    }

    std::vector<RatPoly> partials(n);
    for (size_t c = 0; c < n; ++c)
        partials[c] = wronskian_partial(q.qs, static_cast<size_t>(order[c].i),
                                        static_cast<size_t>(order[c].j));
    RatPoly wprime = rc.w.derivative();
    RatPoly s = squarefree_part(rc.v);

    std::vector<RootInterval> xs = rc.xs;
    for (int pass = 0; pass < 200; ++pass) {
        Mat<QInterval> delta(n, std::vector<QInterval>(n));
        bool ok = true;
        for (size_t r = 0; r < n && ok; ++r) {
            QInterval z(-xs[r].hi, -xs[r].lo);
            QInterval dw = eval_interval(wprime, z);
            if (dw.lo == 0 && dw.hi == 0)
                throw std::domain_error("jacobi_delta: multiple negative root");
            if (dw.contains_zero()) {
                ok = false;
                break;
            }
            for (size_t c = 0; c < n; ++c)
                delta[r][c] = eval_interval(partials[c], z) / dw;
        }
        if (ok) {
            QInterval d = det_interval(delta);
            int sign = d.sign();
            bool all_exact = true;
            for (auto& x : xs) all_exact &= x.exact();
            if (sign != 0 || all_exact) {
                if (sign == 0)
                    throw std::domain_error("jacobi_delta: determinant is exactly zero");
                out.det_sign = sign;
                out.entries = make_mat<double>(n, n, 0.0);
                for (size_t r = 0; r < n; ++r)
                    for (size_t c = 0; c < n; ++c) out.entries[r][c] = delta[r][c].mid_d();
                if (all_exact) out.exact_det = d.lo;
                return out;
            }
        }
        for (auto& x : xs) {
            if (x.exact()) continue;
            RootInterval neg{-x.hi, -x.lo, 1};
            refine_root(s, neg, Rat((neg.hi - neg.lo) / 4));
            x = RootInterval{-neg.hi, -neg.lo, 1};
        }
    }
    throw std::runtime_error("jacobi_delta: could not certify determinant sign");
}

long chi(const MultiIndexK& k, int i) {
    if (i < 1 || i > k.p) throw std::out_of_range("chi: row index out of range");
    long total = 0;
    for (int r = 1; r < i; ++r) total += k.m + r - 1 - k.k[static_cast<size_t>(r - 1)];
    return total;
}

bool f_applicable(const MultiIndexK& k, int i) {
    if (i < 1 || i > k.p) return false;
    if (i == 1) return k.k[0] > 0;
    return k.k[static_cast<size_t>(i - 1)] > k.k[static_cast<size_t>(i - 2)] + 1;
}

BKVector apply_F(const BKVector& q, int i, const Rat& a) {
    if (!f_applicable(q.index, i))
        throw std::invalid_argument("apply_F: operator not applicable at this index");
    if (a <= 0) throw std::invalid_argument("apply_F: parameter must be positive");
    std::vector<RatPoly> qs = q.qs;
    long ki = q.index.k[static_cast<size_t>(i - 1)];
    qs[static_cast<size_t>(i - 1)] += RatPoly::monomial(a, static_cast<size_t>(ki - 1));
    BKVector out = make_bk(std::move(qs)); // throws when a is too large
    if (out.index.defect() != q.index.defect() - 1)
        throw std::logic_error("apply_F: defect did not drop by one");
    return out;
}

BKVector seed_chain_bk(const BallotSequence& sigma, const std::vector<Rat>& schedule) {
    if (!is_ballot(sigma)) throw std::invalid_argument("seed_chain: not a ballot sequence");
    size_t n = static_cast<size_t>(sigma.m) * static_cast<size_t>(sigma.p);
    if (schedule.size() != n)
        throw std::invalid_argument("seed_chain: schedule must have m*p entries");
    for (size_t j = 0; j < n; ++j) {
        if (schedule[j] <= 0) throw std::invalid_argument("seed_chain: schedule must be positive");
        if (j > 0 && schedule[j] >= schedule[j - 1])
            throw std::invalid_argument("seed_chain: schedule must strictly decrease");
    }
    BKVector cur = base_cell(sigma.m, sigma.p, schedule[0]);
    for (size_t j = 1; j < n; ++j)
        cur = apply_F(cur, sigma.entries[j], schedule[j]);
    if (cur.index.defect() != 0) throw std::logic_error("seed_chain: endpoint defect nonzero");
    return cur;
}

BigCellPoint seed_chain(const BallotSequence& sigma, const std::vector<Rat>& schedule) {
    return bk_to_big_cell(seed_chain_bk(sigma, schedule));
}

BKVector seed_chain_auto(const BallotSequence& sigma, const Rat& first_ratio, int max_attempts) {
    if (!is_ballot(sigma)) throw std::invalid_argument("seed_chain_auto: not a ballot sequence");
    size_t n = static_cast<size_t>(sigma.m) * static_cast<size_t>(sigma.p);
    // Valid ranges can shrink like the square of the previous parameter when
    // one row receives repeated additions, so each step backs off on its own.
    Rat a0 = first_ratio;
    BKVector cur;
    bool have_base = false;
    for (int h = 0; h < max_attempts && !have_base; ++h, a0 /= 2) {
        try {
            cur = base_cell(sigma.m, sigma.p, a0);
            have_base = true;
        } catch (const std::invalid_argument&) {
        }
    }
    if (!have_base) throw std::runtime_error("seed_chain_auto: no valid base coefficient");
    Rat prev = cur.coeff(1, sigma.m - 1);
    for (size_t j = 1; j < n; ++j) {
        int i = sigma.entries[j];
        Rat a = std::min(Rat(prev / 4), Rat(prev * prev));
        bool done = false;
        for (int h = 0; h < 8 * max_attempts && !done; ++h, a /= 2) {
            try {
                cur = apply_F(cur, i, a);
                prev = a;
                done = true;
            } catch (const std::invalid_argument&) {
            }
        }
        if (!done) throw std::runtime_error("seed_chain_auto: no valid schedule found");
    }
    if (cur.index.defect() != 0) throw std::logic_error("seed_chain_auto: endpoint defect nonzero");
    return cur;
}

StableWalk stable_walk(const BallotSequence& sigma, const Rat& start, int max_halvings) {
    if (!is_ballot(sigma)) throw std::invalid_argument("stable_walk: not a ballot sequence");
    size_t n = static_cast<size_t>(sigma.m) * static_cast<size_t>(sigma.p);
    StableWalk walk;
    Rat a0 = start;
    BKVector cur;
    for (int h = 0;; ++h, a0 /= 2) {
        if (h >= max_halvings) throw std::runtime_error("stable_walk: no valid base coefficient");
        try {
            cur = base_cell(sigma.m, sigma.p, a0);
            break;
        } catch (const std::invalid_argument&) {
        }
    }
    Rat prev_a = a0;
    int prev_sign = jacobi_delta(cur).det_sign;
    for (size_t j = 1; j < n; ++j) {
        int i = sigma.entries[j];
        Rat a = std::min(Rat(prev_a / 4), Rat(prev_a * prev_a));
        bool accepted = false;
        for (int h = 0; h < max_halvings && !accepted; ++h, a /= 2) {
            BKVector q1, q2, q3;
            try {
                q1 = apply_F(cur, i, a);
                q2 = apply_F(cur, i, a / 2);
                q3 = apply_F(cur, i, a / 4);
            } catch (const std::invalid_argument&) {
                continue;
            }
            int s1 = jacobi_delta(q1).det_sign;
            if (s1 != jacobi_delta(q2).det_sign || s1 != jacobi_delta(q3).det_sign) continue;
            walk.steps.push_back(WalkStep{i, a, chi(cur.index, i), prev_sign, s1, cur.index});
            cur = std::move(q1);
            prev_a = a;
            prev_sign = s1;
            accepted = true;
        }
        if (!accepted) throw std::runtime_error("stable_walk: no stable parameter found");
    }
    walk.endpoint = std::move(cur);
    return walk;
}

BigCellPoint bk_to_big_cell(const BKVector& q) { return bk_to_big_cell(q.m, q.p, q.qs); }

BigCellPoint bk_to_big_cell(int m, int p, const std::vector<RatPoly>& qs) {
    if (static_cast<int>(qs.size()) != p)
        throw std::invalid_argument("bk_to_big_cell: wrong vector length");
    // Reduce the span to the shape f_j = z^{m+p-j} - (terms of degree < m):
    // process descending leading degree, clearing the window [m, m+p-2].
    std::vector<RatPoly> fs(static_cast<size_t>(p));
    for (int j = p; j >= 1; --j) {
        RatPoly f = qs[static_cast<size_t>(p - j)]; // degree m+p-j
        if (f.degree() != m + p - j)
            throw std::invalid_argument("bk_to_big_cell: unexpected degree");
        for (long t = m + p - j - 1; t >= m; --t) {
            Rat c = f[static_cast<size_t>(t)];
            if (c == 0) continue;
            int jj = static_cast<int>(m + p - t); // f with leading degree t
            f -= fs[static_cast<size_t>(jj - 1)] * c;
        }
        fs[static_cast<size_t>(j - 1)] = f;
    }
    BigCellPoint b{m, p, make_mat(static_cast<size_t>(m), static_cast<size_t>(p), Rat(0))};
    for (int j = 1; j <= p; ++j)
        for (int i = 1; i <= m; ++i)
            b.kcoef[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
                -fs[static_cast<size_t>(j - 1)][static_cast<size_t>(m - i)];
    return b;
}

std::vector<RatPoly> big_cell_to_bk(const BigCellPoint& k) {
    auto fs = big_cell_polys(k);
    int m = k.m, p = k.p;
    std::vector<RatPoly> qs(static_cast<size_t>(p));
    for (int i = 1; i <= p; ++i) {
        RatPoly q = fs[static_cast<size_t>(p - i)]; // degree m+i-1
        for (long t = 0; t <= i - 2; ++t) {
            Rat c = q[static_cast<size_t>(t)];
            if (c == 0) continue;
            const RatPoly& pivot = qs[static_cast<size_t>(t)]; // lowest term z^t
            Rat pv = pivot[static_cast<size_t>(t)];
            if (pv == 0)
                throw std::domain_error("big_cell_to_bk: point is outside the chart");
            q -= pivot * Rat(c / pv);
        }
        if (q.degree() != m + i - 1 || q.leading() != 1)
            throw std::logic_error("big_cell_to_bk: reduction broke the shape");
        if (i >= 2 && q.ord() >= 0 && q.ord() < i - 1)
            throw std::logic_error("big_cell_to_bk: reduction left low-order terms");
        qs[static_cast<size_t>(i - 1)] = q;
    }
    return qs;
}

BallotSequence ranking_sequence(int m, int p, const std::vector<RatPoly>& qs) {
    struct Entry {
        Rat value;
        int row;
    };
    std::vector<Entry> entries;
    for (int i = 1; i <= p; ++i) {
        const RatPoly& q = qs[static_cast<size_t>(i - 1)];
        if (q.degree() != m + i - 1 || q.leading() != 1)
            throw std::invalid_argument("ranking_sequence: not a defect-zero shape");
        for (long j = i - 1; j <= m + i - 2; ++j) {
            Rat v = q[static_cast<size_t>(j)];
            if (v <= 0)
                throw std::domain_error("ranking_sequence: coefficients must be positive");
            entries.push_back(Entry{v, i});
        }
    }
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.value > b.value; });
    for (size_t t = 0; t + 1 < entries.size(); ++t)
        if (entries[t].value == entries[t + 1].value)
            throw std::domain_error("ranking_sequence: tied coefficients");
    BallotSequence s;
    s.m = m;
    s.p = p;
    s.entries.reserve(entries.size());
    for (auto& e : entries) s.entries.push_back(static_cast<std::uint8_t>(e.row));
    if (!is_ballot(s))
        throw std::domain_error("ranking_sequence: ranking is not a ballot sequence");
    return s;
}

} // namespace wronski

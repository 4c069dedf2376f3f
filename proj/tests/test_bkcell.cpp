#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "wronski/bkcell.hpp"
#include "wronski/wronskian.hpp"

using namespace wronski;

namespace {

RatPoly zpow(long k) { return RatPoly::monomial(Rat(1), static_cast<size_t>(k)); }

// Root magnitudes of the perturbed Wronskian, for finite differencing.
std::vector<Rat> root_magnitudes(const std::vector<RatPoly>& qs, long defect, const Rat& width) {
    RatPoly w = wronskian(qs);
    RatPoly v = w;
    for (long t = 0; t < defect; ++t) v = RatPoly::divexact(v, zpow(1));
    auto roots = real_roots(v, Rat(-1), Rat(0));
    REQUIRE(static_cast<long>(roots.size()) == v.degree());
    RatPoly s = squarefree_part(v);
    for (auto& r : roots) refine_root(s, r, width);
    std::vector<Rat> xs;
    for (size_t t = roots.size(); t-- > 0;) xs.push_back(-roots[t].mid());
    return xs;
}

} // namespace

TEST_CASE("validate_bk: frozen (2,2) example") {
    // q = (z^2 + z/4, z^3): index (1,3), Wronskian z^3(z + 1/2)
    std::vector<RatPoly> qs{RatPoly{Rat(0), Rat(1, 4), Rat(1)}, zpow(3)};
    MultiIndexK idx = validate_bk(qs);
    CHECK(idx.k == std::vector<int>{1, 3});
    CHECK(idx.defect() == 3); // multiplicity of the root at 0
    RatPoly w = wronskian(qs);
    CHECK(w == zpow(3) * RatPoly{Rat(1, 2), Rat(1)});
    CHECK(w.ord() == 3);
}

TEST_CASE("validate_bk rejections") {
    // a_{1,1} = 1 puts the root at -2, outside (-1, 0]
    CHECK_THROWS_WITH_AS(validate_bk({RatPoly{Rat(0), Rat(1), Rat(1)}, zpow(3)}),
                         doctest::Contains("outside"), std::invalid_argument);
    // negative coefficient
    CHECK_THROWS_WITH_AS(validate_bk({RatPoly{Rat(0), Rat(-1, 4), Rat(1)}, zpow(3)}),
                         doctest::Contains("nonpositive"), std::invalid_argument);
    // non-monic
    CHECK_THROWS(validate_bk({RatPoly{Rat(0), Rat(1, 4), Rat(2)}, zpow(3)}));
    // equal lowest degrees: q_2 reaching down to z^1 has k_2 = 1 = k_1
    CHECK_THROWS(validate_bk(
        {RatPoly{Rat(0), Rat(1, 4), Rat(1)}, RatPoly{Rat(0), Rat(1, 8), Rat(1, 8), Rat(1)}}));
}

TEST_CASE("base cell membership window") {
    // the single Wronskian root sits at -p*a, so membership needs a < 1/p
    for (int p = 2; p <= 5; ++p) {
        Rat bound(1, p);
        CHECK_NOTHROW(base_cell(3, p, bound / 2));
        CHECK_THROWS(base_cell(3, p, bound));     // root lands on -1
        CHECK_THROWS(base_cell(3, p, bound * 2)); // root escapes
        BKVector q = base_cell(3, p, bound / 2);
        CHECK(q.index.defect() == 3L * p - 1);
        CHECK(q.index.k.front() == 2);
        CHECK(q.index.k.back() == 2 + p);
    }
}

TEST_CASE("base cell wronskian formula, exact at several parameters") {
    // W = [1!2!...(p-2)!] z^{mp-1} ((p-1)! z + p! a): the two pieces are the
    // generalized Vandermonde values of W(z^m,...,z^{m+p-1}) and
    // W(z^{m-1},z^{m+1},...,z^{m+p-1}), and W is affine in a, so equality at
    // three parameters plus the affine-combination identity pins it for all a.
    for (int p = 2; p <= 5; ++p) {
        for (int m : {2, 3}) {
            Rat superfact = 1;
            for (int i = 1; i <= p - 2; ++i) superfact *= Rat(factorial(i));
            Rat bound = Rat(factorial(p - 1)) / Rat(factorial(p)); // root -pa > -1
            std::vector<Rat> As{bound / 7, bound / 3, bound / 2};
            std::vector<RatPoly> ws;
            for (const Rat& a : As) {
                BKVector q = base_cell(m, p, a);
                RatPoly w = wronskian(q.qs);
                RatPoly expect = zpow(static_cast<long>(m) * p - 1) *
                                 RatPoly{Rat(factorial(p)) * a, Rat(factorial(p - 1))} * superfact;
                CHECK(w == expect);
                ws.push_back(w);
            }
            // affine in a: W(a0) + t (W(a2) - W(a0)) == W(a1) for intermediate a1
            Rat t = (As[1] - As[0]) / (As[2] - As[0]);
            CHECK(ws[0] + (ws[2] - ws[0]) * t == ws[1]);
        }
    }
}

TEST_CASE("root coordinates") {
    // frozen: (z^2 + z/4, z^3) has the single coordinate 1/2
    BKVector q = make_bk({RatPoly{Rat(0), Rat(1, 4), Rat(1)}, zpow(3)});
    auto rc = wronskian_root_coords(q);
    REQUIRE(rc.xs.size() == 1);
    CHECK(rc.xs[0].contains(Rat(1, 2)));

    // base cell, general p: single coordinate p!*a/(p-1)! = p*a (the root of
    // (p-1)! z + p! a); for p <= 3 this matches p!*a/(p-1) as well
    for (int p = 2; p <= 5; ++p) {
        Rat a = Rat(1, 5 * p);
        auto rc2 = wronskian_root_coords(base_cell(2, p, a));
        REQUIRE(rc2.xs.size() == 1);
        CHECK(rc2.xs[0].contains(Rat(p) * a));
        if (p <= 3) CHECK(rc2.xs[0].contains(Rat(factorial(p)) * a / (p - 1)));
    }

    // defect zero: mp coordinates
    auto walk = stable_walk(BallotSequence{2, 2, {1, 2, 1, 2}});
    CHECK(wronskian_root_coords(walk.endpoint).xs.size() == 4);
}

TEST_CASE("lowest wronskian coefficient product") {
    // coefficient of z^defect equals prod_{j>l}(k_j - k_l) * prod_j a_{j,k_j}
    auto check_lowest = [](const BKVector& q) {
        RatPoly w = wronskian(q.qs);
        Rat expect = 1;
        for (int j = 0; j < q.p; ++j)
            for (int l = 0; l < j; ++l)
                expect *= Rat(q.index.k[static_cast<size_t>(j)] - q.index.k[static_cast<size_t>(l)]);
        for (int j = 1; j <= q.p; ++j)
            expect *= q.coeff(j, q.index.k[static_cast<size_t>(j - 1)]);
        CHECK(w[static_cast<size_t>(q.index.defect())] == expect);
        CHECK(expect > 0);
    };
    check_lowest(base_cell(2, 2, Rat(1, 4)));
    check_lowest(base_cell(3, 3, Rat(1, 5) / 2));
    check_lowest(make_bk({RatPoly{Rat(0), Rat(1, 4), Rat(1)}, zpow(3)}));
    auto walk = stable_walk(BallotSequence{3, 2, {1, 2, 1, 2, 1, 2}});
    check_lowest(walk.endpoint);
}

TEST_CASE("jacobi determinant at the base cell is p, exactly") {
    // x_1 = p*a, so the 1x1 Jacobi determinant is p; for p <= 3 this equals
    // the alternative constant p!/(p-1) as well
    CHECK(jacobi_delta(base_cell(2, 2, Rat(1, 4))).exact_det == Rat(2));
    for (int p = 2; p <= 5; ++p) {
        Rat a = Rat(1, 6 * p);
        auto d = jacobi_delta(base_cell(2, p, a));
        REQUIRE(d.exact_det.has_value());
        CHECK(*d.exact_det == Rat(p));
        if (p <= 3) CHECK(*d.exact_det == Rat(factorial(p)) / (p - 1));
        CHECK(d.det_sign == 1);
    }
}

TEST_CASE("chi") {
    MultiIndexK base{5, 3, {4, 6, 7}}; // base cell for m=5,p=3
    CHECK(chi(base, 1) == 0);
    CHECK(chi(base, 2) == 1);
    MultiIndexK full{4, 3, {0, 1, 2}};
    CHECK(chi(full, 3) == 2 * 4);
    CHECK_THROWS(chi(full, 4));
}

TEST_CASE("apply_F basics") {
    BKVector q = base_cell(2, 2, Rat(1, 4)); // index (1,3), defect 3
    CHECK(f_applicable(q.index, 1));
    CHECK(f_applicable(q.index, 2));
    BKVector q1 = apply_F(q, 1, Rat(1, 100));
    CHECK(q1.index.k == std::vector<int>{0, 3});
    CHECK(q1.index.defect() == 2);
    CHECK(wronskian(q1.qs).ord() == 2);
    // too-large parameter rejected
    CHECK_THROWS(apply_F(q, 1, Rat(10)));
    // inapplicable operator: k=(0,3) has k_1 = 0
    CHECK_THROWS(apply_F(q1, 1, Rat(1, 1000)));
    CHECK_NOTHROW(apply_F(q1, 2, Rat(1, 1000)));
}

TEST_CASE("new root asymptotics with richardson check") {
    // base cell (2,2) a0=1/4, operator F^1: y0(a)/a -> c_k / a_{1,1} = 6
    BKVector q = base_cell(2, 2, Rat(1, 4));
    double limit = 6.0;
    std::vector<double> ratios;
    for (long e : {1000L, 10000L, 100000L}) {
        Rat a(1, e);
        BKVector q1 = apply_F(q, 1, a);
        auto xs = root_magnitudes(q1.qs, q1.index.defect(), a / 1000000);
        Rat y0 = xs[0];
        ratios.push_back(static_cast<double>(Rat(y0 / a).get_d()));
    }
    CHECK(std::fabs(ratios[2] - limit) < 1e-3 * limit);
    CHECK(std::fabs(ratios[2] - limit) <= std::fabs(ratios[0] - limit));
    double extrap = (10.0 * ratios[2] - ratios[1]) / 9.0;
    CHECK(std::fabs(extrap - limit) <= std::fabs(ratios[2] - limit) + 1e-12);
}

TEST_CASE("sign law along stable walks") {
    long checked = 0;
    for (auto sigma : all_ballot_sequences(2, 2)) {
        auto walk = stable_walk(sigma);
        for (auto& st : walk.steps) {
            int expect = (st.chi_before % 2 == 0) ? st.sign_before : -st.sign_before;
            CHECK(st.sign_after == expect);
            ++checked;
        }
    }
    for (auto sigma : all_ballot_sequences(3, 2)) {
        auto walk = stable_walk(sigma);
        for (auto& st : walk.steps) {
            int expect = (st.chi_before % 2 == 0) ? st.sign_before : -st.sign_before;
            CHECK(st.sign_after == expect);
            ++checked;
        }
    }
    CHECK(checked >= 20);
}

TEST_CASE("walk endpoint signs follow the inversion parity") {
    for (auto [m, p] : {std::pair<int, int>{2, 2}, {3, 2}}) {
        int mu = 0;
        for (auto& sigma : all_ballot_sequences(m, p)) {
            auto walk = stable_walk(sigma);
            int s = jacobi_delta(walk.endpoint).det_sign;
            int parity = (inversions(sigma) % 2 == 0) ? 1 : -1;
            int this_mu = s * parity;
            if (mu == 0) mu = this_mu;
            CHECK(this_mu == mu);
        }
        CHECK(mu != 0);
    }
}

TEST_CASE("seed_chain with explicit (2,2) schedules") {
    auto seqs = all_ballot_sequences(2, 2); // (1,1,2,2) then (1,2,1,2)

    // plain geometric works for the alternating sigma
    std::vector<Rat> geometric{Rat(1, 4), Rat(1, 16), Rat(1, 64), Rat(1, 256)};
    BKVector alt = seed_chain_bk(seqs[1], geometric);
    CHECK(alt.index.defect() == 0);
    CHECK(ranking_sequence(2, 2, alt.qs) == seqs[1]);

    // ... but not for (1,1,2,2): the second addition to q_1 needs a < 1/48
    // (the dropped-order Wronskian is z^2 (z^2 + z/2 + 3a))
    CHECK_THROWS_AS(seed_chain_bk(seqs[0], geometric), std::invalid_argument);
    std::vector<Rat> steep{Rat(1, 4), Rat(1, 64), Rat(1, 2048), Rat(1, 16777216)};
    BKVector sorted = seed_chain_bk(seqs[0], steep);
    CHECK(sorted.index.defect() == 0);
    CHECK(ranking_sequence(2, 2, sorted.qs) == seqs[0]);

    BigCellPoint b0 = bk_to_big_cell(sorted), b1 = bk_to_big_cell(alt);
    CHECK(b0.kcoef != b1.kcoef);

    // schedule errors
    CHECK_THROWS(seed_chain_bk(seqs[0], {Rat(1, 4), Rat(1, 4), Rat(1, 64), Rat(1, 256)}));
    CHECK_THROWS(seed_chain_bk(seqs[0], {Rat(1, 4), Rat(1, 16), Rat(1, 64)}));
}

TEST_CASE("sorted sigma fills q_1 first") {
    BallotSequence sorted{3, 2, {1, 1, 1, 2, 2, 2}};
    BKVector end = seed_chain_auto(sorted);
    // the three largest coefficients all sit in q_1
    auto ranking = ranking_sequence(3, 2, end.qs);
    CHECK(std::vector<std::uint8_t>(ranking.entries.begin(), ranking.entries.begin() + 3) ==
          std::vector<std::uint8_t>{1, 1, 1});
    CHECK(ranking == sorted);
}

TEST_CASE("walk endpoints recover their sigma from the coefficient ranking") {
    for (auto [m, p] : {std::pair<int, int>{2, 2}, {3, 2}, {2, 3}}) {
        for (auto& sigma : all_ballot_sequences(m, p)) {
            BKVector end = seed_chain_auto(sigma);
            CHECK(ranking_sequence(m, p, end.qs) == sigma);
        }
    }
}

TEST_CASE("chart conversions round trip") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    for (auto [m, p] : {std::pair<int, int>{2, 2}, {3, 2}, {2, 3}, {3, 3}}) {
        for (int trial = 0; trial < 8; ++trial) {
            BigCellPoint b{m, p, make_mat(static_cast<size_t>(m), static_cast<size_t>(p), Rat(0))};
            for (auto& row : b.kcoef)
                for (auto& x : row) {
                    Rat q(num(rng), den(rng));
                    q.canonicalize();
                    x = q;
                }
            std::vector<RatPoly> qs;
            try {
                qs = big_cell_to_bk(b);
            } catch (const std::domain_error&) {
                continue; // off-chart sample
            }
            // spans agree: the Wronskians are proportional
            CHECK(proportional(wronskian(qs), wronskian(big_cell_polys(b))));
            BigCellPoint back = bk_to_big_cell(m, p, qs);
            CHECK(back.kcoef == b.kcoef);
        }
    }
    // and the walk endpoint conversions agree with the basis change
    auto walk = stable_walk(BallotSequence{2, 2, {1, 2, 1, 2}});
    BigCellPoint b = bk_to_big_cell(walk.endpoint);
    CHECK(proportional(wronskian(walk.endpoint.qs), wronskian(big_cell_polys(b))));
}

// Walks sigma keeping every parameter as large as validity allows (then
// backing off 4x), so coefficient scales stay far above the finite-difference
// step. u in (0,1] randomizes the starting guess.
static BKVector moderate_walk_point(const BallotSequence& sigma, const Rat& u) {
    BKVector cur = base_cell(sigma.m, sigma.p, Rat(1, 4) * u + Rat(1, 20));
    size_t n = static_cast<size_t>(sigma.m) * static_cast<size_t>(sigma.p);
    Rat prev = cur.coeff(1, sigma.m - 1);
    for (size_t j = 1; j < n; ++j) {
        int i = sigma.entries[j];
        Rat a = prev * u / 2;
        for (int h = 0; h < 200; ++h, a /= 2) {
            try {
                BKVector next = apply_F(cur, i, a / 4);
                cur = std::move(next);
                prev = a / 4;
                break;
            } catch (const std::invalid_argument&) {
            }
        }
    }
    if (cur.index.defect() != 0) throw std::runtime_error("moderate_walk_point failed");
    return cur;
}

TEST_CASE("implicit jacobian agrees with central finite differences") {
    // Points come from row-interleaving walks, whose parameter constraints
    // stay linear, so every coefficient sits far above the step size.
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> unum(3, 9);
    std::vector<BallotSequence> sigmas{BallotSequence{2, 2, {1, 2, 1, 2}},
                                       BallotSequence{3, 2, {1, 2, 1, 2, 1, 2}},
                                       BallotSequence{2, 3, {1, 2, 3, 1, 2, 3}}};
    int points = 0;
    Rat h(1, 10000000); // 1e-7
    for (int draw = 0; draw < 3 && points < 6; ++draw) {
        for (auto& sigma : sigmas) {
            Rat u(unum(rng), 10);
            BKVector q = moderate_walk_point(sigma, u);
            auto order = coeff_order(q.index);
            bool scaled_ok = true;
            for (auto& ref : order) scaled_ok &= q.coeff(ref.i, ref.j) > 200 * h;
            if (!scaled_ok) continue;
            auto delta = jacobi_delta(q, Rat(1, Int(1) << 60));
            for (size_t c = 0; c < order.size(); ++c) {
                auto plus = q.qs, minus = q.qs;
                plus[static_cast<size_t>(order[c].i - 1)] +=
                    RatPoly::monomial(h, static_cast<size_t>(order[c].j));
                minus[static_cast<size_t>(order[c].i - 1)] +=
                    RatPoly::monomial(-h, static_cast<size_t>(order[c].j));
                auto xp = root_magnitudes(plus, q.index.defect(), h / (Int(1) << 50));
                auto xm = root_magnitudes(minus, q.index.defect(), h / (Int(1) << 50));
                REQUIRE(xp.size() == order.size());
                for (size_t r = 0; r < order.size(); ++r) {
                    double fd = Rat((xp[r] - xm[r]) / (2 * h)).get_d();
                    double im = delta.entries[r][c];
                    CHECK(std::fabs(fd - im) <=
                          1e-4 * std::max({std::fabs(fd), std::fabs(im), 1e-6}));
                }
            }
            ++points;
        }
    }
    CHECK(points >= 5);
}

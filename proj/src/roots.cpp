#include "wronski/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace wronski {

namespace {

// Integer-primitive rescale by a positive constant (sign preserved).
RatPoly primitive_keep_sign(const RatPoly& f) {
    if (f.is_zero()) return f;
    RatPoly g = primitive_positive(f);
    if (f.leading() < 0) g = g * Rat(-1);
    return g;
}

} // namespace

std::vector<RatPoly> sturm_chain(const RatPoly& f) {
    if (f.is_zero()) throw std::domain_error("sturm chain of zero polynomial");
    std::vector<RatPoly> chain;
    chain.push_back(primitive_keep_sign(f));
    if (f.degree() == 0) return chain;
    chain.push_back(primitive_keep_sign(f.derivative()));
    while (chain.back().degree() > 0) {
        RatPoly q, r;
        RatPoly::divmod(chain[chain.size() - 2], chain.back(), q, r);
        if (r.is_zero()) break;
        chain.push_back(primitive_keep_sign(-r));
    }
    return chain;
}

int sign_variations(const std::vector<RatPoly>& chain, const Rat& x) {
    int vars = 0, prev = 0;
    for (const auto& g : chain) {
        int s = sign_of(g.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++vars;
        prev = s;
    }
    return vars;
}

namespace {

// Distinct roots of the squarefree polynomial behind `chain` in (a, b],
// assuming the polynomial does not vanish at a.
long count_halfopen(const std::vector<RatPoly>& chain, const Rat& a, const Rat& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
}

} // namespace

long count_distinct_roots(const RatPoly& f, const Rat& a, const Rat& b) {
    if (f.is_zero()) throw std::domain_error("root count of zero polynomial");
    if (!(a < b)) throw std::invalid_argument("empty interval");
    RatPoly g = squarefree_part(f);
    if (g.eval(a) == 0 || g.eval(b) == 0)
        throw std::invalid_argument("count_distinct_roots: endpoint is a root");
    auto chain = sturm_chain(g);
    return count_halfopen(chain, a, b);
}

long count_distinct_roots(const RatPoly& f) {
    if (f.is_zero()) throw std::domain_error("root count of zero polynomial");
    if (f.degree() <= 0) return 0;
    Rat b = cauchy_root_bound(f);
    return count_distinct_roots(f, -b, b);
}

std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& f) {
    if (f.is_zero()) throw std::domain_error("squarefree decomposition of zero polynomial");
    std::vector<std::pair<RatPoly, int>> out;
    if (f.degree() <= 0) return out;
    RatPoly g = poly_gcd(f, f.derivative());
    RatPoly b = RatPoly::divexact(f, g);
    RatPoly c = RatPoly::divexact(f.derivative(), g);
    RatPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        RatPoly a = poly_gcd(b, d);
        if (a.degree() > 0) out.emplace_back(a, i);
        b = RatPoly::divexact(b, a);
        c = RatPoly::divexact(d, a);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

RatPoly squarefree_part(const RatPoly& f) {
    if (f.is_zero()) throw std::domain_error("squarefree part of zero polynomial");
    if (f.degree() <= 0) return RatPoly::constant(Rat(1));
    RatPoly g = poly_gcd(f, f.derivative());
    RatPoly s = RatPoly::divexact(f, g);
    return s * Rat(Rat(1) / s.leading());
}

Rat cauchy_root_bound(const RatPoly& f) {
    if (f.is_zero()) throw std::domain_error("root bound of zero polynomial");
    Rat m = 0;
    const Rat lead = rat_abs(f.leading());
    for (long i = 0; i < f.degree(); ++i)
        m = std::max(m, Rat(rat_abs(f[static_cast<size_t>(i)]) / lead));
    return m + 1;
}

namespace {

// Isolates distinct roots of squarefree g in the open interval (a, b);
// requires g(a) != 0 and g(b) != 0.
void isolate(const RatPoly& g, const std::vector<RatPoly>& chain, const Rat& a, const Rat& b,
             RootList& out) {
    long n = count_halfopen(chain, a, b);
    if (n == 0) return;
    if (n == 1) {
        out.push_back(RootInterval{a, b, 1});
        return;
    }
    Rat mid = (a + b) / 2;
    if (g.eval(mid) == 0) {
        out.push_back(RootInterval{mid, mid, 1});
        Rat w = (b - a) / 8;
        while (true) {
            Rat lo = mid - w, hi = mid + w;
            if (lo > a && hi < b && g.eval(lo) != 0 && g.eval(hi) != 0 &&
                count_halfopen(chain, lo, hi) == 1) {
                isolate(g, chain, a, lo, out);
                isolate(g, chain, hi, b, out);
                return;
            }
            w /= 2;
        }
    }
    isolate(g, chain, a, mid, out);
    isolate(g, chain, mid, b, out);
}

} // namespace

void refine_root(const RatPoly& g, RootInterval& root, const Rat& width) {
    if (root.exact()) return;
    Rat lo = root.lo, hi = root.hi;
    int slo = sign_of(g.eval(lo));
    int shi = sign_of(g.eval(hi));
    if (slo == 0 || shi == 0 || slo == shi)
        throw std::invalid_argument("refine_root: interval does not bracket a simple root");
    while (hi - lo > width) {
        Rat mid = (lo + hi) / 2;
        int sm = sign_of(g.eval(mid));
        if (sm == 0) {
            root.lo = root.hi = mid;
            return;
        }
        if (sm == slo) lo = mid; else hi = mid;
    }
    root.lo = lo;
    root.hi = hi;
}

RootList real_roots(const RatPoly& f, const Rat& lo, const Rat& hi) {
    if (f.is_zero()) throw std::domain_error("real_roots of zero polynomial");
    if (!(lo <= hi)) throw std::invalid_argument("real_roots: inverted interval");

    struct Item {
        RootInterval r;
        RatPoly factor; // squarefree factor owning the root
    };
    std::vector<Item> items;

    for (auto& [g0, mult] : squarefree_decomposition(f)) {
        RatPoly g = g0;
        if (g.degree() == 1) {
            Rat root = -g[0] / g[1];
            if (lo <= root && root <= hi) items.push_back({RootInterval{root, root, mult}, g0});
            continue;
        }
        if (g.eval(lo) == 0) {
            items.push_back({RootInterval{lo, lo, mult}, g0});
            g = RatPoly::divexact(g, RatPoly{-lo, Rat(1)});
        }
        if (hi > lo && g.eval(hi) == 0) {
            items.push_back({RootInterval{hi, hi, mult}, g0});
            g = RatPoly::divexact(g, RatPoly{-hi, Rat(1)});
        }
        if (g.degree() == 1) {
            Rat root = -g[0] / g[1];
            if (lo < root && root < hi) items.push_back({RootInterval{root, root, mult}, g0});
            continue;
        }
        if (g.degree() > 0 && hi > lo) {
            auto chain = sturm_chain(g);
            RootList inner;
            isolate(g, chain, lo, hi, inner);
            for (auto& r : inner) {
                r.multiplicity = mult;
                items.push_back({r, g});
            }
        }
    }

    auto by_pos = [](const Item& x, const Item& y) {
        return x.r.lo < y.r.lo || (x.r.lo == y.r.lo && x.r.hi < y.r.hi);
    };
    std::sort(items.begin(), items.end(), by_pos);

    // Roots of distinct factors are distinct; refine until intervals disjoint.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < items.size(); ++i) {
            auto& a = items[i];
            auto& b = items[i + 1];
            if (a.r.hi < b.r.lo) continue;
            if (a.r.exact() && b.r.exact()) continue; // identical point impossible
            if (!a.r.exact()) refine_root(a.factor, a.r, Rat((a.r.hi - a.r.lo) / 2));
            if (!b.r.exact()) refine_root(b.factor, b.r, Rat((b.r.hi - b.r.lo) / 2));
            changed = true;
        }
        if (changed) std::sort(items.begin(), items.end(), by_pos);
    }

    RootList out;
    out.reserve(items.size());
    for (auto& it : items) out.push_back(it.r);
    return out;
}

RootList real_roots(const RatPoly& f) {
    if (f.is_zero()) throw std::domain_error("real_roots of zero polynomial");
    if (f.degree() <= 0) return {};
    Rat b = cauchy_root_bound(f);
    return real_roots(f, -b, b);
}

} // namespace wronski

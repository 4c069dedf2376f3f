#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wronski {

using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline int sign_of(const Rat& q) { return sgn(q); }
inline int sign_of(const Int& z) { return sgn(z); }

/// Exact quotient; throws if the division is not exact.
inline Int divexact(const Int& a, const Int& b) {
    if (b == 0) throw std::domain_error("division by zero");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::domain_error("inexact integer division");
    return q;
}

/// Parses "a", "a/b", or a decimal string ("-1.25", "3e-4", "2.5E2") into an
/// exact rational. Decimal input is normalized exactly, never rounded.
inline Rat parse_rational(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    if (s.find('/') != std::string_view::npos) {
        Rat q;
        if (q.set_str(std::string(s), 10) != 0) throw std::invalid_argument("bad rational literal: " + std::string(s));
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(s));
        q.canonicalize();
        return q;
    }
    size_t dot = s.find('.');
    size_t e = s.find_first_of("eE");
    if (dot == std::string_view::npos && e == std::string_view::npos) {
        Rat q;
        if (q.set_str(std::string(s), 10) != 0) throw std::invalid_argument("bad integer literal: " + std::string(s));
        return q;
    }
    // decimal with optional exponent: sign? digits ('.' digits?)? ([eE] sign? digits)?
    long exp10 = 0;
    std::string_view mant = s;
    if (e != std::string_view::npos) {
        std::string es(s.substr(e + 1));
        if (es.empty()) throw std::invalid_argument("bad exponent: " + std::string(s));
        try {
            exp10 = std::stol(es);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad exponent: " + std::string(s));
        }
        mant = s.substr(0, e);
    }
    std::string digits;
    bool neg = false;
    size_t i = 0;
    if (i < mant.size() && (mant[i] == '+' || mant[i] == '-')) { neg = mant[i] == '-'; ++i; }
    long frac_len = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < mant.size(); ++i) {
        char c = mant[i];
        if (c == '.') {
            if (seen_dot) throw std::invalid_argument("bad decimal: " + std::string(s));
            seen_dot = true;
        } else if (c >= '0' && c <= '9') {
            digits.push_back(c);
            seen_digit = true;
            if (seen_dot) ++frac_len;
        } else {
            throw std::invalid_argument("bad decimal: " + std::string(s));
        }
    }
    if (!seen_digit) throw std::invalid_argument("bad decimal: " + std::string(s));
    Int num(digits.empty() ? "0" : digits);
    if (neg) num = -num;
    long net = exp10 - frac_len;
    Rat q(num);
    Int shift = 1;
    mpz_ui_pow_ui(shift.get_mpz_t(), 10, static_cast<unsigned long>(net < 0 ? -net : net));
    if (net >= 0) q *= Rat(shift); else q /= Rat(shift);
    q.canonicalize();
    return q;
}

inline std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Nearest dyadic rational with denominator 2^bits; used to keep Newton
/// iterates from accumulating unbounded bit length.
inline Rat round_dyadic(const Rat& q, unsigned bits) {
    Int two_k = 1;
    mpz_mul_2exp(two_k.get_mpz_t(), two_k.get_mpz_t(), bits);
    Rat scaled = q * Rat(two_k);
    Int n;
    // round to nearest: floor(x + 1/2)
    Rat half(1, 2);
    scaled += half;
    mpz_fdiv_q(n.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
    Rat r(n, two_k);
    r.canonicalize();
    return r;
}

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline Rat pow_rat(const Rat& base, unsigned e) {
    Rat r = 1;
    Rat b = base;
    unsigned k = e;
    while (k) {
        if (k & 1u) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

} // namespace wronski

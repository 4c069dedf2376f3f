#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "wronski/rational.hpp"

namespace wronski {

/// Dense univariate polynomial, coefficients in ascending degree, trailing
/// zeros trimmed. The zero polynomial has an empty coefficient vector and
/// degree -1.
template <typename T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }
    /// Constant polynomial; lets generic ring code write T(0), T(1).
    explicit Poly(int v) {
        if (v != 0) c_.push_back(T(v));
    }

    static Poly zero() { return Poly(); }
    static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
    static Poly monomial(const T& v, size_t k) {
        std::vector<T> c(k + 1, T(0));
        c[k] = v;
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    /// Index of the lowest nonzero coefficient; -1 for the zero polynomial.
    long ord() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == T(0))) return static_cast<long>(i);
        return -1;
    }

    const T& leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    T operator[](size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    const std::vector<T>& coeffs() const { return c_; }

    void set_coeff(size_t i, const T& v) {
        if (i >= c_.size()) c_.resize(i + 1, T(0));
        c_[i] = v;
        trim();
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(c));
    }

    friend Poly operator*(const T& s, const Poly& a) {
        if (s == T(0)) return Poly();
        Poly r = a;
        for (auto& x : r.c_) x = s * x;
        return r;
    }
    friend Poly operator*(const Poly& a, const T& s) { return s * a; }

    Poly& operator+=(const Poly& b) { *this = *this + b; return *this; }
    Poly& operator-=(const Poly& b) { *this = *this - b; return *this; }
    Poly& operator*=(const Poly& b) { *this = *this * b; return *this; }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> c(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = T(static_cast<long>(i)) * c_[i];
        return Poly(std::move(c));
    }

    T eval(const T& x) const {
        T r(0);
        for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    /// Multiply by z^k.
    Poly shifted(size_t k) const {
        if (is_zero()) return Poly();
        std::vector<T> c(c_.size() + k, T(0));
        for (size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
        return Poly(std::move(c));
    }

    /// Quotient and remainder; requires invertible leading coefficient.
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        r = a;
        q = Poly();
        const T& lb = b.leading();
        long db = b.degree();
        while (!r.is_zero() && r.degree() >= db) {
            long k = r.degree() - db;
            T f = r.leading() / lb;
            std::vector<T> qc(q.c_);
            if (qc.size() < static_cast<size_t>(k + 1)) qc.resize(k + 1, T(0));
            qc[k] += f;
            q = Poly(std::move(qc));
            std::vector<T> rc(r.c_);
            for (long i = 0; i <= db; ++i) rc[i + k] -= f * b[i];
            r = Poly(std::move(rc));
        }
    }

    /// Exact quotient; throws if b does not divide a.
    static Poly divexact(const Poly& a, const Poly& b) {
        Poly q, r;
        divmod(a, b, q, r);
        if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
        return q;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }

    std::vector<T> c_;
};

using RatPoly = Poly<Rat>;
using DPoly = Poly<double>;

inline DPoly to_double(const RatPoly& f) {
    std::vector<double> c(f.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = f.coeffs()[i].get_d();
    return DPoly(std::move(c));
}

inline RatPoly from_double_exact(const DPoly& f) {
    std::vector<Rat> c(f.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = Rat(f.coeffs()[i]);
    return RatPoly(std::move(c));
}

/// Monic gcd over the rationals. gcd(0,0) = 0.
inline RatPoly poly_gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly q, r;
        RatPoly::divmod(a, b, q, r);
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return a * Rat(Rat(1) / a.leading());
}

inline bool coprime(const RatPoly& a, const RatPoly& b) {
    RatPoly g = poly_gcd(a, b);
    return g.degree() == 0;
}

/// Rescale so coefficients are coprime integers with positive leading
/// coefficient. Used to keep Sturm chains small; scaling by a positive
/// constant preserves signs everywhere.
inline RatPoly primitive_positive(const RatPoly& f) {
    if (f.is_zero()) return f;
    Int den_lcm = 1;
    for (const auto& q : f.coeffs()) {
        Int d = q.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    Int num_gcd = 0;
    for (const auto& q : f.coeffs()) {
        Int n = q.get_num() * (den_lcm / q.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    if (num_gcd == 0) num_gcd = 1;
    Rat scale(den_lcm, num_gcd);
    scale.canonicalize();
    RatPoly g = f * scale;
    if (g.leading() < 0) g = g * Rat(-1);
    return g;
}

inline std::string poly_to_string(const RatPoly& f, const std::string& var = "z") {
    if (f.is_zero()) return "0";
    std::string s;
    for (long i = f.degree(); i >= 0; --i) {
        Rat c = f[static_cast<size_t>(i)];
        if (c == 0) continue;
        if (!s.empty()) s += c > 0 ? " + " : " - ";
        else if (c < 0) s += "-";
        Rat a = rat_abs(c);
        bool coeff_one = (a == 1) && i != 0;
        if (!coeff_one) s += rat_to_string(a);
        if (i > 0) {
            if (!coeff_one) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

} // namespace wronski

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "beurling/errors.hpp"

namespace beurling {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rational_pow(const Rational& base, unsigned exp) {
    Rational r = 1;
    Rational b = base;
    for (unsigned e = exp; e != 0; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

inline Rational rational_abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

// Accepts "n", "-n", "n/d" with arbitrary precision.
inline Rational parse_rational(const std::string& s) {
    try {
        Rational r(s);
        return r;
    } catch (const std::exception&) {
        throw ParseError("bad rational literal: '" + s + "'");
    }
}

inline std::string rational_str(const Rational& x) { return x.str(); }

// Gaussian rational a + bi: the exact model of the complex scalars.
// Always kept in lowest terms by the underlying rational type.
struct Gaussian {
    Rational re, im;

    Gaussian() : re(0), im(0) {}
    Gaussian(Rational r) : re(std::move(r)), im(0) {}
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    Gaussian(int n) : re(n), im(0) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    bool is_imaginary() const { return re == 0; }

    Gaussian conj() const { return {re, -im}; }
    Rational norm_sq() const { return re * re + im * im; }

    // |a+bi| is irrational in general; bracket it exactly:
    // max(|a|,|b|) <= |a+bi| <= |a|+|b|, with equality when a or b is 0.
    Rational abs_lower() const { return std::max(rational_abs(re), rational_abs(im)); }
    Rational abs_upper() const { return rational_abs(re) + rational_abs(im); }

    Gaussian operator-() const { return {-re, -im}; }
    Gaussian& operator+=(const Gaussian& o) { re += o.re; im += o.im; return *this; }
    Gaussian& operator-=(const Gaussian& o) { re -= o.re; im -= o.im; return *this; }

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { a += b; return a; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { a -= b; return a; }
    friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Gaussian operator/(const Gaussian& a, const Gaussian& b) {
        Rational n = b.norm_sq();
        if (n == 0) throw DomainError("division by zero Gaussian rational");
        Gaussian p = a * b.conj();
        return {p.re / n, p.im / n};
    }
    friend bool operator==(const Gaussian& a, const Gaussian& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }
};

inline std::string gaussian_str(const Gaussian& z) {
    if (z.is_zero()) return "0";
    std::string s;
    if (z.re != 0) s += z.re.str();
    if (z.im != 0) {
        if (!s.empty() && z.im > 0) s += "+";
        if (z.im == 1) s += "i";
        else if (z.im == -1) s += "-i";
        else s += z.im.str() + "i";
    }
    return s;
}

// Exact two-sided bracket of a weighted l^1 norm.  lower == upper whenever
// every coefficient modulus is rational (real or purely imaginary terms).
struct NormBound {
    Rational lower, upper;

    NormBound() : lower(0), upper(0) {}
    NormBound(Rational lo, Rational hi) : lower(std::move(lo)), upper(std::move(hi)) {}

    bool exact() const { return lower == upper; }
    NormBound& operator+=(const NormBound& o) { lower += o.lower; upper += o.upper; return *this; }
    friend NormBound operator*(const NormBound& a, const NormBound& b) {
        return {a.lower * b.lower, a.upper * b.upper};
    }
};

} // namespace beurling

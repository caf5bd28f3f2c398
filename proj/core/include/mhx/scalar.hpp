#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

namespace mhx {

using Rational = mpq_class;

/// Gaussian rational a + b*i. All arithmetic is exact; there is no rounding
/// anywhere in the exact layer of the library.
struct Scalar {
    Rational re;
    Rational im;

    Scalar() : re(0), im(0) {}
    Scalar(long n) : re(n), im(0) {}  // NOLINT: implicit by design
    Scalar(Rational r) : re(std::move(r)), im(0) {}
    Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Scalar conj() const { return Scalar(re, -im); }

    /// re^2 + im^2 (the multiplicative norm down to Q).
    Rational norm() const { return re * re + im * im; }

    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend Scalar operator-(const Scalar& a) { return Scalar(-a.re, -a.im); }
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
};

/// Canonical text form "a/b", "a/b+c/d*i", "a/b-c/d*i" or "c/d*i"; the same
/// grammar the JSON instance files use.
std::string to_string(const Scalar& s);

/// Parses the text form above. Also accepts integers without an explicit
/// denominator ("3", "-2+1/2*i"). Throws InputError on malformed text.
Scalar parse_scalar(const std::string& text);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

using Vec = std::vector<Scalar>;

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& c, const Vec& v);
bool is_zero(const Vec& v);
Vec conj(const Vec& v);

}  // namespace mhx

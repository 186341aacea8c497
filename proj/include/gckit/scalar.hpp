#ifndef GCKIT_SCALAR_HPP
#define GCKIT_SCALAR_HPP

#include <gmpxx.h>
#include <string>
#include <utility>

namespace gckit {

/// Exact rational scalar.  Stored canonically (gcd 1, positive denominator);
/// GMP maintains the canonical form through arithmetic.
using Rational = mpq_class;

Rational rational_from_string(const std::string& text);
std::string to_string(const Rational& r);

/// Complex scalar with rational real and imaginary parts: the base field for
/// every matrix and subspace computation in the project.  Conjugation is an
/// involution and all field axioms hold exactly.
struct Gaussian {
    Rational re, im;

    Gaussian() : re(0), im(0) {}
    Gaussian(int v) : re(v), im(0) {}
    Gaussian(long v) : re(v), im(0) {}
    Gaussian(Rational r) : re(std::move(r)), im(0) {}
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    Gaussian conj() const { return Gaussian(re, -im); }
    /// |z|^2, a nonnegative rational.
    Rational norm2() const { return re * re + im * im; }

    Gaussian operator-() const { return Gaussian(-re, -im); }

    Gaussian& operator+=(const Gaussian& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Gaussian& operator-=(const Gaussian& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Gaussian& operator*=(const Gaussian& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    Gaussian& operator/=(const Gaussian& o);

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }

    friend bool operator==(const Gaussian& a, const Gaussian& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }
};

Gaussian inverse(const Gaussian& z);

/// Canonical text form, parseable by the polynomial grammar:
/// "3/2", "-1", "i", "2*i", "1/2-3/4*i".
std::string to_string(const Gaussian& z);

} // namespace gckit

#endif

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ylat {

/// Arbitrary-precision integer and rational scalars. Rationals are kept
/// normalized (lowest terms, positive denominator) after every operation,
/// which GMP's mpq layer guarantees for arithmetic results; values built
/// from raw numerator/denominator pairs go through make_rational() below.
using Integer = mpz_class;
using Rational = mpq_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed text input; `position` is the 0-based offset of the offending
/// character in the original string.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

/// Builds a normalized rational from an integer pair; denominator must be nonzero.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den);

/// n! as an exact integer.
Integer factorial(unsigned long n);

/// Rising factorial (x)_n = x(x+1)...(x+n-1); (x)_0 = 1.
Rational pochhammer(const Rational& x, unsigned long n);

/// Integer power with negative exponents allowed (x must be nonzero for e < 0).
Rational rational_pow(const Rational& x, long e);

/// Complex number with exact rational real and imaginary parts.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_real() const { return im == 0; }
    bool is_zero() const { return re == 0 && im == 0; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational d = b.re * b.re + b.im * b.im;
        if (d == 0) throw Error("division by complex zero");
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
};

/// Complex conjugate (negates the imaginary part only).
inline GaussianRational conjugate(const GaussianRational& z) { return {z.re, -z.im}; }

/// |z|^2 = re^2 + im^2, an exact nonnegative rational.
inline Rational norm_sq(const GaussianRational& z) { return z.re * z.re + z.im * z.im; }

/// Rising factorial for complex arguments.
GaussianRational pochhammer(const GaussianRational& x, unsigned long n);

/// Nearest binary64 to x (round half to even). `precision_bits` must be at
/// least 53; the result is a binary64, so precisions beyond 53 saturate at
/// the 53-bit significand of the return type. The exact pipeline never
/// depends on this function.
double to_double(const Rational& x, unsigned precision_bits = 53);

/// Text formats used by the CLI: "p/q" or "p" for rationals,
/// "a/b+c/di" (imaginary part optional, 'i' alone means 1i) for complex.
std::string format(const Rational& x);
std::string format(const GaussianRational& z);
Rational parse_rational(std::string_view text);
GaussianRational parse_complex(std::string_view text);

}  // namespace ylat

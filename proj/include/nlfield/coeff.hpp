#pragma once

// Coefficient domains shared by the field algebra and the arithmetic series.
//
// Rational and GaussRational are exact; Complex64 is binary64 and every
// comparison on it takes an explicit tolerance.

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <string>
#include <string_view>

namespace nlf {

using Integer = mpz_class;
using Rational = mpq_class;
using Complex64 = std::complex<double>;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() = default;
  GaussRational(Rational r) : re(std::move(r)) {}  // NOLINT: implicit promotion is exact
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussRational(int r) : re(r) {}  // NOLINT

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GaussRational conj() const { return {re, Rational(-im)}; }
  Rational norm_sq() const { return Rational(re * re + im * im); }

  GaussRational& operator+=(const GaussRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend GaussRational operator-(const GaussRational& a) { return {Rational(-a.re), Rational(-a.im)}; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

std::string to_string(const GaussRational& z);

// Per-domain operations used by the generic algorithms.
template <class C>
struct coeff_traits;

template <>
struct coeff_traits<Rational> {
  static constexpr bool exact = true;
  static constexpr std::string_view name = "rational";
  using norm_type = Rational;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& c) { return sgn(c) == 0; }
  static Rational conj(const Rational& c) { return c; }
  static Rational norm_sq(const Rational& c) { return Rational(c * c); }
  static Rational abs_bound(const Rational& c) { return abs(c); }
  static Rational from_rational(const Rational& q) { return q; }
  static Complex64 to_complex(const Rational& c) { return {c.get_d(), 0.0}; }
};

template <>
struct coeff_traits<GaussRational> {
  static constexpr bool exact = true;
  static constexpr std::string_view name = "gaussian";
  using norm_type = Rational;
  static GaussRational zero() { return {}; }
  static GaussRational one() { return GaussRational(Rational(1)); }
  static bool is_zero(const GaussRational& c) { return c.is_zero(); }
  static GaussRational conj(const GaussRational& c) { return c.conj(); }
  static Rational norm_sq(const GaussRational& c) { return c.norm_sq(); }
  static GaussRational from_rational(const Rational& q) { return GaussRational(q); }
  static Complex64 to_complex(const GaussRational& c) { return {c.re.get_d(), c.im.get_d()}; }
};

template <>
struct coeff_traits<Complex64> {
  static constexpr bool exact = false;
  static constexpr std::string_view name = "complex64";
  using norm_type = double;
  static Complex64 zero() { return {}; }
  static Complex64 one() { return {1.0, 0.0}; }
  // Storage drops only exact zeros; tolerant comparison is the caller's job.
  static bool is_zero(const Complex64& c) { return c == Complex64{}; }
  static Complex64 conj(const Complex64& c) { return std::conj(c); }
  static double norm_sq(const Complex64& c) { return std::norm(c); }
  static Complex64 from_rational(const Rational& q) { return {q.get_d(), 0.0}; }
  static Complex64 to_complex(const Complex64& c) { return c; }
};

inline bool approx_equal(const Complex64& a, const Complex64& b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

}  // namespace nlf

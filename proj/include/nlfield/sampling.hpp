#pragma once

// Seeded random instances for property checks. Small numerators and
// denominators keep exact arithmetic fast while still exercising signs,
// cancellation and non-integral exponents.

#include "nlfield/arith_series.hpp"
#include "nlfield/field_algebra.hpp"
#include "nlfield/numfield.hpp"

#include <random>

namespace nlf {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long span = 9, long max_den = 4) {
    Rational q(integer(-span, span), integer(1, max_den));
    q.canonicalize();
    return q;
  }
  Rational nonzero_rational(long span = 9, long max_den = 4) {
    Rational q(0);
    while (sgn(q) == 0) q = rational(span, max_den);
    return q;
  }

  template <class C>
  C coeff() {
    if constexpr (std::is_same_v<C, Rational>) {
      return rational();
    } else if constexpr (std::is_same_v<C, GaussRational>) {
      return GaussRational(rational(), rational());
    } else {
      return Complex64(real(-2.0, 2.0), real(-2.0, 2.0));
    }
  }

  NFElem element(const FieldPtr& field, long span = 3, long max_den = 2) {
    std::vector<Rational> coords;
    for (std::size_t i = 0; i < field->degree(); ++i) coords.push_back(rational(span, max_den));
    return NFElem(field, std::move(coords));
  }
  NFElem nonzero_element(const FieldPtr& field) {
    for (;;) {
      NFElem x = element(field);
      if (!x.is_zero()) return x;
    }
  }

  /// Up to max_terms terms; zero_constant drops any exponent-0 term.
  template <class C>
  AlgElem<C> alg_elem(const FieldPtr& field, std::size_t max_terms = 4, bool zero_constant = false) {
    AlgElem<C> f(field);
    const auto n = static_cast<std::size_t>(integer(1, static_cast<long>(max_terms)));
    for (std::size_t k = 0; k < n; ++k) {
      NFElem alpha = zero_constant ? nonzero_element(field) : element(field);
      f.add_term(alpha, coeff<C>());
    }
    return f;
  }

  template <class C>
  ArithSeries<C> series(std::size_t N) {
    ArithSeries<C> f(N);
    for (std::size_t n = 1; n <= N; ++n) f[n] = coeff<C>();
    return f;
  }
  template <class C>
  ArithSeries<C> unit_series(std::size_t N) {
    ArithSeries<C> f = series<C>(N);
    while (coeff_traits<C>::is_zero(f[1])) f[1] = coeff<C>();
    return f;
  }

  template <class C>
  PrimeVector<C> prime_vector(u64 bound) {
    PrimeVector<C> v{bound, primes_up_to(bound), {}};
    for (std::size_t i = 0; i < v.primes.size(); ++i) v.values.push_back(coeff<C>());
    return v;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace nlf

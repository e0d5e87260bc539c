#pragma once

// Truncated arithmetic functions a_1 .. a_N and the products on them:
// Dirichlet convolution, the relatively prime product, their inverses,
// and the Z>=0-indexed power series used for Cauchy (Wiener) inversion.
//
// The truncation N is part of every value. Operations on mismatched N fail
// with TruncationMismatch instead of re-truncating.

#include "nlfield/arith.hpp"
#include "nlfield/coeff.hpp"
#include "nlfield/error.hpp"
#include "nlfield/field_algebra.hpp"

#include <cmath>
#include <numeric>
#include <optional>
#include <set>
#include <variant>
#include <vector>

namespace nlf {

template <class C>
class ArithSeries {
 public:
  using Coeff = C;
  using Traits = coeff_traits<C>;

  explicit ArithSeries(std::size_t N) : coeffs_(N, Traits::zero()) {
    if (N == 0) fail(Errc::TruncationMismatch, "truncation bound must be >= 1");
  }
  explicit ArithSeries(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) fail(Errc::TruncationMismatch, "truncation bound must be >= 1");
  }

  /// epsilon: a_1 = 1, else 0.
  static ArithSeries identity(std::size_t N) {
    ArithSeries s(N);
    s[1] = Traits::one();
    return s;
  }
  static ArithSeries ones(std::size_t N) { return ArithSeries(std::vector<C>(N, Traits::one())); }
  static ArithSeries delta(std::size_t n, std::size_t N) {
    ArithSeries s(N);
    s[n] = Traits::one();
    return s;
  }

  std::size_t N() const { return coeffs_.size(); }
  C& operator[](std::size_t n) { return coeffs_.at(n - 1); }
  const C& operator[](std::size_t n) const { return coeffs_.at(n - 1); }
  const std::vector<C>& coeffs() const { return coeffs_; }

  friend bool operator==(const ArithSeries& a, const ArithSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<C> coeffs_;
};

template <class C>
void require_same_truncation(const ArithSeries<C>& f, const ArithSeries<C>& g) {
  if (f.N() != g.N()) {
    fail(Errc::TruncationMismatch, "N=" + std::to_string(f.N()) + " vs N=" + std::to_string(g.N()));
  }
}

/// (f * g)(n) = sum_{d | n} f(d) g(n/d).
template <class C>
ArithSeries<C> dconv(const ArithSeries<C>& f, const ArithSeries<C>& g) {
  require_same_truncation(f, g);
  const std::size_t N = f.N();
  ArithSeries<C> out(N);
  for (std::size_t d = 1; d <= N; ++d) {
    if (coeff_traits<C>::is_zero(f[d])) continue;
    for (std::size_t m = 1; d * m <= N; ++m) out[d * m] += f[d] * g[m];
  }
  return out;
}

/// Relatively prime product: only factorizations n1 n2 = n with gcd 1.
template <class C>
ArithSeries<C> rp_conv(const ArithSeries<C>& f, const ArithSeries<C>& g) {
  require_same_truncation(f, g);
  const std::size_t N = f.N();
  ArithSeries<C> out(N);
  for (std::size_t d = 1; d <= N; ++d) {
    if (coeff_traits<C>::is_zero(f[d])) continue;
    for (std::size_t m = 1; d * m <= N; ++m) {
      if (std::gcd(d, m) == 1) out[d * m] += f[d] * g[m];
    }
  }
  return out;
}

namespace detail {

// Proper divisors d < n of every n <= N, built by sieving.
std::vector<std::vector<std::size_t>> proper_divisor_table(std::size_t N);

template <class C>
ArithSeries<C> recursive_inverse(const ArithSeries<C>& f, bool coprime_only) {
  if (coeff_traits<C>::is_zero(f[1])) fail(Errc::NonUnit, "f(1) = 0 has no inverse");
  const std::size_t N = f.N();
  const C inv_lead = coeff_traits<C>::one() / f[1];
  const auto table = proper_divisor_table(N);
  ArithSeries<C> b(N);
  b[1] = inv_lead;
  for (std::size_t n = 2; n <= N; ++n) {
    C acc = coeff_traits<C>::zero();
    for (std::size_t d : table[n]) {
      if (coprime_only && std::gcd(d, n / d) != 1) continue;
      acc += f[n / d] * b[d];
    }
    b[n] = -(acc * inv_lead);
  }
  return b;
}

}  // namespace detail

/// Dirichlet inverse: b_n = -(1/f(1)) sum_{d | n, d < n} f(n/d) b_d.
template <class C>
ArithSeries<C> dinv(const ArithSeries<C>& f) {
  return detail::recursive_inverse(f, false);
}

/// Inverse for the relatively prime product (same recursion over coprime d, n/d).
template <class C>
ArithSeries<C> rp_inv(const ArithSeries<C>& f) {
  return detail::recursive_inverse(f, true);
}

/// Coefficientwise product (the shape of every R_chi / R_rho action).
template <class C>
ArithSeries<C> pointwise(const ArithSeries<C>& weights, const ArithSeries<C>& f) {
  require_same_truncation(weights, f);
  ArithSeries<C> out(f.N());
  for (std::size_t n = 1; n <= f.N(); ++n) out[n] = weights[n] * f[n];
  return out;
}

template <class C>
ArithSeries<C> mobius_series(std::size_t N) {
  ArithSeries<C> out(N);
  for (std::size_t n = 1; n <= N; ++n) out[n] = coeff_traits<C>::from_rational(Rational(mobius(n)));
  return out;
}

// -- Z>=0-indexed power series ------------------------------------------------

/// a_0 + a_1 q + ... + a_N q^N.
template <class C>
struct PowerSeries {
  std::vector<C> a;

  std::size_t N() const { return a.size() - 1; }
  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;
};

template <class C>
PowerSeries<C> power_multiply(const PowerSeries<C>& f, const PowerSeries<C>& g) {
  if (f.a.size() != g.a.size()) fail(Errc::TruncationMismatch, "power series of different length");
  const std::size_t N = f.N();
  PowerSeries<C> out{std::vector<C>(N + 1, coeff_traits<C>::zero())};
  for (std::size_t i = 0; i <= N; ++i) {
    if (coeff_traits<C>::is_zero(f.a[i])) continue;
    for (std::size_t j = 0; i + j <= N; ++j) out.a[i + j] += f.a[i] * g.a[j];
  }
  return out;
}

/// Cauchy (power-series) inverse modulo q^(N+1).
template <class C>
PowerSeries<C> cauchy_inverse_powerseries(const PowerSeries<C>& f) {
  if (f.a.empty() || coeff_traits<C>::is_zero(f.a[0])) fail(Errc::NonUnit, "a_0 = 0 has no Cauchy inverse");
  const std::size_t N = f.N();
  const C inv0 = coeff_traits<C>::one() / f.a[0];
  PowerSeries<C> b{std::vector<C>(N + 1, coeff_traits<C>::zero())};
  b.a[0] = inv0;
  for (std::size_t n = 1; n <= N; ++n) {
    C acc = coeff_traits<C>::zero();
    for (std::size_t k = 1; k <= n; ++k) {
      if (!coeff_traits<C>::is_zero(f.a[k])) acc += f.a[k] * b.a[n - k];
    }
    b.a[n] = -(acc * inv0);
  }
  return b;
}

// -- Polylogarithm coefficients -------------------------------------------------

/// a_n = 1 / n^s for integral s >= 1.
ArithSeries<Rational> polylog_coeffs_exact(unsigned s, std::size_t N);
/// a_n = n^(-s0); exact when s0 is integral, binary64 otherwise.
std::variant<ArithSeries<Rational>, ArithSeries<Complex64>> polylog_coeffs(double s0, std::size_t N);

// -- Multiplicativity ------------------------------------------------------------

enum class Multiplicativity { completely_multiplicative, multiplicative, neither };

std::string_view to_string(Multiplicativity m);

namespace detail {

template <class C>
bool coeff_equal(const C& a, const C& b, double tol) {
  if constexpr (coeff_traits<C>::exact) {
    (void)tol;
    return a == b;
  } else {
    return approx_equal(a, b, tol);
  }
}

}  // namespace detail

/// Exhaustive test of f(mn) = f(m) f(n) over all (resp. coprime) pairs with
/// mn <= N, after scaling f so that f(1) = 1. f(1) = 0 gives neither.
template <class C>
Multiplicativity multiplicativity(const ArithSeries<C>& f, double tol = 1e-12) {
  if (coeff_traits<C>::is_zero(f[1])) return Multiplicativity::neither;
  const std::size_t N = f.N();
  const C scale = coeff_traits<C>::one() / f[1];
  std::vector<C> a(N + 1);
  for (std::size_t n = 1; n <= N; ++n) a[n] = f[n] * scale;
  bool complete = true, coprime = true;
  for (std::size_t m = 2; m * 2 <= N && coprime; ++m) {
    for (std::size_t n = 2; m * n <= N; ++n) {
      if (detail::coeff_equal(a[m * n], C(a[m] * a[n]), tol)) continue;
      complete = false;
      if (std::gcd(m, n) == 1) {
        coprime = false;
        break;
      }
    }
  }
  if (!coprime) return Multiplicativity::neither;
  return complete ? Multiplicativity::completely_multiplicative : Multiplicativity::multiplicative;
}

// -- Prime vectors and the aperiodic quotient ---------------------------------

/// Values a_p at primes p <= bound of a completely multiplicative function
/// with a_1 = 1.
template <class C>
struct PrimeVector {
  u64 bound = 0;
  std::vector<u64> primes;
  std::vector<C> values;

  static PrimeVector constant(u64 bound, const C& value) {
    PrimeVector v{bound, primes_up_to(bound), {}};
    v.values.assign(v.primes.size(), value);
    return v;
  }

  const C& at(u64 p) const {
    auto it = std::lower_bound(primes.begin(), primes.end(), p);
    if (it == primes.end() || *it != p) fail(Errc::NotPrime, std::to_string(p) + " is not a tabulated prime");
    return values[static_cast<std::size_t>(it - primes.begin())];
  }
  C& at(u64 p) { return const_cast<C&>(std::as_const(*this).at(p)); }

  friend bool operator==(const PrimeVector&, const PrimeVector&) = default;
};

template <class C>
PrimeVector<C> operator*(const PrimeVector<C>& x, const PrimeVector<C>& y) {
  if (x.bound != y.bound) fail(Errc::BoundMismatch, "prime bounds differ");
  PrimeVector<C> out = x;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = x.values[i] * y.values[i];
  return out;
}

/// a_n = prod_p a_p^{v_p(n)} for n <= N. Needs N <= bound.
template <class C>
ArithSeries<C> to_series(const PrimeVector<C>& v, std::size_t N) {
  if (N > v.bound) fail(Errc::BoundMismatch, "series length exceeds the prime bound");
  ArithSeries<C> out(N);
  out[1] = coeff_traits<C>::one();
  for (std::size_t n = 2; n <= N; ++n) {
    C acc = coeff_traits<C>::one();
    for (const auto& [p, e] : factorize(n)) {
      for (unsigned k = 0; k < e; ++k) acc *= v.at(p);
    }
    out[n] = acc;
  }
  return out;
}

/// Recovers the prime vector of a completely multiplicative series (bound = N).
template <class C>
PrimeVector<C> to_prime_vector(const ArithSeries<C>& f, double tol = 1e-12) {
  if (!(f[1] == coeff_traits<C>::one()) ||
      multiplicativity(f, tol) != Multiplicativity::completely_multiplicative) {
    fail(Errc::DomainUnsupported, "series is not a normalized completely multiplicative function");
  }
  PrimeVector<C> v{f.N(), primes_up_to(f.N()), {}};
  for (u64 p : v.primes) v.values.push_back(f[p]);
  return v;
}

/// A prime vector modulo the primes declared irrelevant.
template <class C>
struct AperiodicClass {
  PrimeVector<C> vector;
  std::set<u64> exceptional;
};

/// Equal prime values outside the union of the exceptional sets.
template <class C>
bool aperiodic_equiv(const AperiodicClass<C>& x, const AperiodicClass<C>& y, double tol = 1e-12) {
  if (x.vector.bound != y.vector.bound) fail(Errc::BoundMismatch, "prime bounds differ");
  for (std::size_t i = 0; i < x.vector.primes.size(); ++i) {
    const u64 p = x.vector.primes[i];
    if (x.exceptional.count(p) || y.exceptional.count(p)) continue;
    if (!detail::coeff_equal(x.vector.values[i], y.vector.values[i], tol)) return false;
  }
  return true;
}

// -- Dirichlet series <-> Puiseux elements over Q ------------------------------

/// n^{-s} -> eta^n: the element sum a_n * n of the field algebra of Q.
template <class C>
AlgElem<C> substitute_L_to_puiseux(const ArithSeries<C>& f) {
  const auto Q = NumberField::rationals();
  AlgElem<C> out(Q);
  for (std::size_t n = 1; n <= f.N(); ++n) out.add_term(NFElem::from_rational(Q, Rational(static_cast<long>(n))), f[n]);
  return out;
}

/// Inverse direction; every exponent must be a positive integer <= N.
template <class C>
ArithSeries<C> puiseux_to_series(const AlgElem<C>& f, std::size_t N) {
  if (f.field()->degree() != 1) fail(Errc::FieldMismatch, "Dirichlet series live over Q");
  ArithSeries<C> out(N);
  for (const auto& [alpha, c] : f.terms()) {
    const Rational& q = alpha.coords()[0];
    if (q.get_den() != 1 || sgn(q) <= 0) fail(Errc::NonIntegerSupport, "exponent " + q.get_str() + " is not in N");
    if (q > static_cast<long>(N)) fail(Errc::TruncationMismatch, "exponent " + q.get_str() + " exceeds N");
    out[q.get_num().get_ui()] = c;
  }
  return out;
}

}  // namespace nlf

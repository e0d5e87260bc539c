#pragma once

// Dirichlet characters with exact root-of-unity values, their conductors,
// induction, and the coefficientwise actions R_chi on arithmetic series and
// prime vectors.

#include "nlfield/arith.hpp"
#include "nlfield/arith_series.hpp"
#include "nlfield/coeff.hpp"
#include "nlfield/error.hpp"

#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace nlf {

/// exp(2 pi i k / order), kept reduced with 0 <= k < order.
struct RootOfUnity {
  u64 order = 1;
  u64 k = 0;

  static RootOfUnity make(u64 k, u64 order);

  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

/// A root of unity in coefficient domain C. Rational holds orders 1 and 2,
/// GaussRational orders dividing 4, Complex64 everything.
template <class C>
C root_value(const RootOfUnity& z) {
  if constexpr (std::is_same_v<C, Complex64>) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(z.k) / static_cast<double>(z.order);
    return std::polar(1.0, angle);
  } else if constexpr (std::is_same_v<C, GaussRational>) {
    if (4 % z.order != 0) fail(Errc::DomainUnsupported, "root of order " + std::to_string(z.order) + " is not Gaussian");
    switch (z.k * (4 / z.order)) {
      case 0: return GaussRational(Rational(1));
      case 1: return GaussRational::i();
      case 2: return GaussRational(Rational(-1));
      default: return -GaussRational::i();
    }
  } else {
    if (z.order > 2) fail(Errc::DomainUnsupported, "root of order " + std::to_string(z.order) + " is not rational");
    return z.k == 0 ? Rational(1) : Rational(-1);
  }
}

class DirichletCharacter {
 public:
  using Value = std::optional<RootOfUnity>;  // nullopt on non-units

  /// values[r] for residues r = 0 .. modulus-1. Computes conductor.
  DirichletCharacter(u64 modulus, std::vector<Value> values);

  static DirichletCharacter trivial() { return DirichletCharacter(1, {RootOfUnity{}}); }

  u64 modulus() const { return modulus_; }
  u64 conductor() const { return conductor_; }
  bool primitive() const { return conductor_ == modulus_; }
  /// Least common multiple of the value orders.
  u64 order() const;
  const Value& value(u64 n) const { return values_[n % modulus_]; }
  const std::vector<Value>& values() const { return values_; }

  template <class C>
  C eval(u64 n) const {
    const Value& v = value(n);
    return v ? root_value<C>(*v) : coeff_traits<C>::zero();
  }

  /// Exhaustive check of the character axioms (DomainUnsupported on failure).
  /// Used for externally supplied tables.
  void validate() const;

  std::string to_string() const;

  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
    return a.modulus_ == b.modulus_ && a.values_ == b.values_;
  }

 private:
  u64 modulus_;
  std::vector<Value> values_;
  u64 conductor_ = 1;
};

inline constexpr u64 kDefaultCharacterCap = 1000;

/// All phi(N) characters mod N, lexicographic in exponent tuples over the
/// generator set (smallest primitive root per odd prime power; -1 then 5 for
/// 2^e, e >= 3; 3 for 4). Index 0 is the principal character.
std::vector<DirichletCharacter> char_enumerate(u64 N, u64 cap = kDefaultCharacterCap);

DirichletCharacter induce(const DirichletCharacter& chi, u64 M);
/// The primitive character mod the conductor that induces chi.
DirichletCharacter primitive_of(const DirichletCharacter& chi);
/// Pointwise product at the lcm of the moduli.
DirichletCharacter product(const DirichletCharacter& chi, const DirichletCharacter& psi);

/// Primes dividing M but not the conductor of chi: the local factors removed
/// when chi is induced up to modulus M.
std::vector<u64> induction_primes(const DirichletCharacter& chi, u64 M);

template <class C>
ArithSeries<C> character_series(const DirichletCharacter& chi, std::size_t N) {
  ArithSeries<C> out(N);
  for (std::size_t n = 1; n <= N; ++n) out[n] = chi.eval<C>(n);
  return out;
}

/// a_n = 1 when n is a power of p (including n = 1), else 0.
template <class C>
ArithSeries<C> zeta_p_series(u64 p, std::size_t N) {
  if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (p > N) fail(Errc::TruncationTooSmall, "p exceeds truncation");
  ArithSeries<C> out(N);
  for (u64 q = 1; q <= N; q *= p) out[q] = coeff_traits<C>::one();
  return out;
}

/// Local factor (1 - chi(p) p^-s)^-1 as a series: a_{p^k} = chi(p)^k. It
/// coincides with zeta_p exactly when chi(p) = 1.
template <class C>
ArithSeries<C> twisted_local_factor(const DirichletCharacter& chi, u64 p, std::size_t N) {
  if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
  ArithSeries<C> out(N);
  C power = coeff_traits<C>::one();
  const C cp = chi.eval<C>(p);
  for (u64 q = 1; q <= N; q *= p) {
    out[q] = power;
    power *= cp;
  }
  return out;
}

/// R_chi(f) = sum chi(n) a_n eta^n.
template <class C>
ArithSeries<C> R_chi(const DirichletCharacter& chi, const ArithSeries<C>& f) {
  return pointwise(character_series<C>(chi, f.N()), f);
}

/// R_chi on prime vectors: a_p -> chi(p) a_p.
template <class C>
PrimeVector<C> R_chi(const DirichletCharacter& chi, const PrimeVector<C>& v) {
  PrimeVector<C> out = v;
  for (std::size_t i = 0; i < out.primes.size(); ++i) out.values[i] = chi.eval<C>(out.primes[i]) * v.values[i];
  return out;
}

/// Primes dividing the modulus; the natural exceptional set for chi.
std::set<u64> bad_primes(const DirichletCharacter& chi);

}  // namespace nlf

#pragma once

// Galois representations that are direct sums of Dirichlet characters,
// their Euler factors, the multiplicative coefficient function chi_rho,
// and the actions R_rho with the boxplus / composition laws.

#include "nlfield/arith_series.hpp"
#include "nlfield/characters.hpp"

#include <functional>
#include <map>
#include <vector>

namespace nlf {

class GaloisRep {
 public:
  explicit GaloisRep(std::vector<DirichletCharacter> summands);

  static GaloisRep trivial() { return GaloisRep({DirichletCharacter::trivial()}); }

  const std::vector<DirichletCharacter>& summands() const { return summands_; }
  std::size_t dimension() const { return summands_.size(); }

 private:
  std::vector<DirichletCharacter> summands_;
};

GaloisRep direct_sum(const GaloisRep& rho, const GaloisRep& sigma);
/// Tensor product of diagonal representations: each pair of summands
/// contributes the primitive character inducing their product.
GaloisRep tensor(const GaloisRep& rho, const GaloisRep& sigma);

/// Coefficients of prod_j (1 - chi_j(p) X)^-1 at X^0 .. X^depth. Summands
/// with chi_j(p) = 0 (ramified) contribute the factor 1.
template <class C>
std::vector<C> euler_factor_coeffs(const GaloisRep& rho, u64 p, unsigned depth) {
  if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
  std::vector<C> h(depth + 1, coeff_traits<C>::zero());
  h[0] = coeff_traits<C>::one();
  for (const auto& chi : rho.summands()) {
    const C c = chi.eval<C>(p);
    if (coeff_traits<C>::is_zero(c)) continue;
    for (unsigned k = 1; k <= depth; ++k) h[k] += c * h[k - 1];
  }
  return h;
}

/// chi_rho(n) = prod_p (X^{v_p(n)} coefficient of the Euler factor at p).
template <class C>
ArithSeries<C> chi_rho(const GaloisRep& rho, std::size_t N) {
  std::map<u64, std::vector<C>> local;
  ArithSeries<C> out(N);
  out[1] = coeff_traits<C>::one();
  for (std::size_t n = 2; n <= N; ++n) {
    C acc = coeff_traits<C>::one();
    for (const auto& [p, e] : factorize(n)) {
      auto it = local.find(p);
      if (it == local.end()) {
        unsigned depth = 0;
        for (u64 q = p; q <= N; q *= p) ++depth;
        it = local.emplace(p, euler_factor_coeffs<C>(rho, p, depth)).first;
      }
      acc *= it->second[e];
    }
    out[n] = acc;
  }
  return out;
}

template <class C>
ArithSeries<C> R_rho(const GaloisRep& rho, const ArithSeries<C>& f) {
  return pointwise(chi_rho<C>(rho, f.N()), f);
}

/// A closed map on arithmetic series of a fixed coefficient domain.
template <class C>
class SeriesEndomorphism {
 public:
  using Fn = std::function<ArithSeries<C>(const ArithSeries<C>&)>;

  explicit SeriesEndomorphism(Fn fn) : fn_(std::move(fn)) {}

  static SeriesEndomorphism identity() {
    return SeriesEndomorphism([](const ArithSeries<C>& f) { return f; });
  }
  static SeriesEndomorphism of(const GaloisRep& rho) {
    return SeriesEndomorphism([rho](const ArithSeries<C>& f) { return R_rho(rho, f); });
  }

  ArithSeries<C> operator()(const ArithSeries<C>& f) const { return fn_(f); }

 private:
  Fn fn_;
};

/// (S boxplus S')(f) = S(f) * S'(f) (Dirichlet convolution).
template <class C>
SeriesEndomorphism<C> boxplus(const SeriesEndomorphism<C>& s, const SeriesEndomorphism<C>& t) {
  return SeriesEndomorphism<C>([s, t](const ArithSeries<C>& f) { return dconv(s(f), t(f)); });
}

template <class C>
SeriesEndomorphism<C> compose(const SeriesEndomorphism<C>& s, const SeriesEndomorphism<C>& t) {
  return SeriesEndomorphism<C>([s, t](const ArithSeries<C>& f) { return s(t(f)); });
}

/// R_rho on prime vectors for a one-dimensional rho.
template <class C>
PrimeVector<C> R_rho(const GaloisRep& rho, const PrimeVector<C>& v) {
  if (rho.dimension() != 1) fail(Errc::DomainUnsupported, "prime-vector action needs a one-dimensional rho");
  return R_chi(rho.summands().front(), v);
}

std::set<u64> bad_primes(const GaloisRep& rho);

}  // namespace nlf

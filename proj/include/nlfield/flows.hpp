#pragma once

// Points of K_inf, the standard character exp(2 pi i Tr(.)), trace and
// diagonal maps, finite-level torus quadrature, the Cauchy and Dirichlet
// flows on the field algebra, time reversal, and the Galois action on sign
// vectors.

#include "nlfield/arith.hpp"
#include "nlfield/field_algebra.hpp"
#include "nlfield/numfield.hpp"

#include <vector>

namespace nlf {

/// Coordinates indexed by the embedding order of the field.
using InfVector = std::vector<Complex64>;

/// psi_alpha(z) = exp(2 pi i sum_nu alpha_nu z_nu).
Complex64 standard_character(const NFElem& alpha, const InfVector& z);

/// Equispaced product-grid estimate of the mean of psi_alpha conj(psi_beta)
/// over the torus K_inf / (M * Z[g]). Both characters must be trivial on the
/// lattice (M Tr(alpha g^j) integral), else NotLatticeCharacter.
Complex64 torus_inner_product(const NFElem& alpha, const NFElem& beta, u64 M, std::size_t points);

template <class S>
std::vector<S> trace_to_base(const std::vector<S>& x) {
  S acc{};
  for (const auto& v : x) acc += v;
  return {acc};
}

template <class S>
std::vector<S> include_diagonal(const std::vector<S>& x, std::size_t d) {
  if (x.size() != 1) fail(Errc::DimensionMismatch, "diagonal inclusion expects a point of Q_inf");
  return std::vector<S>(d, x.front());
}

/// Tr((1/d) i(x)) == x.
template <class S>
bool section_check(const std::vector<S>& x, std::size_t d) {
  auto included = include_diagonal(x, d);
  for (auto& v : included) v /= S(static_cast<long>(d));
  return trace_to_base(included) == x;
}

/// (sigma x)_i = x_{pi(i)} with e_i o sigma = e_{pi(i)}.
template <class S>
std::vector<S> permute_embeddings(const NumberField& field, std::size_t sigma, const std::vector<S>& x) {
  if (x.size() != field.degree()) fail(Errc::DimensionMismatch, "vector length differs from field degree");
  if (sigma != 0 && !field.is_galois()) fail(Errc::NotGalois, field.name() + " is not Galois over Q");
  const auto& pi = field.embedding_permutation(sigma);
  std::vector<S> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[pi[i]];
  return out;
}

/// Phi_r: a_alpha -> a_alpha exp(2 pi i Tr(alpha r)).
AlgElem<Complex64> cauchy_flow(const std::vector<double>& r, const AlgElem<Complex64>& f);
/// Psi_r: a_alpha -> a_alpha prod_nu |alpha_nu|^{2 pi i r_nu}; exponent 0 unchanged.
AlgElem<Complex64> dirichlet_flow(const std::vector<double>& r, const AlgElem<Complex64>& f);

/// Exponent inversion alpha -> 1/alpha; exponent 0 unchanged.
template <class C>
AlgElem<C> time_reversal(const AlgElem<C>& f) {
  AlgElem<C> out(f.field());
  for (const auto& [alpha, c] : f.terms()) out.add_term(alpha.is_zero() ? alpha : alpha.inverse(), c);
  return out;
}

/// Action of sigma on sign vectors: (sigma theta)_i = theta_{pi(i)}, so that
/// sign_of(sigma(x)) = sigma(sign_of(x)).
SignVector sign_representation(const NumberField& field, std::size_t sigma, const SignVector& theta);

struct MellinReport {
  double numeric = 0.0;
  double closed_form = 0.0;
  double relative_error = 0.0;
  double error_estimate = 0.0;
};

/// int_0^inf exp(-2 pi n y) y^{s-1} dy against Gamma(s) (2 pi n)^{-s}.
MellinReport mellin_spot_check(u64 n, double s);

}  // namespace nlf

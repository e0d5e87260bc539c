#pragma once

// Cusp-form q-expansions (Delta as the worked instance), the two-term
// Puiseux polynomial t_p, the integer-exponent projection, and the Hecke
// operator built from them.

#include "nlfield/arith.hpp"
#include "nlfield/coeff.hpp"
#include "nlfield/field_algebra.hpp"

#include <optional>
#include <vector>

namespace nlf {

struct CuspFormCoeffs {
  unsigned weight = 12;
  std::vector<Integer> a;  // a[n - 1] = a_n

  std::size_t N() const { return a.size(); }
  const Integer& operator[](std::size_t n) const { return a.at(n - 1); }
  /// lambda_n = a_n / n^{k/2}; exact for even weight.
  std::vector<Rational> normalized() const;

  friend bool operator==(const CuspFormCoeffs&, const CuspFormCoeffs&) = default;
};

inline constexpr std::size_t kDeltaCap = 100000;

/// Coefficients of q * prod_{n}(1 - q^n)^24 up to q^N.
CuspFormCoeffs delta_expansion(std::size_t N);

/// eta^p + p^{k-1} eta^{1/p}.
AlgElem<Rational> t_p_polynomial(u64 p, unsigned weight);
/// Exponents swapped: eta^{1/p} + p^{k-1} eta^p.
AlgElem<Rational> t_p_classical(u64 p, unsigned weight);

/// Keeps exactly the terms with integer exponents.
template <class C>
AlgElem<C> pr_qz(const AlgElem<C>& f) {
  if (f.field()->degree() != 1) fail(Errc::FieldMismatch, "projection is defined over Q");
  AlgElem<C> out(f.field());
  for (const auto& [alpha, c] : f.terms()) {
    if (alpha.is_rational_integer()) out.add_term(alpha, c);
  }
  return out;
}

enum class HeckeVariant { paper, classical };

/// pr_QZ(t ⊗ f) with t = t_p (paper) or the swapped t'_p (classical). The
/// result has truncation floor(N/p).
CuspFormCoeffs hecke_tp(const CuspFormCoeffs& f, u64 p, HeckeVariant variant);

struct DeligneReport {
  bool pass = true;
  std::size_t checked = 0;
  double max_ratio = 0.0;  // max |a_n| / (d(n) n^{(k-1)/2})
  std::size_t argmax = 1;
  std::optional<std::size_t> first_violation;
  double l2_partial_sum = 0.0;     // sum |lambda_n|^2
  double implied_constant = 0.0;   // max |lambda_n|^2 n^{1 - eps}
};

/// Exact check of |a_n| <= d(n) n^{(k-1)/2} for every n <= N.
DeligneReport deligne_bound_report(const CuspFormCoeffs& f, double eps);

}  // namespace nlf

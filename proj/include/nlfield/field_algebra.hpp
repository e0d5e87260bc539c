#pragma once

// The field algebra C[K]: finite formal sums f = sum a_alpha * alpha over
// exponents alpha in K, with the Cauchy product (convolution along +) and
// the Dirichlet product (convolution along x).
//
// AlgElem<C> is homogeneous in one coefficient domain C (Rational,
// GaussRational or Complex64). Moving between domains goes through
// promote<To>() and is never implicit.

#include "nlfield/coeff.hpp"
#include "nlfield/error.hpp"
#include "nlfield/numfield.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace nlf {

template <class C>
class AlgElem {
 public:
  using Coeff = C;
  using Traits = coeff_traits<C>;
  using Terms = std::map<NFElem, C>;

  explicit AlgElem(FieldPtr field) : field_(std::move(field)) {}

  static AlgElem monomial(const NFElem& alpha, const C& c = Traits::one()) {
    AlgElem f(alpha.field());
    f.add_term(alpha, c);
    return f;
  }
  /// Cauchy identity: the monomial at exponent 0.
  static AlgElem one_plus(const FieldPtr& field) { return monomial(NFElem::from_rational(field, Rational(0))); }
  /// Dirichlet identity: the monomial at exponent 1.
  static AlgElem one_times(const FieldPtr& field) { return monomial(NFElem::from_rational(field, Rational(1))); }

  const FieldPtr& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  C coeff(const NFElem& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Traits::zero() : it->second;
  }

  /// Adds c at exponent alpha; a resulting zero coefficient is removed.
  void add_term(const NFElem& alpha, const C& c) {
    check_field(alpha.field());
    if (Traits::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(alpha, c);
    if (!inserted) {
      it->second += c;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  AlgElem& operator+=(const AlgElem& o) {
    check_field(o.field_);
    for (const auto& [alpha, c] : o.terms_) add_term(alpha, c);
    return *this;
  }
  AlgElem& operator-=(const AlgElem& o) {
    check_field(o.field_);
    for (const auto& [alpha, c] : o.terms_) add_term(alpha, -c);
    return *this;
  }
  AlgElem& operator*=(const C& scalar) {
    if (Traits::is_zero(scalar)) {
      terms_.clear();
      return *this;
    }
    for (auto& [alpha, c] : terms_) c *= scalar;
    return *this;
  }

  friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
  friend AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
  friend AlgElem operator*(const C& s, AlgElem a) { return a *= s; }
  friend bool operator==(const AlgElem& a, const AlgElem& b) { return a.terms_ == b.terms_; }

  void check_field(const FieldPtr& other) const {
    if (other != field_ && !field_->same_as(*other)) {
      fail(Errc::FieldMismatch, field_->name() + " vs " + other->name());
    }
  }

 private:
  FieldPtr field_;
  Terms terms_;
};

template <class C>
C trace_functional(const AlgElem<C>& f) {
  C t = coeff_traits<C>::zero();
  for (const auto& [alpha, c] : f.terms()) t += c;
  return t;
}

template <class C>
AlgElem<C> cauchy_product(const AlgElem<C>& f, const AlgElem<C>& g) {
  f.check_field(g.field());
  AlgElem<C> out(f.field());
  for (const auto& [a1, c1] : f.terms()) {
    for (const auto& [a2, c2] : g.terms()) out.add_term(a1 + a2, c1 * c2);
  }
  return out;
}

/// Dirichlet product. Exponents alpha != 0 collect sum_{alpha = a1 a2}; the
/// constant term is d0 = a0 * sum_{K*} b + b0 * sum_{K*} a + a0 b0.
template <class C>
AlgElem<C> dirichlet_product(const AlgElem<C>& f, const AlgElem<C>& g) {
  f.check_field(g.field());
  AlgElem<C> out(f.field());
  C a0 = coeff_traits<C>::zero(), b0 = coeff_traits<C>::zero();
  C sum_a = coeff_traits<C>::zero(), sum_b = coeff_traits<C>::zero();
  for (const auto& [a1, c1] : f.terms()) {
    if (a1.is_zero()) {
      a0 = c1;
      continue;
    }
    sum_a += c1;
    for (const auto& [a2, c2] : g.terms()) {
      if (!a2.is_zero()) out.add_term(a1 * a2, c1 * c2);
    }
  }
  for (const auto& [a2, c2] : g.terms()) {
    if (a2.is_zero()) {
      b0 = c2;
    } else {
      sum_b += c2;
    }
  }
  C d0 = a0 * sum_b + b0 * sum_a + a0 * b0;
  out.add_term(NFElem::from_rational(f.field(), Rational(0)), d0);
  return out;
}

/// Rescales f to trace 1. Throws TraceZero when f lies in the trace-zero locus.
template <class C>
AlgElem<C> normalize_z1(const AlgElem<C>& f) {
  C t = trace_functional(f);
  if (coeff_traits<C>::is_zero(t)) fail(Errc::TraceZero, "element has trace 0 and no normalized representative");
  AlgElem<C> out = f;
  out *= coeff_traits<C>::one() / t;
  return out;
}

template <class C>
bool has_unit_trace(const AlgElem<C>& f) {
  return trace_functional(f) == coeff_traits<C>::one();
}

/// Vector sum on the trace-one slice with origin 1_plus: f + g - 1_plus.
template <class C>
AlgElem<C> dot_plus(const AlgElem<C>& f, const AlgElem<C>& g) {
  if (!has_unit_trace(f) || !has_unit_trace(g)) fail(Errc::NotNormalized, "dot_plus needs trace-one inputs");
  return f + g - AlgElem<C>::one_plus(f.field());
}

/// Scalar action on the trace-one slice: c f + (1 - c) 1_plus.
template <class C>
AlgElem<C> odot(const C& c, const AlgElem<C>& f) {
  if (!has_unit_trace(f)) fail(Errc::NotNormalized, "odot needs a trace-one input");
  AlgElem<C> out = c * f;
  out += (coeff_traits<C>::one() - c) * AlgElem<C>::one_plus(f.field());
  return out;
}

template <class C>
AlgElem<C> galois_act(std::size_t sigma, const AlgElem<C>& f) {
  AlgElem<C> out(f.field());
  for (const auto& [alpha, c] : f.terms()) out.add_term(galois_apply(sigma, alpha), c);
  return out;
}

template <class C>
AlgElem<C> conj(const AlgElem<C>& f) {
  AlgElem<C> out(f.field());
  for (const auto& [alpha, c] : f.terms()) out.add_term(alpha, coeff_traits<C>::conj(c));
  return out;
}

/// Bilateral Cauchy shift: coefficient at beta becomes a_{alpha - beta}.
template <class C>
AlgElem<C> shift_cauchy(const NFElem& alpha, const AlgElem<C>& f) {
  AlgElem<C> out(f.field());
  for (const auto& [gamma, c] : f.terms()) out.add_term(alpha - gamma, c);
  return out;
}

/// Dirichlet shift on K*: coefficient at beta becomes a_{alpha / beta}.
/// The exponent-0 term is carried unchanged.
template <class C>
AlgElem<C> shift_dirichlet(const NFElem& alpha, const AlgElem<C>& f) {
  if (alpha.is_zero()) fail(Errc::ZeroShift, "Dirichlet shift by 0 is undefined");
  AlgElem<C> out(f.field());
  for (const auto& [gamma, c] : f.terms()) out.add_term(gamma.is_zero() ? gamma : alpha * gamma.inverse(), c);
  return out;
}

/// <f, g> = sum f_beta conj(g_beta).
template <class C>
C inner_product(const AlgElem<C>& f, const AlgElem<C>& g) {
  f.check_field(g.field());
  C acc = coeff_traits<C>::zero();
  for (const auto& [alpha, c] : f.terms()) {
    auto it = g.terms().find(alpha);
    if (it != g.terms().end()) acc += c * coeff_traits<C>::conj(it->second);
  }
  return acc;
}

template <class C>
typename coeff_traits<C>::norm_type l2_norm_sq(const AlgElem<C>& f) {
  typename coeff_traits<C>::norm_type acc(0);
  for (const auto& [alpha, c] : f.terms()) acc += coeff_traits<C>::norm_sq(c);
  return acc;
}

template <class To, class From>
AlgElem<To> promote(const AlgElem<From>& f) {
  AlgElem<To> out(f.field());
  for (const auto& [alpha, c] : f.terms()) {
    if constexpr (std::is_same_v<To, Complex64>) {
      out.add_term(alpha, coeff_traits<From>::to_complex(c));
    } else {
      out.add_term(alpha, To(c));
    }
  }
  return out;
}

inline bool approx_equal(const AlgElem<Complex64>& f, const AlgElem<Complex64>& g, double tol) {
  auto diff = f - g;
  double scale = 1.0;
  for (const auto& [alpha, c] : f.terms()) scale = std::max(scale, std::abs(c));
  for (const auto& [alpha, c] : diff.terms()) {
    if (std::abs(c) > tol * scale) return false;
  }
  return true;
}

// -- Hardy / sign grading ---------------------------------------------------

template <class C>
struct GradedDecomposition {
  FieldPtr field;
  std::map<SignVector, AlgElem<C>> components;
  C constant = coeff_traits<C>::zero();

  AlgElem<C> component(const SignVector& theta) const {
    auto it = components.find(theta);
    return it == components.end() ? AlgElem<C>(field) : it->second;
  }
};

template <class C>
GradedDecomposition<C> grade(const AlgElem<C>& f, unsigned cap_bits = kDefaultPrecisionCap) {
  GradedDecomposition<C> out{f.field(), {}, coeff_traits<C>::zero()};
  for (const auto& [alpha, c] : f.terms()) {
    if (alpha.is_zero()) {
      out.constant = c;
      continue;
    }
    auto theta = sign_of(alpha, cap_bits);
    auto [it, inserted] = out.components.try_emplace(theta, f.field());
    it->second.add_term(alpha, c);
  }
  return out;
}

template <class C>
AlgElem<C> reassemble(const GradedDecomposition<C>& g) {
  AlgElem<C> out(g.field);
  for (const auto& [theta, part] : g.components) out += part;
  out.add_term(NFElem::from_rational(g.field, Rational(0)), g.constant);
  return out;
}

/// Two candidate rules for the constant term of a Dirichlet product: the
/// convolution rule used by dirichlet_product, and T(f)T(g) - a0 b0 as
/// stated for graded boundary values. They differ for general inputs.
template <class C>
struct ConstantTermReport {
  C convolution_rule;
  C graded_rule;
  bool agree;
};

template <class C>
ConstantTermReport<C> constant_term_diagnostic(const AlgElem<C>& f, const AlgElem<C>& g) {
  const NFElem zero = NFElem::from_rational(f.field(), Rational(0));
  C conv = dirichlet_product(f, g).coeff(zero);
  C graded = trace_functional(f) * trace_functional(g) - f.coeff(zero) * g.coeff(zero);
  return {conv, graded, conv == graded};
}

/// Coordinatewise x + i t -> x + theta_nu i t.
std::vector<Complex64> theta_conjugate(const SignVector& theta, const std::vector<Complex64>& point);

}  // namespace nlf

#include "nlfield/flows.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>

#include <cmath>
#include <numbers>

namespace nlf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex64 pairwise_sum(const std::vector<Complex64>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo <= 8) {
    Complex64 acc{};
    for (std::size_t i = lo; i < hi; ++i) acc += v[i];
    return acc;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

std::vector<Rational> lattice_frequencies(const NFElem& alpha, u64 M) {
  const auto& field = *alpha.field();
  std::vector<Rational> out;
  auto basis = NFElem::from_rational(alpha.field(), Rational(1));
  const auto gen = NFElem::generator(alpha.field());
  for (std::size_t j = 0; j < field.degree(); ++j) {
    Rational n = trace(alpha * basis) * static_cast<long>(M);
    if (n.get_den() != 1) {
      fail(Errc::NotLatticeCharacter, alpha.to_string() + " is not a character of the level-" + std::to_string(M) + " torus");
    }
    out.push_back(n);
    basis *= gen;
  }
  return out;
}

}  // namespace

Complex64 standard_character(const NFElem& alpha, const InfVector& z) {
  const auto a = embed(alpha);
  if (a.size() != z.size()) fail(Errc::DimensionMismatch, "point dimension differs from field degree");
  Complex64 tr{};
  for (std::size_t i = 0; i < a.size(); ++i) tr += a[i] * z[i];
  return std::exp(Complex64(0.0, kTwoPi) * tr);
}

Complex64 torus_inner_product(const NFElem& alpha, const NFElem& beta, u64 M, std::size_t points) {
  if (M == 0 || points == 0) fail(Errc::DomainUnsupported, "level and point count must be positive");
  if (!alpha.field()->same_as(*beta.field())) fail(Errc::FieldMismatch, "characters of different fields");
  lattice_frequencies(alpha, M);
  lattice_frequencies(beta, M);
  const auto field = alpha.field();
  const std::size_t d = field->degree();
  const auto per_axis = static_cast<std::size_t>(std::llround(std::pow(static_cast<double>(points), 1.0 / d)));

  // Lattice basis M * e(g^j) in K_inf.
  std::vector<std::vector<double>> basis;
  auto power = NFElem::from_rational(field, Rational(1));
  for (std::size_t j = 0; j < d; ++j) {
    auto e = embed(power);
    for (auto& v : e) v *= static_cast<double>(M);
    basis.push_back(std::move(e));
    power *= NFElem::generator(field);
  }

  std::size_t total = 1;
  for (std::size_t j = 0; j < d; ++j) total *= per_axis;
  std::vector<Complex64> samples;
  samples.reserve(total);
  std::vector<std::size_t> idx(d, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    InfVector x(d);
    for (std::size_t j = 0; j < d; ++j) {
      const double t = static_cast<double>(idx[j]) / static_cast<double>(per_axis);
      for (std::size_t nu = 0; nu < d; ++nu) x[nu] += t * basis[j][nu];
    }
    samples.push_back(standard_character(alpha, x) * std::conj(standard_character(beta, x)));
    for (std::size_t j = 0; j < d && ++idx[j] == per_axis; ++j) idx[j] = 0;
  }
  return pairwise_sum(samples, 0, samples.size()) / static_cast<double>(total);
}

AlgElem<Complex64> cauchy_flow(const std::vector<double>& r, const AlgElem<Complex64>& f) {
  if (r.size() != f.field()->degree()) fail(Errc::DimensionMismatch, "flow time has wrong dimension");
  AlgElem<Complex64> out(f.field());
  for (const auto& [alpha, c] : f.terms()) {
    const auto a = embed(alpha);
    double tr = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) tr += a[i] * r[i];
    out.add_term(alpha, c * std::polar(1.0, kTwoPi * tr));
  }
  return out;
}

AlgElem<Complex64> dirichlet_flow(const std::vector<double>& r, const AlgElem<Complex64>& f) {
  if (r.size() != f.field()->degree()) fail(Errc::DimensionMismatch, "flow time has wrong dimension");
  AlgElem<Complex64> out(f.field());
  for (const auto& [alpha, c] : f.terms()) {
    if (alpha.is_zero()) {
      out.add_term(alpha, c);
      continue;
    }
    const auto a = embed(alpha);
    double phase = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) phase += r[i] * std::log(std::abs(a[i]));
    out.add_term(alpha, c * std::polar(1.0, kTwoPi * phase));
  }
  return out;
}

SignVector sign_representation(const NumberField& field, std::size_t sigma, const SignVector& theta) {
  return {permute_embeddings(field, sigma, theta.signs)};
}

MellinReport mellin_spot_check(u64 n, double s) {
  if (n == 0 || !(s > 0.0)) fail(Errc::DomainUnsupported, "need n >= 1 and s > 0");
  const double rate = kTwoPi * static_cast<double>(n);
  auto integrand = [&](double y) { return std::exp(-rate * y) * std::pow(y, s - 1.0); };
  boost::math::quadrature::exp_sinh<double> integrator;
  MellinReport r;
  double l1 = 0.0;
  r.numeric = integrator.integrate(integrand, 0.0, std::numeric_limits<double>::infinity(),
                                   std::sqrt(std::numeric_limits<double>::epsilon()), &r.error_estimate, &l1);
  r.closed_form = std::tgamma(s) * std::pow(rate, -s);
  r.relative_error = std::abs(r.numeric - r.closed_form) / std::abs(r.closed_form);
  if (r.error_estimate > 1e-6 * std::abs(r.numeric)) {
    fail(Errc::QuadratureFailure, "quadrature error estimate " + std::to_string(r.error_estimate));
  }
  return r;
}

}  // namespace nlf

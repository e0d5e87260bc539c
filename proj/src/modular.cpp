#include "nlfield/modular.hpp"

#include <cmath>

namespace nlf {

std::vector<Rational> CuspFormCoeffs::normalized() const {
  if (weight % 2 != 0) fail(Errc::DomainUnsupported, "exact normalization needs even weight");
  std::vector<Rational> out;
  out.reserve(a.size());
  for (std::size_t n = 1; n <= a.size(); ++n) {
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), n, weight / 2);
    Rational q(a[n - 1], den);
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

CuspFormCoeffs delta_expansion(std::size_t N) {
  if (N == 0) fail(Errc::TruncationMismatch, "N must be >= 1");
  if (N > kDeltaCap) fail(Errc::CapExceeded, "N exceeds " + std::to_string(kDeltaCap));
  const std::size_t len = N;  // prod (1 - q^n)^24 to degree N-1
  // Euler's pentagonal theorem gives prod (1 - q^n) sparsely.
  std::vector<std::pair<std::size_t, long>> euler{{0, 1}};
  for (long k = 1;; ++k) {
    const std::size_t g1 = static_cast<std::size_t>(k * (3 * k - 1) / 2);
    const std::size_t g2 = static_cast<std::size_t>(k * (3 * k + 1) / 2);
    if (g1 >= len) break;
    const long s = (k % 2 == 0) ? 1 : -1;
    euler.push_back({g1, s});
    if (g2 < len) euler.push_back({g2, s});
  }
  // g = e^24 with e_0 = 1: n g_n = sum_{j>=1} (25 j - n) e_j g_{n-j}.
  std::vector<Integer> g(len);
  g[0] = 1;
  Integer acc;
  for (std::size_t n = 1; n < len; ++n) {
    acc = 0;
    for (std::size_t t = 1; t < euler.size() && euler[t].first <= n; ++t) {
      const long j = static_cast<long>(euler[t].first);
      const long w = (25 * j - static_cast<long>(n)) * euler[t].second;
      acc += g[n - static_cast<std::size_t>(j)] * w;
    }
    mpz_divexact_ui(g[n].get_mpz_t(), acc.get_mpz_t(), n);
  }
  return CuspFormCoeffs{12, std::move(g)};
}

namespace {

AlgElem<Rational> two_term(u64 p, unsigned weight, bool swapped) {
  if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
  const auto Q = NumberField::rationals();
  Integer weight_factor;
  mpz_ui_pow_ui(weight_factor.get_mpz_t(), p, weight - 1);
  const auto up = NFElem::from_rational(Q, Rational(static_cast<long>(p)));
  const auto down = NFElem::from_rational(Q, Rational(1, static_cast<long>(p)));
  AlgElem<Rational> t(Q);
  t.add_term(swapped ? down : up, Rational(1));
  t.add_term(swapped ? up : down, Rational(weight_factor));
  return t;
}

}  // namespace

AlgElem<Rational> t_p_polynomial(u64 p, unsigned weight) { return two_term(p, weight, false); }
AlgElem<Rational> t_p_classical(u64 p, unsigned weight) { return two_term(p, weight, true); }

CuspFormCoeffs hecke_tp(const CuspFormCoeffs& f, u64 p, HeckeVariant variant) {
  if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (p > f.N()) fail(Errc::TruncationTooSmall, "p exceeds truncation N=" + std::to_string(f.N()));
  const auto Q = NumberField::rationals();
  AlgElem<Rational> series(Q);
  for (std::size_t n = 1; n <= f.N(); ++n) {
    series.add_term(NFElem::from_rational(Q, Rational(static_cast<long>(n))), Rational(f[n]));
  }
  const auto t = variant == HeckeVariant::paper ? t_p_polynomial(p, f.weight) : t_p_classical(p, f.weight);
  const auto projected = pr_qz(dirichlet_product(t, series));
  const std::size_t M = f.N() / p;
  CuspFormCoeffs out{f.weight, std::vector<Integer>(M)};
  for (const auto& [alpha, c] : projected.terms()) {
    const Rational& m = alpha.coords()[0];
    if (sgn(m) <= 0 || m > static_cast<long>(M)) continue;
    out.a[m.get_num().get_ui() - 1] = c.get_num();
  }
  return out;
}

DeligneReport deligne_bound_report(const CuspFormCoeffs& f, double eps) {
  DeligneReport r;
  const unsigned k = f.weight;
  for (std::size_t n = 1; n <= f.N(); ++n) {
    const Integer& an = f[n];
    const u64 dn = divisor_count(n);
    // a_n^2 <= d(n)^2 n^{k-1}, in integers.
    Integer bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), n, k - 1);
    bound *= static_cast<unsigned long>(dn * dn);
    const bool ok = an * an <= bound;
    if (!ok && !r.first_violation) r.first_violation = n;
    r.pass = r.pass && ok;
    ++r.checked;

    const double nd = static_cast<double>(n);
    const double mag = std::abs(an.get_d());
    const double ratio = mag / (static_cast<double>(dn) * std::pow(nd, (k - 1) / 2.0));
    if (ratio > r.max_ratio) {
      r.max_ratio = ratio;
      r.argmax = n;
    }
    const double lambda_sq = mag * mag / std::pow(nd, static_cast<double>(k));
    r.l2_partial_sum += lambda_sq;
    r.implied_constant = std::max(r.implied_constant, lambda_sq * std::pow(nd, 1.0 - eps));
  }
  return r;
}

}  // namespace nlf

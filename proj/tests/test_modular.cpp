#include "nlfield/modular.hpp"

#include "oracles.hpp"

#include <cmath>

using namespace nlf;

namespace {

// a_n for n outside [1, N] is 0.
Integer at(const CuspFormCoeffs& f, std::size_t n) { return n >= 1 && n <= f.N() ? f[n] : Integer(0); }

Integer pow_int(u64 p, unsigned e) {
  Integer r(1);
  for (unsigned i = 0; i < e; ++i) r *= static_cast<unsigned long>(p);
  return r;
}

}  // namespace

TEST_CASE("Delta expansion matches the product oracle") {
  const std::size_t N = 300;
  const auto d = delta_expansion(N);
  const auto tau = oracle::delta_by_products(N);
  REQUIRE(d.N() == N);
  for (std::size_t n = 1; n <= N; ++n) CHECK(d[n] == tau[n]);
  CHECK(d[1] == 1);
  CHECK(d[2] == -24);
  CHECK(d[3] == 252);
  CHECK(d[4] == -1472);
  CHECK(d[5] == 4830);
  CHECK(d[11] == 534612);
  CHECK(d.weight == 12);
}

TEST_CASE("Delta caps") {
  CHECK_THROWS_CODE(delta_expansion(kDeltaCap + 1), Errc::CapExceeded);
  CHECK(delta_expansion(1).a == std::vector<Integer>{Integer(1)});
}

TEST_CASE("tau is multiplicative with the Hecke recursion at prime powers") {
  const auto d = delta_expansion(1000);
  for (std::size_t m = 1; m <= 31; ++m) {
    for (std::size_t n = 1; n <= 31; ++n) {
      if (std::gcd(m, n) == 1) CHECK(d[m * n] == d[m] * d[n]);
    }
  }
  for (u64 p : {2, 3, 5, 7}) {
    for (u64 q = p; q * p * p <= 1000; q *= p) CHECK(d[q * p * p] == d[p] * d[q * p] - pow_int(p, 11) * d[q]);
  }
}

TEST_CASE("t_p polynomials") {
  const auto Q = NumberField::rationals();
  const auto t2 = t_p_polynomial(2, 12);
  CHECK(t2.size() == 2);
  CHECK(t2.coeff(NFElem::from_rational(Q, 2)) == 1);
  CHECK(t2.coeff(NFElem::from_rational(Q, Rational(1, 2))) == 2048);
  const auto c3 = t_p_classical(3, 12);
  CHECK(c3.coeff(NFElem::from_rational(Q, Rational(1, 3))) == 1);
  CHECK(c3.coeff(NFElem::from_rational(Q, 3)) == 177147);
  CHECK_THROWS_CODE(t_p_polynomial(4, 12), Errc::NotPrime);
}

TEST_CASE("integer projection") {
  const auto Q = NumberField::rationals();
  AlgElem<Rational> f(Q);
  f.add_term(NFElem::from_rational(Q, Rational(3, 2)), 5);
  f.add_term(NFElem::from_rational(Q, 4), 7);
  f.add_term(NFElem::from_rational(Q, -2), 1);
  const auto pr = pr_qz(f);
  CHECK(pr.size() == 2);
  CHECK(pr.coeff(NFElem::from_rational(Q, 4)) == 7);
  CHECK(pr_qz(pr) == pr);
  const auto eta = AlgElem<Rational>::monomial(NFElem::from_rational(Q, 1));
  CHECK(pr_qz(dirichlet_product(t_p_polynomial(5, 12), eta)) == AlgElem<Rational>::monomial(NFElem::from_rational(Q, 5)));
  const auto K = NumberField::real_quadratic(2);
  CHECK_THROWS_CODE(pr_qz(AlgElem<Rational>::one_plus(K)), Errc::FieldMismatch);
}

TEST_CASE("paper Hecke variant against the direct formula") {
  const std::size_t N = 250;
  const auto d = delta_expansion(N);
  for (u64 p : {2, 3, 5}) {
    const auto t = hecke_tp(d, p, HeckeVariant::paper);
    CHECK(t.N() == N / p);
    for (std::size_t m = 1; m <= 50; ++m) {
      const Integer lower = m % p == 0 ? at(d, m / p) : Integer(0);
      CHECK(t[m] == lower + pow_int(p, 11) * at(d, m * p));
    }
  }
  CHECK(hecke_tp(d, 2, HeckeVariant::paper)[1] == -49152);
}

TEST_CASE("classical variant is the eigen-operator") {
  const std::size_t N = 128;
  const auto d = delta_expansion(N);
  const auto tau = oracle::delta_by_products(N);
  for (u64 p : {2, 3, 5, 7}) {
    const auto t = hecke_tp(d, p, HeckeVariant::classical);
    REQUIRE(t.N() == N / p);
    for (std::size_t m = 1; m <= N / p; ++m) CHECK(t[m] == tau[p] * tau[m]);
    const auto paper = hecke_tp(d, p, HeckeVariant::paper);
    bool eigen = true;
    for (std::size_t m = 1; m <= N / p; ++m) eigen = eigen && paper[m] == tau[p] * tau[m];
    CHECK_FALSE(eigen);
  }
}

TEST_CASE("Hecke inputs") {
  const auto d = delta_expansion(20);
  CHECK_THROWS_CODE(hecke_tp(d, 4, HeckeVariant::paper), Errc::NotPrime);
  CHECK_THROWS_CODE(hecke_tp(d, 23, HeckeVariant::paper), Errc::TruncationTooSmall);
}

TEST_CASE("Deligne bound") {
  const std::size_t N = 2000;
  const auto d = delta_expansion(N);
  const auto r = deligne_bound_report(d, 0.01);
  CHECK(r.pass);
  CHECK(r.checked == N);
  CHECK_FALSE(r.first_violation.has_value());
  CHECK(r.max_ratio <= 1.0);
  // Independent exact check: tau(n)^2 <= d(n)^2 n^11.
  for (std::size_t n = 1; n <= N; ++n) {
    const Integer dn(static_cast<unsigned long>(oracle::divisors(n).size()));
    CHECK(d[n] * d[n] <= dn * dn * pow_int(n, 11));
  }
  const auto lam = d.normalized();
  CHECK(lam[0] == 1);
  CHECK(lam[1] == Rational(-3, 8));
  CHECK(r.l2_partial_sum > 0.0);
}

TEST_CASE("Deligne report flags a violation") {
  auto bad = delta_expansion(10);
  bad.a[5] = pow_int(6, 6) * 4;  // d(6) = 4 and 6^{11/2} < 6^6
  const auto r = deligne_bound_report(bad, 0.01);
  CHECK_FALSE(r.pass);
  REQUIRE(r.first_violation.has_value());
  CHECK(*r.first_violation == 6);
}

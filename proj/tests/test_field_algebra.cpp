#include "nlfield/field_algebra.hpp"
#include "nlfield/sampling.hpp"

#include "oracles.hpp"

#include <map>

using namespace nlf;

namespace {

using E = AlgElem<Rational>;

FieldPtr Q() { return NumberField::rationals(); }
FieldPtr Q2() { return NumberField::real_quadratic(2); }

NFElem q(const Rational& v) { return NFElem::from_rational(Q(), v); }

E make(std::initializer_list<std::pair<Rational, Rational>> terms) {
  E f(Q());
  for (const auto& [alpha, c] : terms) f.add_term(q(alpha), c);
  return f;
}

// Oracle: every pair of terms, exponents combined by op, no zero rule.
E brute(const E& f, const E& g, bool multiply) {
  std::map<NFElem, Rational> acc;
  for (const auto& [a, x] : f.terms()) {
    for (const auto& [b, y] : g.terms()) acc[multiply ? a * b : a + b] += x * y;
  }
  E out(f.field());
  for (const auto& [a, c] : acc) out.add_term(a, c);
  return out;
}

}  // namespace

TEST_CASE("cauchy product examples") {
  const auto f = make({{0, 1}, {1, 2}}), g = make({{0, 3}, {1, 4}});
  CHECK(cauchy_product(f, g) == make({{0, 3}, {1, 10}, {2, 8}}));
  CHECK(cauchy_product(E::one_plus(Q()), f) == f);
  CHECK(cauchy_product(E::monomial(q(2)), E::monomial(q(3))) == E::monomial(q(5)));
}

TEST_CASE("dirichlet product examples") {
  const auto f = make({{2, 1}, {3, 1}});
  CHECK(dirichlet_product(f, f) == make({{4, 1}, {6, 2}, {9, 1}}));
  CHECK(dirichlet_product(f, E::one_times(Q())) == f);
  E scaled = E::one_plus(Q());
  scaled *= trace_functional(f);
  CHECK(dirichlet_product(f, E::one_plus(Q())) == scaled);
}

TEST_CASE("products agree with brute force away from exponent 0") {
  Sampler s(5);
  const auto K = Q2();
  for (int i = 0; i < 200; ++i) {
    const auto f = s.alg_elem<Rational>(K, 5), g = s.alg_elem<Rational>(K, 5);
    CHECK(cauchy_product(f, g) == brute(f, g, false));
    const auto fz = s.alg_elem<Rational>(K, 5, true), gz = s.alg_elem<Rational>(K, 5, true);
    CHECK(dirichlet_product(fz, gz) == brute(fz, gz, true));
  }
}

TEST_CASE("d0 rule") {
  // d0 = a0 * sum_{K*} b + b0 * sum_{K*} a + a0 b0
  const auto f = make({{0, 2}, {1, 3}, {5, -1}}), g = make({{0, 5}, {Rational(1, 2), 7}});
  const Rational expect = Rational(2) * 7 + Rational(5) * (3 - 1) + Rational(2) * 5;
  CHECK(dirichlet_product(f, g).coeff(q(0)) == expect);
  const auto r = constant_term_diagnostic(f, g);
  CHECK(r.convolution_rule == expect);
  CHECK(r.graded_rule == trace_functional(f) * trace_functional(g) - Rational(2) * 5);
  CHECK_FALSE(r.agree);
  // Both constant terms zero: the rules differ unless a trace vanishes.
  const auto z = make({{1, 1}});
  CHECK_FALSE(constant_term_diagnostic(z, z).agree);
  CHECK(constant_term_diagnostic(z, make({{1, 1}, {2, -1}})).agree);
}

TEST_CASE("trace functional") {
  CHECK(trace_functional(E::one_plus(Q())) == 1);
  CHECK(trace_functional(make({{0, 1}, {1, 2}, {2, -3}})) == 0);
}

TEST_CASE("normalization and the affine structure") {
  CHECK(normalize_z1(make({{0, 2}})) == make({{0, 1}}));
  CHECK(normalize_z1(make({{1, 3}, {2, -1}})) == make({{1, Rational(3, 2)}, {2, Rational(-1, 2)}}));
  CHECK_THROWS_CODE(normalize_z1(make({{1, 1}, {2, -1}})), Errc::TraceZero);
  const auto f = normalize_z1(make({{1, 3}, {2, -1}}));
  CHECK(normalize_z1(f) == f);
  CHECK(dot_plus(E::one_plus(Q()), f) == f);
  CHECK(odot(Rational(1), f) == f);
  CHECK(odot(Rational(2), make({{1, 1}})) == make({{1, 2}, {0, -1}}));
  CHECK_THROWS_CODE(dot_plus(make({{1, 2}}), f), Errc::NotNormalized);
  CHECK_THROWS_CODE(odot(Rational(3), make({{1, 2}})), Errc::NotNormalized);
  Sampler s(9);
  for (int i = 0; i < 100; ++i) {
    auto g = s.alg_elem<Rational>(Q2(), 4);
    if (sgn(trace_functional(g)) == 0) continue;
    g = normalize_z1(g);
    const auto h = s.alg_elem<Rational>(Q2(), 1);
    if (sgn(trace_functional(h)) != 0) CHECK(has_unit_trace(dot_plus(g, normalize_z1(h))));
    CHECK(has_unit_trace(odot(s.rational(), g)));
  }
}

TEST_CASE("no stored zeros and ordered iteration") {
  auto f = make({{1, 1}, {2, 1}});
  f.add_term(q(1), Rational(-1));
  CHECK(f.size() == 1);
  f *= Rational(0);
  CHECK(f.empty());
  const auto g = make({{3, 1}, {-1, 1}, {Rational(1, 2), 1}});
  std::vector<Rational> order;
  for (const auto& [a, c] : g.terms()) order.push_back(a.coords()[0]);
  CHECK(std::is_sorted(order.begin(), order.end()));
}

TEST_CASE("galois action on the algebra") {
  const auto K = Q2();
  const auto r2 = NFElem::generator(K);
  CHECK(galois_act(1, E::monomial(r2)) == E::monomial(-r2));
  Sampler s(13);
  for (int i = 0; i < 200; ++i) {
    const auto f = s.alg_elem<Rational>(K), g = s.alg_elem<Rational>(K);
    CHECK(galois_act(0, f) == f);
    CHECK(galois_act(1, cauchy_product(f, g)) == cauchy_product(galois_act(1, f), galois_act(1, g)));
    CHECK(galois_act(1, dirichlet_product(f, g)) == dirichlet_product(galois_act(1, f), galois_act(1, g)));
    CHECK(trace_functional(galois_act(1, f)) == trace_functional(f));
    CHECK(l2_norm_sq(galois_act(1, f)) == l2_norm_sq(f));
  }
  CHECK(galois_act(1, E::one_plus(K)) == E::one_plus(K));
  const auto cubic = NumberField::from_min_poly({Integer(1), Integer(-4), Integer(0), Integer(1)});
  CHECK_THROWS_CODE(galois_act(1, E::monomial(NFElem::generator(cubic))), Errc::NotGalois);
}

TEST_CASE("shift operators") {
  const auto f = make({{1, 2}, {3, 5}});
  CHECK(shift_cauchy(q(0), f) == make({{-1, 2}, {-3, 5}}));
  CHECK(shift_dirichlet(q(1), f) == make({{1, 2}, {Rational(1, 3), 5}}));
  CHECK_THROWS_CODE(shift_dirichlet(q(0), f), Errc::ZeroShift);
  // Exponent 0 is carried unchanged by the Dirichlet shift.
  CHECK(shift_dirichlet(q(2), make({{0, 7}})) == make({{0, 7}}));
  Sampler s(17);
  const auto K = Q2();
  for (int i = 0; i < 200; ++i) {
    const auto fg = s.alg_elem<GaussRational>(K), gg = s.alg_elem<GaussRational>(K);
    const auto alpha = s.nonzero_element(K);
    CHECK(l2_norm_sq(shift_cauchy(alpha, fg)) == l2_norm_sq(fg));
    CHECK(l2_norm_sq(shift_dirichlet(alpha, fg)) == l2_norm_sq(fg));
    const auto c = cauchy_product(fg, gg);
    for (const auto& [a, coef] : c.terms()) CHECK(inner_product(fg, shift_cauchy(a, conj(gg))) == coef);
  }
}

TEST_CASE("algebra laws on random exact samples") {
  Sampler s(19);
  const auto K = Q2();
  for (int i = 0; i < 300; ++i) {
    const auto f = s.alg_elem<Rational>(K), g = s.alg_elem<Rational>(K), h = s.alg_elem<Rational>(K);
    CHECK(cauchy_product(f, g) == cauchy_product(g, f));
    CHECK(dirichlet_product(f, g) == dirichlet_product(g, f));
    CHECK(cauchy_product(cauchy_product(f, g), h) == cauchy_product(f, cauchy_product(g, h)));
    CHECK(dirichlet_product(dirichlet_product(f, g), h) == dirichlet_product(f, dirichlet_product(g, h)));
    CHECK(trace_functional(cauchy_product(f, g)) == trace_functional(f) * trace_functional(g));
    CHECK(trace_functional(dirichlet_product(f, g)) == trace_functional(f) * trace_functional(g));
  }
}

TEST_CASE("dirichlet product does not distribute over the cauchy product") {
  const auto f = make({{1, 2}}), g = make({{1, 1}}), h = make({{2, 1}});
  CHECK_FALSE(dirichlet_product(f, cauchy_product(g, h)) ==
              cauchy_product(dirichlet_product(f, g), dirichlet_product(f, h)));
}

TEST_CASE("grading") {
  const auto f = make({{-1, 1}, {0, 2}, {3, 5}});
  const auto g = grade(f);
  CHECK(g.constant == 2);
  CHECK(g.component(SignVector{{-1}}) == make({{-1, 1}}));
  CHECK(g.component(SignVector{{1}}) == make({{3, 5}}));
  CHECK(reassemble(g) == f);
}

TEST_CASE("graded dirichlet law over Q(sqrt 2)") {
  Sampler s(23);
  const auto K = Q2();
  std::vector<SignVector> thetas{{{-1, -1}}, {{-1, 1}}, {{1, -1}}, {{1, 1}}};
  for (int i = 0; i < 100; ++i) {
    const auto f = s.alg_elem<Rational>(K, 5, true), g = s.alg_elem<Rational>(K, 5, true);
    const auto gf = grade(f), gg = grade(g), gfg = grade(dirichlet_product(f, g));
    for (const auto& theta : thetas) {
      E sum(K);
      for (const auto& t1 : thetas) sum += dirichlet_product(gf.component(t1), gg.component(t1 * theta));
      CHECK(sum == gfg.component(theta));
    }
    for (const auto& [theta, part] : gf.components) {
      for (const auto& [alpha, c] : part.terms()) CHECK(sign_of(alpha) == theta);
    }
  }
}

TEST_CASE("theta conjugation") {
  const std::vector<Complex64> z{{1.0, 2.0}, {-3.0, 0.5}};
  CHECK(theta_conjugate(SignVector{{1, 1}}, z) == z);
  CHECK(theta_conjugate(SignVector{{-1}}, {{1.0, 2.0}})[0] == Complex64(1.0, -2.0));
  CHECK_THROWS_CODE(theta_conjugate(SignVector{{1}}, z), Errc::DimensionMismatch);
  Sampler s(29);
  std::vector<SignVector> thetas{{{-1, -1}}, {{-1, 1}}, {{1, -1}}, {{1, 1}}};
  for (int i = 0; i < 100; ++i) {
    const std::vector<Complex64> w{{s.real(-5, 5), s.real(-5, 5)}, {s.real(-5, 5), s.real(-5, 5)}};
    const auto& a = thetas[static_cast<std::size_t>(s.integer(0, 3))];
    const auto& b = thetas[static_cast<std::size_t>(s.integer(0, 3))];
    CHECK(theta_conjugate(a, theta_conjugate(b, w)) == theta_conjugate(a * b, w));
  }
}

TEST_CASE("field mismatch and promotion") {
  const auto f = E::monomial(NFElem::generator(Q2()));
  const auto g = E::monomial(NFElem::generator(NumberField::real_quadratic(5)));
  CHECK_THROWS_CODE(cauchy_product(f, g), Errc::FieldMismatch);
  const auto z = promote<Complex64>(make({{1, Rational(1, 4)}}));
  CHECK(z.coeff(q(1)) == Complex64(0.25, 0.0));
  const auto gq = promote<GaussRational>(make({{1, Rational(1, 4)}}));
  CHECK(gq.coeff(q(1)) == GaussRational(Rational(1, 4)));
}

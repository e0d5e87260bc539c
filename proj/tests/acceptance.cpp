// One PASS/FAIL line per acceptance criterion; exit status 1 if any fail.

#include "nlfield/characters.hpp"
#include "nlfield/modular.hpp"
#include "nlfield/sampling.hpp"
#include "nlfield/verify.hpp"

#include "oracles.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#ifndef NLF_BINARY
#error "NLF_BINARY must point at the nlf executable"
#endif

using namespace nlf;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (!o.pass) ++failures;
  char head[64];
  std::snprintf(head, sizeof head, "%s %2d ", o.pass ? "PASS" : "FAIL", id);
  char tail[32];
  std::snprintf(tail, sizeof tail, " (%.2f s)", secs);
  std::cout << head << title << tail;
  if (!o.detail.empty()) std::cout << "  " << o.detail;
  std::cout << std::endl;
}

std::map<std::string, SuiteReport> cache;

const SuiteReport& suite(const std::string& name) {
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, run_suite(name, VerifyConfig{}).front()).first;
  return it->second;
}

// Property of a suite whose name starts with prefix; must hold with at least
// min_total instances.
Outcome property(const std::string& s, const std::string& prefix, std::size_t min_total) {
  for (const auto& p : suite(s).properties) {
    if (p.name.rfind(prefix, 0) != 0) continue;
    std::ostringstream d;
    d << s << ": " << p.name << " " << p.passed << "/" << p.total;
    return {p.ok() && p.total >= min_total, d.str()};
  }
  return {false, s + ": no property '" + prefix + "'"};
}

Outcome all_of(std::initializer_list<Outcome> parts) {
  Outcome o{true, {}};
  for (const auto& p : parts) {
    o.pass = o.pass && p.pass;
    if (!p.pass) o.detail += (o.detail.empty() ? "" : "; ") + p.detail;
  }
  return o;
}

Integer ipow(u64 p, unsigned e) {
  Integer r(1);
  for (unsigned i = 0; i < e; ++i) r *= static_cast<unsigned long>(p);
  return r;
}

}  // namespace

int main() {
  criterion(1, "Mobius inversion (1/n^2) * (mu(n)/n^2) = eps, N = 1000, under 5 s", [] {
    const auto t0 = Clock::now();
    const std::size_t N = 1000;
    const auto a = polylog_coeffs_exact(2, N);
    ArithSeries<Rational> b(N);
    for (std::size_t n = 1; n <= N; ++n) {
      b[n] = Rational(oracle::mobius(n), static_cast<unsigned long>(n * n));
      b[n].canonicalize();
    }
    const bool exact = dconv(a, b) == ArithSeries<Rational>::identity(N);
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    return Outcome{exact && secs < 5.0, exact ? "" : "product differs from eps"};
  });

  criterion(2, "L-multiplicativity, 100 rational pairs at N = 200", [] {
    return property("l-multiplicativity", "L₁L₂", 100);
  });

  criterion(3, "Hecke paper variant a_{m/p} + p^11 a_{mp}, p = 2,3,5, m <= 50", [] {
    const auto d = delta_expansion(250);
    const auto tau = oracle::delta_by_products(250);
    std::size_t ok = 0, total = 0;
    for (u64 p : {2, 3, 5}) {
      const auto t = hecke_tp(d, p, HeckeVariant::paper);
      for (std::size_t m = 1; m <= 50; ++m) {
        const Integer lower = m % p == 0 ? tau[m / p] : Integer(0);
        ok += t[m] == lower + ipow(p, 11) * tau[m * p];
        ++total;
      }
    }
    return Outcome{ok == total && total == 150, std::to_string(ok) + "/" + std::to_string(total)};
  });

  criterion(4, "Hecke classical variant T'_p Delta = tau(p) Delta, p = 2,3,5,7, N = 128", [] {
    const std::size_t N = 128;
    const auto d = delta_expansion(N);
    const auto tau = oracle::delta_by_products(N);
    std::size_t ok = 0, total = 0;
    for (u64 p : {2, 3, 5, 7}) {
      const auto t = hecke_tp(d, p, HeckeVariant::classical);
      for (std::size_t m = 1; m <= N / p; ++m) {
        ok += t[m] == tau[p] * tau[m];
        ++total;
      }
    }
    const auto hand = property("hecke-classical", "τ(2)=−24", 1);
    return Outcome{ok == total && tau[2] == -24 && hand.pass, std::to_string(ok) + "/" + std::to_string(total)};
  });

  criterion(5, "Deligne bound |tau(n)| <= d(n) n^{11/2}, n <= 2000, exact", [] {
    const std::size_t N = 2000;
    const auto d = delta_expansion(N);
    std::size_t ok = 0;
    for (std::size_t n = 1; n <= N; ++n) {
      const Integer dn(static_cast<unsigned long>(oracle::divisors(n).size()));
      ok += d[n] * d[n] <= dn * dn * ipow(n, 11);
    }
    const auto report = deligne_bound_report(d, 0.01);
    return Outcome{ok == N && report.pass && report.checked == N, std::to_string(ok) + "/" + std::to_string(N)};
  });

  criterion(6, "Character monomorphism on prime vectors, P = 100, moduli 4, 5, 8", [] {
    return all_of({property("char-monomorphism", "R_{χψ} = R_χ∘R_ψ", 1),
                   property("char-monomorphism", "R_{(χψ)′}", 1),
                   property("char-monomorphism", "distinct primitive", 1)});
  });

  criterion(7, "convisprod at N = 300 with a non-completely-multiplicative counterexample", [] {
    const std::size_t N = 300;
    using G = GaussRational;
    Sampler s(7);
    std::size_t ok = 0, total = 0;
    for (int rep = 0; rep < 3; ++rep) {
      const auto f = to_series(s.prime_vector<G>(N), N);
      for (u64 a : {1, 4, 5}) {
        for (u64 b : {1, 4, 5}) {
          for (const auto& chi : char_enumerate(a)) {
            for (const auto& psi : char_enumerate(b)) {
              const auto conv = dconv(character_series<G>(chi, N), character_series<G>(psi, N));
              ok += pointwise(conv, f) == dconv(R_chi(chi, f), R_chi(psi, f));
              ++total;
            }
          }
        }
      }
    }
    const auto dn = dconv(ArithSeries<G>::ones(N), ArithSeries<G>::ones(N));
    const auto chi = char_enumerate(4)[1];
    const bool counter = !(pointwise(dconv(character_series<G>(chi, N), ArithSeries<G>::ones(N)), dn) ==
                           dconv(R_chi(chi, dn), dn));
    return Outcome{ok == total && counter, std::to_string(ok) + "/" + std::to_string(total) +
                                               (counter ? ", d(n) counterexample found" : ", no counterexample")};
  });

  criterion(8, "zeta_p identity, chi mod 4 induced to mod 8, N = 200", [] {
    const std::size_t N = 200;
    const auto chi4 = char_enumerate(4)[1];
    const auto chi8 = induce(chi4, 8);
    auto rebuilt = character_series<Rational>(chi8, N);
    for (u64 p : induction_primes(chi4, 8)) rebuilt = dconv(rebuilt, twisted_local_factor<Rational>(chi4, p, N));
    const bool same = rebuilt == character_series<Rational>(chi4, N);
    const auto general = property("zeta-p", "χ′ = χ_M", 1);
    return Outcome{same && general.pass, same ? general.detail : "series differ"};
  });

  criterion(9, "coprime product group laws on 100 random units, N = 200", [] {
    const std::size_t N = 200;
    using S = ArithSeries<Rational>;
    Sampler s(9);
    std::size_t ok = 0;
    for (int i = 0; i < 100; ++i) {
      const auto f = s.unit_series<Rational>(N), g = s.unit_series<Rational>(N), h = s.unit_series<Rational>(N);
      const auto fg = rp_conv(f, g);
      ok += fg == rp_conv(g, f) && rp_conv(fg, h) == rp_conv(f, rp_conv(g, h)) &&
            rp_conv(f, rp_inv(f)) == S::identity(N);
    }
    return Outcome{ok == 100, std::to_string(ok) + "/100"};
  });

  criterion(10, "boxplus law for sums of characters mod 4 and 5 at N = 200; one-dimensional composition law",
            [] {
              return all_of({property("boxplus", "R_{ρ⊕σ} = R_ρ ⊞ R_σ", 1),
                             property("boxplus", "R_{ρ⊗σ} ≡ R_ρ∘R_σ", 1)});
            });

  criterion(11, "graded Dirichlet law over Q(sqrt 2), 100 pairs; constant-term diagnostic disagrees", [] {
    return all_of({property("graded", "(F⊗G)_θ", 100), property("graded", "constant-term rules disagree", 1)});
  });

  criterion(12, "flow properties at 1e-12 / 1e-10", [] {
    return all_of({property("flows", "Φ_r preserves ℓ²", 1), property("flows", "Ψ_r preserves ℓ²", 1),
                   property("flows", "Φ_r(f⊕g)", 1), property("flows", "Ψ_r(f⊗g)", 1),
                   property("flows", "Ψ_{1/log 2} fixes", 1), property("flows", "T∘Ψ_r∘T", 1)});
  });

  criterion(13, "character naturality at 1e-12; torus orthonormality within 1e-6 on 4096 points", [] {
    return all_of({property("character-field", "ψ_L(α·i(x))", 1), property("orthonormality", "|⟨ψ_α,ψ_β⟩ − δ| ≤ 1e-6, Q", 1),
                   property("orthonormality", "|⟨ψ_α,ψ_β⟩ − δ| ≤ 1e-6, Q(√2)", 1)});
  });

  criterion(14, "field-algebra laws, 500 exact instances each; non-distributivity witness", [] {
    return all_of({property("field-algebra", "f⊕g = g⊕f", 500), property("field-algebra", "(f⊕g)⊕h", 500),
                   property("field-algebra", "f⊗g = g⊗f", 500), property("field-algebra", "(f⊗g)⊗h", 500),
                   property("field-algebra", "T(f⊕g)", 500), property("field-algebra", "T(f⊗g)", 500),
                   property("field-algebra", "σ(f⊕g)", 500), property("field-algebra", "σ(f⊗g)", 500),
                   property("field-algebra", "⊗ does not distribute", 1)});
  });

  criterion(15, "nlf verify all completes under 2 minutes", [] {
    const auto t0 = Clock::now();
    const std::string cmd = std::string(NLF_BINARY) + " verify all > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool exited0 = WIFEXITED(status) && WEXITSTATUS(status) == 0;
    char d[64];
    std::snprintf(d, sizeof d, "exit %d after %.1f s", WIFEXITED(status) ? WEXITSTATUS(status) : -1, secs);
    return Outcome{exited0 && secs < 120.0, d};
  });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}

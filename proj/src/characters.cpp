#include "nlfield/characters.hpp"

#include <numeric>
#include <sstream>

namespace nlf {

RootOfUnity RootOfUnity::make(u64 k, u64 order) {
  if (order == 0) fail(Errc::DomainUnsupported, "root of unity of order 0");
  k %= order;
  const u64 g = std::gcd(k, order);
  return k == 0 ? RootOfUnity{1, 0} : RootOfUnity{order / g, k / g};
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
  const u64 L = lcm(a.order, b.order);
  return RootOfUnity::make(a.k * (L / a.order) + b.k * (L / b.order), L);
}

namespace {

bool is_unit(u64 r, u64 N) { return std::gcd(r, N) == 1; }

// Least d | N with chi(a) = 1 for every unit a = 1 mod d.
u64 compute_conductor(u64 N, const std::vector<DirichletCharacter::Value>& values) {
  if (N == 1) return 1;
  for (u64 d : divisors(N)) {
    bool factors = true;
    for (u64 a = 1; a < N && factors; a += d) {
      if (is_unit(a, N) && (!values[a] || values[a]->k != 0)) factors = false;
    }
    if (factors) return d;
  }
  return N;
}

u64 smallest_primitive_root(u64 p, unsigned e) {
  u64 pe = 1;
  for (unsigned i = 0; i < e; ++i) pe *= p;
  const u64 phi = euler_phi(pe);
  const auto fac = factorize(phi);
  for (u64 g = 2; g < pe; ++g) {
    if (!is_unit(g, pe)) continue;
    bool primitive = true;
    for (const auto& q : fac) {
      if (powmod(g, phi / q.p, pe) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  return 1;
}

// x = g mod m1, x = 1 mod m2 (coprime m1, m2).
u64 crt_lift(u64 g, u64 m1, u64 m2) {
  for (u64 x = g; x < m1 * m2; x += m1) {
    if (x % m2 == 1 % m2) return x;
  }
  return g;
}

}  // namespace

DirichletCharacter::DirichletCharacter(u64 modulus, std::vector<Value> values)
    : modulus_(modulus), values_(std::move(values)) {
  if (modulus_ == 0) fail(Errc::DomainUnsupported, "modulus must be >= 1");
  if (values_.size() != modulus_) fail(Errc::DimensionMismatch, "character table must have one entry per residue");
  conductor_ = compute_conductor(modulus_, values_);
}

u64 DirichletCharacter::order() const {
  u64 m = 1;
  for (const auto& v : values_) {
    if (v) m = lcm(m, v->order);
  }
  return m;
}

void DirichletCharacter::validate() const {
  const u64 N = modulus_;
  const auto& one = values_[1 % N];
  if (!one || one->k != 0) fail(Errc::DomainUnsupported, "chi(1) must be 1");
  for (u64 r = 0; r < N; ++r) {
    const bool unit = N == 1 || is_unit(r, N);
    if (unit != values_[r].has_value()) fail(Errc::DomainUnsupported, "character must vanish exactly on non-units");
  }
  for (u64 a = 0; a < N; ++a) {
    if (!values_[a]) continue;
    if (euler_phi(N) % values_[a]->order != 0) fail(Errc::DomainUnsupported, "value order must divide phi(N)");
    for (u64 b = a; b < N; ++b) {
      if (!values_[b]) continue;
      const auto& ab = values_[(a * b) % N];
      if (!ab || !(*ab == *values_[a] * *values_[b])) fail(Errc::DomainUnsupported, "character is not multiplicative");
    }
  }
}

std::string DirichletCharacter::to_string() const {
  std::ostringstream os;
  os << "chi mod " << modulus_ << " (conductor " << conductor_ << (primitive() ? ", primitive" : "") << ") [";
  bool first = true;
  for (u64 r = 0; r < modulus_; ++r) {
    if (!values_[r]) continue;
    os << (first ? "" : ", ") << r << ":" << values_[r]->k << "/" << values_[r]->order;
    first = false;
  }
  os << "]";
  return os.str();
}

std::vector<DirichletCharacter> char_enumerate(u64 N, u64 cap) {
  if (N == 0) fail(Errc::DomainUnsupported, "modulus must be >= 1");
  if (N > cap) fail(Errc::CapExceeded, "modulus " + std::to_string(N) + " exceeds cap " + std::to_string(cap));
  if (N == 1) return {DirichletCharacter::trivial()};

  struct Gen {
    u64 g, order;
  };
  std::vector<Gen> gens;
  for (const auto& [p, e] : factorize(N)) {
    u64 pe = 1;
    for (unsigned i = 0; i < e; ++i) pe *= p;
    const u64 rest = N / pe;
    if (p == 2) {
      if (e == 2) gens.push_back({crt_lift(3, pe, rest), 2});
      if (e >= 3) {
        gens.push_back({crt_lift(pe - 1, pe, rest), 2});
        gens.push_back({crt_lift(5, pe, rest), pe / 4});
      }
    } else {
      gens.push_back({crt_lift(smallest_primitive_root(p, e), pe, rest), euler_phi(pe)});
    }
  }

  u64 L = 1;
  for (const auto& g : gens) L = lcm(L, g.order);
  // Discrete logs of every unit with respect to the generator set.
  std::vector<std::vector<u64>> logs(N);
  std::vector<u64> exps(gens.size(), 0);
  while (true) {
    u64 x = 1 % N;
    for (std::size_t i = 0; i < gens.size(); ++i) x = x * powmod(gens[i].g, exps[i], N) % N;
    logs[x] = exps;
    std::size_t i = gens.size();
    while (i-- > 0) {
      if (++exps[i] < gens[i].order) break;
      exps[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }

  std::vector<DirichletCharacter> out;
  std::vector<u64> j(gens.size(), 0);
  while (true) {
    std::vector<DirichletCharacter::Value> values(N);
    for (u64 r = 0; r < N; ++r) {
      if (!is_unit(r, N)) continue;
      u64 k = 0;
      for (std::size_t i = 0; i < gens.size(); ++i) k += j[i] * logs[r][i] * (L / gens[i].order);
      values[r] = RootOfUnity::make(k, L);
    }
    out.emplace_back(N, std::move(values));
    std::size_t i = gens.size();
    while (i-- > 0) {
      if (++j[i] < gens[i].order) break;
      j[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

DirichletCharacter induce(const DirichletCharacter& chi, u64 M) {
  if (M == 0 || M % chi.modulus() != 0) {
    fail(Errc::NotMultiple, std::to_string(M) + " is not a multiple of " + std::to_string(chi.modulus()));
  }
  std::vector<DirichletCharacter::Value> values(M);
  for (u64 r = 0; r < M; ++r) {
    if (M == 1 || is_unit(r, M)) values[r] = chi.value(r);
  }
  return DirichletCharacter(M, std::move(values));
}

DirichletCharacter primitive_of(const DirichletCharacter& chi) {
  const u64 f = chi.conductor(), N = chi.modulus();
  std::vector<DirichletCharacter::Value> values(f);
  for (u64 r = 0; r < f; ++r) {
    if (f != 1 && !is_unit(r, f)) continue;
    u64 lift = r;
    while (!is_unit(lift % N, N) && N != 1) lift += f;
    values[r] = chi.value(lift);
  }
  return DirichletCharacter(f, std::move(values));
}

DirichletCharacter product(const DirichletCharacter& chi, const DirichletCharacter& psi) {
  const u64 L = lcm(chi.modulus(), psi.modulus());
  const auto a = induce(chi, L), b = induce(psi, L);
  std::vector<DirichletCharacter::Value> values(L);
  for (u64 r = 0; r < L; ++r) {
    if (a.value(r) && b.value(r)) values[r] = *a.value(r) * *b.value(r);
  }
  return DirichletCharacter(L, std::move(values));
}

std::vector<u64> induction_primes(const DirichletCharacter& chi, u64 M) {
  if (M == 0 || M % chi.modulus() != 0) fail(Errc::NotMultiple, "target modulus is not a multiple");
  std::vector<u64> out;
  for (const auto& pe : factorize(M)) {
    if (chi.conductor() % pe.p != 0) out.push_back(pe.p);
  }
  return out;
}

std::set<u64> bad_primes(const DirichletCharacter& chi) {
  std::set<u64> out;
  for (const auto& pe : factorize(chi.modulus())) out.insert(pe.p);
  return out;
}

}  // namespace nlf

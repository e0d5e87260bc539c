#pragma once

// Elementary integer number theory at desk scale (trial division).

#include <cstdint>
#include <utility>
#include <vector>

namespace nlf {

using u64 = std::uint64_t;

struct PrimePower {
  u64 p;
  unsigned e;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

bool is_prime(u64 n);
std::vector<PrimePower> factorize(u64 n);
std::vector<u64> primes_up_to(u64 bound);
std::vector<u64> divisors(u64 n);  // ascending
int mobius(u64 n);
unsigned omega(u64 n);  // number of distinct prime factors
u64 divisor_count(u64 n);
u64 euler_phi(u64 n);
u64 lcm(u64 a, u64 b);
u64 powmod(u64 base, u64 exp, u64 mod);
unsigned valuation(u64 n, u64 p);

}  // namespace nlf

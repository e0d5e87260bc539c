#include "nlfield/galois_reps.hpp"

namespace nlf {

GaloisRep::GaloisRep(std::vector<DirichletCharacter> summands) : summands_(std::move(summands)) {
  if (summands_.empty()) fail(Errc::DimensionMismatch, "a representation needs at least one summand");
}

GaloisRep direct_sum(const GaloisRep& rho, const GaloisRep& sigma) {
  auto s = rho.summands();
  s.insert(s.end(), sigma.summands().begin(), sigma.summands().end());
  return GaloisRep(std::move(s));
}

GaloisRep tensor(const GaloisRep& rho, const GaloisRep& sigma) {
  std::vector<DirichletCharacter> s;
  for (const auto& chi : rho.summands()) {
    for (const auto& psi : sigma.summands()) s.push_back(primitive_of(product(chi, psi)));
  }
  return GaloisRep(std::move(s));
}

std::set<u64> bad_primes(const GaloisRep& rho) {
  std::set<u64> out;
  for (const auto& chi : rho.summands()) {
    auto b = bad_primes(chi);
    out.insert(b.begin(), b.end());
  }
  return out;
}

}  // namespace nlf

#include "nlfield/field_algebra.hpp"

namespace nlf {

std::vector<Complex64> theta_conjugate(const SignVector& theta, const std::vector<Complex64>& point) {
  if (theta.size() != point.size()) fail(Errc::DimensionMismatch, "sign vector and point differ in length");
  std::vector<Complex64> out(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    out[i] = {point[i].real(), theta.signs[i] > 0 ? point[i].imag() : -point[i].imag()};
  }
  return out;
}

// Explicit instantiations for the three coefficient domains.
template class AlgElem<Rational>;
template class AlgElem<GaussRational>;
template class AlgElem<Complex64>;

}  // namespace nlf

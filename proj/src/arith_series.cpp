#include "nlfield/arith_series.hpp"

namespace nlf {

namespace detail {

std::vector<std::vector<std::size_t>> proper_divisor_table(std::size_t N) {
  std::vector<std::vector<std::size_t>> table(N + 1);
  for (std::size_t d = 1; d <= N / 2; ++d) {
    for (std::size_t m = 2 * d; m <= N; m += d) table[m].push_back(d);
  }
  return table;
}

}  // namespace detail

ArithSeries<Rational> polylog_coeffs_exact(unsigned s, std::size_t N) {
  ArithSeries<Rational> out(N);
  for (std::size_t n = 1; n <= N; ++n) {
    Integer den(1);
    mpz_ui_pow_ui(den.get_mpz_t(), n, s);
    out[n] = Rational(Integer(1), den);
  }
  return out;
}

std::variant<ArithSeries<Rational>, ArithSeries<Complex64>> polylog_coeffs(double s0, std::size_t N) {
  if (s0 < 1.0) fail(Errc::DomainUnsupported, "polylog order must be >= 1");
  if (s0 == std::floor(s0) && s0 < 4096.0) return polylog_coeffs_exact(static_cast<unsigned>(s0), N);
  ArithSeries<Complex64> out(N);
  for (std::size_t n = 1; n <= N; ++n) out[n] = {std::pow(static_cast<double>(n), -s0), 0.0};
  return out;
}

std::string_view to_string(Multiplicativity m) {
  switch (m) {
    case Multiplicativity::completely_multiplicative: return "completely_multiplicative";
    case Multiplicativity::multiplicative: return "multiplicative";
    case Multiplicativity::neither: return "neither";
  }
  return "neither";
}

}  // namespace nlf

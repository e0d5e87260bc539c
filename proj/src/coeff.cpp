#include "nlfield/coeff.hpp"

#include "nlfield/error.hpp"

#include <cctype>

namespace nlf {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::UnresolvableSign: return "UnresolvableSign";
    case Errc::NotGalois: return "NotGalois";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::TraceZero: return "TraceZero";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::ZeroShift: return "ZeroShift";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::TruncationMismatch: return "TruncationMismatch";
    case Errc::NonUnit: return "NonUnit";
    case Errc::NonIntegerSupport: return "NonIntegerSupport";
    case Errc::BoundMismatch: return "BoundMismatch";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::NotMultiple: return "NotMultiple";
    case Errc::NotPrime: return "NotPrime";
    case Errc::TruncationTooSmall: return "TruncationTooSmall";
    case Errc::NotLatticeCharacter: return "NotLatticeCharacter";
    case Errc::QuadratureFailure: return "QuadratureFailure";
    case Errc::InvalidField: return "InvalidField";
    case Errc::DomainUnsupported: return "DomainUnsupported";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) fail(Errc::ParseError, "empty rational");
  if (s.front() == '+') s.erase(s.begin());
  auto valid = [](const std::string& part) {
    if (part.empty()) return false;
    std::size_t i = part[0] == '-' ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    }
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num) || !valid(den)) fail(Errc::ParseError, "malformed rational '" + std::string(text) + "'");
  Rational q{Integer(num), Integer(den)};
  if (sgn(q.get_den()) == 0) fail(Errc::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  Rational n = o.norm_sq();
  if (sgn(n) == 0) fail(Errc::DivisionByZero, "Gaussian rational division by zero");
  *this *= o.conj();
  re /= n;
  im /= n;
  return *this;
}

std::string to_string(const GaussRational& z) {
  if (sgn(z.im) == 0) return z.re.get_str();
  return z.re.get_str() + (sgn(z.im) < 0 ? "-" : "+") + Rational(abs(z.im)).get_str() + "i";
}

}  // namespace nlf

#include "nlfield/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <sstream>

namespace nlf::io {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool looks_floating(const std::string& s) {
  return s.find_first_of(".eE") != std::string::npos || s.find("inf") != std::string::npos ||
         s.find("nan") != std::string::npos;
}

double parse_double(const std::string& s) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) fail(Errc::ParseError, "malformed number '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    fail(Errc::ParseError, "malformed number '" + s + "'");
  }
}

std::string json_scalar_string(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number_float()) return double_to_string(v.get<double>());
  fail(Errc::ParseError, "expected a number or numeric string");
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
  return out;
}

template <class C>
AlgElem<C> build_algelem(const FieldPtr& field, const json& terms) {
  AlgElem<C> f(field);
  for (const auto& row : terms) {
    if (!row.is_array() || row.size() < 2) fail(Errc::ParseError, "term must be [exponent, re, im?]");
    NFElem alpha = element_from_json(field, row[0]);
    const std::string re = json_scalar_string(row[1]);
    const std::string im = row.size() > 2 ? json_scalar_string(row[2]) : "0";
    if constexpr (std::is_same_v<C, Rational>) {
      if (sgn(parse_rational(im)) != 0) fail(Errc::ParseError, "imaginary part in a rational element");
      f.add_term(alpha, parse_rational(re));
    } else if constexpr (std::is_same_v<C, GaussRational>) {
      f.add_term(alpha, GaussRational(parse_rational(re), parse_rational(im)));
    } else {
      auto part = [](const std::string& s) { return looks_floating(s) ? parse_double(s) : parse_rational(s).get_d(); };
      f.add_term(alpha, Complex64(part(re), part(im)));
    }
  }
  return f;
}

}  // namespace

std::string double_to_string(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json field_to_json(const NumberField& field) {
  json poly = json::array();
  for (const auto& c : field.min_poly()) {
    if (c.fits_slong_p()) {
      poly.push_back(c.get_si());
    } else {
      poly.push_back(c.get_str());
    }
  }
  return json{{"min_poly", poly}};
}

FieldPtr field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("min_poly")) fail(Errc::ParseError, "field needs a min_poly array");
  std::vector<Integer> coeffs;
  for (const auto& c : j.at("min_poly")) {
    if (c.is_number_integer()) {
      coeffs.emplace_back(static_cast<long>(c.get<long long>()));
    } else if (c.is_string()) {
      const Rational q = parse_rational(c.get<std::string>());
      if (q.get_den() != 1) fail(Errc::ParseError, "min_poly entries must be integers");
      coeffs.push_back(q.get_num());
    } else {
      fail(Errc::ParseError, "min_poly entries must be integers");
    }
  }
  if (coeffs.size() == 2 && coeffs[0] == 0 && coeffs[1] == 1) return NumberField::rationals();
  return NumberField::from_min_poly(coeffs);
}

json element_to_json(const NFElem& x) {
  json out = json::array();
  for (const auto& c : x.coords()) out.push_back(c.get_str());
  return out;
}

NFElem element_from_json(const FieldPtr& field, const json& j) {
  std::vector<Rational> coords;
  if (j.is_array()) {
    for (const auto& c : j) coords.push_back(parse_rational(json_scalar_string(c)));
  } else {
    coords.push_back(parse_rational(json_scalar_string(j)));
  }
  // A bare rational is accepted for any field.
  if (coords.size() == 1 && field->degree() > 1) coords.resize(field->degree(), Rational(0));
  return NFElem(field, std::move(coords));
}

json coeff_pair(const Rational& c) { return json::array({c.get_str(), "0"}); }
json coeff_pair(const GaussRational& c) { return json::array({c.re.get_str(), c.im.get_str()}); }
json coeff_pair(const Complex64& c) { return json::array({double_to_string(c.real()), double_to_string(c.imag())}); }

json algelem_to_json(const AnyAlgElem& f) {
  return std::visit([](const auto& x) { return algelem_to_json(x); }, f);
}

AnyAlgElem algelem_from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms")) fail(Errc::ParseError, "element needs 'terms'");
  const FieldPtr field = j.contains("field") ? field_from_json(j.at("field")) : NumberField::rationals();
  std::string domain = j.value("domain", "");
  if (domain.empty()) {
    domain = "rational";
    for (const auto& row : j.at("terms")) {
      for (std::size_t k = 1; k < row.size(); ++k) {
        const std::string s = json_scalar_string(row[k]);
        if (looks_floating(s)) {
          domain = "complex64";
        } else if (k == 2 && domain == "rational" && sgn(parse_rational(s)) != 0) {
          domain = "gaussian";
        }
      }
    }
  }
  if (domain == "rational") return build_algelem<Rational>(field, j.at("terms"));
  if (domain == "gaussian") return build_algelem<GaussRational>(field, j.at("terms"));
  if (domain == "complex64") return build_algelem<Complex64>(field, j.at("terms"));
  fail(Errc::ParseError, "unknown coefficient domain '" + domain + "'");
}

std::string series_to_csv(const AnySeries& f) {
  return std::visit([](const auto& x) { return series_to_csv(x); }, f);
}

AnySeries series_from_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto cells = split_csv(line);
    if (cells.empty() || !(std::isdigit(static_cast<unsigned char>(cells[0][0])))) continue;  // header
    if (cells.size() < 2 || cells.size() > 3) fail(Errc::ParseError, "series rows are n,value or n,re,im");
    rows.push_back(std::move(cells));
  }
  if (rows.empty()) fail(Errc::ParseError, "empty series");

  bool floating = false, gaussian = false;
  for (const auto& r : rows) {
    for (std::size_t k = 1; k < r.size(); ++k) floating = floating || looks_floating(r[k]);
    if (r.size() == 3 && !looks_floating(r[2]) && sgn(parse_rational(r[2])) != 0) gaussian = true;
  }
  std::size_t N = 0;
  for (const auto& r : rows) N = std::max<std::size_t>(N, std::stoull(r[0]));
  if (N == 0) fail(Errc::ParseError, "series indices start at 1");

  auto fill = [&](auto series) {
    using S = decltype(series);
    using C = typename S::Coeff;
    for (const auto& r : rows) {
      const std::size_t n = std::stoull(r[0]);
      if (n == 0) fail(Errc::ParseError, "series indices start at 1");
      const std::string im = r.size() == 3 ? r[2] : "0";
      if constexpr (std::is_same_v<C, Rational>) {
        series[n] = parse_rational(r[1]);
      } else if constexpr (std::is_same_v<C, GaussRational>) {
        series[n] = GaussRational(parse_rational(r[1]), parse_rational(im));
      } else {
        auto part = [](const std::string& s) { return looks_floating(s) ? parse_double(s) : parse_rational(s).get_d(); };
        series[n] = Complex64(part(r[1]), part(im));
      }
    }
    return AnySeries(std::move(series));
  };
  if (floating) return fill(ArithSeries<Complex64>(N));
  if (gaussian) return fill(ArithSeries<GaussRational>(N));
  return fill(ArithSeries<Rational>(N));
}

json character_to_json(const DirichletCharacter& chi) {
  json values = json::array();
  for (u64 r = 0; r < chi.modulus(); ++r) {
    const auto& v = chi.values()[r];
    if (v) values.push_back(json::array({r, v->order, v->k}));
  }
  return json{{"modulus", chi.modulus()},
              {"conductor", chi.conductor()},
              {"primitive", chi.primitive()},
              {"values", values}};
}

DirichletCharacter character_from_json(const json& j) {
  if (!j.is_object() || !j.contains("modulus") || !j.contains("values")) {
    fail(Errc::ParseError, "character needs modulus and values");
  }
  const u64 N = j.at("modulus").get<u64>();
  if (N == 0) fail(Errc::ParseError, "modulus must be >= 1");
  std::vector<DirichletCharacter::Value> values(N);
  for (const auto& row : j.at("values")) {
    if (!row.is_array() || row.size() != 3) fail(Errc::ParseError, "character values are [r, m, k]");
    const u64 r = row[0].get<u64>() % N;
    values[r] = RootOfUnity::make(row[2].get<u64>(), row[1].get<u64>());
  }
  DirichletCharacter chi(N, std::move(values));
  chi.validate();
  return chi;
}

json rep_to_json(const GaloisRep& rho) {
  json s = json::array();
  for (const auto& chi : rho.summands()) s.push_back(character_to_json(chi));
  return json{{"summands", s}};
}

GaloisRep rep_from_json(const json& j) {
  if (!j.is_object() || !j.contains("summands")) fail(Errc::ParseError, "representation needs summands");
  std::vector<DirichletCharacter> s;
  for (const auto& c : j.at("summands")) s.push_back(character_from_json(c));
  return GaloisRep(std::move(s));
}

std::string cusp_to_csv(const CuspFormCoeffs& f) {
  std::string out;
  for (std::size_t n = 1; n <= f.N(); ++n) out += std::to_string(n) + "," + f[n].get_str() + "\n";
  return out;
}

CuspFormCoeffs cusp_from_csv(std::string_view text, unsigned weight) {
  auto any = series_from_csv(text);
  const auto* q = std::get_if<ArithSeries<Rational>>(&any);
  if (!q) fail(Errc::ParseError, "cusp form coefficients must be integers");
  CuspFormCoeffs f{weight, {}};
  for (std::size_t n = 1; n <= q->N(); ++n) {
    if ((*q)[n].get_den() != 1) fail(Errc::ParseError, "cusp form coefficients must be integers");
    f.a.push_back((*q)[n].get_num());
  }
  return f;
}

}  // namespace nlf::io

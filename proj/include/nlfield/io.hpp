#pragma once

// JSON and CSV encodings used by the command-line tool.
//
//   number field   {"min_poly": [c0, c1, ..., 1]}
//   element        ["p/q", ...] in power-basis order
//   AlgElem        {"field": ..., "domain": ..., "terms": [[<element>, "re", "im"], ...]}
//   character      {"modulus": N, "values": [[r, m, k], ...]}  (units only)
//   representation {"summands": [<character>, ...]}
//   series CSV     n,p/q  |  n,re,im
//   cusp form CSV  n,a_n

#include "nlfield/arith_series.hpp"
#include "nlfield/characters.hpp"
#include "nlfield/field_algebra.hpp"
#include "nlfield/galois_reps.hpp"
#include "nlfield/modular.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <variant>

namespace nlf::io {

using json = nlohmann::ordered_json;

using AnyAlgElem = std::variant<AlgElem<Rational>, AlgElem<GaussRational>, AlgElem<Complex64>>;
using AnySeries = std::variant<ArithSeries<Rational>, ArithSeries<GaussRational>, ArithSeries<Complex64>>;

json field_to_json(const NumberField& field);
FieldPtr field_from_json(const json& j);

json element_to_json(const NFElem& x);
NFElem element_from_json(const FieldPtr& field, const json& j);

std::string double_to_string(double x);

json coeff_pair(const Rational& c);
json coeff_pair(const GaussRational& c);
json coeff_pair(const Complex64& c);

template <class C>
json algelem_to_json(const AlgElem<C>& f) {
  json terms = json::array();
  for (const auto& [alpha, c] : f.terms()) {
    json row = json::array({element_to_json(alpha)});
    for (auto& part : coeff_pair(c)) row.push_back(part);
    terms.push_back(std::move(row));
  }
  return json{{"field", field_to_json(*f.field())}, {"domain", coeff_traits<C>::name}, {"terms", terms}};
}

json algelem_to_json(const AnyAlgElem& f);
AnyAlgElem algelem_from_json(const json& j);

template <class C>
std::string series_to_csv(const ArithSeries<C>& f) {
  std::string out;
  for (std::size_t n = 1; n <= f.N(); ++n) {
    out += std::to_string(n);
    if constexpr (std::is_same_v<C, Rational>) {
      out += "," + f[n].get_str();
    } else if constexpr (std::is_same_v<C, GaussRational>) {
      out += "," + f[n].re.get_str() + "," + f[n].im.get_str();
    } else {
      out += "," + double_to_string(f[n].real()) + "," + double_to_string(f[n].imag());
    }
    out += "\n";
  }
  return out;
}

std::string series_to_csv(const AnySeries& f);
AnySeries series_from_csv(std::string_view text);

json character_to_json(const DirichletCharacter& chi);
DirichletCharacter character_from_json(const json& j);

json rep_to_json(const GaloisRep& rho);
GaloisRep rep_from_json(const json& j);

std::string cusp_to_csv(const CuspFormCoeffs& f);
CuspFormCoeffs cusp_from_csv(std::string_view text, unsigned weight);

}  // namespace nlf::io

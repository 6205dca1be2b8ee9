#pragma once

// JSON renderings of polynomials and symmetric functions. Exact integers
// are emitted as JSON numbers while they fit 64 bits and as decimal strings
// beyond that; the parsers accept both.

#include <string>

#include "json.hpp"

#include "chromatic/csf.hpp"
#include "chromatic/intpoly.hpp"

namespace chromatic {

// ordered_json keeps keys in insertion order, matching the documented
// schemas byte for byte.
using Json = nlohmann::ordered_json;

inline Json checked_to_json(CheckedInt v) {
  if (v.fits_int64()) return v.to_int64();
  return v.to_string();
}

inline CheckedInt checked_from_json(const Json& j) {
  if (j.is_number_integer()) return CheckedInt(j.get<long long>());
  if (j.is_string()) return CheckedInt::parse(j.get<std::string>());
  throw std::invalid_argument("expected integer or decimal string");
}

// {"coeffs":[a_0,...,a_d]}
inline Json poly_to_json(const IntPoly& p) {
  Json coeffs = Json::array();
  if (p.is_zero()) {
    coeffs.push_back(0);
  } else {
    for (const CheckedInt& c : p.coeffs()) coeffs.push_back(checked_to_json(c));
  }
  Json out;
  out["coeffs"] = coeffs;
  return out;
}

inline IntPoly poly_from_json(const Json& j) {
  std::vector<CheckedInt> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(checked_from_json(c));
  return IntPoly(std::move(coeffs));
}

// {"n":3,"terms":[{"lambda":[1,1,1],"coef":1},...]}, terms ordered
// lexicographically by lambda.
inline Json psym_to_json(const PSymFunc& x) {
  Json terms = Json::array();
  for (const auto& [lambda, coefficient] : x.terms()) {
    Json term;
    term["lambda"] = lambda.parts();
    term["coef"] = checked_to_json(coefficient);
    terms.push_back(term);
  }
  Json out;
  out["n"] = x.degree();
  out["terms"] = terms;
  return out;
}

inline PSymFunc psym_from_json(const Json& j) {
  PSymFunc x(j.at("n").get<int>());
  for (const auto& term : j.at("terms"))
    x.add_term(Partition(term.at("lambda").get<std::vector<int>>()),
               checked_from_json(term.at("coef")));
  return x;
}

}  // namespace chromatic

#pragma once

// JSON encodings. BigInt is a decimal string; QPoly an array of BigInt by
// ascending power of q; XQPoly an array of QPoly by ascending power of x;
// NormalForm an array of {k, l, coeff} sorted by (k, l); FockVector an object
// {cap, amplitudes: [{s, amp}]} sorted by s.

#include "qspivey/bigint.hpp"
#include "qspivey/fock.hpp"
#include "qspivey/normal_form.hpp"
#include "qspivey/poly.hpp"

#include <json.hpp>

#include <vector>

namespace nlohmann {

template <>
struct adl_serializer<mpz_class> {
  static void to_json(json& j, const mpz_class& v) { j = qspivey::to_decimal(v); }
  static void from_json(const json& j, mpz_class& v) { v = qspivey::parse_decimal(j.get<std::string>()); }
};

}  // namespace nlohmann

namespace qspivey {

using Json = nlohmann::json;

template <class R>
void to_json(Json& j, const Poly<R>& p) {
  j = Json::array();
  for (const auto& c : p.coefficients()) j.push_back(Json(c));
}

template <class R>
void from_json(const Json& j, Poly<R>& p) {
  if (!j.is_array()) throw std::invalid_argument("polynomial encoding must be an array");
  p = Poly<R>(j.get<std::vector<R>>());
}

void to_json(Json& j, const NormalForm& nf);
void from_json(const Json& j, NormalForm& nf);
void to_json(Json& j, const FockVector& v);
void from_json(const Json& j, FockVector& v);

}  // namespace qspivey

#include "qspivey/codec.hpp"

#include <stdexcept>

namespace qspivey {

void to_json(Json& j, const NormalForm& nf) {
  j = Json::array();
  for (const auto& [m, c] : nf.terms()) j.push_back({{"k", m.creators}, {"l", m.annihilators}, {"coeff", c}});
}

void from_json(const Json& j, NormalForm& nf) {
  if (!j.is_array()) throw std::invalid_argument("normal form encoding must be an array");
  NormalForm out;
  for (const auto& t : j) {
    out.accumulate({t.at("k").get<unsigned long>(), t.at("l").get<unsigned long>()}, t.at("coeff").get<QPoly>());
  }
  nf = std::move(out);
}

void to_json(Json& j, const FockVector& v) {
  Json amps = Json::array();
  for (const auto& [s, amp] : v.amplitudes()) amps.push_back({{"s", s}, {"amp", amp}});
  j = {{"cap", v.cap()}, {"amplitudes", std::move(amps)}};
}

void from_json(const Json& j, FockVector& v) {
  FockVector out(j.at("cap").get<unsigned long>());
  for (const auto& a : j.at("amplitudes")) out.accumulate(a.at("s").get<unsigned long>(), a.at("amp").get<XQPoly>());
  v = std::move(out);
}

}  // namespace qspivey

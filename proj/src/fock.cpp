#include "qspivey/fock.hpp"

#include "qspivey/q_core.hpp"

#include <string>

namespace qspivey {

FockVector FockVector::basis(unsigned long s, unsigned long cap) {
  FockVector v(cap);
  v.accumulate(s, XQPoly::constant(QPoly::constant(1)));
  return v;
}

XQPoly FockVector::amplitude(unsigned long s) const {
  auto it = amplitudes_.find(s);
  return it == amplitudes_.end() ? XQPoly{} : it->second;
}

void FockVector::accumulate(unsigned long s, const XQPoly& value) {
  if (s > cap_) {
    throw std::out_of_range("occupancy " + std::to_string(s) + " exceeds cap " + std::to_string(cap_));
  }
  if (value.is_zero()) return;
  auto [it, inserted] = amplitudes_.try_emplace(s, value);
  if (inserted) return;
  it->second += value;
  if (it->second.is_zero()) amplitudes_.erase(it);
}

FockVector FockVector::truncated(unsigned long new_cap) const {
  FockVector out(new_cap);
  for (const auto& [s, amp] : amplitudes_) {
    if (s <= new_cap) out.amplitudes_.emplace(s, amp);
  }
  return out;
}

FockVector& FockVector::operator*=(const XQPoly& c) {
  if (c.is_zero()) {
    amplitudes_.clear();
    return *this;
  }
  for (auto& [s, amp] : amplitudes_) amp *= c;
  return *this;
}

FockVector apply(const NormalForm& op, const FockVector& v) {
  FockVector out(v.cap());
  for (const auto& [m, coeff] : op.terms()) {
    for (const auto& [s, amp] : v.amplitudes()) {
      if (s < m.annihilators) continue;
      const unsigned long target = s - m.annihilators + m.creators;
      if (target > v.cap()) {
        throw CapOverflow("term (a+)^" + std::to_string(m.creators) + " a^" + std::to_string(m.annihilators) +
                          " maps occupancy " + std::to_string(s) + " to " + std::to_string(target) +
                          ", above cap " + std::to_string(v.cap()));
      }
      out.accumulate(target, amp * (coeff * q_falling(target, m.creators)));
    }
  }
  return out;
}

FockVector coherent_truncated(unsigned long cap) {
  FockVector v(cap);
  for (unsigned long s = 0; s <= cap; ++s) v.accumulate(s, XQPoly::variable_power(s));
  return v;
}

}  // namespace qspivey

#include "qspivey/normal_form.hpp"

#include "qspivey/q_core.hpp"

#include <vector>

namespace qspivey {

NormalForm NormalForm::term(unsigned long k, unsigned long l, QPoly c) {
  NormalForm out;
  out.accumulate({k, l}, c);
  return out;
}

QPoly NormalForm::coefficient(unsigned long k, unsigned long l) const {
  auto it = terms_.find({k, l});
  return it == terms_.end() ? QPoly{} : it->second;
}

void NormalForm::accumulate(const Monomial& m, const QPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

NormalForm& NormalForm::operator+=(const NormalForm& o) {
  for (const auto& [m, c] : o.terms_) accumulate(m, c);
  return *this;
}

NormalForm& NormalForm::operator-=(const NormalForm& o) {
  for (const auto& [m, c] : o.terms_) accumulate(m, -c);
  return *this;
}

NormalForm& NormalForm::operator*=(const QPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

namespace {

// Normal forms of a^l (a†)^k for all l <= max_l, k <= max_k, built by peeling
// one a off the left:
//   a^l (a†)^k = q^k [a^{l-1} (a†)^k] a + [k]_q a^{l-1} (a†)^{k-1}.
// Right-multiplying a normal form by a only bumps every annihilator count.
class ReorderTable {
 public:
  ReorderTable(unsigned long max_l, unsigned long max_k)
      : width_(max_k + 1), table_((max_l + 1) * (max_k + 1)) {
    for (unsigned long k = 0; k <= max_k; ++k) at(0, k) = NormalForm::creator(k);
    for (unsigned long l = 1; l <= max_l; ++l) {
      at(l, 0) = NormalForm::annihilator(l);
      for (unsigned long k = 1; k <= max_k; ++k) {
        NormalForm out;
        const QPoly qk = q_power(k);
        for (const auto& [m, c] : at(l - 1, k).terms()) out.accumulate({m.creators, m.annihilators + 1}, qk * c);
        const QPoly bracket = q_int(k);
        for (const auto& [m, c] : at(l - 1, k - 1).terms()) out.accumulate(m, bracket * c);
        at(l, k) = std::move(out);
      }
    }
  }

  const NormalForm& get(unsigned long l, unsigned long k) const { return table_[l * width_ + k]; }

 private:
  NormalForm& at(unsigned long l, unsigned long k) { return table_[l * width_ + k]; }

  unsigned long width_;
  std::vector<NormalForm> table_;
};

}  // namespace

NormalForm operator*(const NormalForm& a, const NormalForm& b) {
  if (a.is_zero() || b.is_zero()) return {};
  unsigned long max_l = 0;
  unsigned long max_k = 0;
  for (const auto& [m, c] : a.terms()) max_l = std::max(max_l, m.annihilators);
  for (const auto& [m, c] : b.terms()) max_k = std::max(max_k, m.creators);
  const ReorderTable reorder(max_l, max_k);

  NormalForm out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const QPoly c = ca * cb;
      // (a†)^{ka} [a^{la} (a†)^{kb}] a^{lb}
      for (const auto& [mm, cm] : reorder.get(ma.annihilators, mb.creators).terms()) {
        out.accumulate({ma.creators + mm.creators, mm.annihilators + mb.annihilators}, c * cm);
      }
    }
  }
  return out;
}

NormalForm pow(const NormalForm& a, unsigned long e) {
  NormalForm out = NormalForm::identity();
  for (unsigned long i = 0; i < e; ++i) out = out * a;
  return out;
}

NormalForm q_commutator(const NormalForm& a, const NormalForm& b, unsigned long t) {
  return a * b - q_power(t) * (b * a);
}

}  // namespace qspivey

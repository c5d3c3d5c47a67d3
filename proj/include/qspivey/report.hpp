#pragma once

#include "qspivey/codec.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace qspivey {

enum class Identity {
  stirling_def,
  bell_rec,
  spivey,
  result1,
  katriel,
  result2,
  result3,
  lem1,
  lem2,
  lem3,
  lem4,
  triangle_oracle,
  whitney_special,
};

/// literal: the identity exactly as printed. corrected: the form forced by the
/// operator derivation (x^j in place of [x]_{q,j}, no explicit m^j).
enum class Variant { literal, corrected, none };

std::string_view to_string(Identity id);
std::string_view to_string(Variant v);
std::optional<Identity> parse_identity(std::string_view s);
std::optional<Variant> parse_variant(std::string_view s);

/// Outcome of one identity check. Both sides are kept in their canonical JSON
/// encoding; `passed` is exact equality of the underlying values.
struct VerificationReport {
  Identity identity = Identity::spivey;
  Variant variant = Variant::none;
  Json params = Json::object();
  Json lhs;
  Json rhs;
  bool passed = false;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

template <class T>
VerificationReport make_report(Identity id, Variant variant, Json params, const T& lhs, const T& rhs) {
  return {id, variant, std::move(params), Json(lhs), Json(rhs), lhs == rhs};
}

void to_json(Json& j, const VerificationReport& r);
void from_json(const Json& j, VerificationReport& r);

}  // namespace qspivey

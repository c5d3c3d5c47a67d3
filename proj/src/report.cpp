#include "qspivey/report.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace qspivey {

namespace {

constexpr std::array<std::pair<Identity, std::string_view>, 13> kIdentityNames{{
    {Identity::stirling_def, "stirling-def"},
    {Identity::bell_rec, "bell-rec"},
    {Identity::spivey, "spivey"},
    {Identity::result1, "result1"},
    {Identity::katriel, "katriel"},
    {Identity::result2, "result2"},
    {Identity::result3, "result3"},
    {Identity::lem1, "lem1"},
    {Identity::lem2, "lem2"},
    {Identity::lem3, "lem3"},
    {Identity::lem4, "lem4"},
    {Identity::triangle_oracle, "triangle-oracle"},
    {Identity::whitney_special, "whitney-special"},
}};

constexpr std::array<std::pair<Variant, std::string_view>, 3> kVariantNames{{
    {Variant::literal, "literal"},
    {Variant::corrected, "corrected"},
    {Variant::none, "n/a"},
}};

}  // namespace

std::string_view to_string(Identity id) {
  for (const auto& [v, name] : kIdentityNames) {
    if (v == id) return name;
  }
  return "?";
}

std::string_view to_string(Variant variant) {
  for (const auto& [v, name] : kVariantNames) {
    if (v == variant) return name;
  }
  return "?";
}

std::optional<Identity> parse_identity(std::string_view s) {
  for (const auto& [v, name] : kIdentityNames) {
    if (name == s) return v;
  }
  return std::nullopt;
}

std::optional<Variant> parse_variant(std::string_view s) {
  for (const auto& [v, name] : kVariantNames) {
    if (name == s) return v;
  }
  return std::nullopt;
}

void to_json(Json& j, const VerificationReport& r) {
  j = {{"identity", to_string(r.identity)}, {"variant", to_string(r.variant)}, {"params", r.params},
       {"lhs", r.lhs},                      {"rhs", r.rhs},                     {"passed", r.passed}};
}

void from_json(const Json& j, VerificationReport& r) {
  const auto id = parse_identity(j.at("identity").get<std::string>());
  const auto variant = parse_variant(j.at("variant").get<std::string>());
  if (!id || !variant) throw std::invalid_argument("unknown identity or variant in report");
  r = {*id, *variant, j.at("params"), j.at("lhs"), j.at("rhs"), j.at("passed").get<bool>()};
}

}  // namespace qspivey

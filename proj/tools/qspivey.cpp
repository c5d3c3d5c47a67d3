// qspivey: command-line front end for the q-Stirling / q-Whitney / q-Dowling
// library. Subcommands: triangle, poly, numbers, normal-order, verify, sweep.
//
// Exit codes: 0 success (and, for verify/sweep, everything passed), 1 a check
// failed or an internal error occurred, 2 invalid flags (nothing is written).

#include "cli_args.hpp"

#include "qspivey/codec.hpp"
#include "qspivey/fock.hpp"
#include "qspivey/identities.hpp"
#include "qspivey/op_expr.hpp"
#include "qspivey/sequences.hpp"
#include "qspivey/sweep.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace qspivey;
using cli::Range;
using cli::UsageError;

struct Flags {
  std::map<std::string, std::string> raw;
  std::map<std::string, CLI::Option*> opts;

  void add(CLI::App* app, const std::string& name, const std::string& help, std::string fallback = {}) {
    raw[name] = std::move(fallback);
    opts[name] = app->add_option("--" + name, raw[name], help);
  }

  bool given(const std::string& name) const {
    auto it = opts.find(name);
    return it != opts.end() && it->second->count() > 0;
  }

  void allow_only(const std::set<std::string>& allowed, const std::string& context) const {
    for (const auto& [name, opt] : opts) {
      if (opt->count() > 0 && !allowed.contains(name)) throw UsageError("--" + name + " is not valid for " + context);
    }
  }

  unsigned long uint(const std::string& name) const { return cli::parse_uint(raw.at(name), "--" + name); }
  Range range(const std::string& name) const { return cli::parse_range(raw.at(name), "--" + name); }
};

struct Output {
  std::string text;
  int exit_code = 0;
};

std::string csv_quote(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <class R>
std::string triangle_csv(const Triangle<R>& t, const std::string& kind, const std::string& m, const std::string& r) {
  std::ostringstream out;
  out << "kind,m,r,n_max\n" << kind << ',' << m << ',' << r << ',' << (t.size() - 1) << '\n';
  for (const auto& row : t) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      const Json cell(row[k]);
      out << (k ? "," : "") << csv_quote(cell.is_string() ? cell.get<std::string>() : cell.dump());
    }
    out << '\n';
  }
  return out.str();
}

Output cmd_triangle(const Flags& f) {
  const std::string kind = f.raw.at("kind");
  const bool whitney = kind == "r-whitney" || kind == "qr-whitney";
  if (!whitney && kind != "stirling2" && kind != "q-stirling2") throw UsageError("unknown --kind '" + kind + "'");
  const std::string format = f.raw.at("format");
  if (format != "json" && format != "csv") throw UsageError("--format must be json or csv");
  f.allow_only(whitney ? std::set<std::string>{"kind", "n", "m", "r", "format", "out"}
                       : std::set<std::string>{"kind", "n", "format", "out"},
               "triangle --kind " + kind);
  const unsigned long n = f.uint("n");
  const unsigned long m = f.uint("m");
  const unsigned long r = f.uint("r");
  if (whitney && m == 0) throw UsageError("--m must be >= 1 for " + kind);

  Json header{{"kind", kind}, {"n_max", n}};
  if (whitney) {
    header["m"] = m;
    header["r"] = r;
  }
  const std::string ms = whitney ? std::to_string(m) : "";
  const std::string rs = whitney ? std::to_string(r) : "";
  auto emit = [&](const auto& t) {
    if (format == "csv") return triangle_csv(t, kind, ms, rs);
    header["rows"] = t;
    return header.dump() + "\n";
  };
  if (kind == "stirling2") return {emit(stirling2(n))};
  if (kind == "q-stirling2") return {emit(q_stirling2(n))};
  if (kind == "r-whitney") return {emit(r_whitney(n, m, r))};
  return {emit(qr_whitney(n, m, r))};
}

Output cmd_poly(const Flags& f) {
  const std::string kind = f.raw.at("kind");
  const bool dowling = kind == "qr-dowling";
  if (!dowling && kind != "q-bell") throw UsageError("unknown --kind '" + kind + "'");
  f.allow_only(dowling ? std::set<std::string>{"kind", "n", "m", "r", "x", "out"}
                       : std::set<std::string>{"kind", "n", "x", "out"},
               "poly --kind " + kind);
  const unsigned long n = f.uint("n");
  Json out{{"kind", kind}, {"n", n}};
  XQPoly p;
  if (dowling) {
    const unsigned long m = f.uint("m");
    const unsigned long r = f.uint("r");
    if (m == 0) throw UsageError("--m must be >= 1 for qr-dowling");
    out["m"] = m;
    out["r"] = r;
    p = qr_dowling_poly(n, m, r);
  } else {
    p = q_bell_poly(n);
  }
  if (f.given("x")) {
    const unsigned long x = f.uint("x");
    out["x"] = x;
    out["value"] = evaluate_x(p, x);
  } else {
    out["value"] = p;
  }
  return {out.dump() + "\n"};
}

Output cmd_numbers(const Flags& f) {
  const std::string kind = f.raw.at("kind");
  const bool dowling = kind == "r-dowling" || kind == "qr-dowling";
  if (!dowling && kind != "bell" && kind != "q-bell") throw UsageError("unknown --kind '" + kind + "'");
  f.allow_only(dowling ? std::set<std::string>{"kind", "n", "m", "r", "out"} : std::set<std::string>{"kind", "n", "out"},
               "numbers --kind " + kind);
  const unsigned long n = f.uint("n");
  const unsigned long m = f.uint("m");
  const unsigned long r = f.uint("r");
  if (dowling && m == 0) throw UsageError("--m must be >= 1 for " + kind);
  Json out{{"kind", kind}, {"n_max", n}};
  if (dowling) {
    out["m"] = m;
    out["r"] = r;
  }
  if (kind == "bell") {
    out["values"] = bell(n);
  } else if (kind == "r-dowling") {
    out["values"] = r_dowling(n, m, r);
  } else {
    const TriangleQ t = kind == "q-bell" ? q_stirling2(n) : qr_whitney(n, m, r);
    std::vector<QPoly> values;
    for (const auto& row : t) values.push_back(evaluate_x(row_polynomial(row), 1));
    out["values"] = values;
  }
  return {out.dump() + "\n"};
}

Output cmd_normal_order(const Flags& f, const std::string& expr) {
  f.allow_only({"m", "r", "out"}, "normal-order");
  OpBindings b;
  if (f.given("m")) b.m = f.uint("m");
  if (f.given("r")) b.r = f.uint("r");
  return {Json(normal_order(expr, b)).dump() + "\n"};
}

struct IdentitySpec {
  std::vector<std::string> params;
  bool has_variant = false;
  bool optional_x = false;
};

const std::map<Identity, IdentitySpec>& identity_specs() {
  static const std::map<Identity, IdentitySpec> specs{
      {Identity::stirling_def, {{"n"}}},
      {Identity::bell_rec, {{"n"}}},
      {Identity::spivey, {{"n", "mshift"}}},
      {Identity::result1, {{"n", "mshift"}, true, true}},
      {Identity::katriel, {{"n", "l"}}},
      {Identity::result2, {{"n", "l", "m", "r"}, true, true}},
      {Identity::result3, {{"n", "l", "m", "r"}, true}},
      {Identity::lem1, {{"k"}}},
      {Identity::lem2, {{"k", "cap"}}},
      {Identity::lem3, {{"k"}}},
      {Identity::lem4, {{"k", "m", "r"}}},
      {Identity::triangle_oracle, {{"n", "m", "r"}}},
      {Identity::whitney_special, {{"k", "m"}}},
  };
  return specs;
}

using Params = std::map<std::string, unsigned long>;

std::function<VerificationReport()> make_verifier(Identity id, const Params& p, Variant variant,
                                                  std::optional<TriangleKind> kind) {
  auto get = [p](const char* name) { return p.at(name); };
  std::optional<unsigned long> x;
  if (p.contains("x")) x = p.at("x");
  switch (id) {
    case Identity::stirling_def: return [=] { return verify_stirling_def(get("n")); };
    case Identity::bell_rec: return [=] { return verify_bell_recurrence(get("n")); };
    case Identity::spivey: return [=] { return verify_spivey(get("n"), get("mshift")); };
    case Identity::result1: return [=] { return verify_result1(get("n"), get("mshift"), x, variant); };
    case Identity::katriel: return [=] { return verify_katriel(get("n"), get("l")); };
    case Identity::result2:
      return [=] { return verify_result2(get("n"), get("l"), get("m"), get("r"), x, variant); };
    case Identity::result3: return [=] { return verify_result3(get("n"), get("l"), get("m"), get("r"), variant); };
    case Identity::lem1: return [=] { return verify_lemma(Lemma::lem1, get("k")); };
    case Identity::lem2: return [=] { return verify_lemma(Lemma::lem2, get("k"), 1, 0, get("cap")); };
    case Identity::lem3: return [=] { return verify_lemma(Lemma::lem3, get("k")); };
    case Identity::lem4: return [=] { return verify_lemma(Lemma::lem4, get("k"), get("m"), get("r")); };
    case Identity::triangle_oracle:
      return [=] { return verify_triangle_vs_oracle(*kind, get("n"), get("m"), get("r")); };
    case Identity::whitney_special: return [=] { return whitney_special_check(get("k"), get("m")); };
  }
  throw UsageError("unsupported identity");
}

void enumerate(const std::vector<std::pair<std::string, Range>>& axes, std::size_t i, Params& cur,
               std::vector<Params>& out) {
  if (i == axes.size()) {
    out.push_back(cur);
    return;
  }
  for (unsigned long v = axes[i].second.lo; v <= axes[i].second.hi; ++v) {
    cur[axes[i].first] = v;
    enumerate(axes, i + 1, cur, out);
  }
}

Output cmd_verify(const Flags& f) {
  const auto id = parse_identity(f.raw.at("identity"));
  if (!id) throw UsageError("unknown --identity '" + f.raw.at("identity") + "'");
  const IdentitySpec& spec = identity_specs().at(*id);
  const std::string context = "verify --identity " + f.raw.at("identity");

  std::set<std::string> allowed{"identity", "jobs", "out"};
  allowed.insert(spec.params.begin(), spec.params.end());
  if (spec.has_variant) allowed.insert("variant");
  if (spec.optional_x) allowed.insert("x");
  if (*id == Identity::triangle_oracle) allowed.insert("kind");

  std::optional<TriangleKind> kind;
  if (*id == Identity::triangle_oracle) {
    const std::string k = f.given("kind") ? f.raw.at("kind") : "q-stirling";
    if (k == "q-stirling") {
      kind = TriangleKind::q_stirling;
      allowed.erase("m");
      allowed.erase("r");
    } else if (k == "qr-whitney") {
      kind = TriangleKind::qr_whitney;
    } else {
      throw UsageError("--kind must be q-stirling or qr-whitney");
    }
  }
  f.allow_only(allowed, context);

  Variant variant = Variant::none;
  if (spec.has_variant) {
    const auto v = parse_variant(f.raw.at("variant"));
    if (!v || *v == Variant::none) throw UsageError("--variant must be literal or corrected");
    variant = *v;
  }
  if (spec.optional_x && variant == Variant::literal && !f.given("x")) {
    throw UsageError("--variant literal needs --x");
  }

  std::vector<std::pair<std::string, Range>> axes;
  for (const auto& name : spec.params) axes.emplace_back(name, f.range(name));
  if (spec.optional_x && f.given("x")) axes.emplace_back("x", f.range("x"));
  const bool whitney_based = *id == Identity::result2 || *id == Identity::result3 ||
                             *id == Identity::whitney_special || kind == TriangleKind::qr_whitney;
  for (const auto& [name, range] : axes) {
    if (name == "m" && whitney_based && range.lo == 0) throw UsageError("--m must be >= 1 for " + context);
  }
  if (*id == Identity::lem2 && f.range("k").hi > f.range("cap").lo) throw UsageError("lem2 needs cap >= k");

  std::vector<Params> tuples;
  Params cur;
  enumerate(axes, 0, cur, tuples);

  std::vector<std::function<VerificationReport()>> verifiers;
  for (const auto& p : tuples) verifiers.push_back(make_verifier(*id, p, variant, kind));
  const auto reports =
      parallel_map(verifiers.size(), static_cast<unsigned>(f.uint("jobs")), [&](std::size_t i) { return verifiers[i](); });

  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& r : reports) {
    out << Json(r).dump() << '\n';
    passed += r.passed ? 1 : 0;
  }
  out << Json{{"total", reports.size()}, {"passed", passed}, {"failed", reports.size() - passed}}.dump() << '\n';
  return {out.str(), passed == reports.size() ? 0 : 1};
}

Output cmd_sweep(const Flags& f) {
  if (f.raw.at("suite") != "acceptance") throw UsageError("--suite must be 'acceptance'");
  const auto result = run_suite(acceptance_suite(), static_cast<unsigned>(f.uint("jobs")));
  return {to_jsonl(result), result.ok() ? 0 : 1};
}

void write_output(const Output& o, const std::string& path) {
  if (path.empty()) {
    std::cout << o.text << std::flush;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  file << o.text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-Stirling, q-Whitney and q-Dowling numbers with Spivey-type identity checks"};
  app.require_subcommand(1);

  Flags triangle_f, poly_f, numbers_f, normal_f, verify_f, sweep_f;

  auto* triangle = app.add_subcommand("triangle", "Emit a number triangle");
  triangle_f.add(triangle, "kind", "stirling2 | q-stirling2 | r-whitney | qr-whitney");
  triangle->get_option("--kind")->required();
  triangle_f.add(triangle, "n", "largest row index", "5");
  triangle_f.add(triangle, "m", "Whitney parameter m >= 1", "1");
  triangle_f.add(triangle, "r", "Whitney parameter r", "0");
  triangle_f.add(triangle, "format", "json | csv", "json");
  triangle_f.add(triangle, "out", "output file (default stdout)");

  auto* poly = app.add_subcommand("poly", "Emit B_{n,q}(x) or D_{m,r,q}(n,x), optionally at integer x");
  poly_f.add(poly, "kind", "q-bell | qr-dowling");
  poly->get_option("--kind")->required();
  poly_f.add(poly, "n", "index", "3");
  poly_f.add(poly, "m", "m >= 1", "1");
  poly_f.add(poly, "r", "r", "0");
  poly_f.add(poly, "x", "integer value substituted for x");
  poly_f.add(poly, "out", "output file (default stdout)");

  auto* numbers = app.add_subcommand("numbers", "Emit Bell / q-Bell / r-Dowling / (q,r)-Dowling numbers 0..n");
  numbers_f.add(numbers, "kind", "bell | q-bell | r-dowling | qr-dowling");
  numbers->get_option("--kind")->required();
  numbers_f.add(numbers, "n", "largest index", "10");
  numbers_f.add(numbers, "m", "m >= 1", "1");
  numbers_f.add(numbers, "r", "r", "0");
  numbers_f.add(numbers, "out", "output file (default stdout)");

  std::string expr;
  auto* normal = app.add_subcommand("normal-order", "Normal-order an operator expression in a, ad, N");
  normal->add_option("expr", expr, "e.g. \"(m*N+r)^3\"")->required();
  normal_f.add(normal, "m", "value bound to m");
  normal_f.add(normal, "r", "value bound to r");
  normal_f.add(normal, "out", "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check an identity over parameter ranges (lo..hi), JSON lines");
  verify_f.add(verify, "identity",
               "spivey | bell-rec | stirling-def | result1 | result2 | result3 | katriel | lem1 | lem2 | lem3 | "
               "lem4 | triangle-oracle | whitney-special");
  verify->get_option("--identity")->required();
  verify_f.add(verify, "variant", "literal | corrected", "corrected");
  verify_f.add(verify, "n", "range", "0..4");
  verify_f.add(verify, "mshift", "range", "0..4");
  verify_f.add(verify, "l", "range", "0..4");
  verify_f.add(verify, "m", "range", "1");
  verify_f.add(verify, "r", "range", "0");
  verify_f.add(verify, "x", "range (omit for polynomial comparison)");
  verify_f.add(verify, "k", "range", "1..4");
  verify_f.add(verify, "cap", "Fock truncation for lem2", "12");
  verify_f.add(verify, "kind", "triangle-oracle: q-stirling | qr-whitney");
  verify_f.add(verify, "jobs", "worker threads", "1");
  verify_f.add(verify, "out", "output file (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "Run the acceptance suite, JSON lines per criterion plus summary");
  sweep_f.add(sweep, "suite", "acceptance", "acceptance");
  sweep_f.add(sweep, "jobs", "worker threads", "1");
  sweep_f.add(sweep, "out", "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Output out;
    const Flags* used = nullptr;
    if (triangle->parsed()) {
      out = cmd_triangle(*(used = &triangle_f));
    } else if (poly->parsed()) {
      out = cmd_poly(*(used = &poly_f));
    } else if (numbers->parsed()) {
      out = cmd_numbers(*(used = &numbers_f));
    } else if (normal->parsed()) {
      out = cmd_normal_order(*(used = &normal_f), expr);
    } else if (verify->parsed()) {
      out = cmd_verify(*(used = &verify_f));
    } else {
      out = cmd_sweep(*(used = &sweep_f));
    }
    write_output(out, used->raw.at("out"));
    return out.exit_code;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\nRun with --help for usage.\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "syntax error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}

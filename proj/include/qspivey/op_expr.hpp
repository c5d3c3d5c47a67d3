#pragma once

#include "qspivey/bigint.hpp"
#include "qspivey/normal_form.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace qspivey {

// Operator expressions over a, ad (= a†), N (= ad*a) and integer literals.
//
//   expr   := term { ("+" | "-") term } ;
//   term   := factor { "*" factor } ;
//   factor := atom [ "^" uint ] ;
//   atom   := "a" | "ad" | "N" | uint | "m" | "r" | "(" expr ")" ;
//
// "-" may also be written as U+2212. m and r are substituted at parse time.
// Multiplication is non-commutative.

struct OpBindings {
  std::optional<unsigned long> m;
  std::optional<unsigned long> r;
};

class OpExpr {
 public:
  enum class Letter { annihilator, creator, number };
  enum class BinaryOp { add, subtract, multiply };

  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  struct Binary {
    BinaryOp op;
    NodePtr lhs;
    NodePtr rhs;
  };
  struct Power {
    NodePtr base;
    unsigned long exponent;
  };
  struct Node {
    std::variant<Letter, BigInt, Binary, Power> value;
  };

  explicit OpExpr(NodePtr root) : root_(std::move(root)) {}

  const Node& root() const { return *root_; }

 private:
  NodePtr root_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

  /// Byte offset into the input.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Throws ParseError on malformed input, unknown symbols and unbound m or r.
OpExpr parse_op_expr(std::string_view text, const OpBindings& bindings = {});

/// Normal-ordered form of the expression.
NormalForm normal_order(const OpExpr& expr);

/// parse_op_expr followed by normal_order.
NormalForm normal_order(std::string_view text, const OpBindings& bindings = {});

}  // namespace qspivey

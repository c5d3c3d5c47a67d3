#include "qspivey/op_expr.hpp"

#include <cctype>
#include <vector>

namespace qspivey {

namespace {

enum class Tok { word, number, plus, minus, star, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  static constexpr std::string_view unicode_minus = "\xE2\x88\x92";
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char ch = static_cast<unsigned char>(s[i]);
    if (std::isspace(ch)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isalpha(ch)) {
      while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::word, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isdigit(ch)) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::number, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (s.substr(i, unicode_minus.size()) == unicode_minus) {
      out.push_back({Tok::minus, "-", start});
      i += unicode_minus.size();
      continue;
    }
    Tok kind;
    switch (ch) {
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '*': kind = Tok::star; break;
      case '^': kind = Tok::caret; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      default: throw ParseError("unexpected character '" + std::string(1, s[i]) + "'", start);
    }
    out.push_back({kind, std::string(1, s[i]), start});
    ++i;
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const OpBindings& bindings) : toks_(std::move(tokens)), bind_(bindings) {}

  OpExpr::NodePtr parse() {
    auto root = expr();
    if (peek().kind != Tok::end) fail("unexpected '" + peek().text + "'");
    return root;
  }

 private:
  using NodePtr = OpExpr::NodePtr;

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(peek().kind == Tok::end ? "unexpected end of input" : msg, peek().pos);
  }

  static NodePtr make(OpExpr::Node node) { return std::make_shared<const OpExpr::Node>(std::move(node)); }

  NodePtr expr() {
    NodePtr lhs = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const auto op = next().kind == Tok::plus ? OpExpr::BinaryOp::add : OpExpr::BinaryOp::subtract;
      NodePtr rhs = term();
      lhs = make({OpExpr::Binary{op, std::move(lhs), std::move(rhs)}});
    }
    return lhs;
  }

  NodePtr term() {
    NodePtr lhs = factor();
    while (peek().kind == Tok::star) {
      next();
      NodePtr rhs = factor();
      lhs = make({OpExpr::Binary{OpExpr::BinaryOp::multiply, std::move(lhs), std::move(rhs)}});
    }
    return lhs;
  }

  NodePtr factor() {
    NodePtr base = atom();
    if (peek().kind != Tok::caret) return base;
    next();
    if (peek().kind != Tok::number) fail("expected a nonnegative integer exponent");
    const Token& t = next();
    BigInt e = BigInt(t.text, 10);
    if (!e.fits_ulong_p()) throw ParseError("exponent too large", t.pos);
    return make({OpExpr::Power{base, e.get_ui()}});
  }

  NodePtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::number:
        next();
        return make({BigInt(t.text, 10)});
      case Tok::lparen: {
        next();
        NodePtr inner = expr();
        if (peek().kind != Tok::rparen) fail("expected ')'");
        next();
        return inner;
      }
      case Tok::word:
        next();
        if (t.text == "a") return make({OpExpr::Letter::annihilator});
        if (t.text == "ad") return make({OpExpr::Letter::creator});
        if (t.text == "N") return make({OpExpr::Letter::number});
        if (t.text == "m" || t.text == "r") {
          const auto& value = t.text == "m" ? bind_.m : bind_.r;
          if (!value) throw ParseError("unbound symbol '" + t.text + "'", t.pos);
          return make({BigInt(*value)});
        }
        throw ParseError("unknown symbol '" + t.text + "'", t.pos);
      default:
        fail("unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const OpBindings& bind_;
};

NormalForm lower(const OpExpr::Node& node) {
  struct Visitor {
    NormalForm operator()(OpExpr::Letter l) const {
      switch (l) {
        case OpExpr::Letter::annihilator: return NormalForm::annihilator();
        case OpExpr::Letter::creator: return NormalForm::creator();
        case OpExpr::Letter::number: return NormalForm::number();
      }
      return {};
    }
    NormalForm operator()(const BigInt& c) const { return NormalForm::scalar(QPoly::constant(c)); }
    NormalForm operator()(const OpExpr::Binary& b) const {
      NormalForm lhs = lower(*b.lhs);
      NormalForm rhs = lower(*b.rhs);
      switch (b.op) {
        case OpExpr::BinaryOp::add: return lhs + rhs;
        case OpExpr::BinaryOp::subtract: return lhs - rhs;
        case OpExpr::BinaryOp::multiply: return lhs * rhs;
      }
      return {};
    }
    NormalForm operator()(const OpExpr::Power& p) const { return pow(lower(*p.base), p.exponent); }
  };
  return std::visit(Visitor{}, node.value);
}

}  // namespace

OpExpr parse_op_expr(std::string_view text, const OpBindings& bindings) {
  return OpExpr(Parser(tokenize(text), bindings).parse());
}

NormalForm normal_order(const OpExpr& expr) { return lower(expr.root()); }

NormalForm normal_order(std::string_view text, const OpBindings& bindings) {
  return normal_order(parse_op_expr(text, bindings));
}

}  // namespace qspivey

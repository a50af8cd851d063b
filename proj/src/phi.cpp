#include "goa2/phi.hpp"

#include <cctype>
#include <cmath>
#include <optional>
#include <vector>

namespace goa2 {

Dual dual_sqrt(Dual a) {
  const double r = std::sqrt(a.value);
  return {r, a.deriv / (2.0 * r)};
}
Dual dual_exp(Dual a) {
  const double e = std::exp(a.value);
  return {e, a.deriv * e};
}
Dual dual_sin(Dual a) { return {std::sin(a.value), a.deriv * std::cos(a.value)}; }
Dual dual_cos(Dual a) { return {std::cos(a.value), -a.deriv * std::sin(a.value)}; }
Dual dual_pow(Dual a, double exponent) {
  const double p = std::pow(a.value, exponent);
  return {p, exponent * std::pow(a.value, exponent - 1.0) * a.deriv};
}

struct PhiFunction::Node {
  enum class Op { Number, Variable, Add, Sub, Mul, Div, Pow, Sqrt, Exp, Sin, Cos };
  Op op = Op::Number;
  double number = 0.0;  // literal value, or the exponent for Pow
  std::shared_ptr<const Node> lhs, rhs;

  Dual eval(Dual s) const {
    switch (op) {
      case Op::Number: return {number, 0.0};
      case Op::Variable: return s;
      case Op::Add: return lhs->eval(s) + rhs->eval(s);
      case Op::Sub: return lhs->eval(s) - rhs->eval(s);
      case Op::Mul: return lhs->eval(s) * rhs->eval(s);
      case Op::Div: return lhs->eval(s) / rhs->eval(s);
      case Op::Pow: return dual_pow(lhs->eval(s), number);
      case Op::Sqrt: return dual_sqrt(lhs->eval(s));
      case Op::Exp: return dual_exp(lhs->eval(s));
      case Op::Sin: return dual_sin(lhs->eval(s));
      case Op::Cos: return dual_cos(lhs->eval(s));
    }
    return {};
  }
};

namespace {

using NodePtr = std::shared_ptr<const PhiFunction::Node>;
using Node = PhiFunction::Node;

NodePtr make_node(Node n) { return std::make_shared<const Node>(std::move(n)); }

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  NodePtr run() {
    NodePtr e = expr();
    skip_space();
    if (pos_ != text_.size()) throw PhiParseError("trailing input", pos_);
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  NodePtr expr() {
    NodePtr lhs;
    if (consume('-')) {
      // Unary minus at the head of an expression: 0 - term.
      lhs = make_node({Node::Op::Sub, 0.0, make_node({Node::Op::Number, 0.0, nullptr, nullptr}),
                       term()});
    } else {
      lhs = term();
    }
    while (true) {
      if (consume('+')) {
        lhs = make_node({Node::Op::Add, 0.0, lhs, term()});
      } else if (consume('-')) {
        lhs = make_node({Node::Op::Sub, 0.0, lhs, term()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = factor();
    while (true) {
      if (consume('*')) {
        lhs = make_node({Node::Op::Mul, 0.0, lhs, factor()});
      } else if (consume('/')) {
        lhs = make_node({Node::Op::Div, 0.0, lhs, factor()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr factor() {
    NodePtr base = atom();
    if (consume('^')) {
      skip_space();
      const std::size_t at = pos_;
      std::optional<double> exponent = number();
      if (!exponent) throw PhiParseError("exponent must be a number literal", at);
      return make_node({Node::Op::Pow, *exponent, base, nullptr});
    }
    return base;
  }

  NodePtr atom() {
    skip_space();
    const std::size_t at = pos_;
    if (pos_ >= text_.size()) throw PhiParseError("unexpected end of input", at);

    if (std::optional<double> num = number())
      return make_node({Node::Op::Number, *num, nullptr, nullptr});

    if (std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      std::string ident;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
        ident += text_[pos_++];
      if (ident == "s") return make_node({Node::Op::Variable, 0.0, nullptr, nullptr});
      Node::Op op;
      if (ident == "sqrt") op = Node::Op::Sqrt;
      else if (ident == "exp") op = Node::Op::Exp;
      else if (ident == "sin") op = Node::Op::Sin;
      else if (ident == "cos") op = Node::Op::Cos;
      else throw PhiParseError("unknown identifier '" + ident + "'", at);
      if (!consume('(')) throw PhiParseError("expected '(' after " + ident, pos_);
      NodePtr arg = expr();
      if (!consume(')')) throw PhiParseError("expected ')'", pos_);
      return make_node({op, 0.0, arg, nullptr});
    }

    if (consume('(')) {
      NodePtr e = expr();
      if (!consume(')')) throw PhiParseError("expected ')'", pos_);
      return e;
    }
    throw PhiParseError(std::string("unexpected character '") + text_[pos_] + "'", at);
  }

  std::optional<double> number() {
    skip_space();
    const std::size_t start = pos_;
    std::size_t p = pos_;
    while (p < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[p])) || text_[p] == '.'))
      ++p;
    if (p == start) return std::nullopt;
    try {
      std::size_t used = 0;
      const double value = std::stod(text_.substr(start, p - start), &used);
      pos_ = start + used;
      return value;
    } catch (const std::exception&) {
      throw PhiParseError("malformed number", start);
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

PhiFunction PhiFunction::constant(double c) {
  PhiFunction f;
  f.source_ = "constant(" + std::to_string(c) + ")";
  f.constant_ = c;
  if (c <= 0.0) throw PhiDomainError("constant profile must be positive", 0.0);
  return f;
}

PhiFunction PhiFunction::riemannian(double a, double b) {
  if (a <= 0.0 || b <= 0.0)
    throw PhiDomainError("riemannian profile needs positive weights", 0.0);
  PhiFunction f;
  f.source_ = "riemannian(" + std::to_string(a) + "," + std::to_string(b) + ")";
  f.riemannian_ = {a, b};
  return f;
}

PhiFunction PhiFunction::parse(const std::string& text) {
  PhiFunction f;
  f.source_ = text;
  f.root_ = Parser(text).run();
  f.check_regularity();
  return f;
}

std::pair<double, double> PhiFunction::eval(double s) const {
  if (constant_) return {*constant_, 0.0};
  if (riemannian_) {
    const auto [a, b] = *riemannian_;
    const double phi = std::sqrt(a + (b - a) * s * s);
    return {phi, (b - a) * s / phi};
  }
  const Dual r = root_->eval({s, 1.0});
  return {r.value, r.deriv};
}

void PhiFunction::check_regularity() const {
  const int grid = 1000;
  for (int i = 0; i <= grid; ++i) {
    const double s = static_cast<double>(i) / grid;
    const auto [phi, dphi] = eval(s);
    if (!std::isfinite(phi) || !std::isfinite(dphi) || phi <= 0.0)
      throw PhiDomainError("profile must be positive and finite on [0,1]", s);
    if (i == 0 || i == grid) continue;
    if (phi - s * dphi <= 0.0)
      throw PhiDomainError("regularity failed: phi - s*phi' <= 0", s);
    if (phi - (s - 1.0 / s) * dphi <= 0.0)
      throw PhiDomainError("regularity failed: phi - (s - 1/s)*phi' <= 0", s);
  }
}

}  // namespace goa2

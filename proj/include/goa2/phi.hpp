#ifndef GOA2_PHI_HPP
#define GOA2_PHI_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "goa2/common.hpp"

namespace goa2 {

/// First-order dual number; propagating it through an expression yields the
/// exact derivative (no finite differencing inside the library).
struct Dual {
  double value = 0.0;
  double deriv = 0.0;

  friend Dual operator+(Dual a, Dual b) { return {a.value + b.value, a.deriv + b.deriv}; }
  friend Dual operator-(Dual a, Dual b) { return {a.value - b.value, a.deriv - b.deriv}; }
  friend Dual operator-(Dual a) { return {-a.value, -a.deriv}; }
  friend Dual operator*(Dual a, Dual b) {
    return {a.value * b.value, a.deriv * b.value + a.value * b.deriv};
  }
  friend Dual operator/(Dual a, Dual b) {
    const double q = a.value / b.value;
    return {q, (a.deriv - q * b.deriv) / b.value};
  }
};

Dual dual_sqrt(Dual a);
Dual dual_exp(Dual a);
Dual dual_sin(Dual a);
Dual dual_cos(Dual a);
Dual dual_pow(Dual a, double exponent);

/// Syntax error in a profile expression; `position` is the 0-based offset of
/// the offending token.
struct PhiParseError : Error {
  PhiParseError(const std::string& message, std::size_t position)
      : Error(message + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

/// Profile fails positivity or one of the two regularity inequalities;
/// `violating_s` is the grid point where it failed.
struct PhiDomainError : Error {
  PhiDomainError(const std::string& message, double violating_s)
      : Error(message + " (at s = " + std::to_string(violating_s) + ")"),
        violating_s(violating_s) {}
  double violating_s;
};

/// Norm profile phi(s) on [0,1], evaluated jointly with its derivative.
/// Construction enforces phi > 0 on a 1001-point uniform grid of [0,1] and
/// the regularity inequalities phi - s phi' > 0 and
/// phi - (s - 1/s) phi' > 0 at the interior grid points.
class PhiFunction {
 public:
  static PhiFunction constant(double c);
  /// phi(s) = sqrt(a + (b-a) s^2); the induced norm is the Riemannian one
  /// weighing the two summands by a and b.
  static PhiFunction riemannian(double a, double b);
  /// Parses the expression grammar
  ///   expr   := ["-"] term (("+"|"-") term)*
  ///   term   := factor (("*"|"/") factor)*
  ///   factor := atom ("^" number)?
  ///   atom   := number | "s" | "(" expr ")" | func "(" expr ")"
  ///   func   := "sqrt" | "exp" | "sin" | "cos"
  /// Throws PhiParseError / PhiDomainError.
  static PhiFunction parse(const std::string& text);

  /// (phi(s), phi'(s)).
  std::pair<double, double> eval(double s) const;

  /// Printable form ("1", "riemannian(1,2)", or the original expression).
  const std::string& source() const { return source_; }
  bool is_constant() const { return constant_.has_value(); }

  struct Node;  // expression tree; opaque outside the implementation

 private:
  PhiFunction() = default;
  void check_regularity() const;

  std::string source_;
  std::optional<double> constant_;
  std::optional<std::pair<double, double>> riemannian_;
  std::shared_ptr<const Node> root_;
};

}  // namespace goa2

#endif

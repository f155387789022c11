#pragma once

#include <algorithm>
#include <limits>
#include <string>

namespace bitblas {

/// Add/multiply pair used by the full-precision kernels. The matrix is binary,
/// so "multiply by a present edge" reduces to a per-kind term of x[j]:
/// Arithmetic x, MinPlus x + edgeIncrement, MaxTimes x. Absent edges
/// contribute the additive identity.
struct Semiring {
  enum class Kind { Boolean, Arithmetic, MinPlus, MaxTimes };

  Kind kind = Kind::Arithmetic;
  /// Edge weight seen by MinPlus: 1 counts hops, 0 propagates labels.
  double edge_increment = 0.0;

  static Semiring boolean() { return {Kind::Boolean, 0.0}; }
  static Semiring arithmetic() { return {Kind::Arithmetic, 0.0}; }
  /// Throws ParameterError unless the increment is 0 or 1.
  static Semiring min_plus(double edge_increment);
  static Semiring max_times() { return {Kind::MaxTimes, 0.0}; }

  double identity() const {
    return kind == Kind::MinPlus ? std::numeric_limits<double>::infinity() : 0.0;
  }

  double add(double a, double b) const {
    switch (kind) {
      case Kind::Boolean:
        return (a != 0.0 || b != 0.0) ? 1.0 : 0.0;
      case Kind::Arithmetic:
        return a + b;
      case Kind::MinPlus:
        return std::min(a, b);
      case Kind::MaxTimes:
        return std::max(a, b);
    }
    return a;
  }

  /// Product of a stored 1 bit with x.
  double edge_term(double x) const {
    switch (kind) {
      case Kind::Boolean:
        return x != 0.0 ? 1.0 : 0.0;
      case Kind::MinPlus:
        return x + edge_increment;
      default:
        return x;
    }
  }

  std::string name() const;

  friend bool operator==(const Semiring&, const Semiring&) = default;
};

}  // namespace bitblas
